"""The lappoly commands."""

from lappoly.cli.batch import batch
from lappoly.cli.compute import compute
from lappoly.cli.verify import verify

__all__ = ["batch", "compute", "verify"]
