"""The main CLI call."""

from typing import Any, List

import click

from lappoly.cli import batch, compute, verify
from lappoly.exceptions import InputException

CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])


class LapPolyGroup(click.Group):
    """A click group that reports usage errors as input errors."""

    def parse_args(self: "LapPolyGroup", ctx: click.Context, args: List[str]) -> Any:
        """
        Parse the group's own arguments.

        Args:
            ctx: The click context.
            args: The command-line arguments.

        Returns:
            The remaining arguments.

        Raises:
            InputException: If click rejects the arguments.
        """
        try:
            return super().parse_args(ctx, args)
        except click.UsageError as e:
            raise InputException(e.format_message()) from e

    def invoke(self: "LapPolyGroup", ctx: click.Context) -> Any:
        """
        Run the chosen subcommand.

        Args:
            ctx: The click context.

        Returns:
            The subcommand's return value.

        Raises:
            InputException: If click rejects the subcommand or its arguments.
        """
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            raise InputException(e.format_message()) from e


@click.group(cls=LapPolyGroup, context_settings=CONTEXT_SETTINGS)
def main() -> None:
    """The Laplacian matching polynomial CLI. Compute and verify polynomials."""
    pass


main.add_command(compute)
main.add_command(verify)
main.add_command(batch)


if __name__ == "__main__":
    main()
