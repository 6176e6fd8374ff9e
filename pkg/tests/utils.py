import json
from typing import Any, Dict, List

import sympy

from lappoly.polynomials import IntPoly
from lappoly.spectra import IntMatrix


def json_lines(output: str) -> List[Dict[str, Any]]:
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


def reports(output: str) -> List[Dict[str, Any]]:
    return [data for data in json_lines(output) if "version" in data]


def error_object(output: str) -> Dict[str, Any]:
    return next(data for data in json_lines(output) if "error" in data)


def checks_by_name(report: Dict[str, Any]) -> Dict[str, Dict[str, Any]]:
    return {check["name"]: check for check in report["checks"]}


def sympy_char_poly(matrix: IntMatrix) -> IntPoly:
    x = sympy.Symbol("x")
    coeffs = sympy.Matrix([list(row) for row in matrix.rows]).charpoly(x).all_coeffs()
    return IntPoly.from_descending([int(c) for c in coeffs])


def write_text(directory, name: str, text: str) -> str:
    path = directory / name
    path.write_text(text)
    return str(path)
