"""JSON code files.

Layout::

    {
      "header": {"p": 2, "e": 1, "n": 2, "modulus": "111"},
      "body": {"basis": [[["1", "0"], ["0", "1"]]]}
    }

``p`` and ``e`` give q = p^e.  ``modulus`` is the little-endian digit string
of the degree-2e reduction polynomial of GF(q^2); an optional
``base_modulus`` (degree e) fixes GF(q).  Matrix entries are digit strings of
GF(q^2) elements.
"""

from __future__ import annotations

import json

from .codes import LinearCode
from .errors import CodeFileError, HermesError, InvalidModulus, LinearDependence, NotHermitian
from .field import make_field, quadratic_extension
from .hermitian import from_entries


def _digits_to_coeffs(text, p, where):
    if not isinstance(text, str) or not text:
        raise CodeFileError("expected a non-empty digit string", where)
    try:
        if p <= 36:
            return [int(ch, 36) for ch in text]
        return [int(part) for part in text.split(".")]
    except ValueError:
        raise CodeFileError(f"invalid digit string {text!r}", where) from None


def _int_field(obj, key, where):
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise CodeFileError(f"expected an integer, got {value!r}", f"{where}.{key}")
    return value


def parse_code(obj):
    """Build a :class:`LinearCode` from decoded JSON."""
    if not isinstance(obj, dict):
        raise CodeFileError("top level must be an object", "$")
    header = obj.get("header")
    body = obj.get("body")
    if not isinstance(header, dict):
        raise CodeFileError("missing header object", "header")
    if not isinstance(body, dict):
        raise CodeFileError("missing body object", "body")
    p = _int_field(header, "p", "header")
    e = _int_field(header, "e", "header")
    n = _int_field(header, "n", "header")
    if n < 1:
        raise CodeFileError(f"order must be positive, got {n}", "header.n")

    base_mod = None
    if "base_modulus" in header:
        base_mod = tuple(_digits_to_coeffs(header["base_modulus"], p, "header.base_modulus"))
    if "modulus" not in header:
        raise CodeFileError("missing modulus", "header.modulus")
    ext_mod = tuple(_digits_to_coeffs(header["modulus"], p, "header.modulus"))
    try:
        base = make_field(p, e, modulus=base_mod)
    except InvalidModulus as exc:
        raise CodeFileError(str(exc), "header.base_modulus") from exc
    except HermesError as exc:
        raise CodeFileError(str(exc), "header") from exc
    try:
        field = quadratic_extension(base, modulus=ext_mod)
    except HermesError as exc:
        raise CodeFileError(str(exc), "header.modulus") from exc

    basis_data = body.get("basis")
    if not isinstance(basis_data, list):
        raise CodeFileError("basis must be a list of matrices", "body.basis")
    basis = []
    for i, mat in enumerate(basis_data):
        where = f"body.basis[{i}]"
        if not isinstance(mat, list) or len(mat) != n or any(
            not isinstance(row, list) or len(row) != n for row in mat
        ):
            raise CodeFileError(f"expected a {n}x{n} array of digit strings", where)
        for r, row in enumerate(mat):
            for c, entry in enumerate(row):
                try:
                    field.parse(entry)
                except ValueError as exc:
                    raise CodeFileError(str(exc), f"{where}[{r}][{c}]") from None
        try:
            basis.append(from_entries(n, field, mat))
        except NotHermitian as exc:
            raise CodeFileError(f"not Hermitian: {exc}", where) from exc
    try:
        return LinearCode(field, n, basis)
    except LinearDependence as exc:
        raise CodeFileError(str(exc), f"body.basis[{exc.index}]") from exc


def loads_code(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc
    return parse_code(obj)


def load_code(path):
    with open(path, encoding="utf-8") as fh:
        return loads_code(fh.read())


def _coeff_string(coeffs, p):
    if p <= 36:
        return "".join("0123456789abcdefghijklmnopqrstuvwxyz"[c] for c in coeffs)
    return ".".join(str(c) for c in coeffs)


def code_to_json(code):
    f = code.field
    return {
        "header": {
            "p": f.p,
            "e": f.base.e,
            "n": code.n,
            "base_modulus": _coeff_string(f.base.modulus, f.p),
            "modulus": _coeff_string(f.modulus, f.p),
        },
        "body": {"basis": [b.to_json() for b in code.basis]},
    }


def dumps_code(code):
    return json.dumps(code_to_json(code), indent=2) + "\n"
