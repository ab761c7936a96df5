"""JSON Schemas for ``--format json`` output, one per subcommand.

Exact rationals are strings such as ``"11/32"``; integers are emitted in
full.
"""

_INT = {"type": "integer"}
_NNI = {"type": "integer", "minimum": 0}
_FRAC = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_OPT_FRAC = {"anyOf": [_FRAC, {"type": "null"}]}
_BOOL = {"type": "boolean"}


def _obj(props, extra=()):
    return {
        "type": "object",
        "properties": props,
        "required": sorted(set(props) - set(extra)),
        "additionalProperties": False,
    }


_COUNT = _obj(
    {
        "kind": {"enum": ["sphere", "ball"]},
        "q": _INT,
        "n": _INT,
        "t": _NNI,
        "value": _NNI,
        "lower": _NNI,
        "upper": _NNI,
        "contained": _BOOL,
    }
)

SCHEMAS = {
    "sphere": _COUNT,
    "ball": _COUNT,
    "binomial": _obj(
        {
            "kind": {"const": "binomial"},
            "q": _INT,
            "n": _NNI,
            "m": _NNI,
            "value": _NNI,
            "lower": _NNI,
            "upper": _NNI,
            "contained": _BOOL,
        }
    ),
    "density": _obj(
        {
            "q": _INT,
            "n": _INT,
            "d": _INT,
            "t": _NNI,
            "M": _INT,
            "density": _FRAC,
            "decimal": {"type": "string"},
            "lower": _FRAC,
            "upper": _FRAC,
            "regime": {"enum": ["odd", "even"]},
            "is_mrd": _BOOL,
            "limit": _obj(
                {
                    "regime": {"enum": ["odd", "even"]},
                    "value": _OPT_FRAC,
                    "lower": _OPT_FRAC,
                    "upper": _OPT_FRAC,
                }
            ),
        }
    ),
    "verify": _obj(
        {
            "q": _INT,
            "n": _INT,
            "k": _NNI,
            "M": _INT,
            "d": _INT,
            "t": _NNI,
            "singleton_bound": _INT,
            "is_mrd": _BOOL,
            "packing": _obj(
                {"lhs": _INT, "rhs": _INT, "slack": _NNI, "is_perfect": _BOOL, "trivial": _BOOL}
            ),
            "density": _FRAC,
            "decimal": {"type": "string"},
        }
    ),
    "census": _obj(
        {
            "q": _INT,
            "n": _INT,
            "census": {"type": "array", "items": _NNI},
            "formula": {"type": "array", "items": _NNI},
            "passed": _BOOL,
            "mismatch": {
                "anyOf": [
                    {"type": "null"},
                    _obj({"t": _NNI, "census": _NNI, "formula": _NNI}),
                ]
            },
        }
    ),
    "scan": _obj(
        {
            "mode": {"enum": ["power", "integer"]},
            "grid_size": _NNI,
            "findings": {
                "type": "array",
                "items": _obj(
                    {"q": _INT, "n": _INT, "d": _INT, "t": _NNI, "M": _INT, "trivial": _BOOL}
                ),
            },
            "trivial_count": _NNI,
            "nontrivial_count": _NNI,
            "lemma_checks": _NNI,
            "lemma_violations": {"type": "array", "items": {"type": "array", "items": _INT}},
        }
    ),
    "sweep": _obj(
        {
            "points": _NNI,
            "checks": _NNI,
            "violations": {
                "type": "array",
                "items": _obj(
                    {
                        "kind": {"enum": ["binomial", "sphere", "ball"]},
                        "q": _INT,
                        "n": _INT,
                        "t": _NNI,
                        "value": _NNI,
                    }
                ),
            },
            "passed": _BOOL,
        }
    ),
    "sample": _obj(
        {
            "q": _INT,
            "n": _INT,
            "seed": _INT,
            "matrix": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
            "rank": _NNI,
        }
    ),
}
