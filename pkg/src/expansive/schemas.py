"""JSON Schemas for the CLI's JSON output, one per subcommand."""

_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_NULLABLE_RATIONAL = {"anyOf": [_RATIONAL, {"type": "null"}]}
_COEFFS = {"type": "array", "items": {"type": "integer"}, "minItems": 1}

VERDICT = {
    "type": "object",
    "required": ["expansive", "method", "witness", "conditions_checked"],
    "properties": {
        "expansive": {"type": "boolean"},
        "method": {"enum": ["d-conditions-full", "d-conditions-reduced", "d-conditions-alternate", "schur-cohn", "numeric"]},
        "witness": {"type": "string"},
        "conditions_checked": {"type": "integer", "minimum": 0},
    },
}

CHECK = {
    "type": "object",
    "required": ["polynomial", "verdict"],
    "properties": {"polynomial": _COEFFS, "verdict": VERDICT},
}

_BOUND_PAIR = {
    "type": "object",
    "required": ["real", "complex"],
    "properties": {"real": _RATIONAL, "complex": _NULLABLE_RATIONAL},
}

GAP = {
    "type": "object",
    "required": ["polynomial", "report"],
    "properties": {
        "polynomial": _COEFFS,
        "report": {
            "type": "object",
            "required": ["n", "bounds", "best_real", "best_complex", "implied_gap_real",
                         "implied_gap_complex", "combined_bound"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "bounds": {
                    "type": "object",
                    "required": ["A", "AZ", "H", "L"],
                    "additionalProperties": _BOUND_PAIR,
                },
                "best_real": {"enum": ["A", "AZ", "H", "L"]},
                "best_complex": {"enum": ["A", "AZ", "H", "L", None]},
                "implied_gap_real": _RATIONAL,
                "implied_gap_complex": _NULLABLE_RATIONAL,
                "combined_bound": _RATIONAL,
            },
        },
        "certified": {
            "type": "object",
            "required": ["tol", "s_low", "gap_low"],
            "properties": {"tol": _RATIONAL, "s_low": _RATIONAL, "gap_low": _RATIONAL},
        },
        "numeric_gap": {"type": "number"},
    },
}

DPOLY = {
    "type": "object",
    "required": ["kind", "coeffs"],
    "properties": {
        "kind": {"enum": ["d", "pair", "resultant", "terms"]},
        "k": {"type": "integer"},
        "sign": {"enum": ["+", "-"]},
        "coeffs": {"type": "array", "items": {"type": "integer"}},
        "degree_bound": {"type": "integer"},
        "n": {"type": "integer"},
        "raw_terms": {"type": "integer"},
        "collected_terms": {"type": "integer"},
        "matching_convention": {"type": ["string", "null"]},
    },
}

ROOTS = {
    "type": "object",
    "required": ["polynomial", "roots", "radii", "max_residual", "numeric_expansive"],
    "properties": {
        "polynomial": _COEFFS,
        "roots": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
        },
        "radii": {"type": "array", "items": {"type": "number"}},
        "max_residual": {"type": "number", "minimum": 0},
        "numeric_expansive": {"enum": [True, False, "inconclusive"]},
    },
}

SEARCH = {
    "type": "object",
    "required": ["degree", "a0", "total_checked", "expansive", "polynomials"],
    "properties": {
        "degree": {"type": "integer", "minimum": 1},
        "a0": {"type": "integer", "minimum": 1},
        "total_checked": {"type": "integer", "minimum": 0},
        "expansive": {"type": "integer", "minimum": 0},
        "polynomials": {"type": "array", "items": _COEFFS},
    },
}

BENCH = {
    "type": "object",
    "required": ["degree", "height", "trials", "seed", "schur_median_bits", "bareiss",
                 "max_bareiss_excess_bits", "schur_seconds", "bareiss_seconds"],
    "properties": {
        "degree": {"type": "integer"},
        "height": {"type": "integer"},
        "trials": {"type": "integer"},
        "seed": {"type": "integer"},
        "schur_median_bits": {"type": "array", "items": {"type": "number"}, "minItems": 1},
        "bareiss": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["k", "sign", "max_bits", "hadamard_bits"],
            },
        },
        "max_bareiss_excess_bits": {"type": "integer"},
        "schur_seconds": {"type": "number"},
        "bareiss_seconds": {"type": "number"},
    },
}

SCHEMAS = {"check": CHECK, "gap": GAP, "dpoly": DPOLY, "roots": ROOTS, "search": SEARCH, "bench": BENCH}
