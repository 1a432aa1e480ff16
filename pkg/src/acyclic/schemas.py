"""JSON Schemas for the ``--format json`` outputs of the command-line tool."""

GROUP = {
    "type": "object",
    "properties": {
        "betti": {"type": "integer", "minimum": 0},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
    },
    "required": ["betti", "torsion"],
    "additionalProperties": False,
}

_TABLE = {
    "type": "object",
    "patternProperties": {"^-?[0-9]+$": GROUP},
    "additionalProperties": False,
}

HOMOLOGY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "homology table",
    "type": "object",
    "properties": {
        "kind": {"enum": ["homology", "cohomology"]},
        "reduced": {"type": "boolean"},
        "groups": _TABLE,
    },
    "required": ["kind", "reduced", "groups"],
    "additionalProperties": False,
}

REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "acyclicity report",
    "type": "object",
    "properties": {
        "nonempty": {"type": "boolean"},
        "connected": {"type": "boolean"},
        "homology": _TABLE,
        "max_k": {"oneOf": [{"type": "integer", "minimum": -2}, {"const": "infinity"}]},
        "perfect_pi1_h1": {"type": "boolean"},
        "indexing": {"enum": ["section3", "section5"]},
        "caveat": {"type": "string"},
        "k": {"type": "integer", "minimum": -1},
        "k_acyclic": {"type": "boolean"},
    },
    "required": ["nonempty", "connected", "homology", "max_k", "perfect_pi1_h1", "indexing", "caveat"],
    "additionalProperties": False,
}

ABELIANIZATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "abelianization",
    "type": "object",
    "properties": {
        "presentation": {"type": "string"},
        "free_rank": {"type": "integer", "minimum": 0},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "perfect": {"type": "boolean"},
        "exponent_matrix": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    },
    "required": ["presentation", "free_rank", "torsion", "perfect"],
    "additionalProperties": False,
}

PI1 = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "edge-path fundamental group",
    "type": "object",
    "properties": {
        "presentation": {"type": "string"},
        "basepoint": {},
        "generators": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
        "abelianization": GROUP,
        "h1": GROUP,
        "agree": {"type": "boolean"},
    },
    "required": ["presentation", "basepoint", "generators", "abelianization", "h1", "agree"],
    "additionalProperties": False,
}

_MATRIX = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}

SNF = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Smith normal form",
    "type": "object",
    "properties": {
        "shape": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
        "rank": {"type": "integer", "minimum": 0},
        "invariant_factors": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "cokernel": GROUP,
        "U": _MATRIX,
        "D": _MATRIX,
        "V": _MATRIX,
    },
    "required": ["shape", "rank", "invariant_factors", "cokernel"],
    "additionalProperties": False,
}

PERMCHECK = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "permutation representation check",
    "type": "object",
    "properties": {
        "presentation": {"type": "string"},
        "assignment": {"type": "object", "additionalProperties": {"type": "string"}},
        "relators": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "relator": {"type": "string"},
                    "value": {"type": "string"},
                    "holds": {"type": "boolean"},
                },
                "required": ["relator", "value", "holds"],
                "additionalProperties": False,
            },
        },
        "relations_hold": {"type": "boolean"},
        "image_order": {"type": "integer", "minimum": 1},
        "image_perfect": {"type": "boolean"},
        "target": {"type": ["string", "null"]},
        "target_order": {"type": ["integer", "null"]},
        "surjective": {"type": ["boolean", "null"]},
    },
    "required": ["presentation", "assignment", "relators", "relations_hold", "image_order",
                 "image_perfect", "target", "target_order", "surjective"],
    "additionalProperties": False,
}

VERIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "verification table",
    "type": "object",
    "properties": {
        "passed": {"type": "boolean"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": {"type": "string"},
                    "criterion": {"type": "integer"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                    "seconds": {"type": "number"},
                },
                "required": ["id", "criterion", "passed", "detail", "seconds"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["passed", "rows"],
    "additionalProperties": False,
}

COMPLEX = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "simplicial complex (maximal simplices)",
    "type": "array",
    "items": {"type": "array", "minItems": 1, "items": {"type": ["integer", "string"]}},
}

SCHEMAS = {
    "homology": HOMOLOGY,
    "cohomology": HOMOLOGY,
    "acyclicity": REPORT,
    "abelianize": ABELIANIZATION,
    "perfect": ABELIANIZATION,
    "pi1": PI1,
    "snf": SNF,
    "permcheck": PERMCHECK,
    "verify-paper": VERIFY,
    "suspend": COMPLEX,
    "cone": COMPLEX,
    "join": COMPLEX,
    "wedge": COMPLEX,
}
