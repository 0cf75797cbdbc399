"""JSON Schemas for the documents printed by each CLI subcommand."""

CYCLO = {
    "type": "object",
    "required": ["order", "coeffs"],
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "coeffs": {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+/\d+$"}},
    },
    "additionalProperties": False,
}

INT_MATRIX = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
CYCLO_MATRIX = {"type": "array", "items": {"type": "array", "items": CYCLO}}
CYCLO_LIST = {"type": "array", "items": CYCLO}

PARAMS = {
    "type": "object",
    "required": ["n", "l", "q_exp", "lambda_exp_upper"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "l": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "q_exp": {"type": "array", "items": {"type": "integer"}},
        "lambda_exp_upper": {"type": "array", "items": {
            "type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3}},
    },
}

ELEMENT = {
    "type": "object",
    "required": ["n", "terms"],
    "properties": {
        "n": {"type": "integer"},
        "terms": {"type": "array", "items": {
            "type": "object", "required": ["exps", "coeff"],
            "properties": {"exps": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                           "coeff": CYCLO}}},
    },
}

KIND = {"enum": ["maltsiniotis", "alternative"]}

RELATION_REPORT = {"type": "array", "items": {
    "type": "object",
    "required": ["relation", "pass"],
    "properties": {"relation": {"type": "string"}, "pass": {"type": "boolean"},
                   "witness_index": {"type": "integer", "minimum": 0}},
    "additionalProperties": False,
}}

REPRESENTATION = {
    "type": "object",
    "required": ["dim", "radix", "x", "y"],
    "properties": {"dim": {"type": "integer", "minimum": 1},
                   "radix": {"type": "array", "items": {"type": "integer"}},
                   "x": {"type": "array", "items": CYCLO_MATRIX},
                   "y": {"type": "array", "items": CYCLO_MATRIX}},
}

SPEC = {
    "type": "object",
    "required": ["I", "J", "mu", "gamma"],
    "properties": {"I": {"type": "array", "items": {"type": "integer"}},
                   "J": {"type": "array", "items": {"type": "integer"}},
                   "mu": CYCLO_LIST, "gamma": CYCLO_LIST},
}

SCHEMAS = {
    "validate": {
        "type": "object",
        "required": ["valid", "params", "L"],
        "properties": {"valid": {"const": True}, "params": PARAMS, "L": {"type": "integer"}},
    },
    "pidegree": {
        "type": "object",
        "required": ["pi_degree", "factors", "kernel_dim", "transform", "oracle_cardinality",
                     "kind", "factor", "modulus", "exponent_matrix"],
        "properties": {
            "pi_degree": {"type": "integer", "minimum": 1},
            "factors": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            "kernel_dim": {"type": "integer", "minimum": 0},
            "transform": INT_MATRIX,
            "oracle_cardinality": {"type": "integer", "minimum": 1},
            "kind": KIND,
            "factor": {"type": ["integer", "null"]},
            "modulus": {"type": "integer"},
            "exponent_matrix": INT_MATRIX,
        },
    },
    "relations": {
        "type": "object",
        "required": ["kind", "relations", "all_pass"],
        "properties": {
            "kind": KIND, "relations": RELATION_REPORT, "all_pass": {"type": "boolean"},
            "associativity": {"type": "object", "required": ["seed", "samples"]},
        },
    },
    "module": {
        "type": "object",
        "required": ["kind", "dim", "verification", "representation"],
        "properties": {
            "kind": KIND,
            "dim": {"type": "integer"},
            "verification": RELATION_REPORT,
            "spec": SPEC,
            "span_dimension": {"type": "integer"},
            "simple": {"type": "boolean"},
            "torsion": {"type": "array", "items": {"enum": ["zero", "invertible", "mixed"]}},
            "eigendata": {"type": "object"},
            "character_consistent": {"type": "boolean"},
            "representation": REPRESENTATION,
            "alternative": {
                "type": "object",
                "required": ["verification", "round_trip", "simple", "representation"],
                "properties": {"verification": RELATION_REPORT, "round_trip": {"type": "boolean"},
                               "simple": {"type": "boolean"}, "representation": REPRESENTATION},
            },
        },
    },
    "azumaya": {
        "type": "object",
        "required": ["point", "chi", "azumaya", "inequations", "kind"],
        "properties": {
            "point": {"type": "object", "required": ["alpha", "beta"],
                      "properties": {"alpha": CYCLO_LIST, "beta": CYCLO_LIST}},
            "chi": CYCLO_LIST,
            "azumaya": {"type": "boolean"},
            "inequations": {"type": "array", "items": {"type": "string"}},
            "kind": KIND,
        },
    },
    "center": {
        "type": "object",
        "required": ["kind", "generators", "witnesses", "all_pass"],
        "properties": {
            "kind": KIND,
            "generators": {"type": "array", "items": {
                "type": "object", "required": ["name", "element"],
                "properties": {"name": {"type": "string"}, "element": ELEMENT}}},
            "witnesses": {"type": "array", "items": {
                "type": "object", "required": ["element", "generator", "commutator", "pass"]}},
            "all_pass": {"type": "boolean"},
        },
    },
    "zidentity": {
        "type": "object",
        "required": ["kind", "checks", "all_pass"],
        "properties": {
            "kind": KIND,
            "checks": {"type": "array", "items": {
                "type": "object", "required": ["index", "pass", "lhs", "coefficient"],
                "properties": {"index": {"type": "integer"}, "pass": {"type": "boolean"},
                               "lhs": {"type": "string"}, "coefficient": CYCLO}}},
            "all_pass": {"type": "boolean"},
        },
    },
}
