"""JSON Schemas (draft 2020-12) for every document the package emits.

All rationals are strings ``"p"`` or ``"p/q"``; every document carries
``"schema": 1``.
"""

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
NULLABLE_RATIONAL = {"anyOf": [RATIONAL, {"type": "null"}]}
SCALAR = {
    "type": "object",
    "required": ["re", "im"],
    "properties": {"re": RATIONAL, "im": RATIONAL},
    "additionalProperties": False,
}
LABEL = {"anyOf": [{"type": "integer"}, {"type": "string"},
                   {"type": "array", "items": {"type": ["integer", "string"]}}]}
VERSION = {"const": 1}

CHECK = {
    "type": "object",
    "required": ["preset", "axiom", "labels", "pass", "lhs", "rhs"],
    "properties": {
        "preset": {"type": "string"},
        "axiom": {"type": "string"},
        "labels": {"type": "array", "items": {"type": "string"}},
        "pass": {"type": "boolean"},
        "lhs": {"type": "string"},
        "rhs": {"type": "string"},
    },
    "additionalProperties": False,
}

REPORT = {
    "type": "object",
    "required": ["schema", "preset", "pass", "checks"],
    "properties": {
        "schema": VERSION,
        "preset": {"type": "string"},
        "pass": {"type": "boolean"},
        "notes": {"type": "array", "items": {"type": "string"}},
        "checks": {"type": "array", "items": CHECK},
    },
}

SMASH_ELEMENT = {
    "type": "object",
    "required": ["schema", "terms"],
    "properties": {
        "schema": VERSION,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeff", "a", "h"],
                "properties": {"coeff": SCALAR, "a": LABEL, "h": LABEL},
                "additionalProperties": False,
            },
        },
        "text": {"type": "string"},
    },
}

QPLANE_ELEMENT = {
    "type": "object",
    "required": ["schema", "q", "terms"],
    "properties": {
        "schema": VERSION,
        "q": SCALAR,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeff", "i", "j"],
                "properties": {"coeff": SCALAR, "i": {"type": "integer", "minimum": 0},
                               "j": {"type": "integer", "minimum": 0}},
                "additionalProperties": False,
            },
        },
        "text": {"type": "string"},
    },
}

VALUE_ROW = {
    "type": "object",
    "required": ["value_exact", "value_approx"],
    "properties": {
        "D": {"type": "integer"},
        "n": {"type": "integer"},
        "value_exact": NULLABLE_RATIONAL,
        "value_approx": {"type": ["string", "null"]},
        "status": {"enum": ["unconstrained", "unbounded"]},
    },
}

NORM_VALUE = {
    "type": "object",
    "required": ["schema", "family", "value_exact", "value_approx"],
    "properties": {
        "schema": VERSION,
        "family": {"type": "string"},
        "value_exact": NULLABLE_RATIONAL,
        "value_approx": {"type": "string"},
    },
}

STABILITY = {
    "type": "object",
    "required": ["schema", "h", "family", "rows", "verdict"],
    "properties": {
        "schema": VERSION,
        "h": {"type": "string"},
        "family": {"type": "string"},
        "rows": {"type": "array", "items": {**VALUE_ROW, "required": ["n"]}},
        "verdict": {
            "type": "object",
            "required": ["kind", "value"],
            "properties": {"kind": {"enum": ["UniformlyBounded", "Diverges"]},
                           "value": NULLABLE_RATIONAL},
        },
    },
}

WITNESS_TABLE = {
    "type": "object",
    "required": ["schema", "abs_q", "rho", "N", "mixed", "envelope"],
    "properties": {
        "schema": VERSION,
        "abs_q": RATIONAL,
        "rho": RATIONAL,
        "N": {"type": "integer", "minimum": 0},
        "mixed": {"type": "array", "items": {**VALUE_ROW, "required": ["D", "value_exact"]}},
        "envelope": {"type": "array", "items": {**VALUE_ROW, "required": ["D", "value_exact"]}},
    },
}

COUNTEREXAMPLE = {
    "type": "object",
    "required": ["table", "report"],
    "properties": {"table": WITNESS_TABLE, "report": REPORT},
}

CLI_OUTPUT = {
    "type": "object",
    "required": ["schema", "command", "pass", "result"],
    "properties": {
        "schema": VERSION,
        "command": {"type": "string"},
        "pass": {"type": "boolean"},
        "result": {"type": "object"},
    },
}

# payload schema for each CLI command
COMMANDS = {
    "verify hopf": REPORT,
    "verify module-algebra": REPORT,
    "verify smash": REPORT,
    "verify proof-identity": REPORT,
    "smash mul": SMASH_ELEMENT,
    "qplane normalize": QPLANE_ELEMENT,
    "qplane mul": QPLANE_ELEMENT,
    "seminorm eval": NORM_VALUE,
    "seminorm submult": REPORT,
    "stability scan": STABILITY,
    "demo counterexample": COUNTEREXAMPLE,
}
