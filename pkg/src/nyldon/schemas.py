"""JSON Schemas (draft 2020-12) for the command line's ``--json`` outputs."""

_PARAM_RANGE = {
    "type": "object",
    "required": ["name", "min", "max"],
    "properties": {"name": {"type": "string"}, "min": {"type": "integer"}, "max": {"type": "integer"}},
    "additionalProperties": False,
}

FACTORIZATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["word_len", "factors"],
    "properties": {
        "word_len": {"type": "integer", "minimum": 0},
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["start", "len", "text"],
                "properties": {
                    "start": {"type": "integer", "minimum": 0},
                    "len": {"type": "integer", "minimum": 1},
                    "text": {"type": "string", "minLength": 1},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

CHECK = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["word_len", "kind", "answer"],
    "properties": {
        "word_len": {"type": "integer", "minimum": 1},
        "kind": {"enum": ["nyldon", "lyndon"]},
        "answer": {"type": "boolean"},
    },
    "additionalProperties": False,
}

LNPS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["word_len", "start", "len", "text"],
    "properties": {
        "word_len": {"type": "integer", "minimum": 2},
        "start": {"type": "integer", "minimum": 1},
        "len": {"type": "integer", "minimum": 1},
        "text": {"type": "string", "minLength": 1},
    },
    "additionalProperties": False,
}

ENUMERATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "array",
    "items": {"type": "string", "minLength": 1},
}

REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["claim", "range", "outcome", "counterexample", "elapsed_ms"],
    "properties": {
        "claim": {"type": "string"},
        "range": {"type": "array", "items": _PARAM_RANGE},
        "outcome": {"enum": ["pass", "fail"]},
        "counterexample": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["params", "expected", "actual"],
                    "properties": {
                        "params": {"type": "object", "additionalProperties": {"type": "integer"}},
                        "expected": {"type": "string"},
                        "actual": {"type": "string"},
                    },
                    "additionalProperties": False,
                },
            ]
        },
        "elapsed_ms": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
    "if": {"properties": {"outcome": {"const": "fail"}}},
    "then": {"properties": {"counterexample": {"type": "object"}}},
}

REPORT_LIST = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "array",
    "items": REPORT,
}
