"""JSON Schemas for every CLI output record."""
from __future__ import annotations

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
PAIR = {
    "type": "object",
    "required": ["a", "b"],
    "properties": {"a": RATIONAL, "b": RATIONAL},
}
WITNESS = {
    "type": "object",
    "required": ["s", "w"],
    "properties": {"s": {"type": "integer"}, "w": {"type": "integer"}},
}
CRITICAL_VALUE = {
    "type": "object",
    "required": ["a", "b", "witnesses"],
    "properties": {"a": RATIONAL, "b": RATIONAL, "witnesses": {"type": "array", "items": WITNESS}},
}
WINDOW = {
    "type": "object",
    "required": ["name", "s0"],
    "properties": {"name": {"type": "string"}, "s0": {"type": ["integer", "null"]}},
}
DISCREPANCY = {
    "type": "object",
    "required": ["kind", "registered", "printed", "oracle", "explained_extra", "explained_missing", "note"],
    "properties": {
        "kind": {"type": "string"},
        "registered": {"type": "boolean"},
        "printed": {"type": "array", "items": PAIR},
        "oracle": {"type": "array", "items": PAIR},
        "explained_extra": {"type": "array", "items": PAIR},
        "explained_missing": {"type": "array", "items": PAIR},
        "note": {"type": "string"},
    },
}
CS_FIELDS = {"r": {"type": "integer"}, "t": {"enum": [0, 1]}, "c2": {"type": "integer"}}
POINTS = {"type": "array", "items": {"type": "array", "items": RATIONAL, "minItems": 3, "maxItems": 3}}

SCHEMAS: dict[str, dict] = {
    "segre": {
        "type": "object",
        "required": ["r", "t", "c2", "values"],
        "properties": {
            **CS_FIELDS,
            "values": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["s", "threshold", "feasible", "cycle_length"],
                    "properties": {
                        "s": {"type": "integer"},
                        "threshold": {"type": "integer"},
                        "feasible": {"type": "boolean"},
                        "cycle_length": {"type": ["integer", "null"]},
                    },
                },
            },
        },
    },
    "stability": {
        "type": "object",
        "required": ["ordering", "alpha", "sub"],
        "properties": {
            "ordering": {"enum": ["LESS", "EQUAL", "GREATER"]},
            "verdict": {"enum": ["AlphaUnstable", "AlphaStable", "StrictlySemistable"]},
            "alpha": PAIR,
            "sub": {"type": "object", "required": ["c1L", "w"]},
        },
    },
    "critical": {
        "type": "object",
        "required": ["r", "t", "c2", "oracle"],
        "properties": {
            **CS_FIELDS,
            "oracle": {"type": "array", "items": CRITICAL_VALUE},
            "closed_form": {"type": "array", "items": CRITICAL_VALUE},
            "window": WINDOW,
            "discrepancies": {"type": "array", "items": DISCREPANCY},
            "ok": {"type": "boolean"},
        },
    },
    "chambers": {
        "type": "object",
        "required": ["r", "t", "c2", "walls", "chambers"],
        "properties": {
            **CS_FIELDS,
            "walls": {"type": "array", "items": CRITICAL_VALUE},
            "chambers": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["lower", "upper", "rep"],
                    "properties": {
                        "lower": {"oneOf": [PAIR, {"type": "null"}]},
                        "upper": {"oneOf": [PAIR, {"type": "null"}]},
                        "rep": PAIR,
                    },
                },
            },
        },
    },
    "flip-dim": {
        "type": "object",
        "required": ["ext1", "base", "sigma_minus"],
        "properties": {
            "ext1": {"type": "integer", "minimum": 0},
            "base": {"type": "integer", "minimum": 0},
            "sigma_minus": {"type": "integer", "minimum": 0},
        },
    },
    "points": {
        "type": "object",
        "properties": {
            "points": POINTS,
            "length": {"type": "integer"},
            "d": {"type": "integer"},
            "h0": {"type": "integer"},
            "no_curve": {"type": "boolean"},
            "cb": {"type": "boolean"},
            "no_curve_degree": {"type": "integer"},
            "cb_degree": {"type": "integer"},
        },
    },
    "nonempty": {
        "type": "object",
        "required": ["r", "t", "c2", "a", "clause", "thresholds"],
        "properties": {
            **CS_FIELDS,
            "a": RATIONAL,
            "clause": {"type": ["integer", "null"]},
            "thresholds": {"type": "object"},
            "iff": {
                "type": "object",
                "required": ["s0", "b", "bound", "semistable", "nonempty"],
                "properties": {
                    "s0": {"type": "integer"},
                    "b": RATIONAL,
                    "bound": RATIONAL,
                    "semistable": {"type": "boolean"},
                    "nonempty": {"type": "boolean"},
                },
            },
        },
    },
    "sweep": {
        "type": "object",
        "required": ["r", "t", "c2", "window", "oracle", "closed_form", "discrepancies", "ok"],
        "properties": {
            **CS_FIELDS,
            "window": {"oneOf": [WINDOW, {"type": "null"}]},
            "oracle": {"type": "array", "items": CRITICAL_VALUE},
            "closed_form": {"oneOf": [{"type": "array", "items": CRITICAL_VALUE}, {"type": "null"}]},
            "discrepancies": {"type": "array", "items": DISCREPANCY},
            "unexplained_extra": {"type": "array", "items": PAIR},
            "unexplained_missing": {"type": "array", "items": PAIR},
            "ok": {"type": "boolean"},
        },
    },
}
