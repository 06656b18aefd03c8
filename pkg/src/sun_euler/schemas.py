"""JSON Schemas (draft 2020-12) for the CLI payloads.

``generators`` and ``sample`` print JSON lines; their schemas describe one line.
"""
from __future__ import annotations

_REAL_MATRIX = {"type": "array", "items": {"type": "array", "items": {"type": "number"}}}

MATRIX = {
    "type": "object",
    "required": ["re", "im"],
    "properties": {"re": _REAL_MATRIX, "im": _REAL_MATRIX},
}

_POS_INT = {"type": "integer", "minimum": 1}

SCHEMAS: dict[str, dict] = {
    "generators": {
        "type": "object",
        "required": ["n", "index", "re", "im"],
        "properties": {"n": _POS_INT, "index": _POS_INT, "re": _REAL_MATRIX, "im": _REAL_MATRIX},
        "additionalProperties": False,
    },
    "sequence": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["generator", "param", "kind"],
            "properties": {
                "generator": _POS_INT,
                "param": _POS_INT,
                "kind": {"enum": ["lambda3", "plane", "cartan"]},
            },
        },
    },
    "unitary": {
        "type": "object",
        "required": ["n", "matrix"],
        "properties": {"n": _POS_INT, "matrix": MATRIX},
    },
    "kernel": {"type": "number"},
    "kernel_check": {
        "type": "object",
        "required": ["n", "points", "seed", "max_relative_deviation", "max_absolute_deviation_singular"],
        "properties": {
            "n": _POS_INT,
            "points": _POS_INT,
            "seed": {"type": "integer"},
            "max_relative_deviation": {"type": "number", "minimum": 0},
            "max_absolute_deviation_singular": {"type": "number", "minimum": 0},
        },
    },
    "volume": {
        "type": "object",
        "required": ["n", "method", "value", "stderr", "samples", "seed"],
        "properties": {
            "n": _POS_INT,
            "method": {"enum": ["marinov", "quadrature", "monte_carlo"]},
            "value": {"type": "number", "exclusiveMinimum": 0},
            "stderr": {"type": "number", "minimum": 0},
            "samples": {"type": ["integer", "null"]},
            "seed": {"type": ["integer", "null"]},
        },
        "additionalProperties": False,
    },
    "ranges": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["param", "lo", "hi"],
            "properties": {"param": _POS_INT, "lo": {"type": "number"}, "hi": {"type": "number"}},
            "additionalProperties": False,
        },
    },
    "rho": {
        "type": "object",
        "required": ["n", "matrix", "eigenvalues", "coefficients"],
        "properties": {
            "n": _POS_INT,
            "matrix": MATRIX,
            "eigenvalues": {"type": "array", "items": {"type": "number"}},
            "coefficients": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["generator", "value"],
                    "properties": {"generator": _POS_INT, "value": {"type": "number"}},
                },
            },
        },
    },
    "sample": {
        "type": "object",
        "required": ["n", "index", "what", "re", "im"],
        "properties": {
            "n": _POS_INT,
            "index": {"type": "integer", "minimum": 0},
            "what": {"enum": ["unitary", "rho"]},
            "re": _REAL_MATRIX,
            "im": _REAL_MATRIX,
        },
    },
    "verify": {
        "type": "object",
        "required": ["suite", "ok", "counts", "results"],
        "properties": {
            "suite": {"type": "string"},
            "ok": {"type": "boolean"},
            "counts": {"type": "object", "additionalProperties": {"type": "integer"}},
            "results": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["name", "status", "detail"],
                    "properties": {
                        "name": {"type": "string"},
                        "status": {"enum": ["pass", "fail", "erratum"]},
                        "detail": {"type": "string"},
                    },
                },
            },
        },
    },
    "error": {
        "type": "object",
        "required": ["status", "code", "message"],
        "properties": {
            "status": {"const": "error"},
            "code": {"type": "string"},
            "message": {"type": "string"},
        },
    },
}
