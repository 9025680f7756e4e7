"""JSON Schemas for presentation files and for every line the CLI prints.

Each stdout line of a subcommand is one JSON document valid under
``OUTPUT[command]``.
"""

_INT_ARRAY = {"type": "array", "items": {"type": "integer", "minimum": 2}}
_MATRIX_ARRAY = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
}

PRESENTATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["format_version", "kind", "period"],
    "properties": {
        "format_version": {"const": 1},
        "kind": {"enum": ["vietoris", "adic-surface", "toral"]},
    },
    "oneOf": [
        {
            "properties": {
                "kind": {"const": "vietoris"},
                "format_version": {},
                "prefix": _INT_ARRAY,
                "period": {**_INT_ARRAY, "minItems": 1},
            },
            "additionalProperties": False,
        },
        {
            "required": ["genus"],
            "properties": {
                "kind": {"const": "adic-surface"},
                "format_version": {},
                "genus": {"type": "integer", "minimum": 1},
                "prefix": _INT_ARRAY,
                "period": {**_INT_ARRAY, "minItems": 1},
            },
            "additionalProperties": False,
        },
        {
            "required": ["dimension"],
            "properties": {
                "kind": {"const": "toral"},
                "format_version": {},
                "dimension": {"type": "integer", "minimum": 1},
                "prefix": _MATRIX_ARRAY,
                "period": {**_MATRIX_ARRAY, "minItems": 1},
            },
            "additionalProperties": False,
        },
    ],
}

_VERDICTS = ["Homeomorphic", "NotHomeomorphic", "ConsistentAtDepth", "NotCoveredByTheory", "Refuted"]

CLASSIFY = {
    "type": "object",
    "required": ["command", "kind", "verdict", "theorem", "certificate"],
    "properties": {
        "command": {"const": "classify"},
        "kind": {"enum": ["vietoris", "adic-surface", "toral"]},
        "verdict": {"enum": _VERDICTS},
        "theorem": {"type": ["string", "null"]},
        "certificate": {"type": "string", "minLength": 1},
        "witness_prime": {"type": "integer", "minimum": 2},
        "depth": {"type": "integer", "minimum": 1},
        "reason": {"type": "string", "minLength": 1},
        "return_equivalent": {"type": "boolean"},
    },
    "additionalProperties": False,
}

ODOMETER = {"type": "integer", "minimum": 0}

COLLAPSIBLE = {
    "type": "object",
    "required": ["command", "modulus", "level", "set", "collapsible"],
    "properties": {
        "command": {"const": "collapsible"},
        "modulus": {"type": "integer", "minimum": 1},
        "level": {"type": "integer", "minimum": 0},
        "set": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
        "collapsible": {"type": "boolean"},
        "index": {"type": "integer", "minimum": 1},
        "generator": {"type": "integer", "minimum": 1},
        "partition": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
    "additionalProperties": False,
}

COUNTEREXAMPLE = {
    "type": "object",
    "required": ["command", "genus", "p1", "files", "return_equivalent", "homeomorphic", "theorem"],
    "properties": {
        "command": {"const": "counterexample"},
        "genus": {"type": "integer", "minimum": 2},
        "p1": {"type": "integer", "minimum": 3},
        "files": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        "return_equivalent": {"const": True},
        "homeomorphic": {"const": False},
        "theorem": {"type": "string"},
    },
    "additionalProperties": False,
}

INVARIANTS = {
    "type": "object",
    "required": ["command", "kind"],
    "properties": {
        "command": {"const": "invariants"},
        "kind": {"enum": ["vietoris", "adic-surface", "toral"]},
        "finite_part": {
            "type": "object",
            "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 1}},
            "additionalProperties": False,
        },
        "infinite_primes": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "genus": {"type": "integer", "minimum": 1},
        "depth": {"type": "integer", "minimum": 1},
        "invariant_factors": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        },
        "kernel_hnf": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "rank": {"type": "integer", "minimum": 0},
        "torsion_rank": {"type": "integer", "minimum": 0},
        "strictly_shrinking": {"type": "boolean"},
    },
    "oneOf": [
        {"required": ["finite_part", "infinite_primes"]},
        {"required": ["depth", "invariant_factors", "kernel_hnf", "rank", "torsion_rank"]},
    ],
    "additionalProperties": False,
}

OUTPUT = {
    "classify": CLASSIFY,
    "odometer": ODOMETER,
    "collapsible": COLLAPSIBLE,
    "counterexample": COUNTEREXAMPLE,
    "invariants": INVARIANTS,
}
