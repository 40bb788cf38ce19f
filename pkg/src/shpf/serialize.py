"""Canonical JSON forms.  Rationals are always written as "num/den" strings."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping

from .characters import ClassFunction
from .core import Partition, partitions_of
from .parking import SortedNaiveShifted
from .scalars import QSqrt2
from .shifted import SortedOddShifted, matching_path, path_matching
from .symfunc import SymFunc, TPoly, TSymFunc


def fmt_q(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_q(s: str | int) -> Fraction:
    return Fraction(s)


def symfunc_to_json(f: SymFunc) -> dict[str, Any]:
    return {
        "degree": f.degree,
        "basis": "p",
        "terms": [{"partition": list(lam), "coeff": fmt_q(c)} for lam, c in f.coeffs.items()],
    }


def tsymfunc_to_json(f: TSymFunc) -> dict[str, Any]:
    return {
        "degree": f.degree,
        "basis": "p",
        "terms": [
            {"partition": list(lam), "poly": [fmt_q(c) for c in poly.coeffs]}
            for lam, poly in f.coeffs.items()
        ],
    }


def expansion_to_json(coeffs: Mapping[Partition, Fraction], degree: int, basis: str) -> dict[str, Any]:
    """Coefficient maps in a V basis, ordered like partitions_of."""
    order = {lam: i for i, lam in enumerate(partitions_of(degree))}
    return {
        "degree": degree,
        "basis": basis,
        "terms": [
            {"partition": list(lam), "coeff": fmt_q(c)}
            for lam, c in sorted(coeffs.items(), key=lambda kv: order[kv[0]])
            if c
        ],
    }


def from_json(data: Mapping[str, Any]) -> SymFunc | TSymFunc | dict[Partition, Fraction]:
    terms = data["terms"]
    degree = data["degree"]
    if data["basis"] != "p":
        return {tuple(t["partition"]): parse_q(t["coeff"]) for t in terms}
    if any("poly" in t for t in terms):
        return TSymFunc(
            degree,
            {tuple(t["partition"]): TPoly(tuple(parse_q(c) for c in t["poly"])) for t in terms},
        )
    return SymFunc(degree, {tuple(t["partition"]): parse_q(t["coeff"]) for t in terms})


def naive_to_json(x: SortedNaiveShifted) -> dict[str, Any]:
    path = matching_path(x)
    return {
        "p": list(x.p),
        "sbar": list(x.sbar),
        "tau": [list(a) for a in path_matching(path)],
        "path": path,
    }


def odd_to_json(y: SortedOddShifted) -> dict[str, Any]:
    return {"p": list(y.p), "sbar": list(y.sbar), "tau": [list(a) for a in y.tau]}


def odd_from_json(data: Mapping[str, Any]) -> SortedOddShifted:
    return SortedOddShifted(
        tuple(data["p"]), tuple(data["sbar"]), tuple(tuple(a) for a in data["tau"])
    )


def naive_from_json(data: Mapping[str, Any]) -> SortedNaiveShifted:
    return SortedNaiveShifted(tuple(data["p"]), tuple(data["sbar"]))


def classfunction_to_json(chi: ClassFunction) -> dict[str, Any]:
    values = []
    for lam, v in chi.values.items():
        if chi.kind == "spin":
            v = QSqrt2.coerce(v)
            values.append({"type": list(lam), "value": [fmt_q(v.a), fmt_q(v.b)]})
        else:
            values.append({"type": list(lam), "value": fmt_q(v)})
    return {"degree": chi.degree, "kind": chi.kind, "values": values}


def classfunction_from_json(data: Mapping[str, Any]) -> ClassFunction:
    vals = {}
    for item in data["values"]:
        v = item["value"]
        vals[tuple(item["type"])] = (
            QSqrt2(parse_q(v[0]), parse_q(v[1])) if isinstance(v, list) else parse_q(v)
        )
    return ClassFunction(data["degree"], data["kind"], vals)


_Q = {"type": "string", "pattern": r"^-?\d+/\d+$"}
_PART = {"type": "array", "items": {"type": "integer", "minimum": 1}}

SYMFUNC_SCHEMA = {
    "type": "object",
    "required": ["degree", "basis", "terms"],
    "properties": {
        "degree": {"type": "integer", "minimum": 0},
        "basis": {"enum": ["p", "v-odd", "v-naive"]},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["partition"],
                "properties": {
                    "partition": _PART,
                    "coeff": _Q,
                    "poly": {"type": "array", "items": _Q},
                },
                "oneOf": [{"required": ["coeff"]}, {"required": ["poly"]}],
            },
        },
    },
}

OBJECT_SCHEMA = {
    "type": "object",
    "required": ["p", "sbar", "tau"],
    "properties": {
        "p": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "sbar": {"type": "array", "items": {"enum": [-1, 0, 1]}},
        "tau": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "path": {"type": "string", "pattern": "^[URPN]*$"},
    },
}

CLASSFUNCTION_SCHEMA = {
    "type": "object",
    "required": ["degree", "kind", "values"],
    "properties": {
        "degree": {"type": "integer", "minimum": 0},
        "kind": {"enum": ["ordinary", "spin"]},
        "values": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["type", "value"],
                "properties": {
                    "type": _PART,
                    "value": {
                        "oneOf": [_Q, {"type": "array", "items": _Q, "minItems": 2, "maxItems": 2}]
                    },
                },
            },
        },
    },
}
