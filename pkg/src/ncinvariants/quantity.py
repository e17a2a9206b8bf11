"""Computed values with a certification label.

A value is "certified" only when a named result bounds the truncation
error away; otherwise it is "observed to N", i.e. read off data computed
through degree N.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

INF = math.inf
NEG_INF = -math.inf

CERTIFIED = "certified"


def observed_status(N: int) -> str:
    return f"observed to {N}"


@dataclass(frozen=True)
class Quantity:
    value: object
    status: str
    by: str = ""

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def to_json(self) -> dict:
        out = {"value": json_number(self.value), "status": self.status}
        if self.by:
            out["by"] = self.by
        return out


def observed(value, N: int, by: str = "") -> Quantity:
    return Quantity(value, observed_status(N), by)


def certified(value, by: str) -> Quantity:
    return Quantity(value, CERTIFIED, by)


def json_number(x):
    """ints stay ints; infinities become strings; fractions become "p/q"."""
    if x is None:
        return None
    if isinstance(x, float):
        if x == INF:
            return "inf"
        if x == NEG_INF:
            return "-inf"
        if x.is_integer():
            return int(x)
        raise TypeError(f"inexact value {x!r}")
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return x
    q = Fraction(str(x))
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
