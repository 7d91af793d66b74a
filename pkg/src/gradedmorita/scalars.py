"""Exact scalar arithmetic over Q and prime fields F_p.

A field object bundles the operations; elements are plain Python values
(Fraction for Q, ints in [0, p) for F_p) so they stay cheap and hashable.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]


class ScalarMismatch(ValueError):
    """Raised when operands belong to different scalar fields."""


class RationalField:
    """The field of rational numbers; elements are fractions.Fraction."""

    name = "Q"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a: Fraction) -> bool:
        return a == 0

    def to_str(self, a: Fraction) -> str:
        return f"{a.numerator}/{a.denominator}"

    def from_str(self, s: str) -> Fraction:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den) if den else 1)

    # every residue list is infinite; callers must not enumerate Q
    def elements(self):
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "QQ"


class PrimeField:
    """The field F_p for a prime p; elements are ints reduced mod p."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"Fp:{p}"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1 % self.p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def to_str(self, a: int) -> str:
        return f"{a % self.p} mod {self.p}"

    def from_str(self, s: str) -> int:
        r, _, _ = s.partition(" mod ")
        num, _, den = r.partition("/")
        a = int(num) % self.p
        if den:
            a = self.mul(a, self.inv(int(den) % self.p))
        return a

    def elements(self) -> range:
        return range(self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def field_from_name(name: str) -> Field:
    """Parse 'Q' or 'Fp:<p>' into a field object."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field name {name!r}")


def same_field(a: Field, b: Field) -> Field:
    if a != b:
        raise ScalarMismatch(f"scalar fields differ: {a.name} vs {b.name}")
    return a
