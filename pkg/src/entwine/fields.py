"""Exact scalar arithmetic over the rationals or a prime field GF(p).

Scalars are plain Python values: ``fractions.Fraction`` in characteristic 0,
``int`` residues in ``[0, p)`` in characteristic p.  Nothing here ever
rounds; equality of scalars is exact equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Ground field: char 0 is the rationals, char p > 0 is GF(p).

    Serialized scalar form is "p/q" (reduced, q > 0) over the rationals and
    the decimal residue over GF(p).
    """

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.char}")

    # -- constants ---------------------------------------------------------
    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.char == 0 else 1

    def of(self, n) -> Scalar:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(n, str):
            return self.parse(n)
        if self.char == 0:
            return Fraction(n)
        if isinstance(n, Fraction):
            if n.denominator % self.char == 0:
                raise ZeroDivisionError(f"denominator of {n} vanishes mod {self.char}")
            return (n.numerator * pow(n.denominator, -1, self.char)) % self.char
        return int(n) % self.char

    # -- arithmetic --------------------------------------------------------
    def add(self, x: Scalar, y: Scalar) -> Scalar:
        return x + y if self.char == 0 else (x + y) % self.char

    def sub(self, x: Scalar, y: Scalar) -> Scalar:
        return x - y if self.char == 0 else (x - y) % self.char

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        return x * y if self.char == 0 else (x * y) % self.char

    def neg(self, x: Scalar) -> Scalar:
        return -x if self.char == 0 else (-x) % self.char

    def inv(self, x: Scalar) -> Scalar:
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        if self.char == 0:
            return Fraction(1) / x
        return pow(x, -1, self.char)

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.mul(x, self.inv(y))

    def is_zero(self, x: Scalar) -> bool:
        return x == 0

    # -- serialization -----------------------------------------------------
    def to_str(self, x: Scalar) -> str:
        if self.char == 0:
            f = Fraction(x)
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        return str(x % self.char)

    def parse(self, s: str) -> Scalar:
        if self.char == 0:
            return Fraction(s)
        if "/" in s:
            num, _, den = s.partition("/")
            return self.div(self.of(int(num)), self.of(int(den)))
        return int(s) % self.char

    # -- randomness (for seeded property tests and certificate search) -----
    def random(self, rng: random.Random, nonzero: bool = False) -> Scalar:
        while True:
            if self.char == 0:
                x = Fraction(rng.randint(-6, 6), rng.choice([1, 1, 1, 2, 3]))
            else:
                x = rng.randrange(self.char)
            if not (nonzero and x == 0):
                return x


QQ = Field(0)
