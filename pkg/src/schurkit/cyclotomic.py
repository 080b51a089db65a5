"""Exact arithmetic in cyclotomic fields Q(zeta_d), power-basis coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import NonPositive
from .linalg import nullspace, rank
from .numtheory import divisors


def poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Division by a monic polynomial; coefficient lists are low degree first."""
    assert den[-1] == 1
    num = list(num)
    dd = len(den) - 1
    if len(num) <= dd:
        return [0], num
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    return q, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple:
    """Integer coefficients of the d-th cyclotomic polynomial, low degree first."""
    if d < 1:
        raise NonPositive(f"{d} is not positive")
    num = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d)[:-1]:
        q, r = poly_divmod(num, list(cyclotomic_poly(e)))
        assert not any(r), "inexact division"
        num = q
    return tuple(num)


@dataclass(frozen=True)
class CyclotomicField:
    conductor: int

    @property
    def minimal_polynomial(self) -> tuple:
        return cyclotomic_poly(self.conductor)

    @property
    def degree(self) -> int:
        return len(self.minimal_polynomial) - 1

    @cached_property
    def _zeta_powers(self) -> tuple:
        """Coordinates of zeta^k for k = 0..d-1."""
        out = []
        phi = list(self.minimal_polynomial)
        for k in range(self.conductor):
            _, r = poly_divmod([0] * k + [1], phi)
            r = r + [0] * (self.degree - len(r))
            out.append(tuple(Fraction(x) for x in r))
        return tuple(out)

    def zeta(self, k: int = 1) -> "CyclotomicElement":
        return CyclotomicElement(self, self._zeta_powers[k % self.conductor])

    def zero(self) -> "CyclotomicElement":
        return CyclotomicElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "CyclotomicElement":
        return self.zeta(0)

    def from_coords(self, coords) -> "CyclotomicElement":
        return CyclotomicElement(self, tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class CyclotomicElement:
    field: CyclotomicField
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.field.degree:
            raise ValueError("coordinate length must equal the field degree")

    def __add__(self, other):
        return CyclotomicElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return CyclotomicElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CyclotomicElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if not isinstance(other, CyclotomicElement):
            c = Fraction(other)
            return CyclotomicElement(self.field, tuple(c * a for a in self.coords))
        prod_ = poly_mul(list(self.coords), list(other.coords))
        _, r = poly_divmod(prod_, list(self.field.minimal_polynomial))
        r = r + [Fraction(0)] * (self.field.degree - len(r))
        return CyclotomicElement(self.field, tuple(Fraction(x) for x in r))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.field.one()
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        terms = [f"{c}*zeta^{k}" for k, c in enumerate(self.coords) if c]
        return " + ".join(terms) if terms else "0"


def minimal_polynomial(x: CyclotomicElement) -> list:
    """Monic minimal polynomial over Q (low degree first), from the first
    linear dependence among 1, x, x^2, ..."""
    powers = [x.field.one().coords]
    cur = x.field.one()
    while True:
        cur = cur * x
        powers.append(cur.coords)
        cols = len(powers)
        if rank(powers) < cols:
            rows = [[p[r] for p in powers] for r in range(x.field.degree)]
            ns = nullspace(rows)
            v = ns[0]
            lead = v[-1]
            return [c / lead for c in v]
