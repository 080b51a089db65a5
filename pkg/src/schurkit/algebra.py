"""The rational group algebra Q[G] of a finite abelian group."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping


from .errors import EmptySet, GroupMismatch, ParseError
from .groups import AbelianGroup, GroupHom, Subgroup


@lru_cache(maxsize=64)
def _mul_rows(G: AbelianGroup) -> tuple:
    return tuple(tuple(r) for r in G.mul.tolist())


def _prune(coeffs: Mapping[int, Fraction]) -> dict:
    return {i: c for i, c in coeffs.items() if c != 0}


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """A formal sum ``sum c_g g`` with exact rational coefficients.

    Coefficients are stored sparsely by element index; zeros are pruned so
    that equality is plain dict equality.
    """

    group: AbelianGroup
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {int(i): Fraction(c) for i, c in self.coeffs.items() if c != 0}
        )

    # construction

    @classmethod
    def from_elements(cls, G: AbelianGroup, terms: Mapping) -> "AlgebraElement":
        out: dict = {}
        for g, c in terms.items():
            i = G.index(g)
            out[i] = out.get(i, Fraction(0)) + Fraction(c)
        return cls(G, out)

    @classmethod
    def from_vector(cls, G: AbelianGroup, vec) -> "AlgebraElement":
        return cls(G, {i: c for i, c in enumerate(vec) if c != 0})

    @classmethod
    def zero(cls, G: AbelianGroup) -> "AlgebraElement":
        return cls(G, {})

    @classmethod
    def one(cls, G: AbelianGroup) -> "AlgebraElement":
        return cls(G, {0: Fraction(1)})

    @classmethod
    def basis(cls, G: AbelianGroup, g, c=1) -> "AlgebraElement":
        return cls(G, {G.index(g): Fraction(c)})

    # access

    def coeff(self, g) -> Fraction:
        return self.coeffs.get(self.group.index(g), Fraction(0))

    def vector(self) -> list:
        v = [Fraction(0)] * self.group.order
        for i, c in self.coeffs.items():
            v[i] = c
        return v

    def support(self) -> frozenset:
        return frozenset(self.group.elements[i] for i in self.coeffs)

    def augmentation(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.group, frozenset(self.coeffs.items())))

    # arithmetic

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement")
        if other.group != self.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return self + other * AlgebraElement.one(self.group)
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return AlgebraElement(self.group, _prune(out))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.group, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return convolve(self, other)
        c = Fraction(other)
        return AlgebraElement(self.group, {i: c * v for i, v in self.coeffs.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def __pow__(self, k: int):
        out = AlgebraElement.one(self.group)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return format_element(self)


def convolve(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Group-algebra product."""
    a._check(b)
    rows = _mul_rows(a.group)
    out: dict = {}
    for i, x in a.coeffs.items():
        r = rows[i]
        for j, y in b.coeffs.items():
            k = r[j]
            out[k] = out.get(k, 0) + x * y
    return AlgebraElement(a.group, _prune(out))


def hadamard(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Coefficientwise product."""
    a._check(b)
    return AlgebraElement(
        a.group, {i: c * b.coeffs[i] for i, c in a.coeffs.items() if i in b.coeffs}
    )


def star(a: AlgebraElement) -> AlgebraElement:
    """The involution ``g -> g^{-1}``."""
    inv = a.group.inv
    return AlgebraElement(a.group, {int(inv[i]): c for i, c in a.coeffs.items()})


def class_sum(G: AbelianGroup, A: Iterable) -> AlgebraElement:
    idx = {G.index(g) for g in A}
    if not idx:
        raise EmptySet("class sum of the empty set")
    return AlgebraElement(G, {i: Fraction(1) for i in idx})


def indicator(G: AbelianGroup, idx: Iterable[int]) -> AlgebraElement:
    """Class sum from element indices."""
    return AlgebraElement(G, {int(i): Fraction(1) for i in idx})


def subgroup_sum(H: Subgroup) -> AlgebraElement:
    return indicator(H.group, H.elements)


def normalized_sum(H: Subgroup) -> AlgebraElement:
    """The idempotent ``(1/|H|) * sum of H``."""
    c = Fraction(1, H.order)
    return AlgebraElement(H.group, {i: c for i in H.elements})


def stabilizer(a: AlgebraElement) -> Subgroup:
    """``{g : g a = a}``."""
    G = a.group
    rows = _mul_rows(G)
    items = list(a.coeffs.items())
    keep = []
    for g in range(G.order):
        r = rows[g]
        if all(a.coeffs.get(r[i]) == c for i, c in items):
            keep.append(g)
    return Subgroup(G, frozenset(keep))


def apply_hom(phi: GroupHom, a: AlgebraElement) -> AlgebraElement:
    """Linear extension of a group homomorphism."""
    if a.group != phi.domain:
        raise GroupMismatch("element is not over the domain of the map")
    t = phi.table
    out: dict = {}
    for i, c in a.coeffs.items():
        k = int(t[i])
        out[k] = out.get(k, 0) + c
    return AlgebraElement(phi.codomain, _prune(out))


def level_sets(a: AlgebraElement) -> dict:
    """Partition of G by coefficient value, zero included."""
    G = a.group
    out: dict = {}
    for i in range(G.order):
        out.setdefault(a.coeffs.get(i, Fraction(0)), set()).add(G.elements[i])
    return {c: frozenset(s) for c, s in out.items()}


def is_constant_on(a: AlgebraElement, classes: Iterable[Iterable[int]]) -> bool:
    """True if the coefficients of ``a`` are constant on every index class."""
    get = a.coeffs.get
    zero = Fraction(0)
    for cls in classes:
        it = iter(cls)
        first = get(next(it), zero)
        if any(get(i, zero) != first for i in it):
            return False
    return True


# text form


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(a: AlgebraElement) -> str:
    """``"1/3*z^0 - 1/3*z^6"``; multi-factor groups use residue tuples ``(r1,r2)``."""
    if not a.coeffs:
        return "0"
    parts = []
    for i in sorted(a.coeffs):
        c = a.coeffs[i]
        g = a.group.format_element(a.group.elements[i])
        if not parts:
            parts.append(f"{_fmt_rational(c)}*{g}")
        elif c < 0:
            parts.append(f" - {_fmt_rational(-c)}*{g}")
        else:
            parts.append(f" + {_fmt_rational(c)}*{g}")
    return "".join(parts)


_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\*?(?P<elem>z(?:\^\d+)?|\([\d,]*\))?$"
)


def _split_terms(text: str) -> list:
    terms, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur not in ("", "+", "-"):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        terms.append(cur)
    return terms


def parse_element(G: AbelianGroup, text: str) -> AlgebraElement:
    """Inverse of :func:`format_element`; also accepts bare ``z``, omitted
    coefficients and bare rational constants."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return AlgebraElement.zero(G)
    out: dict = {}
    for term in _split_terms(text):
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("elem") is None):
            raise ParseError(f"cannot parse term {term!r}")
        try:
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {term!r}") from None
        elem = m.group("elem")
        if elem is None:
            g = G.identity
        elif elem.startswith("z"):
            if G.rank > 1:
                raise ParseError("power notation needs a cyclic group")
            k = int(elem[2:]) if "^" in elem else 1
            g = G.power(k) if G.rank == 1 else G.identity
        else:
            body = elem[1:-1]
            try:
                g = G.coerce(tuple(int(x) for x in body.split(",")) if body else ())
            except Exception as exc:
                raise ParseError(f"bad element {elem!r}") from exc
        i = G.index(g)
        out[i] = out.get(i, Fraction(0)) + sign * coef
    return AlgebraElement(G, _prune(out))


def random_element(G: AbelianGroup, rng, density: float = 0.6, height: int = 5) -> AlgebraElement:
    """Random element with small rational coefficients (test helper)."""
    coeffs = {}
    for i in range(G.order):
        if rng.random() < density:
            coeffs[i] = Fraction(rng.randint(-height, height), rng.randint(1, height))
    return AlgebraElement(G, coeffs)
