"""Base data for the orders O_n = Z_p[p^n Delta] inside a quadratic etale algebra.

Elements of O_n are stored by their integer coordinates (x, y) in the basis
{1, p^n Delta}, where Delta satisfies Delta^2 = tau*Delta - delta.  All
arithmetic is exact; p-adic information is read off through valuations of
integers, never through floating point.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

INF = math.inf


class CaseKind(enum.Enum):
    RAMIFIED = "ramified"
    UNRAMIFIED = "unramified"
    SPLIT = "split"

    @property
    def e(self) -> int:
        """Ramification index (1 per factor in the split case)."""
        return 2 if self is CaseKind.RAMIFIED else 1

    @property
    def f(self) -> int:
        return 2 if self is CaseKind.UNRAMIFIED else 1

    @property
    def g(self) -> int:
        return 2 if self is CaseKind.SPLIT else 1

    @classmethod
    def parse(cls, name: str) -> "CaseKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown case {name!r}; expected one of "
                             f"{[c.value for c in cls]}") from None


class SetupError(ValueError):
    pass


class LevelMismatch(ValueError):
    pass


class TruncationError(ArithmeticError):
    """A valuation reached the working precision, so it cannot be trusted."""


def val_p(a: int, p: int) -> int | float:
    """p-adic valuation of an integer; val_p(0) is infinity."""
    if a == 0:
        return INF
    a = abs(a)
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def smallest_nonresidue(p: int) -> int:
    for u in range(2, p):
        if legendre(u, p) == -1:
            return u
    raise SetupError(f"no quadratic nonresidue mod {p}")


def classify_discriminant(p: int, tau: int, delta: int) -> CaseKind:
    """Case kind of Z_p[Delta] for Delta^2 = tau*Delta - delta, if it is maximal."""
    disc = tau * tau - 4 * delta
    v = val_p(disc, p)
    if v == 0:
        return CaseKind.SPLIT if legendre(disc, p) == 1 else CaseKind.UNRAMIFIED
    if v == 1:
        return CaseKind.RAMIFIED
    raise SetupError(f"disc = {disc} has p-valuation {v}; Z_{p}[Delta] is not "
                     "the maximal order")


@dataclass(frozen=True)
class QuadraticSetup:
    """Ambient data: odd prime p, minimal polynomial X^2 - tau X + delta, case kind.

    The residue cardinality q equals p for every concrete setup.
    """

    p: int
    tau: int
    delta: int
    kind: CaseKind

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise SetupError(f"p = {self.p} is not an odd prime")
        actual = classify_discriminant(self.p, self.tau, self.delta)
        if actual is not self.kind:
            raise SetupError(f"(tau, delta) = ({self.tau}, {self.delta}) gives a "
                             f"{actual.value} setup at p = {self.p}, not "
                             f"{self.kind.value}")

    @property
    def q(self) -> int:
        return self.p

    @property
    def disc(self) -> int:
        return self.tau * self.tau - 4 * self.delta

    @classmethod
    def from_coeffs(cls, p: int, tau: int, delta: int) -> "QuadraticSetup":
        if not is_odd_prime(p):
            raise SetupError(f"p = {p} is not an odd prime")
        return cls(p, tau, delta, classify_discriminant(p, tau, delta))

    @classmethod
    def preset(cls, kind: CaseKind | str, p: int) -> "QuadraticSetup":
        """Canonical setups: Delta^2 = p, Delta^2 = u (u a nonresidue), Delta^2 = Delta."""
        if isinstance(kind, str):
            kind = CaseKind.parse(kind)
        if not is_odd_prime(p):
            raise SetupError(f"p = {p} is not an odd prime")
        if kind is CaseKind.RAMIFIED:
            return cls(p, 0, -p, kind)
        if kind is CaseKind.UNRAMIFIED:
            return cls(p, 0, -smallest_nonresidue(p), kind)
        return cls(p, 1, 0, kind)

    def element(self, x: int, y: int, n: int = 0) -> "OrderElement":
        return OrderElement(x, y, n, self)


@dataclass(frozen=True)
class OrderElement:
    """x + y * p^n * Delta in O_n."""

    x: int
    y: int
    n: int
    setup: QuadraticSetup

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("level n must be nonnegative")

    def __add__(self, other: "OrderElement") -> "OrderElement":
        return elem_add(self, other)

    def __mul__(self, other: "OrderElement") -> "OrderElement":
        return elem_mul(self, other)

    def __neg__(self) -> "OrderElement":
        return OrderElement(-self.x, -self.y, self.n, self.setup)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def at_level(self, m: int) -> "OrderElement":
        """The same element of O_0 written in the coordinates of O_m.

        Raises ValueError when the element does not lie in O_m.
        """
        p = self.setup.p
        if m <= self.n:
            return OrderElement(self.x, self.y * p ** (self.n - m), m, self.setup)
        step = p ** (m - self.n)
        if self.y % step:
            raise ValueError(f"element is not in O_{m}")
        return OrderElement(self.x, self.y // step, m, self.setup)

    def in_level(self, m: int) -> bool:
        return m <= self.n or self.y % self.setup.p ** (m - self.n) == 0


def _check_same(a: OrderElement, b: OrderElement) -> None:
    if a.setup != b.setup:
        raise LevelMismatch("elements belong to different setups")
    if a.n != b.n:
        raise LevelMismatch(f"levels differ: {a.n} != {b.n}")


def elem_add(a: OrderElement, b: OrderElement) -> OrderElement:
    _check_same(a, b)
    return OrderElement(a.x + b.x, a.y + b.y, a.n, a.setup)


def elem_mul(a: OrderElement, b: OrderElement) -> OrderElement:
    _check_same(a, b)
    s, pn = a.setup, a.setup.p ** a.n
    x = a.x * b.x - a.y * b.y * pn * pn * s.delta
    y = a.x * b.y + b.x * a.y + a.y * b.y * pn * s.tau
    return OrderElement(x, y, a.n, s)


def norm(a: OrderElement) -> int:
    s, pn = a.setup, a.setup.p ** a.n
    return a.x * a.x + pn * a.x * a.y * s.tau + pn * pn * a.y * a.y * s.delta


def is_unit(a: OrderElement) -> bool:
    p = a.setup.p
    if a.n >= 1:
        return a.x % p != 0
    return norm(a) % p != 0


@lru_cache(maxsize=None)
def _roots_mod_p(p: int, tau: int, delta: int) -> tuple[int, int]:
    roots = [r for r in range(p) if (r * r - tau * r + delta) % p == 0]
    if len(roots) != 2:
        raise SetupError("X^2 - tau X + delta has no two distinct roots mod p")
    return roots[0], roots[1]


def _hensel_lift(r: int, p: int, tau: int, delta: int, M: int) -> int:
    modulus, r = p, r % p
    while modulus < p ** M:
        modulus = min(modulus * modulus, p ** M)
        f = r * r - tau * r + delta
        df = 2 * r - tau
        r = (r - f * pow(df, -1, modulus)) % modulus
    return r % p ** M


def split_roots(setup: QuadraticSetup, M: int) -> tuple[int, int]:
    """The two roots (Delta_1, Delta_2) of X^2 - tau X + delta modulo p^M.

    Delta_1 is the lift of the smaller root mod p, so the labelling of the two
    embeddings does not depend on M.
    """
    if setup.kind is not CaseKind.SPLIT:
        raise SetupError(f"split_roots needs a split setup, got {setup.kind.value}")
    if M < 1:
        raise ValueError("precision M must be at least 1")
    return _split_roots(setup.p, setup.tau, setup.delta, M)


@lru_cache(maxsize=None)
def _split_roots(p: int, tau: int, delta: int, M: int) -> tuple[int, int]:
    r1, r2 = _roots_mod_p(p, tau, delta)
    return (_hensel_lift(r1, p, tau, delta, M),
            _hensel_lift(r2, p, tau, delta, M))


@dataclass(frozen=True)
class ElementType:
    """Valuation profile: (val_pi,) in the nonsplit case, (val_p x1, val_p x2) split.

    A coordinate equal to infinity marks an exactly zero component, which
    only happens for zero divisors in the split case.
    """

    coords: tuple

    @property
    def eta(self):
        return min(self.coords)

    @property
    def zero_divisor(self) -> bool:
        return any(c == INF for c in self.coords)

    def contribution(self, kind: CaseKind) -> int:
        """Exponent c with [O_n : x O_n] = q^c, i.e. f*val_pi or w1 + w2."""
        if self.zero_divisor:
            raise ValueError("zero divisors have infinite index")
        return kind.f * self.coords[0] if kind.g == 1 else sum(self.coords)


def _split_coord_vals(a: OrderElement, M: int) -> tuple:
    """Valuations of both embeddings, with infinity where the residue mod p^M is 0."""
    s = a.setup
    d1, d2 = split_roots(s, M)
    mod = s.p ** M
    pn = s.p ** a.n
    out = []
    for d in (d1, d2):
        c = (a.x + a.y * pn * d) % mod
        out.append(val_p(c, s.p))
    return tuple(out)


def coord_valuations(a: OrderElement, M: int) -> tuple:
    """Per-coordinate valuations, saturating at infinity once they reach M.

    Nonsplit coordinates are exact (they come from the norm); only split
    coordinates depend on M.
    """
    s = a.setup
    if s.kind is CaseKind.SPLIT:
        return _split_coord_vals(a, M)
    v = val_p(norm(a), s.p)
    if v == INF:
        return (INF,)
    return (v,) if s.kind is CaseKind.RAMIFIED else (v // 2,)


def eps_type(a: OrderElement, M: int) -> ElementType:
    """Type of a nonzero element.

    In the split case the two embedding valuations are read from the roots
    mod p^M; reaching M raises TruncationError unless the coordinate is
    exactly zero (norm 0), in which case it is reported as infinity.
    """
    if a.is_zero():
        raise ValueError("the zero element has no type")
    s = a.setup
    if s.kind is not CaseKind.SPLIT:
        return ElementType(coord_valuations(a, M))
    vals = _split_coord_vals(a, M)
    if INF in vals:
        # a genuine zero needs norm 0, and then the other embedding is
        # y p^n (Delta_j - Delta_i) with a unit difference, so it stays finite
        if norm(a) != 0 or vals.count(INF) == 2:
            raise TruncationError(f"embedding valuation reached precision M = {M}")
    return ElementType(vals)
