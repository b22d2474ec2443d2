"""Brute-force ideal enumeration for O_n at a concrete odd prime p.

A finite-index Z_p-sublattice of O_n = Z_p + Z_p p^n Delta is written in
Hermite normal form with basis v1 = (p^a, b), v2 = (0, p^c), 0 <= b < p^c,
in coordinates (coefficient of 1, coefficient of p^n Delta).  Its index is
p^(a+c).  Enumerating all triples (a, c, b) with a + c = k and keeping the
ones closed under multiplication by p^n Delta lists every ideal of index p^k
exactly once.

Classification of an ideal I of index p^k with representative x: from
I = x O_i and [O_0 : x O_i] = q^(val_p N(x) + i), [O_0 : O_n] = q^n one gets

    i = k - val_p N(x) + n,

so I is principal (i = n) exactly when val_p N(x) = k.  `principal_by_search`
decides principality independently, by looking for a generator.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .base import (
    INF,
    CaseKind,
    ElementType,
    OrderElement,
    QuadraticSetup,
    coord_valuations,
    eps_type,
    is_unit,
    norm,
    val_p,
)
from .engine import low_multiplicities, unit_index

UNIT_BUDGET = 10 ** 7
LATTICE_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    pass


class OracleInconsistency(AssertionError):
    """A computed quantity contradicts a structural guarantee, i.e. a bug."""


@dataclass(frozen=True)
class HnfLattice:
    a: int
    c: int
    b: int
    n: int
    setup: QuadraticSetup

    def __post_init__(self):
        if self.a < 0 or self.c < 0 or not 0 <= self.b < self.setup.p ** self.c:
            raise ValueError(f"({self.a}, {self.c}, {self.b}) is not in Hermite normal form")

    @property
    def index_exp(self) -> int:
        return self.a + self.c

    @property
    def v1(self) -> OrderElement:
        return OrderElement(self.setup.p ** self.a, self.b, self.n, self.setup)

    @property
    def v2(self) -> OrderElement:
        return OrderElement(0, self.setup.p ** self.c, self.n, self.setup)

    def contains(self, u: int, w: int) -> bool:
        pa = self.setup.p ** self.a
        if u % pa:
            return False
        return (w - (u // pa) * self.b) % self.setup.p ** self.c == 0

    def contains_element(self, z: OrderElement) -> bool:
        return self.contains(z.x, z.y)

    def key(self) -> tuple[int, int, int]:
        return (self.a, self.c, self.b)


def threshold(kind: CaseKind, n: int) -> int:
    """t_n: ne in the nonsplit case (val_pi scale), n in the split case."""
    return n * kind.e if kind.g == 1 else n


def working_precision(k: int, n: int) -> int:
    return k + 2 * n + 2


def enumerate_sublattices(setup: QuadraticSetup, n: int, k: int) -> list[HnfLattice]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = setup.p
    count = sum(p ** c for c in range(k + 1))
    if count > LATTICE_BUDGET:
        raise BudgetExceeded(f"{count} sublattices at p={p}, k={k} exceeds {LATTICE_BUDGET}")
    return [HnfLattice(k - c, c, b, n, setup)
            for c in range(k + 1) for b in range(p ** c)]


def _times_generator(setup: QuadraticSetup, n: int, x: int, y: int) -> tuple[int, int]:
    """Coordinates of (p^n Delta) * (x + y p^n Delta)."""
    pn = setup.p ** n
    return (-y * pn * pn * setup.delta, x + y * pn * setup.tau)


def is_ideal(lat: HnfLattice) -> bool:
    s, n = lat.setup, lat.n
    for v in (lat.v1, lat.v2):
        if not lat.contains(*_times_generator(s, n, v.x, v.y)):
            return False
    return True


def representative(lat: HnfLattice, M: int | None = None) -> OrderElement:
    """An element of the lattice minimising every type coordinate at once.

    Each coordinate minimum over the lattice is attained on v1 or v2.  Prefer
    v1, then v2; when neither attains both minima, v1 + v2 does.
    """
    if M is None:
        M = working_precision(lat.index_exp, lat.n)
    v1, v2 = lat.v1, lat.v2
    t1, t2 = coord_valuations(v1, M), coord_valuations(v2, M)
    target = tuple(min(a, b) for a, b in zip(t1, t2))
    if INF in target:
        raise OracleInconsistency(f"lattice {lat.key()} has a coordinate valuation >= M = {M}")
    if t1 == target:
        return v1
    if t2 == target:
        return v2
    return v1 + v2


@dataclass(frozen=True)
class IdealRecord:
    lattice: HnfLattice
    index_exp: int
    is_ideal: bool
    principal: bool
    eps: ElementType
    multiplier: int
    low: bool


def classify(lat: HnfLattice) -> IdealRecord:
    if not is_ideal(lat):
        raise ValueError(f"lattice {lat.key()} is not an ideal of O_{lat.n}")
    k, n, s = lat.index_exp, lat.n, lat.setup
    rep = representative(lat)
    eps = eps_type(rep, working_precision(k, n))
    vn = val_p(norm(rep), s.p)
    i = k - vn + n
    if not 0 <= i <= n:
        raise OracleInconsistency(f"multiplier index {i} outside [0, {n}] for {lat.key()}")
    return IdealRecord(
        lattice=lat,
        index_exp=k,
        is_ideal=True,
        principal=(i == n),
        eps=eps,
        multiplier=i,
        low=eps.eta < threshold(s.kind, n),
    )


def _det(u: tuple[int, int], w: tuple[int, int]) -> int:
    return u[0] * w[1] - u[1] * w[0]


def _in_zp_span(v: tuple[int, int], g1: tuple[int, int], g2: tuple[int, int], p: int) -> bool:
    """Cramer's rule: v = s g1 + t g2 with s, t in Z_p."""
    d = _det(g1, g2)
    if d == 0:
        return False
    return all(val_p(num, p) >= val_p(d, p) for num in (_det(v, g2), _det(g1, v)))


def generates(z: OrderElement, lat: HnfLattice) -> bool:
    """True iff z * O_n == lat, tested by mutual containment over Z_p."""
    s, n = lat.setup, lat.n
    zd = _times_generator(s, n, z.x, z.y)
    g = (z.x, z.y)
    if not (lat.contains(*g) and lat.contains(*zd)):
        return False
    return all(_in_zp_span((v.x, v.y), g, zd, s.p) for v in (lat.v1, lat.v2))


def principal_by_search(lat: HnfLattice, depth: int = 1) -> bool:
    """Slow principality test: try every z = alpha v1 + beta v2 with alpha, beta mod p^depth.

    Generators of a principal ideal I form a union of classes mod pI (z and
    z + w, w in pI, differ by a unit factor), so depth 1 already sees every
    class; larger depths only repeat them.
    """
    p = lat.setup.p
    v1, v2 = lat.v1, lat.v2
    r = p ** depth
    for alpha in range(r):
        for beta in range(r):
            z = OrderElement(alpha * v1.x + beta * v2.x, alpha * v1.y + beta * v2.y,
                             lat.n, lat.setup)
            if not z.is_zero() and generates(z, lat):
                return True
    return False


@dataclass
class Census:
    case: CaseKind
    p: int
    n: int
    k: int
    total: int = 0
    principal: int = 0
    nonprincipal: int = 0
    low: int = 0
    high: int = 0
    types: Counter = field(default_factory=Counter)
    multipliers: Counter = field(default_factory=Counter)
    records: list = field(default_factory=list, repr=False)

    def add(self, rec: IdealRecord) -> None:
        self.total += 1
        self.multipliers[rec.multiplier] += 1
        if rec.principal:
            self.principal += 1
            self.types[rec.eps.coords] += 1
            if rec.low:
                self.low += 1
            else:
                self.high += 1
        else:
            self.nonprincipal += 1

    def merge(self, other: "Census") -> None:
        for name in ("total", "principal", "nonprincipal", "low", "high"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.types.update(other.types)
        self.multipliers.update(other.multipliers)
        self.records.extend(other.records)


def _census_chunk(setup: QuadraticSetup, n: int, k: int, cs: list[int],
                  keep: bool) -> Census:
    out = Census(setup.kind, setup.p, n, k)
    for c in cs:
        for b in range(setup.p ** c):
            lat = HnfLattice(k - c, c, b, n, setup)
            if is_ideal(lat):
                rec = classify(lat)
                out.add(rec)
                if keep:
                    out.records.append(rec)
    return out


def ideal_census(setup: QuadraticSetup, n: int, k: int, keep_records: bool = False,
                 workers: int = 1) -> Census:
    """Count and classify all ideals of O_n of index p^k.

    With workers > 1 the HNF triples are split by c across processes and
    the partial censuses are summed.
    """
    count = sum(setup.p ** c for c in range(k + 1))
    if count > LATTICE_BUDGET:
        raise BudgetExceeded(f"{count} sublattices at p={setup.p}, k={k}")
    if workers <= 1 or k < 3:
        return _census_chunk(setup, n, k, list(range(k + 1)), keep_records)
    chunks = [[c] for c in range(k + 1)]
    out = Census(setup.kind, setup.p, n, k)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_census_chunk, *zip(*[(setup, n, k, ch, keep_records)
                                                   for ch in chunks])):
            out.merge(part)
    return out


def travel(lat: HnfLattice) -> HnfLattice:
    """pJ for an ideal J of O_{n-1}, as a lattice in O_n: (a, c, b) -> (a+1, c, b)."""
    return HnfLattice(lat.a + 1, lat.c, lat.b, lat.n + 1, lat.setup)


@dataclass(frozen=True)
class TravelResult:
    nonprincipal: int
    previous_total: int
    image_is_nonprincipal_set: bool

    @property
    def ok(self) -> bool:
        return self.image_is_nonprincipal_set and self.nonprincipal == self.previous_total


def traveling_report(setup: QuadraticSetup, n: int, k: int) -> TravelResult:
    if n < 1:
        raise ValueError("the traveling map lands in O_n for n >= 1")
    if k == 0:
        return TravelResult(0, 0, True)
    here = ideal_census(setup, n, k, keep_records=True)
    before = ideal_census(setup, n - 1, k - 1, keep_records=True)
    nonprincipal = {r.lattice.key() for r in here.records if not r.principal}
    images = [travel(r.lattice) for r in before.records]
    image_keys = {im.key() for im in images}
    same = (len(image_keys) == len(images) and image_keys == nonprincipal
            and all(is_ideal(im) for im in images))
    return TravelResult(here.nonprincipal, before.total, same)


def traveling_check(setup: QuadraticSetup, n: int, k: int) -> bool:
    """Nonprincipal ideals at (n, k) are exactly p * (ideals at (n-1, k-1))."""
    return traveling_report(setup, n, k).ok


def unit_quotient_counts(setup: QuadraticSetup, n: int) -> tuple[int, int]:
    """(|(O_0/p^n O_0)^*|, |(O_n/p^n O_0)^*|) by direct enumeration."""
    if n < 1:
        raise ValueError("n must be at least 1")
    p = setup.p
    pn = p ** n
    if pn * pn > UNIT_BUDGET:
        raise BudgetExceeded(f"p^(2n) = {pn * pn} exceeds {UNIT_BUDGET}")
    big = sum(1 for x in range(pn) for y in range(pn)
              if is_unit(OrderElement(x, y, 0, setup)))
    # O_n / p^n O_0 is represented by x + 0 * p^n Delta, x mod p^n
    small = sum(1 for x in range(pn) if is_unit(OrderElement(x, 0, n, setup)))
    return big, small


def allowed_low_types(kind: CaseKind, n: int) -> set[tuple]:
    if kind is CaseKind.RAMIFIED:
        return {(2 * d,) for d in range(n)}
    if kind is CaseKind.UNRAMIFIED:
        return {(d,) for d in range(n)}
    return {(d, d) for d in range(n)}


def _low_level(kind: CaseKind, omega: tuple) -> int:
    """d such that a low type omega is d*e (nonsplit) or (d, d) (split)."""
    return omega[0] // kind.e if kind.g == 1 else omega[0]


def expected_high_types(kind: CaseKind, n: int, k: int) -> set[tuple]:
    """All high types of contribution exactly k."""
    t = threshold(kind, n)
    if kind is CaseKind.RAMIFIED:
        return {(k,)} if k >= t else set()
    if kind is CaseKind.UNRAMIFIED:
        return {(k // 2,)} if k % 2 == 0 and k // 2 >= t else set()
    return {(w, k - w) for w in range(t, k - t + 1)}


@dataclass
class LowHighCensus:
    census: Census
    low_counts: dict
    high_counts: dict
    expected_low: dict
    expected_high: dict
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def low_high_census(setup: QuadraticSetup, n: int, k: int,
                    census: Census | None = None) -> LowHighCensus:
    """Split principal ideals at exponent k into low and high types and check the counts.

    Expected: low types only d*e / (d, d) with d < n, each with
    idx(n)/idx(n-d) ideals; every high type of contribution k with idx(n).
    """
    kind, p = setup.kind, setup.p
    if census is None:
        census = ideal_census(setup, n, k)
    t = threshold(kind, n)
    low = {w: c for w, c in census.types.items() if min(w) < t}
    high = {w: c for w, c in census.types.items() if min(w) >= t}
    allowed = allowed_low_types(kind, n)
    mults = low_multiplicities(kind, n)
    exp_low = {}
    for w in allowed:
        if ElementType(w).contribution(kind) == k:
            exp_low[w] = mults[_low_level(kind, w)](p)
    idx = unit_index(kind, n)(p)
    exp_high = {w: idx for w in expected_high_types(kind, n, k)}
    violations = []
    for w in low:
        if w not in allowed:
            violations.append(f"low principal ideal of forbidden type {w}")
    if low != exp_low:
        violations.append(f"low counts {low} != expected {exp_low}")
    if high != exp_high:
        violations.append(f"high counts {high} != expected {exp_high}")
    return LowHighCensus(census, low, high, exp_low, exp_high, violations)
