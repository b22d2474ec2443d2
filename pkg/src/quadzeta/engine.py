"""Symbolic zeta functions of the orders O_n, uniform in the residue cardinality q.

Every zeta function here has the shape zeta_n = P_n(t) / V(t) with t = q^{-s};
the numerators P_n live in Z[q][X] and are produced two ways: from the closed
forms R_n, U_n, S_n and by running the principal-part recurrence
zeta_n = zeta_n^P + t * zeta_{n-1}.
"""
from __future__ import annotations

from dataclasses import dataclass

from .base import CaseKind
from .polyseries import (
    Q,
    QOne,
    CoeffSeries,
    InexactDivision,
    QPoly,
    XPoly,
    X,
    functional_transform,
    series_div,
)


class NumeratorInvariantError(AssertionError):
    pass


@dataclass(frozen=True)
class ZetaNumerator:
    case: CaseKind
    n: int
    P: XPoly

    def __post_init__(self):
        problems = numerator_defects(self.P, self.n)
        if problems:
            raise NumeratorInvariantError(
                f"{self.case.value} n={self.n}: " + "; ".join(problems))


def numerator_defects(P: XPoly, n: int) -> list[str]:
    out = []
    if P.degree != 2 * n:
        out.append(f"degree {P.degree} != {2 * n}")
    if P.coeff(0) != QOne:
        out.append(f"constant term {P.coeff(0)} != 1")
    if P.leading != Q ** n:
        out.append(f"leading coefficient {P.leading} != q^{n}")
    return out


def _as_case(case) -> CaseKind:
    return CaseKind.parse(case) if isinstance(case, str) else case


def v_factor(case: CaseKind) -> XPoly:
    case = _as_case(case)
    one = XPoly.from_ints([1])
    if case is CaseKind.RAMIFIED:
        return one - X
    if case is CaseKind.UNRAMIFIED:
        return one - X ** 2
    return (one - X) ** 2


def ramified_numerator(n: int) -> XPoly:
    """R_n = 1 + qX^2 + ... + q^n X^{2n}."""
    return XPoly(tuple(Q ** (i // 2) if i % 2 == 0 else QPoly() for i in range(2 * n + 1)))


def closed_form(case: CaseKind, n: int) -> ZetaNumerator:
    case = _as_case(case)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if case is CaseKind.RAMIFIED:
        return ZetaNumerator(case, n, ramified_numerator(n))
    if n == 0:
        return ZetaNumerator(case, 0, XPoly.from_ints([1]))
    one = XPoly.from_ints([1])
    first = one + X if case is CaseKind.UNRAMIFIED else one - X
    P = first * ramified_numerator(n - 1) + XPoly.monomial(2 * n, Q ** n)
    return ZetaNumerator(case, n, P)


def unit_index(case: CaseKind, n: int) -> QPoly:
    """[O_0^* : O_n^*] as a polynomial in q."""
    case = _as_case(case)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return QOne
    if case is CaseKind.RAMIFIED:
        return Q ** n
    if case is CaseKind.UNRAMIFIED:
        return (Q + 1) * Q ** (n - 1)
    return (Q - 1) * Q ** (n - 1)


def low_multiplicities(case: CaseKind, n: int) -> list[QPoly]:
    """idx(n)/idx(n-d) for d = 0..n-1, the number of low principal ideals of each level."""
    case = _as_case(case)
    top = unit_index(case, n)
    out = []
    for d in range(n):
        try:
            out.append(top.exact_div(unit_index(case, n - d)))
        except InexactDivision as exc:
            raise InexactDivision(f"unit index ratio at d={d} is not in Z[q]") from exc
    return out


def principal_part(case: CaseKind, n: int, K: int) -> CoeffSeries:
    """Series of the principal part: low terms idx(n)/idx(n-d) t^{2d}, plus idx(n) t^{2n}/V.

    For n = 0 the low sum is empty and this is 1/V, the whole of zeta_0.
    """
    case = _as_case(case)
    if n < 0:
        raise ValueError("n must be nonnegative")
    low = XPoly(tuple(_interleave(low_multiplicities(case, n))))
    high = series_div(XPoly.monomial(2 * n, unit_index(case, n)), v_factor(case), K)
    return CoeffSeries.from_xpoly(low, K) + high


def _interleave(cs: list[QPoly]) -> list[QPoly]:
    """[c0, c1, ...] -> [c0, 0, c1, 0, ...] so that c_d sits at t^{2d}."""
    out = []
    for c in cs:
        out += [c, QPoly()]
    return out


def solve_recurrence(case: CaseKind, n: int) -> ZetaNumerator:
    """Numerator of zeta_n obtained by iterating zeta_m = zeta_m^P + t zeta_{m-1}.

    Everything is multiplied through by V, so V*zeta_m^P is the polynomial
    V*(sum of low terms) + idx(m) t^{2m}.
    """
    case = _as_case(case)
    if n < 0:
        raise ValueError("n must be nonnegative")
    V = v_factor(case)
    P = XPoly.from_ints([1])
    for m in range(1, n + 1):
        low = XPoly(tuple(_interleave(low_multiplicities(case, m))))
        P = V * low + XPoly.monomial(2 * m, unit_index(case, m)) + P.shift(1)
    return ZetaNumerator(case, n, P)


def check_functional_equation(z: ZetaNumerator | XPoly, n: int | None = None) -> bool:
    """True iff (qX^2)^n P(1/(qX)) == P(X) exactly."""
    if isinstance(z, ZetaNumerator):
        P, n = z.P, z.n
    else:
        P = z
        if n is None:
            raise ValueError("n is required when passing a bare polynomial")
    try:
        return functional_transform(P, n) == P
    except (InexactDivision, ValueError):
        return False


def dirichlet_coeffs(case: CaseKind, n: int, K: int) -> CoeffSeries:
    """a_0..a_K where a_k counts ideals of index q^k in O_n."""
    case = _as_case(case)
    return series_div(closed_form(case, n).P, v_factor(case), K)
