"""Exact polynomials in Z[q][X] and truncated power series in t = q^{-s}.

QPoly is a polynomial in the formal residue cardinality q; XPoly has QPoly
coefficients.  Coefficient tuples are ascending and carry no trailing zeros.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True)
class QPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        return cls((0,) * k + (c,))

    @staticmethod
    def coerce(v: "QPoly | int") -> "QPoly":
        return v if isinstance(v, QPoly) else QPoly((v,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = QPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self or not other:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, other: "QPoly | int") -> "QPoly":
        """Quotient in Z[q]; raises InexactDivision if there is a remainder."""
        other = QPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead, dd = other.coeffs[-1], other.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            if c % lead:
                raise InexactDivision(f"{self} is not divisible by {other} in Z[q]")
            m = c // lead
            quot[i - dd] = m
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] -= m * b
        if any(rem):
            raise InexactDivision(f"{self} is not divisible by {other} in Z[q]")
        return QPoly(quot)

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mon:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}{mon}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f"{sg}{b}" for sg, b in parts[1:])

    def __repr__(self) -> str:
        return f"QPoly({str(self)})"


Q = QPoly.monomial(1)
QOne = QPoly.const(1)
Scalar = Union[QPoly, int]


@dataclass(frozen=True)
class XPoly:
    """Polynomial in X with Z[q] coefficients."""

    coeffs: tuple[QPoly, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(QPoly.coerce(c) for c in self.coeffs))

    @classmethod
    def from_ints(cls, coeffs: Sequence[int]) -> "XPoly":
        return cls(tuple(QPoly.const(c) for c in coeffs))

    @classmethod
    def from_nested(cls, coeffs: Sequence[Sequence[int]]) -> "XPoly":
        return cls(tuple(QPoly(tuple(c)) for c in coeffs))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "XPoly":
        return cls((QPoly(),) * k + (QPoly.coerce(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> QPoly:
        return self.coeffs[-1] if self.coeffs else QPoly()

    def coeff(self, i: int) -> QPoly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else QPoly()

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _as_xpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return XPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_xpoly(other))

    def __rsub__(self, other):
        return _as_xpoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)):
            return XPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self or not other:
            return XPoly()
        out = [QPoly()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return XPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = XPoly.from_ints([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "XPoly":
        """Multiply by X^k."""
        return XPoly((QPoly(),) * k + self.coeffs) if self else self

    def nested(self) -> list[list[int]]:
        return [list(c.coeffs) for c in self.coeffs]

    def __str__(self) -> str:
        return render_xpoly(self, "text")


def _as_xpoly(v) -> XPoly:
    if isinstance(v, XPoly):
        return v
    return XPoly((QPoly.coerce(v),))


X = XPoly.monomial(1)


def xp_add(a: XPoly, b: XPoly) -> XPoly:
    return a + b


def xp_mul(a: XPoly, b: XPoly) -> XPoly:
    return a * b


def _term(coef: QPoly, k: int, fmt: str) -> tuple[str, str]:
    """Sign and body of coef*X^k for text/latex rendering."""
    xs = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
    if coef.is_monomial():
        c = next(c for c in coef.coeffs if c)
        sign = "-" if c < 0 else "+"
        cstr = str(abs(c) * QPoly.monomial(coef.degree))
        if cstr == "1" and xs:
            cstr = ""
    else:
        sign = "+"
        cstr = f"({coef})" if xs else str(coef)
        if not xs and cstr.startswith("-"):
            sign, cstr = "-", str(-coef)
    sep = "*" if fmt == "text" and cstr and xs else ""
    return sign, f"{cstr}{sep}{xs}"


def render_xpoly(P: XPoly, fmt: str = "text") -> str:
    """'1 - X + q*X^2' (text) or '1 - X + qX^2' (latex)."""
    terms = [_term(c, k, fmt) for k, c in enumerate(P.coeffs) if c]
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class CoeffSeries:
    """Coefficients a_0..a_K of a power series in t, truncated at order K."""

    coeffs: tuple[QPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(QPoly.coerce(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series carries at least the coefficient a_0")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_xpoly(cls, P: XPoly, K: int) -> "CoeffSeries":
        return cls(tuple(P.coeff(i) for i in range(K + 1)))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "CoeffSeries") -> "CoeffSeries":
        K = min(self.order, other.order)
        return CoeffSeries(tuple(self[i] + other[i] for i in range(K + 1)))

    def __mul__(self, other: "CoeffSeries") -> "CoeffSeries":
        K = min(self.order, other.order)
        out = []
        for k in range(K + 1):
            acc = QPoly()
            for i in range(k + 1):
                if self[i]:
                    acc = acc + self[i] * other[k - i]
            out.append(acc)
        return CoeffSeries(tuple(out))

    def shift(self, k: int = 1) -> "CoeffSeries":
        """Multiply by t^k, keeping the order."""
        zeros = (QPoly(),) * min(k, len(self.coeffs))
        return CoeffSeries(zeros + self.coeffs[: len(self.coeffs) - len(zeros)])

    def nested(self) -> list[list[int]]:
        return [list(c.coeffs) for c in self.coeffs]

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def series_div(num: XPoly, den: XPoly, K: int) -> CoeffSeries:
    """First K+1 coefficients of num/den; den must have constant term 1."""
    if K < 0:
        raise ValueError("order K must be nonnegative")
    if den.coeff(0) != QOne:
        raise ValueError(f"denominator constant term is {den.coeff(0)}, not 1")
    out: list[QPoly] = []
    for k in range(K + 1):
        acc = num.coeff(k)
        for j in range(1, min(k, den.degree) + 1):
            acc = acc - den.coeff(j) * out[k - j]
        out.append(acc)
    return CoeffSeries(tuple(out))


def functional_transform(P: XPoly, n: int) -> XPoly:
    """(qX^2)^n * P(1/(qX)).

    The coefficient of X^j is q^(j-n) times the coefficient of X^(2n-j) in P;
    for j < n this is a division by q^(n-j), which must be exact.
    """
    if P.degree > 2 * n:
        raise ValueError(f"deg P = {P.degree} exceeds 2n = {2 * n}")
    out = []
    for j in range(2 * n + 1):
        c = P.coeff(2 * n - j)
        if j >= n:
            out.append(c * Q ** (j - n))
        else:
            out.append(c.exact_div(Q ** (n - j)))
    return XPoly(tuple(out))


def specialize_q(a, q_value: int):
    """Substitute an integer for q: QPoly -> int, XPoly or CoeffSeries -> list of ints."""
    if q_value < 2:
        raise ValueError("q must be at least 2")
    if isinstance(a, int):
        return a
    if isinstance(a, QPoly):
        return a(q_value)
    if isinstance(a, (XPoly, CoeffSeries)):
        return [c(q_value) for c in a.coeffs]
    raise TypeError(f"cannot specialize {type(a).__name__}")
