import math

import pytest
from hypothesis import given, settings, strategies as st

from quadzeta.base import (
    CaseKind,
    LevelMismatch,
    OrderElement,
    QuadraticSetup,
    SetupError,
    TruncationError,
    elem_add,
    elem_mul,
    eps_type,
    is_unit,
    norm,
    split_roots,
    val_p,
)

RAM3 = QuadraticSetup(3, 0, -3, CaseKind.RAMIFIED)
UNR3 = QuadraticSetup.preset("unramified", 3)
SPL3 = QuadraticSetup(3, 1, 0, CaseKind.SPLIT)


def el(setup, x, y, n=0):
    return OrderElement(x, y, n, setup)


def test_presets_classify():
    for p in (3, 5, 7, 11):
        for kind in CaseKind:
            s = QuadraticSetup.preset(kind, p)
            assert s.kind is kind
            assert QuadraticSetup.from_coeffs(p, s.tau, s.delta).kind is kind
    assert UNR3.delta == -2


@pytest.mark.parametrize("p, tau, delta", [
    (3, 0, -9),   # disc valuation 2: Z_3[Delta] not maximal
    (3, 0, 0),
])
def test_nonmaximal_rejected(p, tau, delta):
    with pytest.raises(SetupError):
        QuadraticSetup.from_coeffs(p, tau, delta)


@pytest.mark.parametrize("p", [2, 4, 9, 1])
def test_bad_prime(p):
    with pytest.raises(SetupError):
        QuadraticSetup.preset("split", p)


def test_kind_mismatch():
    with pytest.raises(SetupError):
        QuadraticSetup(3, 1, 0, CaseKind.RAMIFIED)


def test_add_examples():
    assert elem_add(el(SPL3, 1, 0), el(SPL3, 0, 1)) == el(SPL3, 1, 1)
    assert elem_add(el(SPL3, 4, -2), el(SPL3, 0, 0)) == el(SPL3, 4, -2)
    assert elem_add(el(SPL3, 2, 3), el(SPL3, 5, -3)) == el(SPL3, 7, 0)


def test_level_mismatch():
    with pytest.raises(LevelMismatch):
        elem_add(el(SPL3, 1, 0, 0), el(SPL3, 1, 0, 1))
    with pytest.raises(LevelMismatch):
        elem_mul(el(SPL3, 1, 0), el(RAM3, 1, 0))


def test_mul_examples():
    a = el(SPL3, 5, -7, 2)
    assert elem_mul(el(SPL3, 1, 0, 2), a) == a
    assert elem_mul(el(SPL3, 0, 1, 1), el(SPL3, 0, 1, 1)) == el(SPL3, 0, 3, 1)
    s = QuadraticSetup(5, 0, -1, CaseKind.SPLIT)  # Delta^2 = 1
    assert elem_mul(el(s, 0, 1), el(s, 0, 1)) == el(s, 1, 0)


def test_norm_examples():
    assert norm(el(RAM3, 1, 0, 2)) == 1
    assert norm(el(SPL3, 2, 1)) == 6
    assert norm(el(RAM3, 0, 1, 1)) == -27


def test_norm_is_product_of_embeddings_split():
    # Delta = (0, 1) exactly, so the embeddings are x and x + y p^n
    for n in range(3):
        for x in range(-5, 6):
            for y in range(-5, 6):
                assert norm(el(SPL3, x, y, n)) == x * (x + y * 3 ** n)


def test_is_unit_examples():
    assert is_unit(el(RAM3, 1, 7, 1))
    assert not is_unit(el(RAM3, 3, 1, 1))
    assert not is_unit(el(RAM3, 0, 1, 0))
    assert is_unit(el(UNR3, 0, 1, 0))  # N(Delta) = 2, a unit mod 3


def test_split_roots_examples():
    for p in (3, 5, 7):
        s = QuadraticSetup(p, 1, 0, CaseKind.SPLIT)
        for M in (1, 3):
            assert split_roots(s, M) == (0, 1)
    s = QuadraticSetup(5, 0, -6, CaseKind.SPLIT)
    r = split_roots(s, 2)
    assert set(r) == {9, 16}
    assert split_roots(QuadraticSetup(3, 0, -1, CaseKind.SPLIT), 1) == (1, 2)


def test_split_roots_labelling_stable():
    s = QuadraticSetup(5, 0, -6, CaseKind.SPLIT)
    lo = split_roots(s, 1)
    for M in range(2, 8):
        assert tuple(r % 5 for r in split_roots(s, M)) == lo


def test_split_roots_wrong_kind():
    with pytest.raises(SetupError):
        split_roots(RAM3, 3)


@pytest.mark.parametrize("p, tau, delta", [(3, 1, 0), (3, 0, -1), (5, 0, -6), (7, 3, 2),
                                           (5, 1, -5), (11, 0, -3)])
def test_split_roots_congruences(p, tau, delta):
    s = QuadraticSetup(p, tau, delta, CaseKind.SPLIT)
    for M in range(1, 9):
        d1, d2 = split_roots(s, M)
        mod = p ** M
        assert d1 % p != d2 % p
        assert (d1 + d2 - tau) % mod == 0
        assert (d1 * d2 - delta) % mod == 0
        assert (d1 - d2) % p != 0


def test_eps_type_examples():
    for s in (RAM3, UNR3):
        assert eps_type(el(s, 1, 0), 5).coords == (0,)
    assert eps_type(el(SPL3, 1, 0), 5).coords == (0, 0)
    assert eps_type(el(RAM3, 0, 1), 5).coords == (1,)
    t = eps_type(el(SPL3, 0, 1), 5)
    assert t.zero_divisor
    assert t.coords == (math.inf, 0)


def test_eps_type_errors():
    with pytest.raises(ValueError):
        eps_type(el(SPL3, 0, 0), 3)
    s = QuadraticSetup(5, 0, -6, CaseKind.SPLIT)
    with pytest.raises(TruncationError):
        eps_type(el(s, 5 ** 4, 0), 3)


def test_unramified_uniformizer_is_p():
    assert eps_type(el(UNR3, 3, 0), 4).coords == (1,)
    assert eps_type(el(UNR3, 9, 3), 4).coords == (1,)


def test_at_level():
    a = el(RAM3, 2, 9, 0)
    assert a.in_level(2) and not a.in_level(3)
    assert a.at_level(2) == el(RAM3, 2, 1, 2)
    assert a.at_level(2).at_level(0) == a
    with pytest.raises(ValueError):
        a.at_level(3)


setups = st.sampled_from([QuadraticSetup.preset(k, p) for k in CaseKind for p in (3, 5, 7)]
                         + [QuadraticSetup(5, 0, -6, CaseKind.SPLIT),
                            QuadraticSetup(7, 3, 2, CaseKind.SPLIT)])
ints = st.integers(-10 ** 6, 10 ** 6)


@given(setups, st.integers(0, 4), ints, ints, ints, ints)
def test_norm_multiplicative(s, n, x1, y1, x2, y2):
    a, b = el(s, x1, y1, n), el(s, x2, y2, n)
    assert norm(elem_mul(a, b)) == norm(a) * norm(b)


@given(setups, st.integers(0, 3), ints, ints)
def test_mul_commutative_and_level_consistent(s, n, x, y):
    a, b = el(s, x, y, n), el(s, y - 3, x + 1, n)
    assert elem_mul(a, b) == elem_mul(b, a)
    # multiplying in O_n agrees with multiplying the images in O_0
    assert elem_mul(a, b).at_level(0) == elem_mul(a.at_level(0), b.at_level(0))


@settings(max_examples=300)
@given(setups, st.integers(0, 3), st.integers(0, 4), st.integers(0, 4), ints, ints)
def test_type_matches_norm(s, n, i, j, x, y):
    a = el(s, s.p ** i * x, s.p ** j * y, n)
    if a.is_zero():
        return
    v = val_p(norm(a), s.p)
    M = 2 * v + 2 * n + 6 if v != math.inf else 40
    t = eps_type(a, M)
    if s.kind is CaseKind.SPLIT:
        if not t.zero_divisor:
            assert sum(t.coords) == v
    elif s.kind is CaseKind.RAMIFIED:
        assert t.coords == (v,)
    else:
        assert v % 2 == 0 and t.coords == (v // 2,)
    assert is_unit(a) <= (t.eta == 0)
    if n == 0:
        # in K x K a unit needs every coordinate to vanish, not just the minimum
        assert is_unit(a) == (max(t.coords) == 0)
