import time

import pytest

from kulocal.exact import QuotientRing, poly_mul, poly_sub, poly_x_power
from kulocal.geomfp import (
    bott_character,
    root_of_unity_product,
    trunc_regular_poly,
    verify_CqxCq_vanishing,
    verify_adams_on_bott,
    verify_euler_localization,
    verify_q_unit_identity,
    verify_regular_factorization,
)
from kulocal.groups import AbelianGroup, parse_group

PRIME_POWER_RANGE = [(q, k) for q in (3, 5, 7) for k in range(1, 5) if q ** k <= 125]


def test_trunc_regular_poly():
    assert trunc_regular_poly(3, 1) == (1, 1, 1)
    assert trunc_regular_poly(3, 2) == (1, 0, 0, 1, 0, 0, 1)
    assert trunc_regular_poly(5, 1) == (1, 1, 1, 1, 1)


def test_regular_factorization_examples():
    assert verify_regular_factorization(3, 1).ok
    assert verify_regular_factorization(3, 2).ok
    assert verify_regular_factorization(5, 1).ok
    # explicit k=1 case: x^3 - 1 = (x - 1)(x^2 + x + 1)
    assert poly_mul((-1, 1), (1, 1, 1)) == poly_sub(poly_x_power(3), (1,))


@pytest.mark.parametrize("q,k", PRIME_POWER_RANGE)
def test_regular_factorization_range(q, k):
    assert verify_regular_factorization(q, k).ok


def test_q_unit_identity_examples():
    # q=3, k=1: (1 - x)(x + 2) = 3 in Z[x]/(x^2+x+1)
    r = QuotientRing((1, 1, 1))
    x = r.x_power(1)
    assert (r.one - x) * (x + 2 * r.one) == 3 * r.one
    assert verify_q_unit_identity(3, 1).ok
    assert verify_q_unit_identity(3, 2).ok
    assert verify_q_unit_identity(5, 1).ok


@pytest.mark.parametrize("q,k", PRIME_POWER_RANGE)
def test_q_unit_identity_range(q, k):
    assert verify_q_unit_identity(q, k).ok


def test_euler_localization_small():
    w = verify_euler_localization(3, 1)
    assert w.ok
    assert abs(w.witness["det_y_minus_1"]) == 3

    w2 = verify_euler_localization(3, 2)
    assert w2.ok
    d = abs(w2.witness["det_y_minus_1"])
    # a positive power of 3
    assert d > 1
    while d % 3 == 0:
        d //= 3
    assert d == 1


def test_euler_localization_unit_example():
    # rho_2 = x + 1 is a unit mod x^2 + x + 1: (x+1)(-x) = 1
    r = QuotientRing((1, 1, 1))
    x = r.x_power(1)
    assert (x + r.one) * (-1 * x) == r.one


@pytest.mark.parametrize("q,k", PRIME_POWER_RANGE)
def test_euler_localization_range(q, k):
    assert verify_euler_localization(q, k).ok


def test_cq_x_cq_vanishing():
    assert verify_CqxCq_vanishing(3).ok
    assert verify_CqxCq_vanishing(5).ok


def test_cq_x_cq_vanishing_7():
    assert verify_CqxCq_vanishing(7).ok


def test_root_of_unity_products():
    for k in [1, 3, 5, 7, 9, 11, 13, 15]:
        assert root_of_unity_product(k) == k


def test_bott_character_c3():
    g = parse_group("C3")
    values = bott_character(g)
    assert values[(0,)] == (1, 3)
    assert values[(1,)] == (3, 1)
    assert values[(2,)] == (3, 1)


def test_bott_character_rejects_even_order():
    g = AbelianGroup((2,))
    with pytest.raises(ValueError):
        bott_character(g)


@pytest.mark.parametrize("spec", ["C1", "C3", "C9", "C27", "C3xC3", "C3xC9", "C5", "C25", "C7"])
def test_bott_character_consistency(spec):
    g = parse_group(spec)
    values = bott_character(g)
    for x, (scalar, beta) in values.items():
        k = g.element_order(x)
        assert scalar == k ** (g.order // k)
        assert beta == g.order // k


def test_bott_character_product_group_factorization():
    # on C3 x C3, restriction of the regular representation to any cyclic
    # subgroup <g> is [G : <g>] copies of its regular representation, so the
    # graded value at g is determined by the cyclic data alone
    from kulocal.groups import DualLevel
    from kulocal.reprings import RURing

    g = parse_group("C3xC3")
    ru = RURing(g)
    values = bott_character(g)
    for x in g.elements:
        cyc = g.generated_subgroup([x])
        dual = DualLevel(g, cyc)
        restricted = ru.restrict(ru.regular_rep, dual)
        m = g.order // cyc.order
        assert all(c == m for c in restricted)
        assert values[x] == (cyc.order ** m, m)


def test_adams_on_bott_examples():
    g = parse_group("C3")
    w = verify_adams_on_bott(g, 2)
    assert w.ok
    by_el = {tuple(e[0]): (e[1], e[2]) for e in w.per_element}
    assert by_el[(1,)] == (6, 6)
    assert by_el[(0,)] == (8, 8)

    assert verify_adams_on_bott(parse_group("C9"), 2).ok


def test_adams_on_bott_rejects_nonprimitive():
    with pytest.raises(ValueError):
        verify_adams_on_bott(parse_group("C7"), 2)


ODD_GROUPS_UP_TO_27 = [
    "C3", "C9", "C27", "C3xC3", "C3xC9", "C3xC3xC3",
    "C5", "C25", "C5xC5", "C7", "C11", "C13", "C17", "C19", "C23",
]


@pytest.mark.parametrize("spec", ODD_GROUPS_UP_TO_27)
def test_adams_on_bott_all_small_groups(spec):
    from kulocal.exact import smallest_primitive_root

    g = parse_group(spec)
    ell = smallest_primitive_root(g.exponent)
    assert verify_adams_on_bott(g, ell).ok


def test_localization_suite_is_fast():
    start = time.perf_counter()
    for q, k in PRIME_POWER_RANGE:
        assert verify_regular_factorization(q, k).ok
        assert verify_q_unit_identity(q, k).ok
        assert verify_euler_localization(q, k).ok
    for q in (3, 5):
        assert verify_CqxCq_vanishing(q).ok
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"identity suite took {elapsed:.1f}s"
