import pytest

from kulocal.exact import IntMatrix
from kulocal.groups import AbelianGroup, parse_group
from kulocal.mackey import (
    Level,
    MackeyFunctor,
    a_mod_j_mackey,
    assemble_pi0,
    assemble_pi1_c3,
    burnside_mackey,
    idempotent_splitting_check,
    lewis_diagram,
    linearization_check,
    maximal_proper_subgroups,
    ru_mackey,
    v_h,
)

INSTANCES = ["C3", "C9", "C27", "C3xC3", "C5", "C25", "C7", "C3xC9"]


def _sub_of_order(group, order):
    return [h for h in group.subgroups() if h.order == order][0]


def test_burnside_res_tr_examples():
    g = parse_group("C9")
    m = burnside_mackey(g)
    c3 = _sub_of_order(g, 3)
    c9 = g.full_subgroup
    e = g.trivial_subgroup

    # basis of A(C9): [C9/e], [C9/C3], [C9/C9]; of A(C3): [C3/e], [C3/C3]
    res = m.res(c9, c3)
    assert res.column(0) == (3, 0)  # res [C9/e] = 3 [C3/e]
    tr = m.tr(c3, c9)
    assert tr.column(0) == (1, 0, 0)  # tr [C3/e] = [C9/e]

    # Frobenius on C3: tr(1_e) * [C3/C3] = tr(res([C3/C3])) = [C3/e]
    g3 = parse_group("C3")
    m3 = burnside_mackey(g3)
    whole = g3.full_subgroup
    triv = g3.trivial_subgroup
    tr_1 = m3.tr(triv, whole).apply((1,))
    prod = m3.multiply(whole, tr_1, m3.unit(whole))
    assert prod == (1, 0)  # [C3/e]


def test_ru_res_tr_examples():
    g = parse_group("C9")
    m = ru_mackey(g)
    c3 = _sub_of_order(g, 3)
    c9 = g.full_subgroup
    res = m.res(c9, c3)
    # the generator character of C9 restricts to a generator character of C3
    col = res.column(1)
    assert sum(col) == 1 and col[0] == 0

    g3 = parse_group("C3")
    m3 = ru_mackey(g3)
    tr = m3.tr(g3.trivial_subgroup, g3.full_subgroup)
    assert tr.column(0) == (1, 1, 1)  # induced of trivial = regular


@pytest.mark.parametrize("spec", INSTANCES + ["C81", "C1"])
def test_mackey_axioms_burnside(spec):
    g = parse_group(spec)
    assert burnside_mackey(g).check_mackey_axioms() == []


@pytest.mark.parametrize("spec", INSTANCES + ["C81", "C1"])
def test_mackey_axioms_ru(spec):
    g = parse_group(spec)
    assert ru_mackey(g).check_mackey_axioms() == []


@pytest.mark.parametrize("spec", INSTANCES)
def test_green_axioms(spec):
    g = parse_group(spec)
    assert burnside_mackey(g).check_green_axioms() == []
    assert ru_mackey(g).check_green_axioms() == []


@pytest.mark.parametrize("spec", ["C3", "C9", "C3xC3", "C3xC9"])
def test_linearization_is_green_map(spec):
    check = linearization_check(parse_group(spec))
    assert check.ok


@pytest.mark.parametrize("spec", INSTANCES)
def test_a_mod_j_levels_and_axioms(spec):
    g = parse_group(spec)
    m = a_mod_j_mackey(g)
    for h in m.subgroups:
        n_cyc = sum(1 for k in g.subgroups() if h.contains(k) and k.is_cyclic)
        assert m.level(h).free_rank == n_cyc
    assert m.check_mackey_axioms() == []
    assert m.check_green_axioms() == []


def test_restriction_rule_in_a_mod_j():
    # for cyclic groups A/J = A and res [C_{q^{i+1}} / C_{q^j}] = q [C_{q^i} / C_{q^j}]
    g = parse_group("C27")
    m = burnside_mackey(g)
    subs = sorted(g.subgroups(), key=lambda h: h.order)
    for i in range(len(subs) - 1):
        h, hh = subs[i], subs[i + 1]
        res = m.res(hh, h)
        ring_hh = [k for k in g.subgroups() if hh.contains(k)]
        ring_h = [k for k in g.subgroups() if h.contains(k)]
        for j, l in enumerate(ring_hh):
            col = res.column(j)
            if l == hh:  # the unit restricts to the unit
                assert col == tuple(1 if k == h else 0 for k in ring_h)
            else:
                assert col == tuple(3 if k == l else 0 for k in ring_h)


def test_v_h_examples():
    g3 = parse_group("C3")
    a3 = burnside_mackey(g3)
    free, torsion = v_h(a3, g3.full_subgroup, 2)
    assert (free, torsion) == (1, ())
    free, torsion = v_h(a3, g3.trivial_subgroup, 2)
    assert (free, torsion) == (1, ())  # no proper subgroups: the whole level


def test_v_h_a_mod_j_c3xc3():
    g = parse_group("C3xC3")
    aj = a_mod_j_mackey(g)
    for h in aj.subgroups:
        free, torsion = v_h(aj, h, 2)
        if h.is_cyclic:
            assert (free, torsion) == (1, ())
        else:
            assert (free, torsion) == (0, ())


def test_v_h_rejects_dividing_prime():
    g = parse_group("C3")
    with pytest.raises(ValueError):
        v_h(burnside_mackey(g), g.full_subgroup, 3)


def test_idempotent_splitting_checks():
    g3 = parse_group("C3")
    assert idempotent_splitting_check(burnside_mackey(g3), 2)
    g33 = parse_group("C3xC3")
    assert idempotent_splitting_check(a_mod_j_mackey(g33), 2)
    for spec in INSTANCES:
        g = parse_group(spec)
        assert idempotent_splitting_check(burnside_mackey(g), 2)
        assert idempotent_splitting_check(a_mod_j_mackey(g), 2)


def test_single_level_functor():
    # a functor concentrated at the top with value Z
    g = parse_group("C3")
    whole, triv = g.full_subgroup, g.trivial_subgroup
    levels = {triv: Level(subgroup=triv, rank=0), whole: Level(subgroup=whole, rank=1)}
    res = {
        (whole, triv): IntMatrix.zeros(0, 1),
        (whole, whole): IntMatrix.identity(1),
        (triv, triv): IntMatrix.identity(0),
    }
    tr = {
        (triv, whole): IntMatrix.zeros(1, 0),
        (whole, whole): IntMatrix.identity(1),
        (triv, triv): IntMatrix.identity(0),
    }
    m = MackeyFunctor(g, levels, res, tr, name="skyscraper")
    assert v_h(m, whole, 2) == (1, ())
    assert v_h(m, triv, 2) == (0, ())
    assert idempotent_splitting_check(m, 2)


def test_maximal_proper_subgroups():
    g = parse_group("C3xC3")
    maxima = maximal_proper_subgroups(g.full_subgroup)
    assert len(maxima) == 4 and all(h.order == 3 for h in maxima)
    g9 = parse_group("C9")
    maxima = maximal_proper_subgroups(g9.full_subgroup)
    assert len(maxima) == 1 and maxima[0].order == 3


def test_assemble_pi0_c9():
    g = parse_group("C9")
    result = assemble_pi0(g)
    assert result.kernel_cross_check
    by_order = {entry["subgroup"]: entry for entry in result.level_summary()}
    assert by_order[9]["free_rank"] == 3 and by_order[9]["torsion"] == [2, 2, 2]
    assert by_order[3]["free_rank"] == 2 and by_order[3]["torsion"] == [2, 2]
    assert by_order[1]["free_rank"] == 1 and by_order[1]["torsion"] == [2]
    assert result.functor.check_mackey_axioms() == []
    assert result.functor.check_green_axioms() == []


def test_assemble_pi0_trivial_group():
    result = assemble_pi0(parse_group("C1"))
    (entry,) = result.level_summary()
    assert entry["free_rank"] == 1 and entry["torsion"] == [2]


def test_assemble_pi0_c3xc3():
    result = assemble_pi0(parse_group("C3xC3"))
    top = [e for e in result.level_summary() if e["subgroup"] == 9][0]
    assert top["free_rank"] == 5 and top["torsion"] == [2] * 5
    assert result.kernel_cross_check


def test_assemble_pi0_rejects_even_order():
    with pytest.raises(ValueError):
        assemble_pi0(AbelianGroup((2,)))


def test_assemble_pi0_levels_depend_only_on_level():
    big = assemble_pi0(parse_group("C27"))
    summaries = {e["subgroup"]: e for e in big.level_summary()}
    for sub_spec in ["C1", "C3", "C9"]:
        small = assemble_pi0(parse_group(sub_spec))
        top = [e for e in small.level_summary() if e["subgroup"] == small.group.order][0]
        big_entry = summaries[small.group.order]
        assert big_entry["free_rank"] == top["free_rank"]
        assert big_entry["torsion"] == top["torsion"]


def test_pi0_multiplication_square_zero():
    g = parse_group("C3")
    result = assemble_pi0(g)
    f = result.functor
    whole = g.full_subgroup
    r = result.cyclic_counts[whole]
    # x * unit squared is zero mod 2: (x u)^2 = x^2 u^2 = 0
    x_unit = tuple([0] * r) + tuple(f.unit(whole)[:r])
    sq = f.multiply(whole, x_unit, x_unit)
    assert f.level(whole).elements_equal(sq, (0,) * (2 * r))


def test_assemble_pi1_c3():
    m = assemble_pi1_c3()
    g = m.group
    triv, whole = g.trivial_subgroup, g.full_subgroup
    assert m.level(triv).primary_torsion == (2, 2) and m.level(triv).free_rank == 0
    assert m.level(whole).primary_torsion == (2, 2, 2, 2, 3)
    assert m.level(whole).free_rank == 0
    # restriction kills the order-3 class
    res = m.res(whole, triv)
    assert res.column(4) == (0, 0)
    assert m.check_mackey_axioms() == []


def test_lewis_diagram():
    text = lewis_diagram(assemble_pi1_c3())
    assert "Z/3" in text and "res" in text
    with pytest.raises(ValueError):
        lewis_diagram(burnside_mackey(parse_group("C3xC3")))


def test_to_json_roundtrip():
    import json

    m = burnside_mackey(parse_group("C3"))
    blob = m.to_json(include_mult=True)
    text = json.dumps(blob, sort_keys=True)
    assert json.loads(text) == blob
