import json

import pytest

from chardeg import groupengine as ge
from chardeg.errors import ResourceLimitError
from chardeg.groupengine.cyclotomic import Cyc, cyclotomic_polynomial
from chardeg.groupengine.elements import Mat, Perm
from chardeg.groupengine.field import gf


# --- fields and elements ---------------------------------------------------

def test_prime_field_arithmetic():
    f5 = gf(5)
    assert f5.add(3, 4) == 2 and f5.mul(3, 4) == 2 and f5.inv(3) == 2
    assert f5.pow(f5.generator, 4) == 1
    assert all(f5.pow(f5.generator, k) != 1 for k in range(1, 4))


def test_extension_field_arithmetic():
    for q in (4, 8, 9, 27, 81):
        F = gf(q)
        assert F.mul(1, x := F.generator) == x
        order = 1
        y = F.generator
        while y != 1:
            y = F.mul(y, F.generator)
            order += 1
        assert order == q - 1
        # Frobenius is a field automorphism of order a
        for x in range(q):
            for y in range(q):
                assert F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y))
                assert F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y))
        assert all(F.frobenius(x, F.a) == x for x in range(q))


def test_perm_basics():
    a = Perm((1, 2, 0))
    b = Perm((1, 0, 2))
    assert (a * a.inverse()).images == (0, 1, 2)
    assert (a * b).images == tuple(a.images[b.images[x]] for x in range(3))
    with pytest.raises(ValueError):
        Perm((0, 0, 1))


def test_matrix_inverse():
    m = ge.matrix(5, [[1, 2], [3, 4]])
    assert (m * m.inverse()) == Mat.identity(gf(5), 2)
    singular = ge.matrix(5, [[1, 2], [2, 4]])
    assert not singular.is_invertible()


# --- closure ---------------------------------------------------------------

def test_close_group_identity_only():
    g = ge.close_group([Perm((0, 1))])
    assert g.order == 1


def test_close_group_heisenberg_over_gf2():
    e12 = ge.matrix(2, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    e23 = ge.matrix(2, [[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    g = ge.close_group([e12, e23])
    assert g.order == 8


def test_close_group_k_generators_over_gf3():
    g = ge.build_example_group("isaacs_K", 3)
    assert g.order == 54


def test_close_group_rejects_mixed_kinds_and_singular():
    with pytest.raises(ValueError):
        ge.close_group([Perm((1, 0)), ge.matrix(3, [[1]])])
    with pytest.raises(ValueError):
        ge.close_group([ge.matrix(5, [[1, 2], [2, 4]])])


def test_close_group_resource_limit():
    rot = Perm([(i + 1) % 40 for i in range(40)])
    with pytest.raises(ResourceLimitError):
        ge.close_group([rot], limit=10)


# --- conjugacy classes and subgroup machinery ------------------------------

def test_conjugacy_classes_examples():
    assert len(ge.cyclic_group(1).conjugacy_classes()) == 1
    d8 = ge.build_example_group("heisenberg", 2)
    sizes = sorted(len(c) for c in d8.conjugacy_classes())
    assert sizes == [1, 1, 2, 2, 2]
    k3 = ge.build_example_group("isaacs_K", 3)
    table = ge.dixon_character_table(k3)
    assert len(k3.conjugacy_classes()) == len(table.degrees)


def test_class_sizes_divide_order():
    for g in (ge.symmetric_group(4), ge.frobenius_21(), ge.quaternion_group()):
        classes = g.conjugacy_classes()
        assert sum(len(c) for c in classes) == g.order
        assert all(g.order % len(c) == 0 for c in classes)


def test_minimal_normal_subgroups_of_d8():
    d8 = ge.build_example_group("heisenberg", 2)
    minimal = d8.minimal_normal_subgroups()
    assert len(minimal) == 1 and len(minimal[0]) == 2


def test_derived_series_and_solvability():
    assert ge.symmetric_group(4).is_solvable()
    assert not ge.alternating_group(5).is_solvable()
    assert ge.build_example_group("isaacs_K", 4).is_solvable()


# --- character tables ------------------------------------------------------

def test_cyclic_3_table_values_are_cube_roots():
    g = ge.cyclic_group(3)
    table = ge.dixon_character_table(g)
    assert table.degrees == [1, 1, 1]
    # the two nontrivial rows take each primitive cube root exactly once
    nontrivial = [row for row in table.values
                  if any(not v.is_zero() and v.as_int() is None for v in row)]
    assert len(nontrivial) == 2
    roots = {Cyc.root_power(3, 1), Cyc.root_power(3, 2)}
    for row in nontrivial:
        assert set(row[1:]) == roots


def test_heisenberg_gf2_table():
    table = ge.dixon_character_table(ge.build_example_group("heisenberg", 2))
    assert sorted(table.degrees) == [1, 1, 1, 1, 2]


def test_symmetric_and_alternating_tables():
    assert sorted(ge.dixon_character_table(ge.symmetric_group(4)).degrees) == [1, 1, 2, 3, 3]
    assert sorted(ge.dixon_character_table(ge.symmetric_group(5)).degrees) == [1, 1, 4, 4, 5, 5, 6]
    assert sorted(ge.dixon_character_table(ge.alternating_group(5)).degrees) == [1, 3, 3, 4, 5]


def test_tables_agree_with_hook_formula_degrees():
    # two fully independent routes to the same degree multisets: the
    # hook-length formula on partitions, and the modular eigenvector method
    # on explicit permutation groups
    from chardeg.symalt import an_degrees, sn_degrees

    for n in (3, 4, 5):
        table = ge.dixon_character_table(ge.symmetric_group(n))
        assert table.degree_multiset().entries == sn_degrees(n).entries
    for n in (4, 5, 6):
        table = ge.dixon_character_table(ge.alternating_group(n))
        assert table.degree_multiset().entries == an_degrees(n).entries


def test_a5_values_on_five_cycles_are_golden_ratio_pair():
    # the two degree-3 characters take the two roots of x^2 - x - 1 on each
    # class of five-cycles; their sum is 1 and product -1, checked in exact
    # cyclotomic arithmetic
    g = ge.alternating_group(5)
    table = ge.dixon_character_table(g)
    rows = [row for d, row in zip(table.degrees, table.values) if d == 3]
    assert len(rows) == 2
    five_cycle_classes = [c for c, rep in enumerate(table.class_reps)
                          if g.element_order(rep) == 5]
    assert len(five_cycle_classes) == 2
    for c in five_cycle_classes:
        u, v = rows[0][c], rows[1][c]
        assert (u + v).as_int() == 1
        assert (u * v).as_int() == -1
        assert u.as_int() is None  # genuinely irrational values


def test_table_invariants_on_assorted_groups():
    for g in (ge.cyclic_group(12), ge.dihedral_group(9), ge.gl2_3(),
              ge.frobenius_21(), ge.quaternion_group()):
        table = ge.dixon_character_table(g)
        assert sum(d * d for d in table.degrees) == g.order
        assert all(g.order % d == 0 for d in table.degrees)
        assert table.verify_row_orthogonality()
        assert table.verify_column_orthogonality()


def test_table_resource_limit():
    class Fake:
        order = 6000
    with pytest.raises(ResourceLimitError):
        ge.dixon_character_table(Fake())


# --- gagola analysis --------------------------------------------------------

def test_gagola_examples():
    d8 = ge.build_example_group("heisenberg", 2)
    rep = ge.gagola_analyze(d8)
    assert rep.is_gagola and rep.character_degree == 2
    assert rep.minimal_normal_order == 2 and rep.vanishing_classes == 3

    rep = ge.gagola_analyze(ge.cyclic_group(4))
    assert not rep.is_gagola

    k3 = ge.build_example_group("isaacs_K", 3)
    rep = ge.gagola_analyze(k3)
    assert rep.is_gagola and rep.character_degree == 6
    assert rep.minimal_normal_order == 3


def test_heisenberg_odd_is_not_gagola():
    # for odd q the unitriangular group alone vanishes off three classes
    rep = ge.gagola_analyze(ge.build_example_group("heisenberg", 3))
    assert not rep.is_gagola


# --- constructions ----------------------------------------------------------

def test_example_group_orders():
    assert ge.build_example_group("isaacs_K", 2).order == 8
    assert ge.build_example_group("isaacs_K", 4).order == 192
    heis = ge.build_example_group("heisenberg", 3)
    assert heis.order == 27
    assert all(heis.element_order(i) in (1, 3) for i in range(heis.order))


def test_p_semidirect_l_equals_full_group():
    for q in (3, 4):
        a = ge.build_example_group("isaacs_K", q)
        b = ge.build_example_group("p_semidirect_L", q)
        assert a.order == b.order == q**3 * (q - 1)
        assert set(a.elements) == set(b.elements)


def test_resource_limits_on_kinds():
    with pytest.raises(ResourceLimitError):
        ge.build_example_group("isaacs_K", 9)   # order 5832 exceeds the bound
    with pytest.raises(ResourceLimitError):
        ge.build_example_group("heisenberg", 16)
    with pytest.raises(ValueError):
        ge.build_example_group("nonsense", 3)


def test_galois_twisted_group():
    gamma = ge.build_galois_twisted_group(4)
    assert gamma.order == 384
    with pytest.raises(ValueError):
        ge.build_galois_twisted_group(5)  # prime field: trivial twist
    with pytest.raises(ResourceLimitError):
        ge.build_galois_twisted_group(9)  # order 11664


def test_closure_only_sizes():
    assert ge.build_example_group("heisenberg", 9).order == 729
    assert ge.build_example_group("isaacs_K", 8).order == 3584


# --- group specification files ---------------------------------------------

def test_group_file_round_trip(tmp_path):
    path = tmp_path / "d8.json"
    path.write_text(json.dumps({
        "name": "D8",
        "kind": "permutation",
        "degree": 4,
        "generators": [[1, 2, 3, 0], [3, 2, 1, 0]],
    }))
    name, group = ge.load_group_file(path)
    assert name == "D8" and group.order == 8

    path = tmp_path / "q8.json"
    path.write_text(json.dumps({
        "name": "Q8",
        "kind": "matrix",
        "dimension": 2,
        "field": 3,
        "generators": [[0, 2, 1, 0], [1, 1, 1, 2]],
    }))
    name, group = ge.load_group_file(path)
    assert name == "Q8" and group.order == 8


def test_group_file_validation(tmp_path):
    with pytest.raises(ValueError):
        ge.group_from_dict({"kind": "permutation", "degree": 3, "generators": [[0, 1]]})
    with pytest.raises(ValueError):
        ge.group_from_dict({"kind": "widget", "generators": [[0]]})


# --- cyclotomic values -------------------------------------------------------

def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyc_arithmetic():
    zeta = Cyc.root_power(5, 1)
    total = zeta
    for k in (2, 3, 4):
        total = total + Cyc.root_power(5, k)
    assert total.as_int() == -1          # sum of all nontrivial fifth roots
    assert (zeta * zeta.conjugate()).as_int() == 1
    assert Cyc.integer(6, 3) == 3
    assert not zeta.is_zero()
