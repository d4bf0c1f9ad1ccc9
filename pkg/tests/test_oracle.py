import itertools
from collections import Counter
from math import factorial
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cellstrat import oracle, symcomb
from cellstrat.coeff import DELTA, Poly, ScalarDomain
from cellstrat.diagalg import Family
from cellstrat.permmod import ModuleLabel, cell_module, get_module, specht_filtration, weights
from cellstrat.schur import hom_basis_semistandard, schur_algebra
from helpers import CASES

B3 = Family.brauer(3)


def test_report_shape():
    r = oracle.report("x", "y", False, {"k": 1}, extra=2)
    assert r == {"check": "x", "instance": "y", "status": "fail", "witness": {"k": 1}, "extra": 2}
    assert oracle.report("x", "y", True)["status"] == "pass"


def test_solve_equivariant_small_cases():
    one, zero = Fraction(1), Fraction(0)
    ident = [[one, zero], [zero, one]]
    swap = [[zero, one], [one, zero]]
    # commutant of the swap on K^2 is spanned by 1 and the swap
    sols = oracle.solve_equivariant([swap], [swap])
    assert len(sols) == 2
    assert oracle.recheck_equivariance(sols, [swap, ident], [swap, ident])
    # maps from the trivial to the sign representation vanish
    assert oracle.solve_equivariant([[[one]]], [[[-one]]]) == []
    # polynomial entries
    sols = oracle.solve_equivariant([[[DELTA]]], [[[DELTA]]])
    assert len(sols) == 1
    with pytest.raises(ValueError):
        oracle.solve_equivariant([swap], [])
    with pytest.raises(ValueError):
        oracle.solve_equivariant([], [])
    with pytest.raises(ValueError):
        oracle.solve_equivariant([swap], [[[one]], [[one]]])
    with pytest.raises(ValueError):
        oracle.solve_equivariant([[[one, zero]]], [[[one]]])


def test_solver_recovers_semistandard_maps():
    src, tgt = get_module(ModuleLabel.of(B3, (2, 1), 0)), get_module(ModuleLabel.of(B3, (1,), 1))
    assert oracle.hom_dimension(src, tgt) == len(hom_basis_semistandard(src, tgt)) == 2
    rng = random.Random(1)
    elems = oracle.random_elements(B3, 4, rng, src.domain)
    maps = [m.matrix() for m in hom_basis_semistandard(src, tgt)]
    assert oracle.recheck_equivariance(maps, [oracle.element_matrix(src, e) for e in elems],
                                       [oracle.element_matrix(tgt, e) for e in elems])


def test_group_algebra_cellular():
    sc, cd = oracle.group_cell_datum(3)
    assert sc.n == 6 and len(cd.labels) == 6
    assert oracle.check_cellular(sc, cd)["status"] == "pass"


def test_diagram_algebra_cellular():
    sc, cd = oracle.diagram_cell_datum(B3)
    assert oracle.check_cellular(sc, cd)["status"] == "pass"


def test_schur_algebra_cellular_small():
    sc, cd = oracle.schur_cell_datum(schur_algebra(Family.brauer(2)))
    assert oracle.check_cellular(sc, cd)["status"] == "pass"


@pytest.mark.parametrize("builder", [lambda: oracle.group_cell_datum(3), lambda: oracle.diagram_cell_datum(B3),
                                     lambda: oracle.schur_cell_datum(schur_algebra(Family.brauer(2)))])
def test_corrupted_data_fail(builder):
    sc, cd = builder()
    for seed in range(3):
        bad = oracle.corrupt(cd, random.Random(seed))
        r = oracle.check_cellular(sc, bad)
        assert r["status"] == "fail" and "axiom" in r["witness"]


def test_wrong_involution_fails():
    sc, cd = oracle.group_cell_datum(3)
    ident = [(i, 1) for i in range(sc.n)]
    bad = oracle.CellDatum(cd.labels, cd.vectors, cd.higher, ident)
    r = oracle.check_cellular(sc, bad)
    assert r["status"] == "fail" and r["witness"]["axiom"] == "C1"


def test_double_centralizer_small():
    r = oracle.check_double_centralizer(Family.brauer(2))
    assert r["status"] == "pass"
    assert r["commutant_dim"] == r["algebra_dim"] == 3 and r["injective"]


def test_generic_decompose_examples():
    r = oracle.generic_decompose(ModuleLabel.of(B3, (3,), 0))
    assert r["status"] == "pass" and r["end_dim"] == 2
    assert [(f["shape"], f["layer"], f["multiplicity"], f["dim"]) for f in r["factors"]] == \
        [([[3]], 0, 1, 1), ([[1]], 1, 1, 3)]
    bad = oracle.generic_decompose(ModuleLabel.of(B3, (3,), 0), q=-2)
    assert bad["status"] == "fail" and bad["witness"]["reason"] == "non-generic q"


@pytest.mark.parametrize("f", [B3, Family.partition(2), Family.walled(1, 1)], ids=str)
def test_generic_decompose_matches_tableau_counts(f):
    for lab in weights(f):
        r = oracle.generic_decompose(lab)
        assert r["status"] == "pass"
        got = sorted((tuple(map(tuple, x["shape"])), x["layer"], x["multiplicity"]) for x in r["factors"])
        assert got == sorted(specht_filtration(lab))
        for x in r["factors"]:
            assert x["dim"] == cell_module(tuple(map(tuple, x["shape"])), x["layer"], f).dim
        assert r["end_dim"] == sum(x["multiplicity"] ** 2 for x in r["factors"])


def test_mn_character_table_s4():
    # rows (4), (3,1), (2,2), (2,1,1), (1^4); columns e, (12), (12)(34), (123), (1234)
    table = [[1, 1, 1, 1, 1], [3, 1, -1, 0, -1], [2, 0, 2, -1, 0], [3, -1, -1, 0, 1], [1, -1, 1, 1, -1]]
    cols = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    for lam, row in zip(symcomb.enumerate_partitions(4), table):
        assert [oracle.mn_character(lam, mu) for mu in cols] == row
    with pytest.raises(ValueError):
        oracle.mn_character((2,), (1,))


@pytest.mark.parametrize("r", range(1, 7))
def test_mn_orthogonality(r):
    parts = symcomb.enumerate_partitions(r)
    sizes = {mu: class_size(mu) for mu in parts}
    order = sum(sizes.values())
    for lam in parts:
        assert oracle.mn_character(lam, (1,) * r) == len(symcomb.standard_tableaux(lam))
        for nu in parts:
            inner = sum(sizes[mu] * oracle.mn_character(lam, mu) * oracle.mn_character(nu, mu) for mu in parts)
            assert inner == (order if lam == nu else 0)


def test_mn_against_tabloid_counts():
    # fixed mu-tabloids of w equal sum_lam K(lam, mu) chi^lam(w)
    for r in range(1, 6):
        parts = symcomb.enumerate_partitions(r)
        for mu in parts:
            tabloids = set()
            for w in itertools.permutations(range(1, r + 1)):
                rows, start = [], 0
                for m in mu:
                    rows.append(frozenset(w[start:start + m]))
                    start += m
                tabloids.add(tuple(rows))
            for nu in parts:
                g = symcomb.cycle_element(nu)
                fixed = sum(1 for t in tabloids if tuple(frozenset(g[x - 1] for x in row) for row in t) == t)
                assert fixed == sum(symcomb.kostka(lam, mu) * oracle.mn_character(lam, nu) for lam in parts)


def class_size(mu):
    out = factorial(sum(mu))
    for part, mult in Counter(mu).items():
        out //= part ** mult * factorial(mult)
    return out


def test_structure_constants_associativity():
    sc = oracle.diagram_structure_constants(Family.partition(2))
    triples = itertools.product(range(sc.n), repeat=3)
    ok, witness = sc.check_associativity(triples)
    assert ok and witness is None
    broken = oracle.StructureConstants(2, lambda i, j: {1: 1} if i == 0 else {0: 1})
    ok, witness = broken.check_associativity(itertools.product(range(2), repeat=3))
    assert not ok and witness is not None


@given(st.tuples(st.integers(0, 23), st.integers(0, 23), st.integers(0, 23)))
def test_group_associativity(t):
    CASES["associativity group"] += 1
    sc, _, _ = oracle.group_structure_constants(4)
    ok, _ = sc.check_associativity([t])
    assert ok
