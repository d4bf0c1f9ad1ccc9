import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cellstrat import linalg, oracle, symcomb
from cellstrat.symcomb import GroupAlgebraElement, Tableau


def compositions(r):
    if r == 0:
        yield ()
        return
    for first in range(1, r + 1):
        for rest in compositions(r - first):
            yield (first,) + rest


def brute_double_cosets(lam, mu, r):
    left, right = symcomb.young_subgroup(lam), symcomb.young_subgroup(mu)
    seen, count = set(), 0
    for g in itertools.permutations(range(1, r + 1)):
        if g in seen:
            continue
        count += 1
        for u in left:
            for v in right:
                seen.add(symcomb.compose(symcomb.compose(u, g), v))
    return count


def vector(y, perms):
    return [Fraction(y.coefficient(w)) for w in perms]


# -- partitions -------------------------------------------------------------------

def test_enumerate_partitions_small():
    assert symcomb.enumerate_partitions(0) == ((),)
    assert symcomb.enumerate_partitions(3) == ((3,), (2, 1), (1, 1, 1))


def test_partitions_of_eight_against_sorted_compositions():
    brute = {tuple(sorted(c, reverse=True)) for c in compositions(8)}
    assert len(brute) == 22
    assert set(symcomb.enumerate_partitions(8)) == brute


def test_dominance():
    assert symcomb.dominates((3,), (2, 1))
    assert symcomb.dominates((2, 1), (2, 1))
    assert symcomb.dominates((3, 1, 1), (2, 2, 1))
    assert not symcomb.dominates((2, 2, 2), (3, 1, 1, 1))
    with pytest.raises(ValueError):
        symcomb.dominates((2,), (1, 1, 1))


# -- symmetrizers and cosets --------------------------------------------------------

def test_young_symmetrizer():
    x = symcomb.young_symmetrizer((2,))
    assert x.terms == {(1, 2): 1, (2, 1): 1}
    assert symcomb.young_symmetrizer((1, 1)).terms == {(1, 2): 1}
    x21 = symcomb.young_symmetrizer((2, 1))
    y21 = symcomb.young_symmetrizer((2, 1), signed=True)
    assert len(x21) == 2 and len(y21) == 2


def test_specht_ideal_dimension():
    perms = sorted(itertools.permutations((1, 2, 3)))
    gen = symcomb.young_symmetrizer((2, 1)) * symcomb.young_symmetrizer((2, 1), signed=True)
    span = [vector(GroupAlgebraElement.basis(w) * gen, perms) for w in perms]
    assert linalg.rank(span) == 2


def test_coset_reps_examples():
    assert symcomb.coset_reps((3,), 3) == ((1, 2, 3),)
    assert len(symcomb.coset_reps((2, 1), 3)) == 3
    assert set(symcomb.coset_reps((1, 1, 1), 3)) == set(itertools.permutations((1, 2, 3)))


@pytest.mark.parametrize("r", range(1, 7))
def test_coset_index(r):
    for mu in compositions(r):
        assert len(symcomb.coset_reps(mu, r)) * len(symcomb.young_subgroup(mu)) == factorial(r)


@pytest.mark.parametrize("r", range(1, 6))
def test_unique_factorisation(r):
    for mu in compositions(r):
        reps = symcomb.coset_reps(mu, r)
        sub = symcomb.young_subgroup(mu)
        products = [symcomb.compose(d, s) for d in reps for s in sub]
        assert len(set(products)) == factorial(r)


def test_double_coset_examples():
    assert symcomb.double_coset_reps((3,), (3,), 3) == ((1, 2, 3),)
    assert len(symcomb.double_coset_reps((2, 1), (2, 1), 3)) == brute_double_cosets((2, 1), (2, 1), 3) == 2
    for mu in [(2, 1), (1, 2), (3,)]:
        assert len(symcomb.double_coset_reps((1, 1, 1), mu, 3)) == len(symcomb.coset_reps(mu, 3))


@pytest.mark.parametrize("r", range(1, 5))
def test_double_coset_counts(r):
    for lam in compositions(r):
        for mu in compositions(r):
            assert len(symcomb.double_coset_reps(lam, mu, r)) == brute_double_cosets(lam, mu, r)


# -- tableaux and the Murphy basis ----------------------------------------------------

def test_tableau_predicates():
    t = Tableau.from_rows([[1, 2], [3]])
    assert t.is_standard() and t.is_row_standard()
    assert Tableau.from_rows([[1, 1], [2]]).is_semistandard((2, 1))
    assert not Tableau.from_rows([[1, 2], [1]]).is_semistandard((2, 1))
    assert Tableau.from_json(t.to_json()) == t
    assert symcomb.kostka((2, 1), (1, 1, 1)) == 2


def test_murphy_element_examples():
    t = symcomb.initial_tableau((2, 1))
    assert symcomb.murphy_element(t, t) == symcomb.young_symmetrizer((2, 1))
    (s,) = symcomb.standard_tableaux((2,))
    assert symcomb.murphy_element(s, s).terms == {(1, 2): 1, (2, 1): 1}
    with pytest.raises(ValueError):
        symcomb.murphy_element(s, t)


@pytest.mark.parametrize("r", range(1, 5))
def test_murphy_basis_of_group_algebra(r):
    perms = sorted(itertools.permutations(range(1, r + 1)))
    rows = []
    for lam in symcomb.enumerate_partitions(r):
        for s in symcomb.standard_tableaux(lam):
            for t in symcomb.standard_tableaux(lam):
                m = symcomb.murphy_element(s, t)
                assert m.star() == symcomb.murphy_element(t, s)
                rows.append(vector(m, perms))
    assert len(rows) == factorial(r)
    assert linalg.rank(rows) == factorial(r)


def test_murphy_module_basis_examples():
    assert len(symcomb.murphy_module_basis((3,))) == 1
    assert len(symcomb.murphy_module_basis((1, 1, 1))) == 6
    basis = symcomb.murphy_module_basis((2, 1))
    assert len(basis) == 3
    shapes = [idx.shape for idx, _ in basis]
    assert shapes.count((3,)) == 1 and shapes.count((2, 1)) == 2


@pytest.mark.parametrize("r", range(1, 6))
def test_murphy_module_change_of_basis(r):
    for lam in symcomb.enumerate_partitions(r):
        reps = symcomb.coset_reps(lam, r)
        mat = [symcomb.module_coordinates(y, lam) for _, y in symcomb.murphy_module_basis(lam)]
        assert len(mat) == len(reps)
        assert linalg.determinant([[Fraction(x) for x in row] for row in mat]) != 0


# -- homomorphisms of permutation modules ------------------------------------------------

def natural_action(lam, r):
    """Generator matrices of M(lam) built from left cosets as sets, independently of coset_reps."""
    sub = symcomb.young_subgroup(lam)
    cosets = []
    for g in itertools.permutations(range(1, r + 1)):
        c = frozenset(symcomb.compose(g, s) for s in sub)
        if c not in cosets:
            cosets.append(c)
    gens = [tuple(list(range(1, k)) + [k + 1, k] + list(range(k + 2, r + 1))) for k in range(1, r)]
    mats = []
    for w in gens or [tuple(range(1, r + 1))]:
        mat = [[Fraction(0)] * len(cosets) for _ in cosets]
        for j, c in enumerate(cosets):
            img = frozenset(symcomb.compose(w, x) for x in c)
            mat[cosets.index(img)][j] = Fraction(1)
        mats.append(mat)
    return mats


def equivariant(h, lam, mu):
    r = sum(lam)
    gens = [tuple(list(range(1, k)) + [k + 1, k] + list(range(k + 2, r + 1))) for k in range(1, r)]
    src, tgt = symcomb.coset_reps(lam, r), symcomb.coset_reps(mu, r)
    for w in gens:
        for j, d in enumerate(src):
            moved = symcomb.compose(w, d)
            k = next(i for i, e in enumerate(src) if symcomb.in_young_subgroup(symcomb.compose(symcomb.inverse(e), moved), lam))
            lhs = [row[k] for row in h.matrix]
            col = [row[j] for row in h.matrix]
            rhs = [0] * len(tgt)
            for i, e in enumerate(tgt):
                if col[i]:
                    moved_t = symcomb.compose(w, e)
                    m = next(a for a, f in enumerate(tgt)
                             if symcomb.in_young_subgroup(symcomb.compose(symcomb.inverse(f), moved_t), mu))
                    rhs[m] += col[i]
            if lhs != rhs:
                return False
    return True


def test_gdj_examples():
    (ident,) = symcomb.gdj_hom_basis((3,), (3,))
    assert ident.matrix == [[1]]
    (phi,) = symcomb.gdj_hom_basis((2,), (1, 1))
    assert phi.image.terms == {(1, 2): 1, (2, 1): 1}
    total = 0
    for lam in symcomb.enumerate_partitions(2):
        for mu in symcomb.enumerate_partitions(2):
            solved = oracle.solve_equivariant(natural_action(lam, 2), natural_action(mu, 2))
            assert len(solved) == len(symcomb.gdj_hom_basis(lam, mu))
            total += len(solved)
    assert total == 5


@pytest.mark.parametrize("r", [3, 4])
def test_gdj_dimensions_and_equivariance(r):
    for lam in symcomb.enumerate_partitions(r):
        for mu in symcomb.enumerate_partitions(r):
            maps = symcomb.gdj_hom_basis(lam, mu)
            solved = oracle.solve_equivariant(natural_action(lam, r), natural_action(mu, r))
            assert len(maps) == len(solved)
            assert all(equivariant(h, lam, mu) for h in maps)
            assert linalg.rank([[x for row in h.matrix for x in row] for h in maps]) == len(maps)


def test_semistandard_examples():
    T = Tableau.from_rows([[1, 1], [2]])
    ident = symcomb.semistandard_hom(T, T, (2, 1), (2, 1))
    assert ident.matrix == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    S = Tableau.from_rows([[1, 1]])
    U = Tableau.from_rows([[1, 2]])
    phi = symcomb.semistandard_hom(S, U, (2,), (1, 1))
    (gdj,) = symcomb.gdj_hom_basis((2,), (1, 1))
    assert phi.matrix == gdj.matrix
    with pytest.raises(ValueError):
        symcomb.semistandard_hom(S, T, (2,), (2, 1))


def classical_schur(r):
    """Semistandard maps over all pairs of partitions of r, as flattened block matrices."""
    shapes = symcomb.enumerate_partitions(r)
    dims = {lam: len(symcomb.coset_reps(lam, r)) for lam in shapes}
    maps = []
    for lam in shapes:
        for mu in shapes:
            for S, T in symcomb.semistandard_pairs(lam, mu):
                maps.append((lam, mu, S, T, symcomb.semistandard_hom(S, T, lam, mu)))
    return shapes, dims, maps


def test_classical_schur_basis_r3():
    shapes, dims, maps = classical_schur(3)
    expected = sum(len(symcomb.semistandard_tableaux(w, lam)) * len(symcomb.semistandard_tableaux(w, mu))
                   for w in shapes for lam in shapes for mu in shapes)
    assert len(maps) == expected == 19
    for lam in shapes:
        for mu in shapes:
            block = [[x for row in h.matrix for x in row] for a, b, _, _, h in maps if (a, b) == (lam, mu)]
            solved = oracle.solve_equivariant(natural_action(lam, 3), natural_action(mu, 3))
            assert len(block) == len(solved) == linalg.rank(block)


@pytest.mark.parametrize("r", [2, 3])
def test_classical_schur_cellular(r):
    shapes, dims, maps = classical_schur(r)
    flat = {}
    for j, (lam, mu, _, _, h) in enumerate(maps):
        flat.setdefault((lam, mu), []).append(j)
    solvers = {key: linalg.ColumnSolver([[Fraction(x) for row in maps[j][4].matrix for x in row] for j in js])
               for key, js in flat.items()}

    def product(i, j):
        f, g = maps[i], maps[j]
        if f[0] != g[1]:
            return {}
        comp = linalg.matmul(f[4].matrix, g[4].matrix, 0)
        key = (g[0], f[1])
        sol = solvers[key].solve([Fraction(x) for row in comp for x in row])
        return {k: c for k, c in zip(flat[key], sol) if c}

    position = {(lam, mu, S, T): j for j, (lam, mu, S, T, _) in enumerate(maps)}
    sc = oracle.StructureConstants(len(maps), product, f"S({r})")
    labels = [(S.shape, (mu, T), (lam, S)) for lam, mu, S, T, _ in maps]
    involution = [(position[(mu, lam, T, S)], 1) for lam, mu, S, T, _ in maps]
    cd = oracle.CellDatum(labels, [{j: Fraction(1)} for j in range(len(maps))],
                          lambda a, b: a != b and symcomb.dominates(a, b), involution)
    assert oracle.check_cellular(sc, cd)["status"] == "pass"


@given(st.integers(1, 5).flatmap(lambda r: st.permutations(range(1, r + 1))))
def test_permutation_group_laws(w):
    w = tuple(w)
    e = symcomb.identity(len(w))
    assert symcomb.compose(w, symcomb.inverse(w)) == e
    assert symcomb.sign(w) * symcomb.sign(symcomb.inverse(w)) == 1
    assert sum(symcomb.cycle_type(w)) == len(w)
