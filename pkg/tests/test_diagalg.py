import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cellstrat import diagalg
from cellstrat.coeff import DELTA, Poly
from cellstrat.diagalg import AlgebraElement, Diagram, Family
from helpers import CASES

FAMILIES = [Family.brauer(4), Family.walled(2, 2), Family.partition(3)]


def concatenate(x: Diagram, y: Diagram):
    """Glue x on top of y along a middle row; returns (blocks, closed middle components)."""
    n = x.family.n
    parent = {}

    def find(a):
        while parent.setdefault(a, a) != a:
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    # x: top row ("t", k), bottom row ("m", k); y: top row ("m", k), bottom row ("b", k)
    for blocks, up, down in ((x.blocks, "t", "m"), (y.blocks, "m", "b")):
        for b in blocks:
            nodes = [(up, a) if a <= n else (down, a - n) for a in b]
            for u in nodes:
                find(u)
            for u in nodes[1:]:
                union(nodes[0], u)
    classes = {}
    for node in list(parent):
        classes.setdefault(find(node), []).append(node)
    out, loops = [], 0
    for members in classes.values():
        outer = sorted(a if row == "t" else a + n for row, a in members if row != "m")
        if outer:
            out.append(tuple(outer))
        else:
            loops += 1
    return tuple(sorted(out)), loops


def diagrams(f):
    return st.sampled_from(diagalg.enumerate_basis(f))


def test_family_validation():
    with pytest.raises(ValueError):
        Family("temperley", 3)
    with pytest.raises(ValueError):
        Family.brauer(-1)
    with pytest.raises(ValueError):
        Family("brauer", 3, 1)


def test_basis_counts():
    assert len(diagalg.enumerate_basis(Family.brauer(3))) == 15
    p2 = Family.partition(2)
    assert len(diagalg.enumerate_basis(p2)) == 15
    assert diagalg.inflation_dimensions(p2) == {0: 2, 1: 9, 2: 4}
    assert len(diagalg.enumerate_basis(Family.brauer(4))) == 105
    assert len(diagalg.enumerate_basis(Family.partition(3))) == 203


def test_walled_basis_is_wall_filter_of_brauer():
    def ok(blocks):
        for a, b in blocks:
            side = [(x - 1) % 4 >= 2 for x in (a, b)]
            same_row = (a <= 4) == (b <= 4)
            if same_row == (side[0] == side[1]):
                return False
        return True

    filtered = [d.blocks for d in diagalg.enumerate_basis(Family.brauer(4)) if ok(d.blocks)]
    walled = [d.blocks for d in diagalg.enumerate_basis(Family.walled(2, 2))]
    assert len(walled) == 24 and sorted(filtered) == sorted(walled)


def test_basis_order_is_canonical():
    for f in FAMILIES:
        blocks = [d.blocks for d in diagalg.enumerate_basis(f)]
        assert blocks == sorted(blocks)
        assert all(list(b) == sorted(b) for bs in blocks for b in bs)


def test_multiply_examples():
    f = Family.brauer(3)
    ident = diagalg.identity_diagram(f)
    for d in diagalg.enumerate_basis(f):
        assert diagalg.multiply(ident, d) == AlgebraElement.of(d)
    x = Diagram.from_blocks(f, [[1, 4], [2, 3], [5, 6]])
    assert diagalg.multiply(x, x) == AlgebraElement(f, {x.labels: DELTA})


def test_partition_example_against_component_tracing():
    f = Family.partition(2)
    big = Diagram.from_blocks(f, [[1, 2, 3, 4]])
    singles = Diagram.from_blocks(f, [[1], [2], [3], [4]])
    prod = diagalg.multiply(big, singles)
    (z,) = prod.support()
    blocks, loops = concatenate(big, singles)
    assert z.blocks == blocks == ((1, 2), (3,), (4,)) and loops == 0
    assert prod.coefficient(z) == 1


@pytest.mark.parametrize("f", [Family.brauer(3), Family.walled(1, 2), Family.partition(2)], ids=str)
def test_multiplication_matches_tracing_exhaustively(f):
    basis = diagalg.enumerate_basis(f)
    for x in basis:
        for y in basis:
            (z,) = diagalg.multiply(x, y).support()
            blocks, loops = concatenate(x, y)
            assert z.blocks == blocks
            assert diagalg.multiply(x, y).coefficient(z) == Poly.monomial(loops)


def test_family_mismatch():
    a = diagalg.identity_diagram(Family.brauer(2))
    b = diagalg.identity_diagram(Family.partition(2))
    with pytest.raises(ValueError):
        diagalg.multiply(a, b)


@pytest.mark.parametrize("f", FAMILIES, ids=str)
def test_dimension_from_inflation(f):
    assert sum(diagalg.inflation_dimensions(f).values()) == len(diagalg.enumerate_basis(f))


def test_brauer_three_dimension_bookkeeping():
    assert diagalg.inflation_dimensions(Family.brauer(4)) == {0: 24, 1: 72, 2: 9}


@pytest.mark.parametrize("f", FAMILIES, ids=str)
def test_involution_examples(f):
    for l in f.layers():
        num = diagalg.idempotent_numerator(f, l)
        assert diagalg.involution(num) == AlgebraElement.of(num)
    for d in diagalg.enumerate_basis(f)[:100]:
        assert diagalg.involution(diagalg.involution(d)) == AlgebraElement.of(d)


@pytest.mark.parametrize("f", FAMILIES + [Family.brauer(3), Family.partition(2)], ids=str)
def test_idempotents(f):
    q = Fraction(3)
    es = [diagalg.idempotent(f, l, q) for l in f.layers()]
    assert es[0] == AlgebraElement.of(diagalg.identity_diagram(f), domain=es[0].domain)
    for l, el in enumerate(es):
        assert el * el == el
        for m in range(l, len(es)):
            assert el * es[m] == es[m] == es[m] * el
        assert diagalg.involution(el) == el


def test_idempotent_denominators():
    e1 = diagalg.idempotent(Family.brauer(3), 1, -2)
    assert e1 * e1 == e1
    sym = diagalg.idempotent(Family.brauer(3), 1)
    assert sym.denom == 1 and sym * sym == sym
    p = diagalg.idempotent(Family.partition(2), 1)
    assert p.denom == 1 and p * p == p
    with pytest.raises(ValueError, match="degenerate"):
        diagalg.idempotent(Family.brauer(3), 1, 0)


def test_walled_idempotent_geometry():
    f = Family.walled(2, 2)
    num = diagalg.idempotent_numerator(f, 2)
    # arcs join r'-j+1 and r'+j in each row
    assert set(num.blocks) == {(2, 3), (1, 4), (6, 7), (5, 8)}


def test_inflation_examples():
    f = Family.brauer(3)
    l, u, v, perm = diagalg.inflation_coords(diagalg.identity_diagram(f))
    assert l == 0 and perm == (1, 2, 3)
    assert u.blocks == v.blocks == (((1,), True), ((2,), True), ((3,), True))
    x = Diagram.from_blocks(f, [[1, 4], [2, 3], [5, 6]])
    l, u, v, perm = diagalg.inflation_coords(x)
    assert l == 1 and perm == (1,)
    assert u.closed_blocks() == [(2, 3)] and v.closed_blocks() == [(2, 3)]


@pytest.mark.parametrize("f", FAMILIES, ids=str)
def test_inflation_round_trip(f):
    for d in diagalg.enumerate_basis(f):
        l, u, v, perm = diagalg.inflation_coords(d)
        assert u.layer == v.layer == l
        assert diagalg.assemble(f, u, v, perm) == d


def test_ideal_membership():
    f = Family.brauer(3)
    for l in f.layers():
        num = diagalg.idempotent_numerator(f, l)
        assert diagalg.ideal_filtration_membership(num, l, 0)
        assert not diagalg.ideal_filtration_membership(num, l + 1, 0)
    assert len(diagalg.ideal_basis(f, 1)) == 9
    f4 = Family.brauer(4)
    sizes = [len(diagalg.ideal_basis(f4, l)) for l in f4.layers()]
    assert sizes == [105, 81, 9]


@pytest.mark.parametrize("f", FAMILIES + [Family.brauer(3), Family.partition(2)], ids=str)
def test_corner_algebra_matches_through_group(f):
    for l in f.layers():
        data = diagalg.corner_quotient(f, l)
        assert data["corner"] - data["deeper"] == data["group_order"]
        assert data["distinct_images"] == data["group_order"]
        assert data["multiplicative"]


def test_generators_generate():
    for f in FAMILIES:
        alg = diagalg.algebra(f)
        seen = {alg.identity}
        frontier = list(seen)
        while frontier:
            new = []
            for z in frontier:
                for g in alg.generators():
                    w, _ = alg.mul_labels(g, z)
                    if w not in seen:
                        seen.add(w)
                        new.append(w)
            frontier = new
        assert len(seen) == len(alg.basis)


def test_json_and_art():
    f = Family.walled(1, 2)
    for d in diagalg.enumerate_basis(f):
        assert diagalg.diagram_from_json(json.loads(json.dumps(d.to_json()))) == d
    art = diagalg.identity_diagram(f).art()
    assert art.count("|") == 2
    with pytest.raises(ValueError):
        Diagram.from_blocks(Family.brauer(2), [[1, 2, 3, 4]])


# -- property suites: associativity and anti-automorphism, 200 cases per family ------

def _assoc(f, x, y, z):
    CASES[f"associativity {f.kind}"] += 1
    a, b, c = (AlgebraElement.of(d) for d in (x, y, z))
    assert (a * b) * c == a * (b * c)


def _anti(f, x, y):
    CASES[f"anti-automorphism {f.kind}"] += 1
    xy = diagalg.multiply(x, y)
    assert diagalg.involution(xy) == diagalg.involution(y) * diagalg.involution(x)


@given(diagrams(FAMILIES[0]), diagrams(FAMILIES[0]), diagrams(FAMILIES[0]))
def test_associativity_brauer(x, y, z):
    _assoc(FAMILIES[0], x, y, z)


@given(diagrams(FAMILIES[1]), diagrams(FAMILIES[1]), diagrams(FAMILIES[1]))
def test_associativity_walled(x, y, z):
    _assoc(FAMILIES[1], x, y, z)


@given(diagrams(FAMILIES[2]), diagrams(FAMILIES[2]), diagrams(FAMILIES[2]))
def test_associativity_partition(x, y, z):
    _assoc(FAMILIES[2], x, y, z)


@given(diagrams(FAMILIES[0]), diagrams(FAMILIES[0]))
def test_involution_antiautomorphism_brauer(x, y):
    _anti(FAMILIES[0], x, y)


@given(diagrams(FAMILIES[1]), diagrams(FAMILIES[1]))
def test_involution_antiautomorphism_walled(x, y):
    _anti(FAMILIES[1], x, y)


@given(diagrams(FAMILIES[2]), diagrams(FAMILIES[2]))
def test_involution_antiautomorphism_partition(x, y):
    _anti(FAMILIES[2], x, y)
