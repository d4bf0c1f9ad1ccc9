"""Permutation modules M(lambda, l) = A e_l tensored down to the trivial module of Sigma_lambda.

A module is realised on its natural basis: the orbits O of the diagrams d
with d e_l = delta^l d under the right action of Sigma_lambda on the free
bottom positions.  Writing b_O for the image of d_O, a diagram a acts by
``a b_O = delta^j b_{O'}`` where a d_O = delta^j z and z lies in O'.  The
generator is the orbit of the idempotent numerator.

Everything else (Murphy vectors, filtration layers, cell modules) is a set of
vectors in these coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg, modtab, symcomb
from .coeff import Poly, ScalarDomain
from .diagalg import (BRAUER, PARTITION, WALLED, AlgebraElement, Dangle, Diagram, Family, algebra,
                      assemble_labels, blocks_of, enumerate_dangles, inflation_coords, public_blocks)
from .modtab import ModifiedDiagram, ModifiedTableau
from .symcomb import GroupAlgebraElement, Tableau


# ---------------------------------------------------------------------------
# labels

@dataclass(frozen=True)
class ModuleLabel:
    family: Family
    segs: tuple  # partitions per segment
    layer: int

    @classmethod
    def of(cls, family: Family, shape, layer: int) -> "ModuleLabel":
        label = cls(family, modtab.segments_of(family, shape), layer)
        label.validate()
        return label

    def validate(self):
        self.family.check_layer(self.layer)
        if modtab.segment_sizes(self.segs) != self.family.segments(self.layer):
            raise ValueError(f"shape {self.shape} is not a weight for layer {self.layer} of {self.family}")

    @property
    def shape(self):
        return modtab.shape_of(self.family, self.segs)

    def __str__(self):
        if self.family.kind == WALLED:
            a, b = self.segs
            return f"(({_fmt(a)}|{_fmt(b)}),{self.layer})"
        return f"(({_fmt(self.segs[0])}),{self.layer})"

    def to_json(self) -> dict:
        return {"shape": [list(s) for s in self.segs], "layer": self.layer}


def _fmt(p) -> str:
    return ",".join(map(str, p)) if p else "∅"


def weights(family: Family) -> list:
    """All labels (lambda, l), layers ascending, shapes in reverse-lex order."""
    out = []
    for l in family.layers():
        per = [symcomb.enumerate_partitions(s) for s in family.segments(l)]
        for combo in itertools.product(*per):
            out.append(ModuleLabel(family, tuple(combo), l))
    return out


def cell_higher(a: tuple, b: tuple) -> bool:
    """Strict order on cell labels (layer, segs): higher layer, then segment-wise dominance."""
    (la, sa), (lb, sb) = a, b
    if la != lb:
        return la > lb
    if sa == sb:
        return False
    return all(symcomb.dominates(x, y) for x, y in zip(sa, sb))


# ---------------------------------------------------------------------------
# Murphy elements on products of symmetric groups

def product_murphy(shapes: Sequence, s_tabs: Sequence, t_tabs: Sequence) -> GroupAlgebraElement:
    parts = [symcomb.murphy_element(s, t) if sum(sh) else GroupAlgebraElement.basis(())
             for sh, s, t in zip(shapes, s_tabs, t_tabs)]
    return symcomb.product_element(parts)


def product_murphy_sT(shapes, s_tabs, T_tabs, types) -> GroupAlgebraElement:
    parts = []
    for sh, s, T, tp in zip(shapes, s_tabs, T_tabs, types):
        parts.append(symcomb.murphy_sT(s, T, tp) if sum(sh) else GroupAlgebraElement.basis(()))
    return symcomb.product_element(parts)


def product_murphy_ST(shapes, S_tabs, T_tabs, src_types, tgt_types) -> GroupAlgebraElement:
    parts = []
    for sh, S, T, a, b in zip(shapes, S_tabs, T_tabs, src_types, tgt_types):
        parts.append(symcomb.murphy_ST(S, T, a, b) if sum(sh) else GroupAlgebraElement.basis(()))
    return symcomb.product_element(parts)


def shape_tuples(sizes: Sequence[int]) -> list:
    return list(itertools.product(*[symcomb.enumerate_partitions(s) for s in sizes]))


def standard_tuples(shapes) -> list:
    return list(itertools.product(*[symcomb.standard_tableaux(tuple(s)) for s in shapes]))


@lru_cache(maxsize=None)
def group_murphy_basis(sizes: tuple) -> tuple:
    """Murphy basis of K(Sigma_{n1} x ...): (shapes, s, t, element) in a fixed order."""
    out = []
    for shapes in shape_tuples(sizes):
        for s in standard_tuples(shapes):
            for t in standard_tuples(shapes):
                out.append((shapes, s, t, product_murphy(shapes, s, t)))
    return tuple(out)


@lru_cache(maxsize=None)
def group_murphy_coordinates(sizes: tuple) -> dict:
    """For each group element w, its coordinates in the Murphy basis (sparse dict)."""
    basis = group_murphy_basis(sizes)
    n = sum(sizes)
    elements = [symcomb.product_element([GroupAlgebraElement.basis(w) for w in combo])
                for combo in itertools.product(*[list(itertools.permutations(range(1, s + 1))) for s in sizes])]
    perms = [next(iter(e.terms)) for e in elements] if n else [()]
    index = {w: k for k, w in enumerate(perms)}
    cols = [[Fraction(0)] * len(perms) for _ in basis]
    for j, (_, _, _, m) in enumerate(basis):
        for w, c in m.terms.items():
            cols[j][index[w]] = Fraction(c)
    mat = [[cols[j][i] for j in range(len(basis))] for i in range(len(perms))]
    inv = linalg.inverse(mat)
    out = {}
    for w, i in index.items():
        out[w] = {j: inv[j][i] for j in range(len(basis)) if inv[j][i]}
    return out


# ---------------------------------------------------------------------------
# the module

@dataclass(frozen=True)
class MurphyBasisVector:
    v: Dangle
    sigma: ModifiedDiagram
    shape: tuple
    s: tuple
    T: tuple

    @property
    def arcs(self) -> int:
        return self.sigma.arcs

    def __str__(self):
        return f"v=[{self.v}] σ=[{self.sigma}] s={'/'.join(map(str, self.s))} T={'/'.join(map(str, self.T))}"


class ModuleElement:
    """Sparse vector over the natural basis, possibly divided by delta^denom."""

    __slots__ = ("module", "coords", "denom")

    def __init__(self, module: "PermModule", coords: dict, denom: int = 0):
        self.module = module
        self.coords = {k: v for k, v in coords.items() if v}
        self.denom = denom

    def dense(self) -> list:
        dom = self.module.domain
        return [self.coords.get(k, dom.zero) for k in range(self.module.dim)]

    def __eq__(self, other):
        return isinstance(other, ModuleElement) and self.module is other.module and \
            self.coords == other.coords and self.denom == other.denom

    def __add__(self, other):
        if other.module is not self.module or other.denom != self.denom:
            raise ValueError("incompatible module elements")
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, self.module.domain.zero) + v
        return ModuleElement(self.module, out, self.denom)

    def scale(self, c) -> "ModuleElement":
        return ModuleElement(self.module, {k: v * c for k, v in self.coords.items()}, self.denom)

    def __repr__(self):
        return f"ModuleElement({self.coords}{' / δ^' + str(self.denom) if self.denom else ''})"


class PermModule:
    def __init__(self, label: ModuleLabel, domain: ScalarDomain | None = None):
        label.validate()
        self.label = label
        self.family = label.family
        self.domain = domain or ScalarDomain.symbolic()
        self.domain.require_nondegenerate()
        f = self.family
        self.alg = algebra(f)
        self.l = label.layer
        self.free = f.free_positions(self.l)
        self.segs = label.segs
        self.t = len(self.free)
        self.numerator = self.alg.idempotent_numerator(self.l)
        self.group = [self._full(w) for w in modtab.shape_group(self.segs)]
        self.group_order = len(self.group)
        self._build_orbits()
        self._action = {}

    def _full(self, cell_perm) -> tuple:
        """Row permutation acting on the free positions as cell_perm acts on cells."""
        n = self.family.n
        full = list(range(1, n + 1))
        for k, x in enumerate(cell_perm):
            full[self.free[k] - 1] = self.free[x - 1]
        return tuple(full)

    def _build_orbits(self):
        alg = self.alg
        members = [z for z in alg.basis if alg.in_layer_ideal_pattern(z, self.l)]
        index = {}
        orbits = []
        for z in members:
            if z in index:
                continue
            orbit = {alg.permute_bottom(z, w) for w in self.group}
            rep = min(orbit, key=public_blocks)
            orbits.append((rep, orbit))
            for y in orbit:
                index[y] = None
        def key(entry):
            rep = entry[0]
            layer = alg.layer(rep)
            _, top, _, _ = inflation_coords(Diagram(self.family, rep))
            return (layer, top.key(), public_blocks(rep))

        orbits.sort(key=key)
        self.reps = [rep for rep, _ in orbits]
        self.orbit_size = [len(o) for _, o in orbits]
        self.index = {}
        for k, (_, orbit) in enumerate(orbits):
            for y in orbit:
                self.index[y] = k
        self.dim = len(self.reps)
        self.generator_index = self.index[self.numerator]
        self.rep_layer = [alg.layer(rep) - self.l for rep in self.reps]

    def stabiliser(self, k: int) -> int:
        return self.group_order // self.orbit_size[k]

    # -- action -------------------------------------------------------------

    def act_labels(self, a: tuple) -> list:
        """Monomial action of one diagram: list of (target index, loops) per basis vector."""
        hit = self._action.get(a)
        if hit is None:
            hit = []
            for rep in self.reps:
                z, loops = self.alg.mul_labels(a, rep)
                hit.append((self.index[z], loops))
            self._action[a] = hit
        return hit

    def element(self, coords: dict) -> ModuleElement:
        dom = self.domain
        return ModuleElement(self, {k: dom.convert(v) for k, v in coords.items()})

    def basis_vector(self, k: int) -> ModuleElement:
        return ModuleElement(self, {k: self.domain.one})

    def generator(self) -> ModuleElement:
        return self.basis_vector(self.generator_index)

    def act(self, a, x: ModuleElement) -> ModuleElement:
        if isinstance(a, Diagram):
            a = AlgebraElement.of(a, domain=self.domain)
        if a.family != self.family:
            raise ValueError("family mismatch")
        if x.module is not self:
            raise ValueError("element of another module")
        dom = self.domain
        a_terms = {z: dom.convert(c) for z, c in a.terms.items()}
        out = {}
        for z, c in a_terms.items():
            table = self.act_labels(z)
            for k, v in x.coords.items():
                target, loops = table[k]
                out[target] = out.get(target, dom.zero) + c * v * dom.delta_pow(loops)
        denom = a.denom + x.denom if dom.is_symbolic else 0
        if not dom.is_symbolic and a.denom:
            scale = dom.inv_delta_pow(a.denom)
            out = {k: v * scale for k, v in out.items()}
        res = ModuleElement(self, out, denom)
        return _reduce_denominator(res)

    def act_vector(self, a: tuple, vec: dict) -> dict:
        """Action of a single diagram (label tuple) on a sparse coordinate dict."""
        dom = self.domain
        table = self.act_labels(a)
        out = {}
        for k, v in vec.items():
            target, loops = table[k]
            out[target] = out.get(target, dom.zero) + v * dom.delta_pow(loops)
        return {k: v for k, v in out.items() if v}

    def matrix(self, a) -> list:
        """Dense action matrix (columns are images of basis vectors)."""
        if isinstance(a, Diagram):
            a = a.labels
        dom = self.domain
        if isinstance(a, AlgebraElement):
            mat = [[dom.zero] * self.dim for _ in range(self.dim)]
            scale = dom.one if (a.denom == 0 or dom.is_symbolic) else dom.inv_delta_pow(a.denom)
            if dom.is_symbolic and a.denom:
                raise ValueError("symbolic matrix of an element with a delta denominator")
            for z, c in a.terms.items():
                c = dom.convert(c) * scale
                for j, (i, loops) in enumerate(self.act_labels(z)):
                    mat[i][j] = mat[i][j] + c * dom.delta_pow(loops)
            return mat
        mat = [[dom.zero] * self.dim for _ in range(self.dim)]
        for j, (i, loops) in enumerate(self.act_labels(a)):
            mat[i][j] = mat[i][j] + dom.delta_pow(loops)
        return mat

    def carrier(self, k: int) -> tuple:
        """A diagram d with d * generator = delta^l * b_k."""
        return self.reps[k]

    def natural_labels(self) -> list:
        return [Diagram(self.family, rep) for rep in self.reps]

    # -- through-line geometry ------------------------------------------------

    def fixed_bottom_blocks(self) -> list:
        """Closed blocks of the idempotent numerator's bottom row (row positions)."""
        n = self.family.n
        out = []
        for b in blocks_of(self.numerator):
            if all(a >= n for a in b):
                out.append((tuple(a - n + 1 for a in b), False))
        return out

    def fixed_top_blocks(self) -> list:
        n = self.family.n
        return [(tuple(a + 1 for a in b), False) for b in blocks_of(self.numerator) if all(a < n for a in b)]

    def cells_to_positions(self, blocks) -> list:
        return [(tuple(sorted(self.free[a - 1] for a in b)), s) for b, s in blocks]

    def diagram_from(self, top_blocks, top_stars, sigma_blocks, sigma_stars, perm) -> tuple:
        """Diagram with the given top row and bottom row sigma (in cells) plus the fixed pattern."""
        bottom = self.cells_to_positions(sigma_blocks) + self.fixed_bottom_blocks()
        bstars = [tuple(sorted(self.free[a - 1] for a in b)) for b in sigma_stars]
        return assemble_labels(self.family, top_blocks, bottom, top_stars, bstars, perm)

    # -- Murphy basis -----------------------------------------------------------

    def murphy_basis(self) -> list:
        """(MurphyBasisVector, coordinate dict) pairs spanning the module."""
        cached = getattr(self, "_murphy", None)
        if cached is not None:
            return cached
        f = self.family
        out = []
        for i in range(modtab.max_arcs(f, self.segs) + 1):
            if self.l + i > f.max_layer:
                break
            dangles = enumerate_dangles(f, self.l + i)
            for sigma in modtab.enumerate_modified(self.segs, i, f):
                types = sigma.through_type()
                sizes = modtab.segment_sizes(types)
                stab = Fraction(1, sigma.stabiliser_order)
                stars = sigma.star_order()
                for shapes in shape_tuples(sizes):
                    fillings = modtab.semistandard_fillings(shapes, types)
                    if not fillings:
                        continue
                    for v in dangles:
                        top_stars = v.star_blocks()
                        for T in fillings:
                            for s in standard_tuples(shapes):
                                m = product_murphy_sT(shapes, s, T, types)
                                coords = {}
                                for perm, c in m.terms.items():
                                    z = self.diagram_from(v.blocks, top_stars, sigma.blocks, stars, perm)
                                    k = self.index[z]
                                    coords[k] = coords.get(k, 0) + c * stab
                                coords = {k: c for k, c in coords.items() if c}
                                out.append((MurphyBasisVector(v, sigma, shapes, s, T), coords))
        self._murphy = out
        return out

    def murphy_matrix(self) -> list:
        basis = self.murphy_basis()
        mat = [[Fraction(0)] * len(basis) for _ in range(self.dim)]
        for j, (_, coords) in enumerate(basis):
            for k, c in coords.items():
                mat[k][j] = Fraction(c)
        return mat

    def murphy_solver(self) -> linalg.ColumnSolver:
        cached = getattr(self, "_msolver", None)
        if cached is None:
            basis = self.murphy_basis()
            cols = [[Fraction(coords.get(k, 0)) for k in range(self.dim)] for _, coords in basis]
            cached = linalg.ColumnSolver(cols)
            self._msolver = cached
        return cached

    def to_murphy(self, x: ModuleElement) -> list:
        return self.murphy_solver().solve(x.dense(), self.domain.zero)

    # -- filtrations --------------------------------------------------------------

    def filtration_layer(self, i: int) -> list:
        """For each sigma in T^i_lambda, the natural basis vectors of the matching summand."""
        out = []
        for sigma in modtab.enumerate_modified(self.segs, i, self.family):
            members = {tuple(sorted(c)) for c in modtab.class_members(sigma)}
            ks = []
            for k, rep in enumerate(self.reps):
                if self.rep_layer[k] != i:
                    continue
                if tuple(sorted(self.bottom_configuration(rep))) in members:
                    ks.append(k)
            out.append((sigma, ks))
        return out

    def bottom_configuration(self, z: tuple) -> list:
        """The configuration (in cells) that z's bottom row induces on the free positions."""
        n = self.family.n
        cell_of = {p: k for k, p in enumerate(self.free, 1)}
        out = []
        for b in blocks_of(z):
            bots = [a - n + 1 for a in b if a >= n]
            tops = [a for a in b if a < n]
            cells = [cell_of[p] for p in bots if p in cell_of]
            if cells:
                out.append((tuple(sorted(cells)), bool(tops)))
        return out

    def specht_filtration(self) -> list:
        """[(shape, layer, multiplicity)] via counts of semistandard modified tableaux."""
        counts = {}
        f = self.family
        for i in range(modtab.max_arcs(f, self.segs) + 1):
            if self.l + i > f.max_layer:
                break
            for sigma in modtab.enumerate_modified(self.segs, i, f):
                types = sigma.through_type()
                for shapes in shape_tuples(modtab.segment_sizes(types)):
                    c = len(modtab.semistandard_fillings(shapes, types))
                    if c:
                        key = (shapes, self.l + i)
                        counts[key] = counts.get(key, 0) + c
        order = sorted(counts, key=lambda k: (-k[1], _shape_rank(k[0])))
        return [(shapes, layer, counts[(shapes, layer)]) for shapes, layer in order]

    def specht_chain(self) -> list:
        """Murphy vectors grouped into a chain of submodules, deepest first.

        Each entry is ((layer, shapes), [indices into murphy_basis()]); every
        prefix of the chain spans an A-submodule.
        """
        groups = {}
        for k, (vec, _) in enumerate(self.murphy_basis()):
            key = (self.l + vec.arcs, vec.shape)
            groups.setdefault(key, []).append(k)
        order = sorted(groups, key=lambda k: (-k[0], _shape_rank(k[1])))
        return [(key, groups[key]) for key in order]


def _shape_rank(shapes: tuple) -> tuple:
    """Reverse-lex position per segment (more dominant shapes first)."""
    return tuple(symcomb.enumerate_partitions(sum(s)).index(tuple(s)) for s in shapes)


def _reduce_denominator(x: ModuleElement) -> ModuleElement:
    if not x.denom or not x.module.domain.is_symbolic:
        return x
    coords, denom = dict(x.coords), x.denom
    while denom and coords and all(v.constant_term() == 0 for v in coords.values()):
        coords = {k: v.shift(-1) for k, v in coords.items()}
        denom -= 1
    if not coords:
        denom = 0
    return ModuleElement(x.module, coords, denom)


_MODULES = {}


def get_module(label: ModuleLabel, domain: ScalarDomain | None = None) -> PermModule:
    dom = domain or ScalarDomain.symbolic()
    key = (label, dom.q)
    mod = _MODULES.get(key)
    if mod is None:
        mod = PermModule(label, ScalarDomain(dom.q))
        _MODULES[key] = mod
    return mod


def murphy_basis(label: ModuleLabel) -> list:
    return [vec for vec, _ in get_module(label).murphy_basis()]


def act(a, x: ModuleElement) -> ModuleElement:
    return x.module.act(a, x)


def filtration_layer(label: ModuleLabel, i: int) -> list:
    return get_module(label).filtration_layer(i)


def specht_filtration(label: ModuleLabel) -> list:
    return get_module(label).specht_filtration()


# ---------------------------------------------------------------------------
# cell modules

class CellModule:
    """Delta(shapes, l): dangles of layer l tensored with the Murphy cell basis."""

    def __init__(self, family: Family, shapes, l: int, domain: ScalarDomain | None = None):
        self.family = family
        self.shapes = modtab.segments_of(family, shapes)
        self.l = l
        self.domain = domain or ScalarDomain.symbolic()
        self.alg = algebra(family)
        if modtab.segment_sizes(self.shapes) != family.segments(l):
            raise ValueError("shape does not match the layer")
        self.dangles = enumerate_dangles(family, l)
        self.standard = standard_tuples(self.shapes)
        self.basis = [(v, s) for v in self.dangles for s in self.standard]
        self.position = {b: k for k, b in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.sizes = family.segments(l)
        self.anchor = _bottom_dangle(family, self.alg.idempotent_numerator(l))
        self.initial = tuple(symcomb.initial_tableau(s) for s in self.shapes)
        self._cache = {}

    def _column(self, a: tuple, k: int) -> dict:
        dom = self.domain
        v, s = self.basis[k]
        m = product_murphy(self.shapes, s, self.initial)
        collected = {}
        top_stars = v.star_blocks()
        bot_stars = self.anchor.star_blocks()
        for perm, c in m.terms.items():
            d = assemble_labels(self.family, v.blocks, self.anchor.blocks, top_stars, bot_stars, perm)
            z, loops = self.alg.mul_labels(a, d)
            if self.alg.layer(z) != self.l:
                continue
            _, u, bottom, pi = inflation_coords(Diagram(self.family, z))
            assert bottom == self.anchor
            slot = collected.setdefault(u, {})
            slot[pi] = slot.get(pi, dom.zero) + dom.const(c) * dom.delta_pow(loops)
        coords = group_murphy_coordinates(self.sizes)
        basis = group_murphy_basis(self.sizes)
        out = {}
        for u, y in collected.items():
            acc = {}
            for pi, c in y.items():
                if not c:
                    continue
                for j, x in coords[pi].items():
                    acc[j] = acc.get(j, dom.zero) + c * x
            for j, x in acc.items():
                if not x:
                    continue
                shapes, s2, t2, _ = basis[j]
                if shapes == self.shapes:
                    if t2 != self.initial:
                        raise AssertionError("cell module action left the cell")
                    key = self.position[(u, s2)]
                    out[key] = out.get(key, dom.zero) + x
                elif not all(symcomb.dominates(a_, b_) for a_, b_ in zip(shapes, self.shapes)):
                    raise AssertionError("term below the cell survived")
        return {k: x for k, x in out.items() if x}

    def matrix(self, a) -> list:
        if isinstance(a, Diagram):
            a = a.labels
        dom = self.domain
        cols = self._cache.get(a)
        if cols is None:
            cols = [self._column(a, k) for k in range(self.dim)]
            self._cache[a] = cols
        mat = [[dom.zero] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(cols):
            for i, x in col.items():
                mat[i][j] = x
        return mat

    def trace(self, a) -> object:
        mat = self.matrix(a)
        acc = self.domain.zero
        for k in range(self.dim):
            acc = acc + mat[k][k]
        return acc


def _bottom_dangle(family: Family, labels: tuple) -> Dangle:
    _, _, bottom, _ = inflation_coords(Diagram(family, labels))
    return bottom


def cell_module(shape, l: int, family: Family, domain: ScalarDomain | None = None) -> CellModule:
    return CellModule(family, shape, l, domain)


def character_columns(family: Family) -> list:
    """Column elements (layer k, class label, diagram labels) for character tables.

    For layer k the element is the layer-k idempotent numerator composed with a
    permutation of cycle type mu.  For the Brauer family mu runs over partitions
    of r - k acting on positions 1..r-k (so the arcs of the two rows may differ);
    elsewhere it runs over the classes of the through-line group.
    """
    alg = algebra(family)
    n = family.n
    out = []
    for k in family.layers():
        num = alg.idempotent_numerator(k)
        if family.kind == BRAUER:
            sizes = (n - k,)
            positions = [tuple(range(1, n - k + 1))]
        else:
            sizes = family.segments(k)
            free = family.free_positions(k)
            positions, start = [], 0
            for sz in sizes:
                positions.append(free[start:start + sz])
                start += sz
        per = [list(reversed(symcomb.enumerate_partitions(sz))) for sz in sizes]
        for combo in itertools.product(*per):
            w = list(range(1, n + 1))
            for mu, pos in zip(combo, positions):
                cyc = symcomb.cycle_element(mu)
                for idx, x in enumerate(cyc):
                    w[pos[idx] - 1] = pos[x - 1]
            z, loops = alg.mul_labels(num, alg.permutation_labels(tuple(w)))
            assert loops == 0
            out.append((k, combo if len(combo) > 1 else combo[0], z))
    return out


def character_table(family: Family, domain: ScalarDomain | None = None) -> tuple:
    """(row labels, column labels, values) with rows the cell modules."""
    dom = domain or ScalarDomain.symbolic()
    cols = character_columns(family)
    rows = []
    values = []
    for label in weights(family):
        cm = CellModule(family, label.segs, label.layer, dom)
        rows.append(label)
        values.append([cm.trace(z) for _, _, z in cols])
    return rows, cols, values
