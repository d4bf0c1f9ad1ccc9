"""Homomorphisms between permutation modules and the Schur algebra they span.

A map out of M(lambda, l) is fixed by the image Y of the cyclic generator.
Every natural basis vector b_O satisfies ``d_O * generator = delta^l b_O``,
so the map sends b_O to ``delta^-l d_O Y``; the division is exact because
the closed pattern at the bottom of d_O meets the same pattern at the top
of every term of Y.

Maps are stored in natural coordinates of both modules.  ``murphy_matrix``
converts to the Murphy bases when needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg, modtab, symcomb
from .coeff import DegenerateParameterError, Poly, ScalarDomain
from .diagalg import Family, algebra, assemble_labels
from .permmod import (ModuleLabel, PermModule, get_module, product_murphy_ST, shape_tuples, weights)
from .symcomb import GroupAlgebraElement


@dataclass(frozen=True)
class HomIndex:
    """Index data of a basis map: common layer k, diagrams on both sides and
    either a tableau pair (S, T) or a double coset representative."""

    layer: int
    sigma: modtab.ModifiedDiagram
    tau: modtab.ModifiedDiagram
    shape: tuple = None
    S: tuple = None
    T: tuple = None
    coset: tuple = None

    def cell(self) -> tuple:
        return (self.layer, self.shape)

    def __str__(self):
        body = f"k={self.layer} σ=[{self.sigma}] τ=[{self.tau}]"
        if self.S is not None:
            body += f" S={'/'.join(map(str, self.S))} T={'/'.join(map(str, self.T))}"
        if self.coset is not None:
            body += f" d={self.coset}"
        return body


class HomMap:
    def __init__(self, source: PermModule, target: PermModule, image: dict, index: HomIndex | None = None):
        if source.family != target.family:
            raise ValueError("family mismatch")
        if source.domain.q != target.domain.q:
            raise ValueError("scalar domain mismatch")
        self.source = source
        self.target = target
        self.domain = target.domain
        self.image = {k: v for k, v in image.items() if v}
        self.index = index
        self._columns = None

    @property
    def labels(self) -> tuple:
        return (self.source.label, self.target.label)

    def columns(self) -> list:
        if self._columns is None:
            dom, l = self.domain, self.source.l
            cols = []
            for rep in self.source.reps:
                table = self.target.act_labels(rep)
                out = {}
                for p, c in self.image.items():
                    t, loops = table[p]
                    if loops < l:
                        raise AssertionError("generator image is not fixed by the layer idempotent")
                    out[t] = out.get(t, dom.zero) + c * dom.delta_pow(loops - l)
                cols.append({k: v for k, v in out.items() if v})
            self._columns = cols
        return self._columns

    def apply(self, vec: dict) -> dict:
        dom = self.domain
        cols = self.columns()
        out = {}
        for k, x in vec.items():
            for t, v in cols[k].items():
                out[t] = out.get(t, dom.zero) + x * v
        return {k: v for k, v in out.items() if v}

    def matrix(self) -> list:
        dom = self.domain
        mat = [[dom.zero] * self.source.dim for _ in range(self.target.dim)]
        for j, col in enumerate(self.columns()):
            for i, v in col.items():
                mat[i][j] = v
        return mat

    def murphy_matrix(self) -> list:
        """The matrix with respect to the Murphy bases of source and target."""
        dom = self.domain
        src_basis = self.source.murphy_basis()
        solver = self.target.murphy_solver()
        cols = []
        for _, coords in src_basis:
            vec = {k: dom.const(c) for k, c in coords.items()}
            img = self.apply(vec)
            cols.append(solver.solve([img.get(k, dom.zero) for k in range(self.target.dim)], dom.zero))
        return [[cols[j][i] for j in range(len(cols))] for i in range(self.target.dim)]

    def is_equivariant(self, generators=None) -> bool:
        alg = algebra(self.source.family)
        gens = generators if generators is not None else alg.generators()
        for g in gens:
            for k in range(self.source.dim):
                lhs = self.apply(self.source.act_vector(g, {k: self.domain.one}))
                rhs = self.target.act_vector(g, self.columns()[k]) if self.columns()[k] else {}
                if lhs != rhs:
                    return False
        return True

    def is_zero(self) -> bool:
        return not self.image

    def __repr__(self):
        return f"HomMap({self.source.label} -> {self.target.label}, {self.index})"


def compose(f: HomMap, g: HomMap) -> HomMap:
    """f after g."""
    if f.source is not g.target:
        raise ValueError("label mismatch in composition")
    return HomMap(g.source, f.target, f.apply(g.image))


def identity_map(m: PermModule) -> HomMap:
    return HomMap(m, m, {m.generator_index: m.domain.one})


def hom_from_images(src: PermModule, tgt: PermModule, image: dict) -> HomMap:
    return HomMap(src, tgt, image)


# ---------------------------------------------------------------------------
# generator images

def _top_blocks(src: PermModule, sigma: modtab.ModifiedDiagram) -> tuple:
    top = src.cells_to_positions(sigma.blocks) + src.fixed_top_blocks()
    stars = [tuple(sorted(src.free[a - 1] for a in b)) for b in sigma.star_order()]
    return top, stars


def _bottom_blocks(tgt: PermModule, tau: modtab.ModifiedDiagram) -> tuple:
    bottom = tgt.cells_to_positions(tau.blocks) + tgt.fixed_bottom_blocks()
    stars = [tuple(sorted(tgt.free[a - 1] for a in b)) for b in tau.star_order()]
    return bottom, stars


def generator_image(src: PermModule, tgt: PermModule, sigma, tau, element: GroupAlgebraElement) -> dict:
    """Image [sigma] (x) [tau] (x) element of the generator, in target coordinates."""
    alg = src.alg
    f = src.family
    top, top_stars = _top_blocks(src, sigma)
    bottom, bot_stars = _bottom_blocks(tgt, tau)
    scale = Fraction(1, sigma.stabiliser_order * tau.stabiliser_order)
    out = {}
    for perm, c in element.terms.items():
        d = assemble_labels(f, top, bottom, top_stars, bot_stars, perm)
        for u in src.group:
            k = tgt.index[alg.permute_top(u, d)]
            out[k] = out.get(k, 0) + c * scale
    dom = tgt.domain
    return {k: dom.const(v) for k, v in out.items() if v}


def _shared_layers(src: PermModule, tgt: PermModule) -> list:
    f = src.family
    out = []
    for k in range(max(src.l, tgt.l), f.max_layer + 1):
        i, j = k - src.l, k - tgt.l
        if i <= modtab.max_arcs(f, src.segs) and j <= modtab.max_arcs(f, tgt.segs):
            out.append((k, i, j))
    return out


def _modules(src, tgt, domain):
    if isinstance(src, ModuleLabel):
        src = get_module(src, domain)
    if isinstance(tgt, ModuleLabel):
        tgt = get_module(tgt, domain)
    if src.family != tgt.family:
        raise ValueError("family mismatch")
    return src, tgt


def hom_basis_semistandard(src, tgt, domain: ScalarDomain | None = None) -> list:
    """Maps phi_{S T}: generator -> [sigma] (x) [tau] (x) m_{S T} over common layers."""
    src, tgt = _modules(src, tgt, domain)
    f = src.family
    out = []
    for k, i, j in _shared_layers(src, tgt):
        for sigma in modtab.enumerate_modified(src.segs, i, f):
            a = sigma.through_type()
            for tau in modtab.enumerate_modified(tgt.segs, j, f):
                b = tau.through_type()
                if modtab.segment_sizes(a) != modtab.segment_sizes(b):
                    continue
                for shapes in shape_tuples(modtab.segment_sizes(a)):
                    for S in modtab.semistandard_fillings(shapes, a):
                        for T in modtab.semistandard_fillings(shapes, b):
                            elt = product_murphy_ST(shapes, S, T, a, b)
                            img = generator_image(src, tgt, sigma, tau, elt)
                            idx = HomIndex(k, sigma, tau, shapes, S, T)
                            out.append(HomMap(src, tgt, img, idx))
    return out


def _product_double_cosets(a: tuple, b: tuple) -> list:
    """Per segment, double coset sums Sigma_a d Sigma_b as tensor products."""
    per = []
    for x, y in zip(a, b):
        n = sum(x)
        reps = symcomb.double_coset_reps(tuple(x), tuple(y), n)
        per.append([(d, symcomb.group_sum(n, symcomb.double_coset(x, d, y))) for d in reps])
    out = []
    for combo in itertools.product(*per):
        out.append((tuple(d for d, _ in combo), symcomb.product_element([e for _, e in combo])))
    return out


def hom_basis_gdj(src, tgt, domain: ScalarDomain | None = None) -> list:
    """Maps phi^d_{sigma tau}: generator -> [sigma] (x) [tau] (x) (sum of a double coset)."""
    src, tgt = _modules(src, tgt, domain)
    f = src.family
    out = []
    for k, i, j in _shared_layers(src, tgt):
        for sigma in modtab.enumerate_modified(src.segs, i, f):
            a = sigma.through_type()
            for tau in modtab.enumerate_modified(tgt.segs, j, f):
                b = tau.through_type()
                if modtab.segment_sizes(a) != modtab.segment_sizes(b):
                    continue
                for d, elt in _product_double_cosets(a, b):
                    img = generator_image(src, tgt, sigma, tau, elt)
                    out.append(HomMap(src, tgt, img, HomIndex(k, sigma, tau, coset=d)))
    return out


def hom_index_count(src: ModuleLabel, tgt: ModuleLabel) -> int:
    """Sum over cell labels of |T_0(omega, src)| * |T_0(omega, tgt)|."""
    a = semistandard_counts(src)
    b = semistandard_counts(tgt)
    return sum(a[key] * b.get(key, 0) for key in a)


def semistandard_counts(label: ModuleLabel) -> dict:
    """(layer, shapes) -> number of semistandard modified tableaux of that shape and type label."""
    f = label.family
    out = {}
    for i in range(modtab.max_arcs(f, label.segs) + 1):
        k = label.layer + i
        if k > f.max_layer:
            break
        for sigma in modtab.enumerate_modified(label.segs, i, f):
            a = sigma.through_type()
            for shapes in shape_tuples(modtab.segment_sizes(a)):
                c = len(modtab.semistandard_fillings(shapes, a))
                if c:
                    out[(k, shapes)] = out.get((k, shapes), 0) + c
    return out


def span_rank(maps: list) -> int:
    """Rank of the span of maps with a common source and target (generator images)."""
    if not maps:
        return 0
    dim = maps[0].target.dim
    zero = maps[0].domain.zero
    return linalg.rank([[m.image.get(k, zero) for k in range(dim)] for m in maps])


# ---------------------------------------------------------------------------
# the Schur algebra

def cell_higher(a: tuple, b: tuple) -> bool:
    """Strict order on cells (layer, shapes): deeper layer first, then dominance."""
    (ka, sa), (kb, sb) = a, b
    if ka != kb:
        return ka > kb
    return sa != sb and all(symcomb.dominates(x, y) for x, y in zip(sa, sb))


@dataclass
class SchurElement:
    """Coordinates over the basis Phi of a Schur algebra."""

    algebra: "SchurAlgebra"
    coords: dict = field(default_factory=dict)

    def blocks(self) -> dict:
        """(source label, target label) -> generator image as a dict."""
        out = {}
        dom = self.algebra.domain
        for j, c in self.coords.items():
            m = self.algebra.phi[j]
            key = m.labels
            acc = out.setdefault(key, {})
            for k, v in m.image.items():
                acc[k] = acc.get(k, dom.zero) + c * v
        return {k: {i: v for i, v in blk.items() if v} for k, blk in out.items()}

    def __mul__(self, other: "SchurElement") -> "SchurElement":
        return self.algebra.multiply(self, other)

    def __add__(self, other: "SchurElement") -> "SchurElement":
        dom = self.algebra.domain
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, dom.zero) + v
        return SchurElement(self.algebra, {k: v for k, v in out.items() if v})

    def star(self) -> "SchurElement":
        return SchurElement(self.algebra, {self.algebra.star_index[k]: v for k, v in self.coords.items()})


class SchurAlgebra:
    """S(A) = End_A(sum of M(lambda, l)) with the semistandard basis Phi."""

    def __init__(self, family: Family, domain: ScalarDomain | None = None):
        self.family = family
        self.domain = domain or ScalarDomain.symbolic()
        self.labels = weights(family)
        self.modules = [get_module(lab, self.domain) for lab in self.labels]
        self.phi = []
        self.block_of = {}
        for a, src in enumerate(self.modules):
            for b, tgt in enumerate(self.modules):
                maps = hom_basis_semistandard(src, tgt)
                self.block_of[(a, b)] = list(range(len(self.phi), len(self.phi) + len(maps)))
                self.phi.extend(maps)
        self._solvers = {}
        self.position = {}
        for j, m in enumerate(self.phi):
            self.position[self._key(m)] = j
        self.star_index = {j: self.position[self._star_key(m)] for j, m in enumerate(self.phi)}
        self._products = {}

    def _key(self, m: HomMap) -> tuple:
        i = m.index
        return (m.source.label, m.target.label, i.layer, i.sigma, i.tau, i.shape, i.S, i.T)

    def _star_key(self, m: HomMap) -> tuple:
        i = m.index
        return (m.target.label, m.source.label, i.layer, i.tau, i.sigma, i.shape, i.T, i.S)

    def __len__(self):
        return len(self.phi)

    def module_position(self, label: ModuleLabel) -> int:
        return self.labels.index(label)

    def cell(self, j: int) -> tuple:
        return self.phi[j].index.cell()

    def first_index(self, j: int) -> tuple:
        """Index on the source side (label, sigma, S)."""
        m = self.phi[j]
        return (m.source.label, m.index.sigma, m.index.S)

    def second_index(self, j: int) -> tuple:
        m = self.phi[j]
        return (m.target.label, m.index.tau, m.index.T)

    def solver(self, a: int, b: int) -> linalg.ColumnSolver:
        s = self._solvers.get((a, b))
        if s is None:
            tgt = self.modules[b]
            cols = [[_rational(self.phi[j].image.get(k, 0)) for k in range(tgt.dim)] for j in self.block_of[(a, b)]]
            s = linalg.ColumnSolver(cols, tgt.dim)
            self._solvers[(a, b)] = s
        return s

    def coordinates(self, m: HomMap) -> SchurElement:
        """Express a map between two summands in the basis Phi."""
        a = self.modules.index(m.source)
        b = self.modules.index(m.target)
        dom = self.domain
        vec = [m.image.get(k, dom.zero) for k in range(m.target.dim)]
        sol = self.solver(a, b).solve(vec, dom.zero)
        return SchurElement(self, {j: c for j, c in zip(self.block_of[(a, b)], sol) if c})

    def basis_element(self, j: int) -> SchurElement:
        return SchurElement(self, {j: self.domain.one})

    def product_of_basis(self, i: int, j: int) -> dict:
        """Coordinates of phi_i after phi_j (zero unless the labels chain)."""
        key = (i, j)
        hit = self._products.get(key)
        if hit is None:
            f, g = self.phi[i], self.phi[j]
            if f.source is not g.target:
                hit = {}
            else:
                hit = self.coordinates(compose(f, g)).coords
            self._products[key] = hit
        return hit

    def multiply(self, x: SchurElement, y: SchurElement) -> SchurElement:
        dom = self.domain
        out = {}
        for i, a in x.coords.items():
            for j, b in y.coords.items():
                for k, c in self.product_of_basis(i, j).items():
                    out[k] = out.get(k, dom.zero) + a * b * c
        return SchurElement(self, {k: v for k, v in out.items() if v})

    def cells(self) -> list:
        seen = []
        for j in range(len(self.phi)):
            c = self.cell(j)
            if c not in seen:
                seen.append(c)
        return sorted(seen)

    def ideal(self, cell: tuple, strict: bool = False) -> list:
        """Indices of Phi spanning S^omega (cells at or above omega)."""
        out = []
        for j in range(len(self.phi)):
            c = self.cell(j)
            if cell_higher(c, cell) or (c == cell and not strict):
                out.append(j)
        return out

    def identity_index(self, label: ModuleLabel) -> int:
        a = self.module_position(label)
        for j in self.block_of[(a, a)]:
            m = self.phi[j]
            if m.index.layer == label.layer and m.index.sigma.arcs == 0 and m.index.tau.arcs == 0 \
                    and m.index.shape == label.segs:
                return j
        raise AssertionError("identity map missing")


def _rational(x) -> Fraction:
    if isinstance(x, Poly):
        if not x.is_constant():
            raise ValueError("generator image is not constant")
        return x.constant_term()
    return Fraction(x)


@lru_cache(maxsize=None)
def _schur_cached(family: Family, q) -> SchurAlgebra:
    return SchurAlgebra(family, ScalarDomain(q))


def schur_algebra(family: Family, domain: ScalarDomain | None = None) -> SchurAlgebra:
    dom = domain or ScalarDomain.symbolic()
    return _schur_cached(family, dom.q)


# ---------------------------------------------------------------------------
# Weyl modules and the bilinear form

@dataclass
class WeylModuleData:
    label: ModuleLabel
    basis: list  # indices into Phi: phi_{T^lambda S}
    gram: list
    cell: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def weyl_module(shape, l: int, family: Family, domain: ScalarDomain | None = None) -> WeylModuleData:
    sa = schur_algebra(family, domain)
    label = ModuleLabel.of(family, shape, l)
    a = sa.module_position(label)
    cell = (l, label.segs)
    basis = []
    for (src, tgt), js in sa.block_of.items():
        if src != a:
            continue
        for j in js:
            idx = sa.phi[j].index
            if idx.cell() == cell and idx.sigma.arcs == 0:
                basis.append(j)
    top = sa.identity_index(label)
    higher = set(sa.ideal(cell, strict=True))
    gram = []
    for s in basis:
        row = []
        for t in basis:
            row.append(_form(sa, s, t, top, higher))
        gram.append(row)
    return WeylModuleData(label, basis, gram, cell)


def _form(sa: SchurAlgebra, s: int, t: int, top: int, higher: set):
    """<phi_S, phi_T>: the coefficient of phi_lambda in phi_{T T^lambda} phi_{T^lambda S}."""
    dom = sa.domain
    fs, ft = sa.phi[s], sa.phi[t]
    if fs.target is not ft.target:
        return dom.zero
    coords = sa.product_of_basis(sa.star_index[t], s)
    for k, c in coords.items():
        if k != top and k not in higher:
            raise AssertionError("form product left the cell ideal")
    return coords.get(top, dom.zero)


def gram_matrix(shape, l: int, family: Family) -> list:
    return weyl_module(shape, l, family).gram


def gram_rank(shape, l: int, family: Family, q=None) -> int:
    w = weyl_module(shape, l, family)
    if q is None:
        return linalg.rank(w.gram)
    q = Fraction(q)
    if q == 0:
        raise DegenerateParameterError()
    return linalg.rank([[x(q) if isinstance(x, Poly) else x for x in row] for row in w.gram])


def gram_report(family: Family, q=None) -> list:
    """[(label, dim, rank)] over all labels."""
    out = []
    for lab in weights(family):
        shape = modtab.shape_of(family, lab.segs)
        w = weyl_module(shape, lab.layer, family)
        out.append((lab, w.dim, gram_rank(shape, lab.layer, family, q)))
    return out
