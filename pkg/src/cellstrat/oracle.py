"""Brute-force checks that the main modules are tested against.

Nothing here reuses the hom constructions or the cell-module code: maps are
found by solving the commutation equations, cellularity is checked on raw
structure constants, and modules are split through their endomorphism
algebras.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import symcomb
from .coeff import Poly, ScalarDomain
from .diagalg import BRAUER, PARTITION, WALLED, Family, algebra, assemble_labels, enumerate_dangles

PRIME = 2_147_483_647


def report(check: str, instance: str, ok: bool, witness=None, **extra) -> dict:
    out = {"check": check, "instance": instance, "status": "pass" if ok else "fail"}
    if witness is not None:
        out["witness"] = witness
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# polynomial gcd for fraction-free elimination

def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    return a * (1 / a.leading())


class Eliminator:
    """Sparse row echelon form built one row at a time.

    ``mode`` is "poly" (entries in Q[delta], rows kept primitive), "rational"
    or "modp" (integers modulo PRIME).
    """

    def __init__(self, mode: str):
        self.mode = mode
        self.pivots = {}  # leading column -> row

    def _normalize(self, row: dict) -> dict:
        lead = row[min(row)]
        if self.mode == "rational":
            inv = 1 / lead
            return {k: v * inv for k, v in row.items()}
        if self.mode == "modp":
            inv = pow(lead, PRIME - 2, PRIME)
            return {k: v * inv % PRIME for k, v in row.items()}
        g = None
        for v in row.values():
            g = v if g is None else poly_gcd(g, v)
            if g.is_constant():
                break
        scale = 1 / lead.leading()
        if not g.is_constant():
            return {k: v.exact_div(g) * scale * g.leading() for k, v in row.items()}
        return {k: v * scale for k, v in row.items()}

    def _reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return self._normalize(row)
            a = row[c]
            if self.mode == "poly":
                p = piv[c]
                new = {k: v * p for k, v in row.items()}
                for k, v in piv.items():
                    new[k] = new.get(k, 0) - a * v
            elif self.mode == "rational":
                new = dict(row)
                for k, v in piv.items():
                    new[k] = new.get(k, 0) - a * v
            else:
                new = dict(row)
                for k, v in piv.items():
                    new[k] = (new.get(k, 0) - a * v) % PRIME
            row = {k: v for k, v in new.items() if v}
            if self.mode == "poly" and row:
                row = self._normalize(row)
        return row

    def add(self, row: dict) -> bool:
        row = self._reduce(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def kernel(self, ncols: int) -> list:
        """Basis of the solution space of the accumulated rows (sparse dicts)."""
        cols = sorted(self.pivots, reverse=True)
        reduced = {}
        for c in cols:
            row = dict(self.pivots[c])
            for k in sorted(row):
                if k != c and k in reduced and row.get(k):
                    a, other = row[k], reduced[k]
                    if self.mode == "poly":
                        p = other[k]
                        new = {j: v * p for j, v in row.items()}
                        for j, v in other.items():
                            new[j] = new.get(j, 0) - a * v
                    elif self.mode == "rational":
                        new = dict(row)
                        for j, v in other.items():
                            new[j] = new.get(j, 0) - a * v
                    else:
                        new = dict(row)
                        for j, v in other.items():
                            new[j] = (new.get(j, 0) - a * v) % PRIME
                    row = {j: v for j, v in new.items() if v}
            reduced[c] = self._normalize(row)
        free = [k for k in range(ncols) if k not in reduced]
        out = []
        for fcol in free:
            if self.mode == "poly":
                lcm = Poly.constant(1)
                for c, row in reduced.items():
                    if fcol in row:
                        p = row[c]
                        g = poly_gcd(lcm, p)
                        lcm = lcm * p.exact_div(g)
                vec = {fcol: lcm}
                for c, row in reduced.items():
                    if fcol in row:
                        vec[c] = -(row[fcol] * lcm.exact_div(row[c]))
            elif self.mode == "rational":
                vec = {fcol: Fraction(1)}
                for c, row in reduced.items():
                    if fcol in row:
                        vec[c] = -row[fcol] / row[c]
            else:
                vec = {fcol: 1}
                for c, row in reduced.items():
                    if fcol in row:
                        vec[c] = -row[fcol] * pow(row[c], PRIME - 2, PRIME) % PRIME
            out.append(vec)
        return out


def _mode_of(mats) -> str:
    for m in mats:
        for row in m:
            for x in row:
                if isinstance(x, Poly):
                    return "poly"
    return "rational"


# ---------------------------------------------------------------------------
# equivariant maps

def solve_equivariant(src_mats: Sequence, tgt_mats: Sequence) -> list:
    """Basis of {X : X src(g) = tgt(g) X for every g}, as dense matrices.

    Polynomial entries are eliminated fraction-free over Q[delta]; the
    returned basis spans the solution space over Q(delta).
    """
    if len(src_mats) != len(tgt_mats):
        raise ValueError("generator lists differ in length")
    if not src_mats:
        raise ValueError("no generators")
    s = len(src_mats[0])
    t = len(tgt_mats[0])
    for a, b in zip(src_mats, tgt_mats):
        if len(a) != s or any(len(r) != s for r in a) or len(b) != t or any(len(r) != t for r in b):
            raise ValueError("inconsistent matrix dimensions")
    mode = _mode_of(list(src_mats) + list(tgt_mats))
    elim = Eliminator(mode)
    # unknown X[i][k] has column i*s + k
    for a, b in zip(src_mats, tgt_mats):
        for i in range(t):
            for j in range(s):
                row = {}
                for k in range(s):
                    if a[k][j]:
                        col = i * s + k
                        row[col] = row.get(col, 0) + a[k][j]
                for k in range(t):
                    if b[i][k]:
                        col = k * s + j
                        row[col] = row.get(col, 0) - b[i][k]
                elim.add(row)
    zero = Poly.constant(0) if mode == "poly" else Fraction(0)
    out = []
    for vec in elim.kernel(s * t):
        out.append([[vec.get(i * s + k, zero) for k in range(s)] for i in range(t)])
    return out


def _matmul(a, b, zero):
    n, m = len(a), len(b[0]) if b else 0
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        for k, x in enumerate(a[i]):
            if x:
                bk = b[k]
                row = out[i]
                for j in range(m):
                    if bk[j]:
                        row[j] = row[j] + x * bk[j]
    return out


def recheck_equivariance(maps: list, src_mats: list, tgt_mats: list) -> bool:
    """X src(a) = tgt(a) X for the given (typically randomised) elements."""
    for x in maps:
        zero = x[0][0] * 0 if x and x[0] else 0
        for a, b in zip(src_mats, tgt_mats):
            if _matmul(x, a, zero) != _matmul(b, x, zero):
                return False
    return True


def random_elements(family: Family, count: int, rng: random.Random, domain: ScalarDomain) -> list:
    """Random integer combinations of a few diagrams, as (dict labels -> coeff)."""
    alg = algebra(family)
    out = []
    for _ in range(count):
        terms = {}
        for z in rng.sample(alg.basis, min(3, len(alg.basis))):
            terms[z] = domain.const(rng.randint(-3, 3) or 1)
        out.append(terms)
    return out


def element_matrix(module, terms: dict) -> list:
    dom = module.domain
    mat = [[dom.zero] * module.dim for _ in range(module.dim)]
    for z, c in terms.items():
        for j, (i, loops) in enumerate(module.act_labels(z)):
            mat[i][j] = mat[i][j] + c * dom.delta_pow(loops)
    return mat


def hom_dimension(src, tgt) -> int:
    alg = algebra(src.family)
    gens = alg.generators()
    return len(solve_equivariant([src.matrix(g) for g in gens], [tgt.matrix(g) for g in gens]))


# ---------------------------------------------------------------------------
# structure constants and cell data

class StructureConstants:
    """Sparse multiplication table: product(i, j) -> {k: coefficient}."""

    def __init__(self, n: int, product: Callable[[int, int], dict], name: str = ""):
        self.n = n
        self._product = product
        self._cache = {}
        self.name = name

    def product(self, i: int, j: int) -> dict:
        key = (i, j)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._product(i, j)
            self._cache[key] = hit
        return hit

    def tensor(self) -> list:
        return [[self.product(i, j) for j in range(self.n)] for i in range(self.n)]

    def multiply(self, x: dict, y: dict) -> dict:
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.product(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def check_associativity(self, triples) -> tuple:
        for i, j, k in triples:
            left = self.multiply(self.product(i, j), {k: 1})
            right = self.multiply({i: 1}, self.product(j, k))
            if left != right:
                return False, (i, j, k)
        return True, None


def diagram_structure_constants(family: Family) -> StructureConstants:
    alg = algebra(family)

    def product(i, j):
        z, loops = alg.mul_labels(alg.basis[i], alg.basis[j])
        return {alg.index[z]: Poly.monomial(loops)}

    return StructureConstants(len(alg.basis), product, str(family))


def group_structure_constants(r: int) -> tuple:
    perms = sorted(itertools.permutations(range(1, r + 1)))
    index = {w: k for k, w in enumerate(perms)}

    def product(i, j):
        return {index[symcomb.compose(perms[i], perms[j])]: Fraction(1)}

    return StructureConstants(len(perms), product, f"group algebra of S_{r}"), perms, index


@dataclass
class CellDatum:
    """Cellular basis C^lambda_{S,T} written in the algebra basis.

    ``vectors[c]`` is the sparse expansion of the c-th cellular element,
    ``labels[c] = (lambda, S, T)``; ``higher(a, b)`` is the strict order in
    which larger cells span the ideals; ``involution[i] = (j, sign)`` says the
    anti-involution sends basis element i to sign times basis element j.
    """

    labels: list
    vectors: list
    higher: Callable
    involution: list
    extra: dict = field(default_factory=dict)

    def position(self) -> dict:
        return {lab: c for c, lab in enumerate(self.labels)}


def _components(vectors: list, n: int) -> list:
    """Connected blocks of the bipartite support graph (cellular element, basis element)."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for vec in vectors:
        keys = list(vec)
        for k in keys[1:]:
            ra, rb = find(keys[0]), find(k)
            if ra != rb:
                parent[rb] = ra
    groups = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    owner = {}
    for c, vec in enumerate(vectors):
        owner.setdefault(find(next(iter(vec))), []).append(c)
    return [(groups[root], owner.get(root, [])) for root in groups]


class BlockInverse:
    """Coordinates in the cellular basis, solved block by block."""

    def __init__(self, vectors: list, n: int):
        self.where = {}
        self.blocks = []
        for basis_ids, cell_ids in _components(vectors, n):
            if len(basis_ids) != len(cell_ids):
                raise ValueError("cellular elements do not form a basis")
            pos = {b: k for k, b in enumerate(basis_ids)}
            mat = [[Fraction(0)] * len(cell_ids) for _ in basis_ids]
            for j, c in enumerate(cell_ids):
                for b, v in vectors[c].items():
                    mat[pos[b]][j] = _as_rational(v)
            inv = _inverse(mat)
            self.blocks.append((basis_ids, cell_ids, inv))
            for b in basis_ids:
                self.where[b] = len(self.blocks) - 1

    def coordinates(self, x: dict) -> dict:
        per = {}
        for b, v in x.items():
            per.setdefault(self.where[b], {})[b] = v
        out = {}
        for blk, part in per.items():
            basis_ids, cell_ids, inv = self.blocks[blk]
            for j, c in enumerate(cell_ids):
                acc = 0
                row = inv[j]
                for k, b in enumerate(basis_ids):
                    if row[k] and b in part:
                        acc = part[b] * row[k] + acc
                if acc:
                    out[c] = acc
        return out


def _as_rational(v) -> Fraction:
    if isinstance(v, Poly):
        if not v.is_constant():
            raise ValueError("cellular elements must have rational coefficients")
        return v.constant_term()
    return Fraction(v)


def _inverse(mat: list) -> list:
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            raise ValueError("cellular elements are linearly dependent")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def check_cellular(sc: StructureConstants, cd: CellDatum, elements: Sequence[int] | None = None) -> dict:
    """Verify the cellular axioms for (sc, cd); returns a report with the first violation."""
    name = sc.name
    n = sc.n
    if len(cd.vectors) != n or len(set(cd.labels)) != n:
        return report("cellular", name, False, {"axiom": "basis", "detail": "label count mismatch"})
    try:
        solver = BlockInverse(cd.vectors, n)
    except ValueError as exc:
        return report("cellular", name, False, {"axiom": "basis", "detail": str(exc)})
    pos = cd.position()
    # involution: an anti-automorphism swapping the two tableau indices
    inv = cd.involution

    def flip(x: dict) -> dict:
        out = {}
        for i, v in x.items():
            j, s = inv[i]
            out[j] = out.get(j, 0) + s * v
        return {k: v for k, v in out.items() if v}

    for i in range(n):
        j, _ = inv[i]
        k, _ = inv[j]
        if k != i:
            return report("cellular", name, False, {"axiom": "C1", "detail": "not an involution", "element": i})
    for c, (lam, s, t) in enumerate(cd.labels):
        other = pos.get((lam, t, s))
        if other is None or flip(cd.vectors[c]) != {k: v for k, v in cd.vectors[other].items() if v}:
            return report("cellular", name, False, {"axiom": "C1", "detail": "involution does not swap indices",
                                                    "cell": str(lam), "index": c})
    for i in range(n):
        for j in range(n):
            left = flip(sc.product(i, j))
            a, sa = inv[j]
            b, sb = inv[i]
            right = {k: v * sa * sb for k, v in sc.product(a, b).items()}
            if left != right:
                return report("cellular", name, False, {"axiom": "C1", "detail": "not an anti-automorphism",
                                                        "pair": [i, j]})
    # C3: a C_{S,T} = sum_U r_a(U,S) C_{U,T} modulo higher cells, r independent of T
    elems = range(n) if elements is None else elements
    by_cell_left = {}
    for c, (lam, s, t) in enumerate(cd.labels):
        by_cell_left.setdefault((lam, s), []).append(c)
    checked = 0
    for a in elems:
        for (lam, s), members in by_cell_left.items():
            reference = None
            for c in members:
                t = cd.labels[c][2]
                prod = sc.multiply({a: 1}, cd.vectors[c])
                coords = solver.coordinates(prod)
                pattern = {}
                for k, v in coords.items():
                    lam2, u, t2 = cd.labels[k]
                    if cd.higher(lam2, lam):
                        continue
                    if lam2 != lam or t2 != t:
                        return report("cellular", name, False, {
                            "axiom": "C3", "detail": "term outside the cell", "element": a,
                            "cell": str(lam), "basis": c, "term": k})
                    pattern[u] = v
                if reference is None:
                    reference = pattern
                elif pattern != reference:
                    return report("cellular", name, False, {
                        "axiom": "C3", "detail": "coefficients depend on the second index",
                        "element": a, "cell": str(lam), "basis": c})
                checked += 1
    return report("cellular", name, True, products=checked)


def corrupt(cd: CellDatum, rng: random.Random | None = None) -> CellDatum:
    """Negative control: swap the labels of two cellular elements with different cells."""
    rng = rng or random.Random(0)
    n = len(cd.labels)
    for _ in range(1000):
        a, b = rng.randrange(n), rng.randrange(n)
        if cd.labels[a][0] != cd.labels[b][0]:
            break
    else:
        a, b = 0, 1
    labels = list(cd.labels)
    labels[a], labels[b] = labels[b], labels[a]
    return CellDatum(labels, cd.vectors, cd.higher, cd.involution, {"swapped": (a, b)})


# -- concrete data -----------------------------------------------------------------

def _dominance_higher(a, b) -> bool:
    return a != b and symcomb.dominates(a, b)


def group_cell_datum(r: int) -> tuple:
    sc, perms, index = group_structure_constants(r)
    labels, vectors = [], []
    for lam in symcomb.enumerate_partitions(r):
        for s in symcomb.standard_tableaux(lam):
            for t in symcomb.standard_tableaux(lam):
                m = symcomb.murphy_element(s, t)
                labels.append((lam, s, t))
                vectors.append({index[w]: Fraction(c) for w, c in m.terms.items()})
    involution = [(index[symcomb.inverse(w)], 1) for w in perms]
    return sc, CellDatum(labels, vectors, _dominance_higher, involution)


def _diagram_higher(a, b) -> bool:
    (la, sa), (lb, sb) = a, b
    if la != lb:
        return la > lb
    return sa != sb and all(symcomb.dominates(x, y) for x, y in zip(sa, sb))


def diagram_cell_datum(family: Family) -> tuple:
    """C^{(l, shapes)}_{(v, s), (w, t)} = sum over pi of m_st(pi) times the diagram (v, w, pi)."""
    alg = algebra(family)
    sc = diagram_structure_constants(family)
    labels, vectors = [], []
    for l in family.layers():
        sizes = family.segments(l)
        dangles = enumerate_dangles(family, l)
        for shapes in itertools.product(*[symcomb.enumerate_partitions(s) for s in sizes]):
            tabs = list(itertools.product(*[symcomb.standard_tableaux(sh) for sh in shapes]))
            for s in tabs:
                for t in tabs:
                    m = symcomb.product_element([symcomb.murphy_element(a, b) for a, b in zip(s, t)])
                    for v in dangles:
                        for w in dangles:
                            vec = {}
                            for perm, c in m.terms.items():
                                z = assemble_labels(family, v.blocks, w.blocks, v.star_blocks(), w.star_blocks(), perm)
                                vec[alg.index[z]] = Fraction(c)
                            labels.append(((l, shapes), (v, s), (w, t)))
                            vectors.append(vec)
    involution = [(alg.index[alg.flip(z)], 1) for z in alg.basis]
    return sc, CellDatum(labels, vectors, _diagram_higher, involution)


def schur_cell_datum(sa) -> tuple:
    """Phi with C_{X,Y} = phi from the Y side to the X side (post-composition moves X)."""
    from .schur import cell_higher

    def product(i, j):
        return dict(sa.product_of_basis(i, j))

    sc = StructureConstants(len(sa), product, f"Schur algebra of {sa.family}")
    labels, vectors = [], []
    for j in range(len(sa)):
        labels.append((sa.cell(j), sa.second_index(j), sa.first_index(j)))
        vectors.append({j: Fraction(1)})
    involution = [(sa.star_index[j], 1) for j in range(len(sa))]
    return sc, CellDatum(labels, vectors, cell_higher, involution)


# ---------------------------------------------------------------------------
# double centraliser

def _mod(x, q, p=PRIME) -> int:
    if isinstance(x, Poly):
        x = x(q)
    x = Fraction(x)
    return x.numerator * pow(x.denominator, p - 2, p) % p


def check_double_centralizer(family: Family, q=1009) -> dict:
    """Dimension of the commutant of S(A) on the sum of all M(lambda, l).

    The equations are solved at delta = q modulo a prime.  The rank there is
    at most the rank over Q(delta), so the computed dimension bounds the
    generic commutant from above; A injects into the commutant, which bounds
    it from below.  Equality with dim A therefore settles the generic case.
    """
    from .schur import schur_algebra

    sa = schur_algebra(family)
    mods = sa.modules
    offsets, acc = [], 0
    for m in mods:
        offsets.append(acc)
        acc += m.dim
    N = acc
    elim = Eliminator("modp")
    for (a, b), js in sa.block_of.items():
        src, tgt = mods[a], mods[b]
        for j in js:
            mat = sa.phi[j].matrix()
            phi = [[_mod(x, q) for x in row] for row in mat]
            oa, ob = offsets[a], offsets[b]
            # (X Phi)_{mu, oa+c} = sum_r X[mu][ob+r] phi[r][c];  (Phi X)_{ob+r, nu} = sum_c phi[r][c] X[oa+c][nu]
            eqs = {}
            for mu in range(N):
                for c in range(src.dim):
                    row = eqs.setdefault((mu, oa + c), {})
                    for r in range(tgt.dim):
                        if phi[r][c]:
                            col = mu * N + ob + r
                            row[col] = (row.get(col, 0) + phi[r][c]) % PRIME
            for r in range(tgt.dim):
                for nu in range(N):
                    row = eqs.setdefault((ob + r, nu), {})
                    for c in range(src.dim):
                        if phi[r][c]:
                            col = (oa + c) * N + nu
                            row[col] = (row.get(col, 0) - phi[r][c]) % PRIME
            for row in eqs.values():
                elim.add({k: v for k, v in row.items() if v})
    commutant = N * N - elim.rank
    alg = algebra(family)
    inj = Eliminator("modp")
    qp = _mod(q, q)
    for z in alg.basis:
        vec = {}
        for a, m in enumerate(mods):
            o = offsets[a]
            for j, (i, loops) in enumerate(m.act_labels(z)):
                vec[(o + i) * N + o + j] = pow(qp, loops, PRIME)
        inj.add(vec)
    injective = inj.rank == len(alg.basis)
    ok = injective and commutant == len(alg.basis)
    return report("doublecentralizer", str(family), ok, commutant_dim=commutant, algebra_dim=len(alg.basis),
                  injective=injective, total_dim=N)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama

def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi^lam at a permutation of cycle type mu, by removing border strips."""
    lam = tuple(x for x in lam if x)
    mu = tuple(x for x in mu if x)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    return _mn(lam, mu)


def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    m, rest = mu[0], mu[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - m
        if c < 0 or c in bset:
            continue
        sign = (-1) ** sum(1 for x in beta if c < x < b)
        nb = sorted([x for x in beta if x != b] + [c], reverse=True)
        k2 = len(nb)
        new = tuple(nb[i] - (k2 - 1 - i) for i in range(k2))
        total += sign * _mn(tuple(x for x in new if x), rest)
    return total


# ---------------------------------------------------------------------------
# generic decomposition

def _fixed_space(module) -> list:
    """Basis of {Y : e_l Y = Y, w Y = Y for w in Sigma_lambda}: sums over top orbits."""
    alg = module.alg
    l = module.l
    table = module.act_labels(module.numerator)
    fixed = [k for k, (t, loops) in enumerate(table) if t == k and loops == l]
    perms = [module.act_labels(alg.permutation_labels(u)) for u in module.group]
    seen, basis = set(), []
    for k in fixed:
        if k in seen:
            continue
        orbit = {tab[k][0] for tab in perms}
        seen |= orbit
        basis.append(sorted(orbit))
    return basis


def _apply_end(module, image: dict, vec: dict, q) -> dict:
    """The endomorphism with generator image `image` applied to vec."""
    out = {}
    l = module.l
    scale = Fraction(1, q ** l) if l else Fraction(1)
    for o, x in vec.items():
        table = module.act_labels(module.reps[o])
        for p, c in image.items():
            t, loops = table[p]
            out[t] = out.get(t, 0) + x * c * Fraction(q) ** loops * scale
    return {k: v for k, v in out.items() if v}


def _krylov(module, image: dict, q) -> tuple:
    """Vectors f^k(generator) until dependence, and the minimal polynomial coefficients."""
    vecs = [{module.generator_index: Fraction(1)}]
    elim_rows = []  # (reduced vector, combination of powers)
    pivots = {}
    while True:
        v = vecs[-1]
        red = dict(v)
        comb = {len(vecs) - 1: Fraction(1)}
        while red:
            c = min(red)
            if c not in pivots:
                break
            pv, pc = pivots[c]
            a = red[c]
            for k, x in pv.items():
                red[k] = red.get(k, 0) - a * x
            for k, x in pc.items():
                comb[k] = comb.get(k, 0) - a * x
            red = {k: x for k, x in red.items() if x}
            comb = {k: x for k, x in comb.items() if x}
        if not red:
            d = len(vecs) - 1
            return vecs[:-1], [comb.get(k, Fraction(0)) for k in range(d + 1)]
        lead = red[min(red)]
        pivots[min(red)] = ({k: x / lead for k, x in red.items()}, {k: x / lead for k, x in comb.items()})
        vecs.append(_apply_end(module, image, v, q))


def _power_traces(module, diagram: tuple, vecs: list, q) -> list:
    """tr(rho(diagram) f^k) for each Krylov vector f^k(generator)."""
    alg = module.alg
    l = module.l
    traces = [Fraction(0)] * len(vecs)
    for o, rep in enumerate(module.reps):
        z, j = alg.mul_labels(diagram, rep)
        table = module.act_labels(z)
        weight = Fraction(q) ** j / Fraction(q) ** l
        for p, (t, loops) in enumerate(table):
            if t != o:
                continue
            w = weight * Fraction(q) ** loops
            for k, v in enumerate(vecs):
                x = v.get(p)
                if x:
                    traces[k] += w * x
    return traces


def _class_reps(family: Family, k: int) -> list:
    """(cycle types per segment, permutation of the row) for the through-line group of layer k."""
    n = family.n
    free = family.free_positions(k)
    sizes = family.segments(k)
    out = []
    for combo in itertools.product(*[symcomb.enumerate_partitions(s) for s in sizes]):
        w = list(range(1, n + 1))
        start = 0
        for mu, size in zip(combo, sizes):
            pos = free[start:start + size]
            cyc = symcomb.cycle_element(mu) if size else ()
            for idx, x in enumerate(cyc):
                w[pos[idx] - 1] = pos[x - 1]
            start += size
        out.append((combo, tuple(w)))
    return out


def generic_decompose(label, q=1009, seed: int = 0, retries: int = 5) -> dict:
    """Split M(lambda, l) at delta = q through idempotents of its endomorphism algebra."""
    import sympy

    from .permmod import PermModule

    q = Fraction(q)
    module = PermModule(label, ScalarDomain.at(q))
    family = module.family
    basis = _fixed_space(module)
    end_dim = len(basis)
    name = f"M{label} at q={q}"
    rng = random.Random(seed)
    x = sympy.Symbol("x")
    last = None
    for _ in range(retries):
        image = {}
        for orbit in basis:
            c = Fraction(rng.randint(-9, 9))
            for k in orbit:
                image[k] = image.get(k, 0) + c
        image = {k: v for k, v in image.items() if v}
        vecs, coeffs = _krylov(module, image, q)
        d = len(vecs)
        minpoly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x,
                             domain="QQ")
        _, factors = minpoly.factor_list()
        if any(e > 1 for _, e in factors):
            last = "repeated factor"
            continue
        degrees = [p.degree() for p, _ in factors]
        if sum(n * n for n in degrees) != end_dim:
            last = "block sizes do not fill the endomorphism algebra"
            continue
        traces = {}

        def trace_of(diagram):
            if diagram not in traces:
                traces[diagram] = _power_traces(module, diagram, vecs, q)
            return traces[diagram]

        factors_out = []
        failed = False
        for p, _ in factors:
            cofactor = sympy.quo(minpoly, p)
            inv = sympy.invert(cofactor, p)
            u = sympy.rem(cofactor * inv, minpoly)
            ucoef = [Fraction(int(c.p), int(c.q)) for c in reversed(u.all_coeffs())]
            ucoef += [Fraction(0)] * (d - len(ucoef))

            def tr(diagram):
                return sum(a * b for a, b in zip(ucoef, trace_of(diagram)))

            mult = p.degree()
            total = tr(module.alg.identity)
            if total.denominator != 1 or total.numerator % mult:
                failed = True
                break
            layer = None
            for k in reversed(list(family.layers())):
                if tr(module.alg.idempotent_numerator(k)):
                    layer = k
                    break
            num = module.alg.idempotent_numerator(layer)
            chars = []
            for types, w in _class_reps(family, layer):
                z, loops = module.alg.mul_labels(num, module.alg.permutation_labels(w))
                chars.append((types, tr(z) * q ** loops / (mult * q ** layer)))
            shapes = _match_character(family.segments(layer), chars)
            if shapes is None:
                failed = True
                break
            factors_out.append({"shape": [list(s) for s in shapes], "layer": layer, "multiplicity": mult,
                                "dim": int(total) // mult})
        if failed:
            last = "idempotent data not integral"
            continue
        factors_out.sort(key=lambda f: (f["layer"], f["shape"]))
        return report("generic_decompose", name, True, factors=factors_out, end_dim=end_dim, minpoly_degree=d)
    return report("generic_decompose", name, False, {"reason": "non-generic q", "detail": last}, end_dim=end_dim)


def _match_character(sizes: tuple, chars: list):
    for shapes in itertools.product(*[symcomb.enumerate_partitions(s) for s in sizes]):
        good = True
        for types, value in chars:
            expect = 1
            for lam, mu in zip(shapes, types):
                expect *= mn_character(lam, mu) if sum(lam) else 1
            if expect != value:
                good = False
                break
        if good:
            return shapes
    return None
