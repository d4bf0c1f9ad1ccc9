"""Brauer, walled Brauer and partition algebras on explicit diagram bases.

Nodes are numbered 1..n along the top row and n+1..2n along the bottom row,
where n is the row length (n = r' + r for the walled family, with the wall
after position r').  Internally a diagram is a tuple ``labels`` of length 2n
where ``labels[a]`` is the smallest 0-based node in the block of node a; this
is canonical and cheap to hash.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .coeff import Poly, ScalarDomain, ZERO
from . import symcomb

BRAUER = "brauer"
WALLED = "walled"
PARTITION = "partition"
FAMILY_KINDS = (BRAUER, WALLED, PARTITION)


@dataclass(frozen=True)
class Family:
    kind: str
    r: int
    rprime: int = 0

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.r < 0 or self.rprime < 0:
            raise ValueError("ranks must be nonnegative")
        if self.kind != WALLED and self.rprime:
            raise ValueError("only the walled family has a left rank")

    @classmethod
    def brauer(cls, r: int) -> "Family":
        return cls(BRAUER, r)

    @classmethod
    def walled(cls, rprime: int, r: int) -> "Family":
        return cls(WALLED, r, rprime)

    @classmethod
    def partition(cls, r: int) -> "Family":
        return cls(PARTITION, r)

    @property
    def n(self) -> int:
        """Number of nodes in one row."""
        return self.r + self.rprime if self.kind == WALLED else self.r

    @property
    def max_layer(self) -> int:
        if self.kind == BRAUER:
            return self.r // 2
        if self.kind == WALLED:
            return min(self.r, self.rprime)
        return self.r

    def layers(self) -> range:
        return range(self.max_layer + 1)

    def free_positions(self, l: int) -> tuple:
        """Row positions carrying through-lines of the idempotent numerator of layer l."""
        self.check_layer(l)
        if self.kind == BRAUER:
            return tuple(range(1, self.r - 2 * l + 1))
        if self.kind == WALLED:
            left = range(1, self.rprime - l + 1)
            right = range(self.rprime + l + 1, self.n + 1)
            return tuple(left) + tuple(right)
        return tuple(range(1, self.r - l + 1))

    def segments(self, l: int) -> tuple:
        """Sizes of the symmetric-group factors of the through-line group in layer l."""
        self.check_layer(l)
        if self.kind == BRAUER:
            return (self.r - 2 * l,)
        if self.kind == WALLED:
            return (self.rprime - l, self.r - l)
        return (self.r - l,)

    def check_layer(self, l: int):
        if not 0 <= l <= self.max_layer:
            raise ValueError(f"layer {l} out of range for {self}")

    def side(self, pos: int) -> int:
        """0 for positions left of the wall, 1 otherwise (always 0 off the walled family)."""
        return 1 if self.kind == WALLED and pos > self.rprime else 0

    def __str__(self):
        if self.kind == WALLED:
            return f"walled({self.rprime},{self.r})"
        return f"{self.kind}({self.r})"


# ---------------------------------------------------------------------------
# label tuples

def canon(n: int, blocks: Iterable[Iterable[int]]) -> tuple:
    """Label tuple from blocks given as 0-based node lists."""
    labels = [0] * (2 * n)
    for block in blocks:
        block = list(block)
        m = min(block)
        for a in block:
            labels[a] = m
    return tuple(labels)


def blocks_of(labels: Sequence[int]) -> list:
    groups = {}
    for a, m in enumerate(labels):
        groups.setdefault(m, []).append(a)
    return [groups[m] for m in sorted(groups)]


def _valid(family: Family, labels) -> bool:
    n = family.n
    for block in blocks_of(labels):
        if family.kind == PARTITION:
            continue
        if len(block) != 2:
            return False
        a, b = block
        if family.kind == WALLED:
            top_a, top_b = a < n, b < n
            sa = family.side((a % n) + 1)
            sb = family.side((b % n) + 1)
            if top_a == top_b and sa == sb:
                return False
            if top_a != top_b and sa != sb:
                return False
    return True


def _matchings(nodes: list):
    if not nodes:
        yield []
        return
    a = nodes[0]
    for k in range(1, len(nodes)):
        b = nodes[k]
        rest = nodes[1:k] + nodes[k + 1:]
        for m in _matchings(rest):
            yield [(a, b)] + m


def _set_partitions(nodes: list):
    if not nodes:
        yield []
        return
    first, rest = nodes[0], nodes[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def public_blocks(labels) -> tuple:
    return tuple(tuple(a + 1 for a in b) for b in blocks_of(labels))


# ---------------------------------------------------------------------------
# the algebra object

class Algebra:
    """Basis, multiplication table and layer data of one family, built lazily."""

    def __init__(self, family: Family):
        self.family = family
        n = family.n
        self.n = n
        nodes = list(range(2 * n))
        if family.kind == PARTITION:
            raw = (canon(n, p) for p in _set_partitions(nodes))
        else:
            raw = (canon(n, m) for m in _matchings(nodes))
        basis = [lab for lab in raw if _valid(family, lab)]
        basis.sort(key=public_blocks)
        self.basis = basis
        self.index = {lab: k for k, lab in enumerate(basis)}
        self._table = {}
        self._layer = {}

    def __len__(self):
        return len(self.basis)

    @property
    def identity(self) -> tuple:
        n = self.n
        return canon(n, [[a, a + n] for a in range(n)])

    def mul_labels(self, x: tuple, y: tuple):
        """Concatenate x over y; returns (labels, number of closed middle components)."""
        key = (x, y)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        n = self.n
        parent = list(range(3 * n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb

        for a in range(2 * n):
            union(a, x[a])  # x occupies top (0..n-1) and middle (n..2n-1)
            ya = a + n
            union(ya, y[a] + n)  # y occupies middle and bottom (2n..3n-1)
        outer = set()
        for a in range(n):
            outer.add(find(a))
            outer.add(find(2 * n + a))
        middle_roots = {find(a) for a in range(n, 2 * n)}
        loops = len(middle_roots - outer)
        first = {}
        labels = []
        for out_node in range(2 * n):
            node = out_node if out_node < n else out_node + n
            root = find(node)
            if root not in first:
                first[root] = out_node
            labels.append(first[root])
        res = (tuple(labels), loops)
        self._table[key] = res
        return res

    def flip(self, x: tuple) -> tuple:
        n = self.n
        return canon(n, [[(a + n) % (2 * n) for a in b] for b in blocks_of(x)])

    def layer(self, x: tuple) -> int:
        hit = self._layer.get(x)
        if hit is not None:
            return hit
        n = self.n
        prop = sum(1 for b in blocks_of(x) if min(b) < n <= max(b))
        if self.family.kind == PARTITION:
            res = n - prop
        else:
            res = (n - prop) // 2
        self._layer[x] = res
        return res

    def idempotent_numerator(self, l: int) -> tuple:
        fam = self.family
        fam.check_layer(l)
        n = self.n
        blocks = []
        if fam.kind == BRAUER:
            t = n - 2 * l
            blocks += [[a, a + n] for a in range(t)]
            for a in range(t, n, 2):
                blocks += [[a, a + 1], [a + n, a + 1 + n]]
        elif fam.kind == WALLED:
            rp = fam.rprime
            paired = set()
            for j in range(1, l + 1):
                a, b = rp - j, rp + j - 1  # 0-based nodes r'-j+1 and r'+j
                paired |= {a, b}
                blocks += [[a, b], [a + n, b + n]]
            blocks += [[a, a + n] for a in range(n) if a not in paired]
        else:
            t = n - l
            blocks += [[a, a + n] for a in range(t)]
            blocks += [[a] for a in range(t, n)] + [[a + n] for a in range(t, n)]
        return canon(n, blocks)

    def permutation_labels(self, w: Sequence[int]) -> tuple:
        """D(w): top node w(k) joined to bottom node k."""
        n = self.n
        return canon(n, [[w[k] - 1, k + n] for k in range(n)])

    def permute_bottom(self, x: tuple, w: Sequence[int]) -> tuple:
        """x * D(w) computed by relabelling: new bottom k is old bottom w(k)."""
        n = self.n
        new_of_old = {}
        for k in range(n):
            new_of_old[w[k] - 1 + n] = k + n
        return canon(n, [[new_of_old.get(a, a) for a in b] for b in blocks_of(x)])

    def permute_top(self, w: Sequence[int], x: tuple) -> tuple:
        """D(w) * x computed by relabelling: new top w(k) is old top k."""
        n = self.n
        return canon(n, [[(w[a] - 1) if a < n else a for a in b] for b in blocks_of(x)])

    def in_layer_ideal_pattern(self, x: tuple, l: int) -> bool:
        """True iff x * (idempotent numerator of layer l) = delta^l x."""
        z, loops = self.mul_labels(x, self.idempotent_numerator(l))
        return z == x and loops == l

    def generators(self) -> list:
        """A generating set of the algebra as label tuples."""
        fam, n = self.family, self.n
        gens = []

        def transposition(k):
            w = list(range(1, n + 1))
            w[k - 1], w[k] = w[k], w[k - 1]
            return self.permutation_labels(w)

        if fam.kind == BRAUER:
            gens += [transposition(k) for k in range(1, n)]
            if n >= 2:
                blocks = [[a, a + n] for a in range(n - 2)] + [[n - 2, n - 1], [2 * n - 2, 2 * n - 1]]
                gens.append(canon(n, blocks))
        elif fam.kind == WALLED:
            rp = fam.rprime
            gens += [transposition(k) for k in range(1, n) if k != rp]
            if rp >= 1 and fam.r >= 1:
                a, b = rp - 1, rp
                blocks = [[c, c + n] for c in range(n) if c not in (a, b)] + [[a, b], [a + n, b + n]]
                gens.append(canon(n, blocks))
        else:
            gens += [transposition(k) for k in range(1, n)]
            if n >= 1:
                gens.append(canon(n, [[0], [n]] + [[a, a + n] for a in range(1, n)]))
            if n >= 2:
                gens.append(canon(n, [[0, 1, n, n + 1]] + [[a, a + n] for a in range(2, n)]))
        if not gens:
            gens.append(self.identity)
        return gens


@lru_cache(maxsize=None)
def algebra(family: Family) -> Algebra:
    return Algebra(family)


# ---------------------------------------------------------------------------
# public value types

class Diagram:
    __slots__ = ("family", "labels")

    def __init__(self, family: Family, labels: tuple):
        self.family = family
        self.labels = tuple(labels)

    @classmethod
    def from_blocks(cls, family: Family, blocks: Iterable[Iterable[int]]) -> "Diagram":
        """Build from 1-based blocks; validates the family constraints."""
        n = family.n
        blocks = [list(b) for b in blocks]
        seen = sorted(a for b in blocks for a in b)
        if seen != list(range(1, 2 * n + 1)):
            raise ValueError("blocks must partition the nodes 1..2n exactly")
        labels = canon(n, [[a - 1 for a in b] for b in blocks])
        if not _valid(family, labels):
            raise ValueError(f"blocks violate the {family.kind} constraints")
        return cls(family, labels)

    @property
    def blocks(self) -> tuple:
        return public_blocks(self.labels)

    @property
    def layer(self) -> int:
        return algebra(self.family).layer(self.labels)

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.family == other.family and self.labels == other.labels

    def __hash__(self):
        return hash((self.family, self.labels))

    def __lt__(self, other):
        return self.blocks < other.blocks

    def __repr__(self):
        return f"Diagram({self.family}, {list(map(list, self.blocks))})"

    def to_json(self) -> dict:
        return {"family": family_to_json(self.family), "blocks": [list(b) for b in self.blocks]}

    def art(self) -> str:
        return render(self)


def family_to_json(f: Family) -> dict:
    out = {"kind": f.kind, "r": f.r}
    if f.kind == WALLED:
        out["rprime"] = f.rprime
    return out


def family_from_json(obj: dict) -> Family:
    return Family(obj["kind"], obj["r"], obj.get("rprime", 0))


def diagram_from_json(obj: dict) -> Diagram:
    return Diagram.from_blocks(family_from_json(obj["family"]), obj["blocks"])


def render(d: Diagram) -> str:
    """Two-row text picture: nodes sharing a letter lie in one block."""
    n = d.family.n
    letters = {}
    names = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    for k, b in enumerate(blocks_of(d.labels)):
        for a in b:
            letters[a] = names[k % len(names)]
    top = " ".join(letters[a] for a in range(n))
    bottom = " ".join(letters[a + n] for a in range(n))
    if d.family.kind == WALLED and 0 < d.family.rprime < n:
        cut = 2 * d.family.rprime - 1
        top = top[:cut] + " |" + top[cut:]
        bottom = bottom[:cut] + " |" + bottom[cut:]
    return top + "\n" + bottom


class AlgebraElement:
    """Finite combination of diagrams, optionally divided by delta^denom."""

    __slots__ = ("family", "terms", "denom", "domain")

    def __init__(self, family: Family, terms: dict, denom: int = 0, domain: ScalarDomain | None = None):
        self.family = family
        self.domain = domain or ScalarDomain.symbolic()
        self.terms = {k: v for k, v in terms.items() if v}
        self.denom = denom
        self._normalize()

    def _normalize(self):
        if not self.domain.is_symbolic or not self.denom:
            return
        if not self.terms:
            self.denom = 0
            return
        # pull common factors of delta out of the numerator
        while self.denom and all(v.constant_term() == 0 for v in self.terms.values()):
            self.terms = {k: v.shift(-1) for k, v in self.terms.items()}
            self.denom -= 1

    @classmethod
    def of(cls, d: Diagram, coeff=None, domain: ScalarDomain | None = None) -> "AlgebraElement":
        dom = domain or ScalarDomain.symbolic()
        return cls(d.family, {d.labels: dom.one if coeff is None else dom.convert(coeff)}, 0, dom)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            c = self.domain.convert(other)
            return AlgebraElement(self.family, {k: v * c for k, v in self.terms.items()}, self.denom, self.domain)
        if other.family != self.family:
            raise ValueError("family mismatch")
        if other.domain.q != self.domain.q:
            raise ValueError("scalar domain mismatch")
        alg = algebra(self.family)
        dom = self.domain
        out = {}
        for x, a in self.terms.items():
            for y, b in other.terms.items():
                z, loops = alg.mul_labels(x, y)
                v = a * b * dom.delta_pow(loops)
                out[z] = out.get(z, dom.zero) + v
        return AlgebraElement(self.family, out, self.denom + other.denom, dom)

    __rmul__ = __mul__

    def __add__(self, other):
        if other.family != self.family:
            raise ValueError("family mismatch")
        dom = self.domain
        k = max(self.denom, other.denom)
        out = {}
        for src in (self, other):
            lift = k - src.denom
            for z, v in src.terms.items():
                v = v.shift(lift) if (dom.is_symbolic and lift) else v
                out[z] = out.get(z, dom.zero) + v
        return AlgebraElement(self.family, out, k, dom)

    def __sub__(self, other):
        return self + other * (-1)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.family == other.family and self.denom == other.denom and self.terms == other.terms
                and self.domain.q == other.domain.q)

    def support(self) -> list:
        return [Diagram(self.family, z) for z in sorted(self.terms, key=public_blocks)]

    def coefficient(self, d: Diagram):
        return self.terms.get(d.labels, self.domain.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        body = " + ".join(f"({v})*{list(map(list, public_blocks(z)))}" for z, v in self.terms.items())
        tail = f" / δ^{self.denom}" if self.denom else ""
        return f"AlgebraElement({body or '0'}{tail})"


def enumerate_basis(f: Family) -> list:
    return [Diagram(f, lab) for lab in algebra(f).basis]


def identity_diagram(f: Family) -> Diagram:
    return Diagram(f, algebra(f).identity)


def multiply(x: Diagram, y: Diagram) -> AlgebraElement:
    if x.family != y.family:
        raise ValueError("family mismatch")
    z, loops = algebra(x.family).mul_labels(x.labels, y.labels)
    return AlgebraElement(x.family, {z: Poly.monomial(loops)})


def involution(x) -> AlgebraElement:
    if isinstance(x, Diagram):
        x = AlgebraElement.of(x)
    alg = algebra(x.family)
    return AlgebraElement(x.family, {alg.flip(z): v for z, v in x.terms.items()}, x.denom, x.domain)


def idempotent(f: Family, l: int, q=None) -> AlgebraElement:
    """e_l: the idempotent numerator divided by delta^l.

    With ``q=None`` the denominator is tracked symbolically; otherwise the
    coefficient q^{-l} is applied directly (q = 0 is rejected).
    """
    num = algebra(f).idempotent_numerator(l)
    if q is None:
        return AlgebraElement(f, {num: Poly.monomial(0)}, l)
    dom = ScalarDomain.at(q)
    return AlgebraElement(f, {num: dom.inv_delta_pow(l)}, 0, dom)


def idempotent_numerator(f: Family, l: int) -> Diagram:
    return Diagram(f, algebra(f).idempotent_numerator(l))


def permutation_diagram(f: Family, w: Sequence[int]) -> Diagram:
    d = Diagram(f, algebra(f).permutation_labels(w))
    if not _valid(f, d.labels):
        raise ValueError("permutation crosses the wall")
    return d


# ---------------------------------------------------------------------------
# dangles and inflation coordinates

@dataclass(frozen=True)
class Dangle:
    """One row of a diagram: positions grouped into blocks, each marked
    propagating (True) or closed (False)."""

    family: Family
    blocks: tuple  # ((positions...), propagating), sorted by min position

    @property
    def layer(self) -> int:
        p = sum(1 for _, s in self.blocks if s)
        if self.family.kind == PARTITION:
            return self.family.n - p
        return (self.family.n - p) // 2

    def star_blocks(self) -> list:
        return [b for b, s in self.blocks if s]

    def closed_blocks(self) -> list:
        return [b for b, s in self.blocks if not s]

    def key(self):
        return (tuple(min(b) for b in self.star_blocks()), self.blocks)

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b, _ in self.blocks], "star": [s for _, s in self.blocks]}

    def __str__(self):
        return " ".join(("{" + ",".join(map(str, b)) + "}" + ("*" if s else "o")) for b, s in self.blocks)


def _row_dangle(family: Family, labels, top: bool) -> Dangle:
    n = family.n
    out = []
    for b in blocks_of(labels):
        tops = [a + 1 for a in b if a < n]
        bots = [a - n + 1 for a in b if a >= n]
        mine, other = (tops, bots) if top else (bots, tops)
        if mine:
            out.append((tuple(mine), bool(other)))
    out.sort(key=lambda e: min(e[0]))
    return Dangle(family, tuple(out))


def inflation_coords(d: Diagram):
    """(layer, top dangle, bottom dangle, through-line permutation) of d.

    The permutation b sends the index of a bottom propagating block (ordered by
    minimal position) to the index of the top block it is joined to.
    """
    f = d.family
    n = f.n
    top, bottom = _row_dangle(f, d.labels, True), _row_dangle(f, d.labels, False)
    top_index = {b[0]: k for k, b in enumerate(top.star_blocks(), 1)}
    lab = d.labels
    perm = []
    for b in bottom.star_blocks():
        node = b[0] - 1 + n
        block = [a for a in range(2 * n) if lab[a] == lab[node]]
        top_min = min(a for a in block if a < n) + 1
        perm.append(top_index[top_min])
    return d.layer, top, bottom, tuple(perm)


def assemble(f: Family, top: Dangle, bottom: Dangle, perm: Sequence[int]) -> Diagram:
    """Inverse of inflation_coords."""
    return Diagram(f, assemble_labels(f, top.blocks, bottom.blocks, top.star_blocks(), bottom.star_blocks(), perm))


def assemble_labels(f: Family, top_blocks, bottom_blocks, top_stars, bottom_stars, perm) -> tuple:
    """Join top_stars[perm[k]-1] with bottom_stars[k]; other blocks stay in their row.

    ``top_blocks``/``bottom_blocks`` are (positions, propagating) pairs covering
    each row; the star lists fix the order in which propagating blocks are
    matched, which need not be the order by minimum.
    """
    n = f.n
    if len(top_stars) != len(bottom_stars) or len(perm) != len(bottom_stars):
        raise ValueError("through-line data mismatch")
    blocks = []
    for b, s in top_blocks:
        if not s:
            blocks.append([a - 1 for a in b])
    for b, s in bottom_blocks:
        if not s:
            blocks.append([a - 1 + n for a in b])
    for k, bot in enumerate(bottom_stars):
        tp = top_stars[perm[k] - 1]
        blocks.append([a - 1 for a in tp] + [a - 1 + n for a in bot])
    labels = canon(n, blocks)
    if not _valid(f, labels):
        raise ValueError("assembled diagram violates the family constraints")
    return labels


@lru_cache(maxsize=None)
def enumerate_dangles(f: Family, l: int) -> tuple:
    """All one-row dangles of layer l in a fixed order."""
    f.check_layer(l)
    n = f.n
    out = []
    positions = list(range(1, n + 1))
    if f.kind in (BRAUER, WALLED):
        for arcs in itertools.combinations(itertools.combinations(positions, 2), l):
            used = [a for arc in arcs for a in arc]
            if len(set(used)) != 2 * l:
                continue
            if f.kind == WALLED and any(f.side(a) == f.side(b) for a, b in arcs):
                continue
            blocks = [((a,), True) for a in positions if a not in used] + [(arc, False) for arc in arcs]
            blocks.sort(key=lambda e: min(e[0]))
            out.append(Dangle(f, tuple(blocks)))
    else:
        for part in _set_partitions(positions):
            part = [tuple(sorted(b)) for b in part]
            if len(part) < n - l:
                continue
            for stars in itertools.combinations(range(len(part)), n - l):
                blocks = [(b, k in stars) for k, b in enumerate(part)]
                blocks.sort(key=lambda e: min(e[0]))
                out.append(Dangle(f, tuple(blocks)))
    out = sorted(set(out), key=Dangle.key)
    return tuple(out)


def inflation_dimensions(f: Family) -> dict:
    """Layer -> (dim V_l)^2 * |B_l|."""
    out = {}
    for l in f.layers():
        order = 1
        for s in f.segments(l):
            order *= symcomb.factorial(s)
        out[l] = len(enumerate_dangles(f, l)) ** 2 * order
    return out


# ---------------------------------------------------------------------------
# ideals

def ideal_filtration_membership(x, l: int, i: int) -> bool:
    """Support in layers >= l+i, with every diagram absorbing the layer-l idempotent on the right."""
    if isinstance(x, Diagram):
        x = AlgebraElement.of(x)
    alg = algebra(x.family)
    if l + i > x.family.max_layer:
        return not x.terms
    return all(alg.layer(z) >= l + i and alg.in_layer_ideal_pattern(z, l) for z in x.terms)


def ideal_basis(f: Family, l: int) -> list:
    """Diagrams spanning J_l (layer at least l)."""
    alg = algebra(f)
    return [Diagram(f, z) for z in alg.basis if alg.layer(z) >= l]


def corner_quotient(f: Family, l: int) -> dict:
    """Data for the corner-algebra isomorphism at layer l.

    Returns the number of diagrams in e_l A e_l, how many of them lie in the
    next ideal, the order of the through-line group, and whether the map
    w -> e_l w e_l is multiplicative modulo that ideal.
    """
    alg = algebra(f)
    num = alg.idempotent_numerator(l)
    corner = set()
    for z in alg.basis:
        a, _ = alg.mul_labels(num, z)
        b, _ = alg.mul_labels(a, num)
        corner.add(b)
    deeper = {z for z in corner if alg.layer(z) >= l + 1}
    segs = f.segments(l)
    group = _through_group(f, l)
    images = {}
    for w in group:
        img, loops = alg.mul_labels(alg.mul_labels(num, alg.permutation_labels(w))[0], num)
        images[w] = (img, loops)
    multiplicative = True
    for u in group:
        for v in group:
            uv = symcomb.compose(u, v)
            a, la = images[u]
            b, lb = images[v]
            z, loops = alg.mul_labels(a, b)
            c, lc = images[uv]
            # e_l u e_l * e_l v e_l / delta^{2l}... compare normalized diagrams and loop counts
            if z != c or loops + la + lb - 2 * l != lc:
                multiplicative = False
    order = 1
    for s in segs:
        order *= symcomb.factorial(s)
    return {
        "corner": len(corner),
        "deeper": len(deeper),
        "group_order": order,
        "multiplicative": multiplicative,
        "distinct_images": len({images[w][0] for w in group}),
    }


def _through_group(f: Family, l: int) -> list:
    """Permutations of the row acting on the free positions of layer l as the through-line group."""
    n = f.n
    free = f.free_positions(l)
    segs = f.segments(l)
    out = []
    for w in symcomb.young_subgroup(segs):
        full = list(range(1, n + 1))
        for k, x in enumerate(w):
            full[free[k] - 1] = free[x - 1]
        out.append(tuple(full))
    return out


def free_permutation(f: Family, l: int, w: Sequence[int]) -> tuple:
    """Extend a permutation of the free positions of layer l (as indices) to the whole row."""
    n = f.n
    free = f.free_positions(l)
    full = list(range(1, n + 1))
    for k, x in enumerate(w):
        full[free[k] - 1] = free[x - 1]
    return tuple(full)
