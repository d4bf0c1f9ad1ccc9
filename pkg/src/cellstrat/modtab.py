"""Modified tableaux: arc configurations drawn on Young diagrams.

The cells of a shape are numbered 1..t in row-reading order (for the walled
family the left shape comes first, then the right shape).  A configuration is
a tuple of ``(cells, propagating)`` blocks covering all cells.  Two
configurations are equivalent when a row-preserving permutation carries one
to the other; each class is stored through one canonical representative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import symcomb
from .diagalg import BRAUER, PARTITION, WALLED, Family, _set_partitions
from .symcomb import Tableau


# ---------------------------------------------------------------------------
# shapes split into segments

def segments_of(family: Family, shape) -> tuple:
    """Normalise a user shape to a tuple of partitions, one per segment."""
    if family.kind == WALLED:
        left, right = shape
        return (symcomb.as_partition(left), symcomb.as_partition(right))
    if shape and isinstance(shape[0], (tuple, list)):
        (only,) = shape
        return (symcomb.as_partition(only),)
    return (symcomb.as_partition(shape),)


def shape_of(family: Family, segs: tuple):
    return segs if family.kind == WALLED else segs[0]


def segment_sizes(segs: Sequence[Sequence[int]]) -> tuple:
    return tuple(sum(s) for s in segs)


def cell_rows(segs: Sequence[Sequence[int]]) -> tuple:
    """For each cell (1-based, reading order) its (segment, row)."""
    out = []
    for k, shape in enumerate(segs):
        for row, length in enumerate(shape):
            out.extend([(k, row)] * length)
    return tuple(out)


def shape_group(segs: Sequence[Sequence[int]]) -> list:
    """The row stabiliser of the flattened shape (as permutations of cells)."""
    rows = [length for shape in segs for length in shape]
    return symcomb.young_subgroup(rows)


def _act(w, config):
    moved = [(tuple(sorted(w[a - 1] for a in b)), s) for b, s in config]
    moved.sort(key=lambda e: e[0][0])
    return tuple(moved)


def _config_key(config):
    where = {}
    for b, s in config:
        for a in b:
            where[a] = (b, s)
    key = []
    for a in sorted(where):
        b, s = where[a]
        if s and len(b) == 1:
            key.append((0,))
        else:
            key.append((1, 0 if s else 1, tuple(x for x in b if x != a)))
    return tuple(key)


def raw_configurations(kind: str, segs: Sequence[Sequence[int]], i: int) -> list:
    """All configurations with i closed arcs (partition family: t - i propagating blocks)."""
    sizes = segment_sizes(segs)
    t = sum(sizes)
    cells = list(range(1, t + 1))
    out = []
    if kind in (BRAUER, WALLED):
        rows = cell_rows(segs)
        for arcs in itertools.combinations(itertools.combinations(cells, 2), i):
            used = [a for arc in arcs for a in arc]
            if len(set(used)) != 2 * i:
                continue
            if kind == WALLED and any(rows[a - 1][0] == rows[b - 1][0] for a, b in arcs):
                continue
            blocks = [((a,), True) for a in cells if a not in used] + [(arc, False) for arc in arcs]
            blocks.sort(key=lambda e: e[0][0])
            out.append(tuple(blocks))
    else:
        for part in _set_partitions(cells):
            part = sorted(tuple(sorted(b)) for b in part)
            if len(part) < t - i:
                continue
            for stars in itertools.combinations(range(len(part)), t - i):
                out.append(tuple((b, k in stars) for k, b in enumerate(part)))
    return out


@dataclass(frozen=True)
class ModifiedDiagram:
    family_kind: str
    segs: tuple
    arcs: int
    blocks: tuple  # canonical representative, ((cells...), propagating)
    class_size: int

    @property
    def stabiliser_order(self) -> int:
        order = 1
        for shape in self.segs:
            order *= symcomb.young_order(shape)
        return order // self.class_size

    def star_classes(self) -> list:
        """Propagating blocks grouped into through-line classes, in class order."""
        rows = cell_rows(self.segs)
        stars = [b for b, s in self.blocks if s]
        if self.family_kind != PARTITION:
            # one class per row; rows of the walled right shape come after the left ones
            groups = {}
            for b in stars:
                groups.setdefault(rows[b[0] - 1], []).append(b)
            order = sorted(set(rows))
            return [groups.get(key, []) for key in order]
        groups = {}
        for b in stars:
            key = (len(b), tuple(sorted(rows[a - 1][1] for a in b)))
            groups.setdefault(key, []).append(b)
        classes = sorted(groups.items(), key=lambda kv: (kv[0][0], -len(kv[1]), kv[1][0][0]))
        return [sorted(v) for _, v in classes]

    def star_order(self) -> list:
        return [b for cls in self.star_classes() for b in cls]

    def through_type(self) -> tuple:
        """Type of the through-line tableaux, one composition per segment."""
        classes = self.star_classes()
        if self.family_kind == PARTITION:
            return (tuple(len(c) for c in classes),)
        rows = cell_rows(self.segs)
        per_seg = []
        for k, shape in enumerate(self.segs):
            counts = [0] * len(shape)
            for b, s in self.blocks:
                if s and rows[b[0] - 1][0] == k:
                    counts[rows[b[0] - 1][1]] += 1
            per_seg.append(tuple(counts))
        return tuple(per_seg)

    def through_sizes(self) -> tuple:
        return tuple(sum(c) for c in self.through_type())

    def to_json(self) -> dict:
        rows = cell_rows(self.segs)
        coord, seen = {}, {}
        for a, key in enumerate(rows, 1):
            seen[key] = seen.get(key, 0) + 1
            coord[a] = [key[0], key[1] + 1, seen[key]]
        return {
            "shape": [list(s) for s in self.segs],
            "arcs": [[coord[a] for a in b] for b, _ in self.blocks],
            "annot": ["*" if s else "o" for _, s in self.blocks],
        }

    def __str__(self):
        return " ".join("{" + ",".join(map(str, b)) + "}" + ("*" if s else "o") for b, s in self.blocks)


@lru_cache(maxsize=None)
def _classes(kind: str, segs: tuple, i: int) -> tuple:
    group = shape_group(segs)
    seen = {}
    out = []
    for config in raw_configurations(kind, segs, i):
        if config in seen:
            continue
        orbit = {_act(w, config) for w in group}
        rep = min(orbit, key=_config_key)
        for c in orbit:
            seen[c] = rep
        out.append(ModifiedDiagram(kind, segs, i, rep, len(orbit)))
    out.sort(key=lambda m: _config_key(m.blocks))
    return tuple(out)


def enumerate_modified(shape, i: int, family: Family) -> list:
    """Row-standard (shape, i)-diagrams: one per class of configurations."""
    segs = segments_of(family, shape) if not _is_segs(shape) else shape
    return list(_classes(family.kind, segs, i))


def _is_segs(shape) -> bool:
    return isinstance(shape, tuple) and bool(shape) and all(isinstance(s, tuple) for s in shape) and \
        all(all(isinstance(x, int) for x in s) for s in shape)


def max_arcs(family: Family, segs: tuple) -> int:
    sizes = segment_sizes(segs)
    if family.kind == BRAUER:
        return sizes[0] // 2
    if family.kind == WALLED:
        return min(sizes)
    return sizes[0]


def class_members(sigma: ModifiedDiagram):
    """Iterate over the configurations in the class of sigma."""
    seen = set()
    for w in shape_group(sigma.segs):
        c = _act(w, sigma.blocks)
        if c not in seen:
            seen.add(c)
            yield c


def classify(kind: str, segs: tuple, config) -> ModifiedDiagram:
    """The canonical class containing a raw configuration."""
    config = tuple(sorted(((tuple(sorted(b)), s) for b, s in config), key=lambda e: e[0][0]))
    stars = sum(1 for _, s in config if s)
    t = sum(segment_sizes(segs))
    i = (t - stars) if kind == PARTITION else (t - stars) // 2
    for m in _classes(kind, segs, i):
        if config in set(class_members(m)):
            return m
    raise ValueError("configuration does not fit the shape")


def restrict(sigma: ModifiedDiagram):
    """The restricted shape: composition(s) for Brauer/walled, multipartition for partition."""
    if sigma.family_kind != PARTITION:
        types = tuple(symcomb.canonical_composition(c) for c in sigma.through_type())
        return types if sigma.family_kind == WALLED else types[0]
    classes = sigma.star_classes()
    if not classes:
        return ()
    longest = max(len(c[0]) for c in classes)
    out = []
    for length in range(1, longest + 1):
        sizes = sorted((len(c) for c in classes if len(c[0]) == length), reverse=True)
        out.append(tuple(sizes))
    return tuple(out)


# ---------------------------------------------------------------------------
# semistandard modified tableaux

@dataclass(frozen=True)
class ModifiedTableau:
    sigma: ModifiedDiagram
    filling: tuple  # one semistandard tableau per segment

    @property
    def shape(self) -> tuple:
        return tuple(t.shape for t in self.filling)

    def __str__(self):
        return f"[{self.sigma}] " + " ; ".join(str(t) for t in self.filling)

    def to_json(self) -> dict:
        return {"diagram": self.sigma.to_json(), "filling": [t.to_json() for t in self.filling]}


def _trim_shape(shape):
    return symcomb.canonical_composition(shape)


def semistandard_fillings(omega: tuple, types: tuple) -> list:
    """Tuples of semistandard tableaux of shapes omega (per segment) and the given types."""
    per = []
    for shape, type_ in zip(omega, types):
        per.append(symcomb.semistandard_tableaux(tuple(shape), tuple(type_)))
    return [tuple(c) for c in itertools.product(*per)]


def semistandard_modified(omega: tuple, segs: tuple, i: int, family: Family) -> list:
    """T_0^i(omega, lambda): pairs (sigma, filling) with sigma in T^i_lambda."""
    out = []
    for sigma in enumerate_modified(segs, i, family):
        types = sigma.through_type()
        if segment_sizes(types) != segment_sizes(omega):
            continue
        for filling in semistandard_fillings(omega, types):
            out.append(ModifiedTableau(sigma, filling))
    return out


def initial_modified(segs: tuple, family: Family) -> ModifiedTableau:
    """T^lambda: no arcs, each row filled with its own index."""
    (sigma,) = enumerate_modified(segs, 0, family)
    return ModifiedTableau(sigma, tuple(symcomb.semistandard_tableaux(s, s)[0] for s in segs))


def walled_display_ranges(tprime: int, t: int, i: int) -> tuple:
    """Entry ranges used when drawing walled fillings: {1..t'-i} and {t'+1+i..t'+t}."""
    return (tuple(range(1, tprime - i + 1)), tuple(range(tprime + 1 + i, tprime + t + 1)))


# ---------------------------------------------------------------------------
# dominance of modified diagrams

def modified_dominates(sigma: ModifiedDiagram, tau: ModifiedDiagram) -> bool:
    """Strict order: fewer remaining nodes wins, then strict dominance of restricted shapes."""
    a, b = sigma.through_type(), tau.through_type()
    sa, sb = sum(segment_sizes(a)), sum(segment_sizes(b))
    if sa != sb:
        return sa < sb
    fa = tuple(x for c in a for x in c)
    fb = tuple(x for c in b for x in c)
    return fa != fb and symcomb.dominates(fa, fb)


# ---------------------------------------------------------------------------
# partition bi-diagrams

@dataclass(frozen=True)
class BiDiagram:
    mu: tuple
    m: int
    blocks: tuple  # ((nodes...), propagating); nodes 1..s are [mu], s+1..s+m the extra row

    @property
    def s(self) -> int:
        return sum(self.mu)

    def __str__(self):
        return " ".join("{" + ",".join(map(str, b)) + "}" + ("*" if st else "o") for b, st in self.blocks)


def _bi_rows(mu: tuple, m: int) -> tuple:
    rows = list(cell_rows((mu,)))
    return tuple(rows) + ((1, 0),) * m


def _bi_group(mu: tuple, m: int) -> list:
    return symcomb.young_subgroup(tuple(mu) + ((m,) if m else ()))


def _bi_ok(mu: tuple, m: int, config) -> bool:
    s = sum(mu)
    for b, star in config:
        inside = sum(1 for a in b if a <= s)
        if star and inside != 1:
            return False
        if not star and inside:
            return False
    return True


def raw_bidiagrams_by_filter(mu: tuple, m: int) -> list:
    """Generate every annotated set partition and keep those obeying the constraints."""
    s = sum(mu)
    nodes = list(range(1, s + m + 1))
    out = []
    for part in _set_partitions(nodes):
        part = sorted(tuple(sorted(b)) for b in part)
        for flags in itertools.product((True, False), repeat=len(part)):
            config = tuple(zip(part, flags))
            if _bi_ok(mu, m, config):
                out.append(config)
    return out


def raw_bidiagrams(mu: tuple, m: int) -> list:
    """Constructive generation: attach extra nodes to [mu] nodes or group them into closed blocks."""
    s = sum(mu)
    extra = list(range(s + 1, s + m + 1))
    out = []
    for assignment in itertools.product(range(s + 1), repeat=m):
        stars = {a: [a] for a in range(1, s + 1)}
        loose = []
        for node, target in zip(extra, assignment):
            if target:
                stars[target].append(node)
            else:
                loose.append(node)
        for part in _set_partitions(loose):
            blocks = [(tuple(sorted(b)), True) for b in stars.values()]
            blocks += [(tuple(sorted(b)), False) for b in part]
            blocks.sort(key=lambda e: e[0][0])
            out.append(tuple(blocks))
    return out


@lru_cache(maxsize=None)
def enumerate_bidiagrams(mu: tuple, m: int) -> tuple:
    mu = tuple(mu)
    group = _bi_group(mu, m)
    seen = {}
    out = []
    for config in raw_bidiagrams(mu, m):
        if config in seen:
            continue
        orbit = {_act(w, config) for w in group}
        rep = min(orbit, key=_config_key)
        for c in orbit:
            seen[c] = rep
        out.append(BiDiagram(mu, m, rep))
    out.sort(key=lambda w: _config_key(w.blocks))
    return tuple(out)


@dataclass(frozen=True)
class InducedShape:
    star: tuple  # star[n-1] is the partition of class sizes of propagating blocks of length n
    closed: tuple  # closed[n-1] is the partition of closed blocks of length n (one part)

    @property
    def subgroup_order(self) -> int:
        order = 1
        for data in (self.star, self.closed):
            for n, parts in enumerate(data, 1):
                for c in parts:
                    order *= symcomb.factorial(n) ** c * symcomb.factorial(c)
        return order

    def subgroup_factors(self) -> list:
        """Wreath factors (n, c): Sigma_n wr Sigma_c."""
        out = []
        for data in (self.star, self.closed):
            for n, parts in enumerate(data, 1):
                out.extend((n, c) for c in parts)
        return out


def induce(omega: BiDiagram) -> InducedShape:
    rows = _bi_rows(omega.mu, omega.m)
    s = omega.s
    star_groups = {}
    closed_counts = {}
    for b, st in omega.blocks:
        if st:
            anchor = next(a for a in b if a <= s)
            key = (len(b), rows[anchor - 1][1])
            star_groups[key] = star_groups.get(key, 0) + 1
        else:
            closed_counts[len(b)] = closed_counts.get(len(b), 0) + 1

    def pack(counts_by_len):
        if not counts_by_len:
            return ()
        longest = max(counts_by_len)
        return tuple(tuple(sorted(counts_by_len.get(n, []), reverse=True)) for n in range(1, longest + 1))

    star_by_len = {}
    for (length, _), c in star_groups.items():
        star_by_len.setdefault(length, []).append(c)
    closed_by_len = {n: [c] for n, c in closed_counts.items()}
    return InducedShape(pack(star_by_len), pack(closed_by_len))


# ---------------------------------------------------------------------------
# double cosets

def double_coset_reps_modified(lam, mu, i: int, family: Family) -> list:
    """Pairs (sigma, d): sigma in T^i_lam, d a distinguished double coset
    representative between the restricted type of sigma and mu."""
    segs = segments_of(family, lam)
    mu_segs = segments_of(family, mu)
    out = []
    for sigma in enumerate_modified(segs, i, family):
        types = sigma.through_type()
        if segment_sizes(types) != segment_sizes(mu_segs):
            continue
        if family.kind == PARTITION:
            per = [symcomb.double_coset_reps(types[0], mu_segs[0], sum(types[0]))]
        else:
            per = [symcomb.double_coset_reps(tp, sh, sum(sh)) for tp, sh in zip(types, mu_segs)]
        for combo in itertools.product(*per):
            d = []
            off = 0
            for w in combo:
                d.extend(x + off for x in w)
                off += len(w)
            out.append((sigma, tuple(d)))
    return out


def brute_double_cosets_brauer(lam: tuple, mu: tuple, i: int) -> int:
    """Count Sigma_lam \\ Sigma_t / (Sigma_mu x Sigma_2 wr Sigma_i) by orbit enumeration."""
    t = sum(lam)
    free = t - 2 * i
    right = []
    pairs = [(free + 2 * k + 1, free + 2 * k + 2) for k in range(i)]
    for u in symcomb.young_subgroup(mu):
        for order in itertools.permutations(range(i)):
            for flips in itertools.product((False, True), repeat=i):
                w = list(u) + [0] * (2 * i)
                for k, target in enumerate(order):
                    a, b = pairs[target]
                    if flips[k]:
                        a, b = b, a
                    w[pairs[k][0] - 1], w[pairs[k][1] - 1] = a, b
                right.append(tuple(w))
    left = symcomb.young_subgroup(lam)
    seen = set()
    count = 0
    for g in itertools.permutations(range(1, t + 1)):
        if g in seen:
            continue
        count += 1
        for u in left:
            ug = symcomb.compose(u, g)
            for v in right:
                seen.add(symcomb.compose(ug, v))
    return count
