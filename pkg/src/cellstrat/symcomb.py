"""Symmetric-group combinatorics.

Permutations are tuples in one-line notation on 1..n and act on the left:
``compose(u, v)`` is u after v.  Tableaux carry their shape and rows; a
tableau of composition shape may have empty rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Perm = tuple


# ---------------------------------------------------------------------------
# compositions and partitions

def canonical_composition(parts: Iterable[int]) -> tuple:
    ps = list(parts)
    if any(p < 0 for p in ps):
        raise ValueError("composition parts must be nonnegative")
    while ps and ps[-1] == 0:
        ps.pop()
    return tuple(ps)


def is_partition(parts: Sequence[int]) -> bool:
    return all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1)) and all(p > 0 for p in parts)


def as_partition(parts: Iterable[int]) -> tuple:
    p = canonical_composition(parts)
    if not is_partition(p):
        raise ValueError(f"{p} is not a partition")
    return p


@lru_cache(maxsize=None)
def enumerate_partitions(r: int) -> tuple:
    """All partitions of r, reverse-lexicographic (so (r) comes first)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(r, r, [])
    return tuple(out)


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Partial-sum dominance; works for compositions of equal size."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance needs equal sizes")
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def strictly_dominates(lam, mu) -> bool:
    return tuple(lam) != tuple(mu) and dominates(lam, mu)


def conjugate(lam: Sequence[int]) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > k) for k in range(lam[0]))


def factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def young_order(comp: Sequence[int]) -> int:
    out = 1
    for p in comp:
        out *= factorial(p)
    return out


# ---------------------------------------------------------------------------
# permutations

def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(u: Perm, v: Perm) -> Perm:
    return tuple(u[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for k, x in enumerate(w, 1):
        out[x - 1] = k
    return tuple(out)


def sign(w: Perm) -> int:
    seen = [False] * len(w)
    s = 1
    for k in range(len(w)):
        if not seen[k]:
            j, length = k, 0
            while not seen[j]:
                seen[j] = True
                j = w[j] - 1
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def cycle_type(w: Perm) -> tuple:
    seen = [False] * len(w)
    out = []
    for k in range(len(w)):
        if not seen[k]:
            j, length = k, 0
            while not seen[j]:
                seen[j] = True
                j = w[j] - 1
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def cycle_element(mu: Sequence[int]) -> Perm:
    """A permutation of cycle type mu with cycles on consecutive blocks."""
    out = []
    start = 1
    for part in mu:
        block = list(range(start, start + part))
        out.extend(block[1:] + block[:1])
        start += part
    return tuple(out)


def embed(w: Perm, offset: int, n: int) -> Perm:
    """w acting on offset+1..offset+len(w) inside Sigma_n."""
    out = list(range(1, n + 1))
    for k, x in enumerate(w):
        out[offset + k] = offset + x
    return tuple(out)


def block_ranges(comp: Sequence[int]) -> list:
    out, start = [], 0
    for p in comp:
        out.append(range(start + 1, start + p + 1))
        start += p
    return out


def young_subgroup(comp: Sequence[int]) -> list:
    """Elements of the row stabiliser of the row-reading tableau of shape comp."""
    n = sum(comp)
    factors = [list(itertools.permutations(rg)) for rg in block_ranges(comp)]
    out = []
    for choice in itertools.product(*factors):
        w = []
        for block in choice:
            w.extend(block)
        out.append(tuple(w) if w else identity(n))
    return out


def in_young_subgroup(w: Perm, comp: Sequence[int]) -> bool:
    for rg in block_ranges(comp):
        for x in rg:
            if w[x - 1] not in rg:
                return False
    return True


# ---------------------------------------------------------------------------
# tableaux

@dataclass(frozen=True)
class Tableau:
    shape: tuple
    rows: tuple

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("rows do not match the shape")

    @classmethod
    def from_rows(cls, rows) -> "Tableau":
        rows = tuple(tuple(r) for r in rows)
        return cls(tuple(len(r) for r in rows), rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def word(self) -> tuple:
        return tuple(x for row in self.rows for x in row)

    def entry_rows(self) -> dict:
        return {x: k for k, row in enumerate(self.rows) for x in row}

    def is_row_standard(self) -> bool:
        return all(row[k] < row[k + 1] for row in self.rows for k in range(len(row) - 1))

    def columns(self) -> list:
        width = max(self.shape, default=0)
        return [[row[c] for row in self.rows if c < len(row)] for c in range(width)]

    def is_standard(self) -> bool:
        if sorted(self.word()) != list(range(1, self.size + 1)):
            return False
        if not is_partition(canonical_composition(self.shape)):
            return False
        return self.is_row_standard() and all(
            col[k] < col[k + 1] for col in self.columns() for k in range(len(col) - 1))

    def is_semistandard(self, type_: Sequence[int]) -> bool:
        counts = {}
        for x in self.word():
            counts[x] = counts.get(x, 0) + 1
        for k, c in enumerate(type_, 1):
            if counts.pop(k, 0) != c:
                return False
        if counts:
            return False
        rows_ok = all(row[k] <= row[k + 1] for row in self.rows for k in range(len(row) - 1))
        cols_ok = all(col[k] < col[k + 1] for col in self.columns() for k in range(len(col) - 1))
        return rows_ok and cols_ok

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "Tableau":
        t = cls.from_rows(obj["rows"])
        if list(t.shape) != list(obj["shape"]):
            raise ValueError("shape does not match rows")
        return t

    def __str__(self):
        return "|".join(" ".join(map(str, r)) for r in self.rows) or "∅"


def tableau_key(t: Tableau):
    return (tuple(-p for p in t.shape) + (0,), t.word())


def initial_tableau(shape: Sequence[int]) -> Tableau:
    """The row-reading tableau: rows filled with 1..n in order."""
    rows, k = [], 1
    for p in shape:
        rows.append(tuple(range(k, k + p)))
        k += p
    return Tableau(tuple(shape), tuple(rows))


@lru_cache(maxsize=None)
def standard_tableaux(shape: tuple) -> tuple:
    shape = tuple(shape)
    n = sum(shape)
    out = []

    def rec(k, rows):
        if k > n:
            out.append(Tableau(shape, tuple(tuple(r) for r in rows)))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1, rows)
                rows[i].pop()

    rec(1, [[] for _ in shape])
    out.sort(key=tableau_key)
    return tuple(out)


@lru_cache(maxsize=None)
def semistandard_tableaux(shape: tuple, type_: tuple) -> tuple:
    """Semistandard tableaux of the given partition shape and composition type."""
    shape, type_ = tuple(shape), tuple(type_)
    if sum(shape) != sum(type_):
        return ()
    out = []

    def rec(k, rows):
        if k > len(type_):
            if all(len(rows[i]) == shape[i] for i in range(len(shape))):
                out.append(Tableau(shape, tuple(tuple(r) for r in rows)))
            return
        need = type_[k - 1]
        # place `need` copies of k as a horizontal strip
        lengths = [len(r) for r in rows]

        def strip(i, left, adds):
            if i == len(shape):
                if left == 0:
                    for j, a in enumerate(adds):
                        rows[j].extend([k] * a)
                    rec(k + 1, rows)
                    for j, a in enumerate(adds):
                        if a:
                            del rows[j][-a:]
                return
            cap = shape[i] - lengths[i]
            if i > 0:
                cap = min(cap, lengths[i - 1] - lengths[i])
            for a in range(min(cap, left), -1, -1):
                strip(i + 1, left - a, adds + [a])

        strip(0, need, [])

    rec(1, [[] for _ in shape])
    out.sort(key=tableau_key)
    return tuple(out)


def kostka(shape, type_) -> int:
    return len(semistandard_tableaux(tuple(shape), tuple(type_)))


def row_standard_tableaux(comp: tuple) -> list:
    n = sum(comp)
    out = []
    for w in itertools.permutations(range(1, n + 1)):
        rows, k = [], 0
        ok = True
        for p in comp:
            row = w[k:k + p]
            if any(row[j] > row[j + 1] for j in range(p - 1)):
                ok = False
                break
            rows.append(tuple(row))
            k += p
        if ok:
            out.append(Tableau(tuple(comp), tuple(rows)))
    out.sort(key=lambda t: t.word())
    return out


def tableau_perm(t: Tableau) -> Perm:
    """d(t): the permutation with t = d(t) applied to the row-reading tableau."""
    n = t.size
    d = [0] * n
    k = 1
    for row in t.rows:
        for x in row:
            d[k - 1] = x
            k += 1
    return tuple(d)


def act_on_tableau(w: Perm, t: Tableau) -> Tableau:
    return Tableau(t.shape, tuple(tuple(w[x - 1] for x in row) for row in t.rows))


def type_tableau(t: Tableau, type_: Sequence[int]) -> Tableau:
    """lambda(t): replace each entry by the row it occupies in the row-reading tableau of type_."""
    row_of = {}
    k = 1
    for i, p in enumerate(type_, 1):
        for _ in range(p):
            row_of[k] = i
            k += 1
    return Tableau(t.shape, tuple(tuple(sorted(row_of[x] for x in row)) for row in t.rows))


# ---------------------------------------------------------------------------
# group algebra

class GroupAlgebraElement:
    """Finitely supported map permutation -> coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @classmethod
    def basis(cls, w: Perm) -> "GroupAlgebraElement":
        return cls(len(w), {tuple(w): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = compose(u, v)
                out[w] = out.get(w, 0) + a * b
        return GroupAlgebraElement(self.n, out)

    def star(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {inverse(w): c for w, c in self.terms.items()})

    def coefficient(self, w: Perm):
        return self.terms.get(tuple(w), 0)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        body = " + ".join(f"{c}*{w}" for w, c in sorted(self.terms.items()))
        return f"GroupAlgebraElement({body or '0'})"


def group_sum(n: int, elements: Iterable[Perm], coeff=1) -> GroupAlgebraElement:
    out = {}
    for w in elements:
        out[w] = out.get(w, 0) + coeff
    return GroupAlgebraElement(n, out)


def column_group(shape: Sequence[int]) -> list:
    t = initial_tableau(shape)
    cols = t.columns()
    n = t.size
    factors = [list(itertools.permutations(col)) for col in cols]
    out = []
    for choice in itertools.product(*factors):
        w = list(range(1, n + 1))
        for col, img in zip(cols, choice):
            for a, b in zip(col, img):
                w[a - 1] = b
        out.append(tuple(w))
    return out


def young_symmetrizer(lam: Sequence[int], signed: bool = False) -> GroupAlgebraElement:
    """x_lam (row stabiliser sum) or y_lam (signed column stabiliser sum)."""
    lam = tuple(lam)
    n = sum(lam)
    if not signed:
        return group_sum(n, young_subgroup(lam))
    return GroupAlgebraElement(n, {w: sign(w) for w in column_group(lam)})


@lru_cache(maxsize=None)
def coset_reps(mu: tuple, r: int, side: str = "left") -> tuple:
    """Distinguished coset representatives of the Young subgroup Sigma_mu.

    ``left`` gives D_mu (w with w t^mu row-standard, one per coset w Sigma_mu);
    ``right`` gives their inverses.
    """
    mu = tuple(mu)
    if sum(mu) != r:
        raise ValueError("composition size mismatch")
    reps = tuple(tableau_perm(t) for t in row_standard_tableaux(mu))
    if side == "left":
        return reps
    if side == "right":
        return tuple(inverse(d) for d in reps)
    raise ValueError("side must be 'left' or 'right'")


def is_distinguished(w: Perm, mu: Sequence[int]) -> bool:
    """True iff w is minimal in its coset w Sigma_mu."""
    return act_on_tableau(w, initial_tableau(tuple(mu))).is_row_standard()


@lru_cache(maxsize=None)
def double_coset_reps(lam: tuple, mu: tuple, r: int) -> tuple:
    """Distinguished representatives of Sigma_lam \\ Sigma_r / Sigma_mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != r or sum(mu) != r:
        raise ValueError("composition size mismatch")
    return tuple(d for d in coset_reps(mu, r) if is_distinguished(inverse(d), lam))


def double_coset(lam: Sequence[int], d: Perm, mu: Sequence[int]) -> set:
    left = young_subgroup(lam)
    right = young_subgroup(mu)
    return {compose(compose(u, d), v) for u in left for v in right}


# ---------------------------------------------------------------------------
# Murphy elements

def murphy_element(s: Tableau, t: Tableau) -> GroupAlgebraElement:
    """m_st = d(s) x_shape d(t)^{-1}."""
    if s.shape != t.shape:
        raise ValueError("tableaux of different shapes")
    ds, dt_inv = tableau_perm(s), inverse(tableau_perm(t))
    n = s.size
    return group_sum(n, (compose(compose(ds, w), dt_inv) for w in young_subgroup(s.shape)))


@lru_cache(maxsize=None)
def _standard_by_type(shape: tuple, type_: tuple) -> dict:
    groups = {}
    for t in standard_tableaux(shape):
        groups.setdefault(type_tableau(t, type_), []).append(t)
    return groups


def standard_of_type(T: Tableau, type_: Sequence[int]) -> list:
    """Standard tableaux t with lambda(t) = T."""
    return list(_standard_by_type(T.shape, tuple(type_)).get(T, []))


def murphy_sT(s: Tableau, T: Tableau, type_: Sequence[int]) -> GroupAlgebraElement:
    out = GroupAlgebraElement(s.size)
    for t in standard_of_type(T, type_):
        out = out + murphy_element(s, t)
    return out


def murphy_ST(S: Tableau, T: Tableau, src_type: Sequence[int], tgt_type: Sequence[int]) -> GroupAlgebraElement:
    """m_ST = sum of m_st over standard s, t with lam(s) = S and mu(t) = T."""
    if S.shape != T.shape:
        raise ValueError("tableaux of different shapes")
    out = GroupAlgebraElement(S.size)
    ts = standard_of_type(T, tgt_type)
    for s in standard_of_type(S, src_type):
        for t in ts:
            out = out + murphy_element(s, t)
    return out


@dataclass(frozen=True)
class MurphyIndex:
    shape: tuple
    s: Tableau
    T: Tableau


def murphy_module_basis(lam: Sequence[int]) -> list:
    """Index set (omega, s, T) of the Murphy basis of M(lam), with its elements."""
    lam = tuple(lam)
    r = sum(lam)
    out = []
    for omega in enumerate_partitions(r):
        Ts = semistandard_tableaux(omega, lam)
        if not Ts:
            continue
        for T in Ts:
            for s in standard_tableaux(omega):
                out.append((MurphyIndex(omega, s, T), murphy_sT(s, T, lam)))
    return out


# ---------------------------------------------------------------------------
# permutation modules of K Sigma_r and their homomorphisms

def module_coordinates(y: GroupAlgebraElement, mu: Sequence[int]) -> list:
    """Coordinates of a right Sigma_mu-invariant y in the basis {d x_mu : d in D_mu}."""
    return [y.coefficient(d) for d in coset_reps(tuple(mu), y.n)]


@dataclass
class HomMatrix:
    source: tuple
    target: tuple
    matrix: list  # rows indexed by D_target, columns by D_source
    image: GroupAlgebraElement

    def apply(self, vec: Sequence) -> list:
        return [sum(row[k] * vec[k] for k in range(len(vec))) for row in self.matrix]


def hom_from_image(lam: Sequence[int], mu: Sequence[int], y: GroupAlgebraElement) -> HomMatrix:
    """The equivariant map M(lam) -> M(mu) sending x_lam to y."""
    lam, mu = tuple(lam), tuple(mu)
    r = y.n
    cols = []
    for d in coset_reps(lam, r):
        cols.append(module_coordinates(GroupAlgebraElement.basis(d) * y, mu))
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]) if cols else 0)]
    return HomMatrix(lam, mu, rows, y)


def gdj_hom_basis(lam: Sequence[int], mu: Sequence[int]) -> list:
    """Maps phi_d: x_lam -> sum of the double coset Sigma_lam d Sigma_mu, d in D_{lam,mu}."""
    lam, mu = tuple(lam), tuple(mu)
    r = sum(lam)
    if sum(mu) != r:
        raise ValueError("composition size mismatch")
    out = []
    for d in double_coset_reps(lam, mu, r):
        y = group_sum(r, double_coset(lam, d, mu))
        out.append(hom_from_image(lam, mu, y))
    return out


def semistandard_hom(S: Tableau, T: Tableau, src_type: Sequence[int], tgt_type: Sequence[int]) -> HomMatrix:
    if S.shape != T.shape:
        raise ValueError("tableaux of different shapes")
    if not S.is_semistandard(src_type) or not T.is_semistandard(tgt_type):
        raise ValueError("tableaux are not semistandard of the declared types")
    return hom_from_image(src_type, tgt_type, murphy_ST(S, T, src_type, tgt_type))


def semistandard_pairs(lam: Sequence[int], mu: Sequence[int]) -> list:
    """All (S, T) of common shape with S of type lam and T of type mu."""
    r = sum(lam)
    out = []
    for omega in enumerate_partitions(r):
        for S in semistandard_tableaux(omega, tuple(lam)):
            for T in semistandard_tableaux(omega, tuple(mu)):
                out.append((S, T))
    return out


# ---------------------------------------------------------------------------
# products of symmetric groups on consecutive segments

def segment_offsets(sizes: Sequence[int]) -> list:
    out, acc = [], 0
    for s in sizes:
        out.append(acc)
        acc += s
    return out


def product_element(parts: Sequence[GroupAlgebraElement]) -> GroupAlgebraElement:
    """Tensor product of group-algebra elements on consecutive segments."""
    sizes = [p.n for p in parts]
    n = sum(sizes)
    offs = segment_offsets(sizes)
    out = {identity(n): 1}
    for part, off in zip(parts, offs):
        new = {}
        for w, c in out.items():
            for u, a in part.terms.items():
                v = compose(w, embed(u, off, n))
                new[v] = new.get(v, 0) + c * a
        out = new
    return GroupAlgebraElement(n, out)


def rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)
