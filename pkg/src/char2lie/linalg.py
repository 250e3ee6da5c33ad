"""Exact vector, matrix and subspace arithmetic over GF(2^k).

Vectors are tuples of field elements (ints); matrices are lists of row
tuples.  A `Subspace` is always held in reduced row echelon form with a
fixed column order, so two equal subspaces have bit-identical
representations: this is what makes subspace dedup counting exact.
Computations over GF(2) are routed through the bit-packed kernels in
`bitops`; all public behaviour is field-generic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import bitops
from .field import GF2k

Vector = tuple[int, ...]


def vec_add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a ^ b for a, b in zip(u, v))


def vec_scale(K: GF2k, c: int, v: Sequence[int]) -> Vector:
    if c == 0:
        return (0,) * len(v)
    if c == 1:
        return tuple(v)
    return tuple(K.mul(c, a) for a in v)


def vec_is_zero(v: Sequence[int]) -> bool:
    return not any(v)


def zero_vec(n: int) -> Vector:
    return (0,) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(n))


def pack(v: Sequence[int]) -> int:
    """Pack a GF(2) vector into an int (bit j = coordinate j)."""
    m = 0
    for j, a in enumerate(v):
        if a:
            m |= 1 << j
    return m


def unpack(m: int, n: int) -> Vector:
    return tuple((m >> j) & 1 for j in range(n))


# ---------------------------------------------------------------------------
# Row reduction and solving
# ---------------------------------------------------------------------------

def rref(K: GF2k, rows: Iterable[Sequence[int]]) -> tuple[list[Vector], int, list[int]]:
    """Reduced row echelon form: (rows, rank, pivot columns).

    Deterministic leftmost-pivot elimination; rows come out sorted by
    pivot column with unit leading entries and zeros above and below each
    pivot.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return [], 0, []
    n = len(rows[0])
    if K.k == 1:
        packed, pivots = bitops.rref_bits(pack(r) for r in rows)
        return [unpack(m, n) for m in packed], len(pivots), pivots
    basis: dict[int, Vector] = {}
    for row in rows:
        if len(row) != n:
            raise ValueError("ragged matrix")
        for p, b in basis.items():
            if row[p]:
                row = vec_add(row, vec_scale(K, row[p], b))
        piv = next((j for j, a in enumerate(row) if a), None)
        if piv is None:
            continue
        row = vec_scale(K, K.inv(row[piv]), row)
        for q in list(basis):
            if basis[q][piv]:
                basis[q] = vec_add(basis[q], vec_scale(K, basis[q][piv], row))
        basis[piv] = row
    pivots = sorted(basis)
    return [basis[p] for p in pivots], len(pivots), pivots


def nullspace(K: GF2k, rows: Sequence[Sequence[int]], ncols: int) -> "Subspace":
    """Solutions x of A x = 0, where the rows of A are the equations."""
    red, _, pivots = rref(K, rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = row[f]  # -row[f], but -1 = 1
        basis.append(tuple(v))
    return Subspace.span(K, ncols, basis)


def solve(K: GF2k, rows: Sequence[Sequence[int]], b: Sequence[int]) -> tuple[Vector | None, "Subspace"]:
    """Solve A x = b: (one particular solution or None, kernel of A).

    The rows of A are equations; b has one entry per row.
    """
    rows = [tuple(r) for r in rows]
    if len(b) != len(rows):
        raise ValueError(f"right-hand side length {len(b)} != {len(rows)} equations")
    ncols = len(rows[0]) if rows else 0
    aug = [row + (bi,) for row, bi in zip(rows, b)]
    red, _, pivots = rref(K, aug)
    particular: list[int] | None = [0] * ncols
    for row, p in zip(red, pivots):
        if p == ncols:
            particular = None  # a row reduced to 0 = 1
            break
        particular[p] = row[ncols]
    kernel = nullspace(K, rows, ncols)
    return (tuple(particular) if particular is not None else None), kernel


def map_kernel(K: GF2k, images: Sequence[Sequence[int]], ncols: int) -> "Subspace":
    """Kernel of the linear map sending e_i to images[i]."""
    ndom = len(images)
    if K.k == 1:
        rows = bitops.map_kernel([pack(v) for v in images], ndom)
        return Subspace._from_bits(K, ndom, rows)
    # transpose into equation form: one equation per output coordinate
    eqs = [tuple(images[i][c] for i in range(ndom)) for c in range(ncols)]
    return nullspace(K, eqs, ndom)


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of K^n held as a canonical RREF basis."""

    field: GF2k
    ambient: int
    rows: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, K: GF2k, ambient: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(f"vector length {len(v)} != ambient {ambient}")
        red, _, pivots = rref(K, vectors)
        return cls(K, ambient, tuple(red), tuple(pivots))

    @classmethod
    def zero(cls, K: GF2k, ambient: int) -> "Subspace":
        return cls(K, ambient, (), ())

    @classmethod
    def full(cls, K: GF2k, ambient: int) -> "Subspace":
        return cls.span(K, ambient, (unit_vec(ambient, i) for i in range(ambient)))

    @classmethod
    def _from_bits(cls, K: GF2k, ambient: int, packed_rows: Iterable[int]) -> "Subspace":
        red, pivots = bitops.rref_bits(packed_rows)
        return cls(K, ambient, tuple(unpack(m, ambient) for m in red), tuple(pivots))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def packed(self) -> list[int]:
        return [pack(r) for r in self.rows]

    def reduce(self, v: Sequence[int]) -> Vector:
        K = self.field
        v = tuple(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                v = vec_add(v, vec_scale(K, v[p], row))
        return v

    def __contains__(self, v: Sequence[int]) -> bool:
        return vec_is_zero(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(r in self for r in other.rows)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    def join(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient, self.rows + other.rows)

    def meet(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked-basis relation map."""
        self._check_compatible(other)
        K = self.field
        stacked = list(self.rows) + list(other.rows)
        if not stacked:
            return Subspace.zero(K, self.ambient)
        rel = map_kernel(K, stacked, self.ambient)
        du = self.dim
        vecs = []
        for c in rel.rows:
            v = zero_vec(self.ambient)
            for i in range(du):
                if c[i]:
                    v = vec_add(v, vec_scale(K, c[i], self.rows[i]))
            vecs.append(v)
        return Subspace.span(K, self.ambient, vecs)

    def basis_extension(self) -> list[int]:
        """Coordinates completing the pivot columns to a full basis."""
        return [j for j in range(self.ambient) if j not in self.pivots]


def meet_join(u: Subspace, v: Subspace) -> tuple[Subspace, Subspace]:
    return u.meet(v), u.join(v)


def subspace_canonical(K: GF2k, vectors: Iterable[Sequence[int]], ambient: int) -> Subspace:
    return Subspace.span(K, ambient, vectors)


# ---------------------------------------------------------------------------
# Linear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearMap:
    """A linear map in generator-image form: rows[i] is the image of e_i.

    Applying the map to x takes the combination of the rows by the
    coordinates of x, so the underlying matrix acts on row vectors.
    """

    field: GF2k
    rows: tuple[Vector, ...]

    @classmethod
    def identity(cls, K: GF2k, n: int) -> "LinearMap":
        return cls(K, tuple(unit_vec(n, i) for i in range(n)))

    @classmethod
    def from_images(cls, K: GF2k, images: Iterable[Sequence[int]]) -> "LinearMap":
        return cls(K, tuple(tuple(v) for v in images))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def apply(self, v: Sequence[int]) -> Vector:
        K = self.field
        acc = zero_vec(self.ncols)
        for c, row in zip(v, self.rows):
            if c:
                acc = vec_add(acc, vec_scale(K, c, row))
        return acc

    def then(self, other: "LinearMap") -> "LinearMap":
        """The composite 'self followed by other'."""
        return LinearMap(self.field, tuple(other.apply(r) for r in self.rows))

    def add(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.field, tuple(vec_add(a, b) for a, b in zip(self.rows, other.rows)))

    def rank(self) -> int:
        return rref(self.field, self.rows)[1]

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "LinearMap":
        K = self.field
        n = self.nrows
        if K.k == 1:
            inv = bitops.mat_inv([pack(r) for r in self.rows])
            if inv is None:
                raise ValueError("map is not invertible")
            return LinearMap(K, tuple(unpack(m, n) for m in inv))
        aug = [tuple(self.rows[i]) + unit_vec(n, i) for i in range(n)]
        red, rank, pivots = rref(K, aug)
        if rank != n or list(pivots) != list(range(n)):
            raise ValueError("map is not invertible")
        return LinearMap(K, tuple(row[n:] for row in red))

    def image(self) -> Subspace:
        return Subspace.span(self.field, self.ncols, self.rows)

    def kernel(self) -> Subspace:
        return map_kernel(self.field, self.rows, self.ncols)

    def fixed_space(self) -> Subspace:
        """Kernel of (self - id); requires a square map."""
        if self.nrows != self.ncols:
            raise ValueError("fixed space needs a square map")
        shifted = [vec_add(r, unit_vec(self.ncols, i)) for i, r in enumerate(self.rows)]
        return map_kernel(self.field, shifted, self.ncols)

    def packed(self) -> list[int]:
        return [pack(r) for r in self.rows]

    @classmethod
    def from_packed(cls, K: GF2k, rows: Iterable[int], n: int) -> "LinearMap":
        return cls(K, tuple(unpack(m, n) for m in rows))


def compose(*maps: LinearMap) -> LinearMap:
    """Right-to-left composition: compose(f, g) applies g first, then f."""
    result = maps[-1]
    for m in reversed(maps[:-1]):
        result = result.then(m)
    return result


# ---------------------------------------------------------------------------
# Incremental spans with coordinate bookkeeping
# ---------------------------------------------------------------------------

class IncrementalSpan:
    """Grow a span vector by vector and express members in the inserted basis.

    Used wherever a structure is rebuilt over a found basis: envelope
    construction, subalgebra tables, root-space bookkeeping.
    """

    def __init__(self, K: GF2k, ambient: int):
        self.field = K
        self.ambient = ambient
        self.rows: dict[int, tuple[Vector, Vector]] = {}  # pivot -> (vector, combo)
        self.ngens = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Sequence[int], combo: list[int]) -> Vector:
        K = self.field
        v = tuple(v)
        for p, (b, c) in self.rows.items():
            if v[p]:
                coef = v[p]
                v = vec_add(v, vec_scale(K, coef, b))
                for i, ci in enumerate(c):
                    if ci:
                        combo[i] ^= K.mul(coef, ci)
        return v

    def insert(self, v: Sequence[int]) -> bool:
        """Insert a generator; True if it enlarged the span."""
        K = self.field
        combo = [0] * (self.ngens + 1)
        combo[self.ngens] = 1
        red = self._reduce(v, combo)
        piv = next((j for j, a in enumerate(red) if a), None)
        if piv is None:
            return False
        inv = K.inv(red[piv])
        red = vec_scale(K, inv, red)
        combo = [K.mul(inv, c) for c in combo]
        self.ngens += 1
        for q, (b, c) in list(self.rows.items()):
            if b[piv]:
                coef = b[piv]
                nb = vec_add(b, vec_scale(K, coef, red))
                nc = [x ^ K.mul(coef, y) for x, y in zip(list(c) + [0] * (len(combo) - len(c)), combo)]
                self.rows[q] = (nb, tuple(nc))
        self.rows[piv] = (red, tuple(combo))
        return True

    def express(self, v: Sequence[int]) -> Vector | None:
        """Coefficients over the inserted generators, or None if outside."""
        combo = [0] * self.ngens
        red = self._reduce(v, combo)
        if not vec_is_zero(red):
            return None
        return tuple(combo)

    def __contains__(self, v: Sequence[int]) -> bool:
        return self.express(v) is not None
