"""Bit-packed linear algebra over GF(2).

A vector in GF(2)^n is an int whose bit j is coordinate j; a matrix is a
list of such ints, one per row.  Maps are stored in generator-image form:
rows[i] is the image of basis vector e_i, so applying a map to x is the
xor of rows[i] over the set bits i of x.  These kernels back every hot
enumeration loop; they are deliberately free of any field abstraction.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(x: int) -> Iterator[int]:
    """Indices of the set bits of x, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def rref_bits(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form with ascending pivot columns.

    Returns (rows, pivots); equal row spans yield identical output, which
    makes the result usable as a canonical form for subspaces.
    """
    basis: dict[int, int] = {}  # pivot -> row
    for row in rows:
        for p, b in basis.items():
            if (row >> p) & 1:
                row ^= b
        if row:
            p = (row & -row).bit_length() - 1
            for q in list(basis):
                if (basis[q] >> p) & 1:
                    basis[q] ^= row
            basis[p] = row
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def rank_bits(rows: Iterable[int]) -> int:
    return len(rref_bits(rows)[0])


def reduce_by(row: int, basis_rows: Iterable[int], pivots: Iterable[int]) -> int:
    """Reduce a vector by RREF rows; zero iff it lies in their span."""
    for p, b in zip(pivots, basis_rows):
        if (row >> p) & 1:
            row ^= b
    return row


def map_kernel(images: list[int], ndom: int) -> list[int]:
    """Kernel of the map e_i -> images[i], as RREF rows over GF(2)^ndom."""
    # Augment each generator with its indicator bit in the low ndom bits
    # and eliminate on the image part; rows whose image part cancels to
    # zero record kernel combinations in their low part.
    aug = [(images[i] << ndom) | (1 << i) for i in range(ndom)]
    basis: dict[int, int] = {}  # image-part pivot -> augmented row
    kernel = []
    low_mask = (1 << ndom) - 1
    for row in aug:
        img = row >> ndom
        for p in iter_bits(img):
            b = basis.get(p)
            if b is not None:
                row ^= b
                img = row >> ndom
        if img:
            basis[(img & -img).bit_length() - 1] = row
        else:
            kernel.append(row & low_mask)
    return rref_bits(kernel)[0]


def nullspace_bits(eq_rows: Iterable[int], ncols: int) -> list[int]:
    """RREF basis of {x : every equation row is orthogonal-free on x}.

    Each equation row holds the coefficients of one linear condition
    sum_j row_j x_j = 0.
    """
    red, pivots = rref_bits(eq_rows)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = 1 << f
        for row, p in zip(red, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return rref_bits(basis)[0]


def map_image(images: list[int]) -> list[int]:
    """RREF basis of the image of the map e_i -> images[i]."""
    return rref_bits(images)[0]


def apply_map(rows: list[int], x: int) -> int:
    """Image of vector x under the map with generator images `rows`."""
    acc = 0
    for i in iter_bits(x):
        acc ^= rows[i]
    return acc


def mat_mul(a: list[int], b: list[int]) -> list[int]:
    """Composite map 'a then b' in generator-image form."""
    return [apply_map(b, row) for row in a]


def mat_add(a: list[int], b: list[int]) -> list[int]:
    return [x ^ y for x, y in zip(a, b)]


def identity(n: int) -> list[int]:
    return [1 << i for i in range(n)]


def mat_inv(rows: list[int]) -> list[int] | None:
    """Inverse map, or None if the map is singular."""
    n = len(rows)
    aug = [(rows[i] << n) | (1 << i) for i in range(n)]
    basis: dict[int, int] = {}
    for row in aug:
        img = row >> n
        for p in list(iter_bits(img)):
            b = basis.get(p)
            if b is not None:
                row ^= b
                img = row >> n
        if not img:
            return None
        p = (img & -img).bit_length() - 1
        for q in list(basis):
            if (basis[q] >> (n + p)) & 1:
                basis[q] ^= row
        basis[p] = row
    low_mask = (1 << n) - 1
    return [basis[p] & low_mask for p in range(n)]


def transpose(rows: list[int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, row in enumerate(rows):
        for j in iter_bits(row):
            out[j] |= 1 << i
    return out


class BitSpan:
    """Incrementally grown subspace of GF(2)^n with membership testing."""

    def __init__(self, rows: Iterable[int] = ()):
        self.basis: dict[int, int] = {}
        for row in rows:
            self.insert(row)

    def reduce(self, v: int) -> int:
        for p, b in self.basis.items():
            if (v >> p) & 1:
                v ^= b
        return v

    def insert(self, v: int) -> bool:
        """Add v to the span; True if the dimension grew."""
        v = self.reduce(v)
        if not v:
            return False
        self.basis[(v & -v).bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def dim(self) -> int:
        return len(self.basis)

    def rref(self) -> list[int]:
        return rref_bits(self.basis.values())[0]


class BitExpresser:
    """Span that can express members as combinations of inserted vectors."""

    def __init__(self, vectors: Iterable[int] = ()):
        self.rows: dict[int, tuple[int, int]] = {}  # pivot -> (vector, combo)
        self.ngens = 0
        for v in vectors:
            self.insert(v)

    def insert(self, v: int) -> bool:
        combo = 1 << self.ngens
        self.ngens += 1
        for p, (b, c) in self.rows.items():
            if (v >> p) & 1:
                v ^= b
                combo ^= c
        if not v:
            self.ngens -= 1
            return False
        self.rows[(v & -v).bit_length() - 1] = (v, combo)
        return True

    def express(self, v: int) -> int | None:
        """Combination bitmask over inserted generators, or None."""
        combo = 0
        for p, (b, c) in self.rows.items():
            if (v >> p) & 1:
                v ^= b
                combo ^= c
        return combo if v == 0 else None


def gray_flips(n: int) -> Iterator[int]:
    """Bit to flip at each step of a Gray-code walk through GF(2)^n.

    After the t-th yielded flip, the visited vector is t ^ (t >> 1); all
    2^n vectors are visited exactly once starting from 0.
    """
    for t in range(1, 1 << n):
        yield (t & -t).bit_length() - 1
