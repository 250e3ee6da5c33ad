"""Anticommutative algebras presented by structure constants.

An `AlgebraTable` stores, over a fixed GF(2^k), the products [x_i, x_j]
for i < j only; [x, x] = 0 is therefore built into the representation and
cannot be violated (in characteristic 2 the bracket is alternating, which
is strictly stronger than skew-symmetry).  The Jacobi identity is checked,
never assumed.

A `RestrictedAlgebra` adds a squaring map on basis elements; squares of
arbitrary elements follow from the quadratic extension rule

    (sum a_i x_i)^[2] = sum a_i^2 x_i^[2] + sum_{i<j} a_i a_j [x_i, x_j].

The 2-envelope of a centerless algebra is realized concretely inside its
derivation algebra: basis elements map to their adjoint matrices and the
squaring map is matrix squaring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property, reduce
from typing import Iterable, Sequence

from . import bitops
from .field import GF2k
from .linalg import (
    IncrementalSpan,
    LinearMap,
    Subspace,
    Vector,
    map_kernel,
    nullspace,
    pack,
    unit_vec,
    unpack,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)


class SearchSpaceTooLarge(RuntimeError):
    """An exhaustive element enumeration was requested on too large a space."""


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = dc_field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


class AlgebraTable:
    """An anticommutative algebra with a labeled basis over GF(2^k)."""

    def __init__(self, field: GF2k, labels: Sequence[str], sc: dict[tuple[int, int], Sequence[int]]):
        self.field = field
        self.labels = tuple(labels)
        n = len(self.labels)
        table: dict[tuple[int, int], Vector] = {}
        for (i, j), v in sc.items():
            if not 0 <= i < j < n:
                raise ValueError(f"structure constants must be indexed by i<j, got {(i, j)}")
            v = tuple(v)
            if len(v) != n:
                raise ValueError(f"product vector for {(i, j)} has length {len(v)} != {n}")
            if any(v):
                table[(i, j)] = v
        self.sc = table

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AlgebraTable)
            and self.field == other.field
            and self.labels == other.labels
            and self.sc == other.sc
        )

    def __repr__(self) -> str:
        return f"AlgebraTable(dim={self.n}, field={self.field.name})"

    # -- products ---------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vector:
        if i == j:
            return zero_vec(self.n)
        if i > j:
            i, j = j, i  # [x_j, x_i] = [x_i, x_j]: -1 = 1
        return self.sc.get((i, j), zero_vec(self.n))

    def bracket_with_basis(self, x: Sequence[int], j: int) -> Vector:
        """[x, e_j] for a vector x."""
        K = self.field
        acc = zero_vec(self.n)
        for i, c in enumerate(x):
            if c:
                acc = vec_add(acc, vec_scale(K, c, self.bracket_basis(i, j)))
        return acc

    def product(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        if len(x) != self.n or len(y) != self.n:
            raise ValueError("vector length does not match algebra dimension")
        K = self.field
        acc = zero_vec(self.n)
        for j, c in enumerate(y):
            if c:
                acc = vec_add(acc, vec_scale(K, c, self.bracket_with_basis(x, j)))
        return acc

    def ad(self, x: Sequence[int]) -> LinearMap:
        """Matrix of y -> [y, x] in the standard basis."""
        return LinearMap(self.field, tuple(self._ad_row(i, x) for i in range(self.n)))

    def _ad_row(self, i: int, x: Sequence[int]) -> Vector:
        K = self.field
        acc = zero_vec(self.n)
        for j, c in enumerate(x):
            if c:
                acc = vec_add(acc, vec_scale(K, c, self.bracket_basis(i, j)))
        return acc

    # -- packed GF(2) view --------------------------------------------------

    @cached_property
    def bracket_bits(self) -> list[list[int]]:
        """Full n x n table of packed basis products; GF(2) only."""
        if self.field.k != 1:
            raise ValueError("packed tables exist only over GF(2)")
        n = self.n
        br = [[0] * n for _ in range(n)]
        for (i, j), v in self.sc.items():
            m = pack(v)
            br[i][j] = m
            br[j][i] = m
        return br

    @cached_property
    def bracket_rows(self) -> list[list[int]]:
        """bracket_bits viewed as per-row arrays (row i = [e_i, e_*])."""
        return [list(row) for row in self.bracket_bits]

    def product_bits(self, x: int, y: int) -> int:
        br = self.bracket_bits
        acc = 0
        for i in bitops.iter_bits(x):
            row = br[i]
            for j in bitops.iter_bits(y):
                acc ^= row[j]
        return acc

    def ad_bits(self, x: int) -> list[int]:
        """Packed rows of ad(x): row i = [e_i, x]."""
        br = self.bracket_bits
        n = self.n
        rows = [0] * n
        for j in bitops.iter_bits(x):
            for i in range(n):
                rows[i] ^= br[i][j]
        return rows

    # -- validation ---------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check the Jacobi identity on all basis triples."""
        violations = []
        n = self.n
        for i, j, k in itertools.combinations(range(n), 3):
            s = self.bracket_with_basis(self.bracket_basis(i, j), k)
            s = vec_add(s, self.bracket_with_basis(self.bracket_basis(j, k), i))
            s = vec_add(s, self.bracket_with_basis(self.bracket_basis(k, i), j))
            if not vec_is_zero(s):
                violations.append(
                    f"Jacobi fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                )
        return ValidationReport(not violations, violations)

    # -- substructures --------------------------------------------------------

    def centralizer(self, s: Subspace | Sequence[Sequence[int]]) -> Subspace:
        """{x : [x, v] = 0 for every v in a basis of s}."""
        vecs = list(s.rows) if isinstance(s, Subspace) else [tuple(v) for v in s]
        n = self.n
        if not vecs:
            return Subspace.full(self.field, n)
        images = []
        for i in range(n):
            img: tuple = ()
            for v in vecs:
                img = img + self._ad_row(i, v)
            images.append(img)
        return map_kernel(self.field, images, n * len(vecs))

    def ideal_closure(self, seed: Subspace | Sequence[Sequence[int]]) -> Subspace:
        """Smallest subspace containing seed and closed under all products."""
        vecs = list(seed.rows) if isinstance(seed, Subspace) else [tuple(v) for v in seed]
        if self.field.k == 1:
            rows = self._ideal_closure_bits([pack(v) for v in vecs])
            return Subspace._from_bits(self.field, self.n, rows)
        span = IncrementalSpan(self.field, self.n)
        queue = [v for v in vecs if span.insert(v)]
        while queue:
            u = queue.pop()
            for j in range(self.n):
                w = self.bracket_with_basis(u, j)
                if not vec_is_zero(w) and span.insert(w):
                    queue.append(w)
        return Subspace.span(self.field, self.n, [r for r, _ in span.rows.values()])

    def _ideal_closure_bits(self, seeds: list[int], full_dim: int | None = None) -> list[int]:
        rows_table = self.bracket_rows
        span = bitops.BitSpan()
        queue = [m for m in seeds if span.insert(m)]
        stop = full_dim if full_dim is not None else self.n
        while queue and span.dim < stop:
            u = queue.pop()
            picked = [rows_table[i] for i in bitops.iter_bits(u)]
            if not picked:
                continue
            images = reduce(lambda a, b: [x ^ y for x, y in zip(a, b)], picked)
            for w in images:
                if w and span.insert(w):
                    queue.append(w)
        return span.rref()

    def derived_subalgebra(self) -> Subspace:
        return Subspace.span(self.field, self.n, list(self.sc.values()))

    def is_simple(self, method: str = "auto") -> bool:
        """Simplicity: [L, L] = L and no element generates a proper ideal.

        For q^n <= 2^20 the test enumerates every nonzero element; larger
        instances fall back to a module-irreducibility test of the adjoint
        representation (method='meataxe'), or raise `SearchSpaceTooLarge`
        when method='exhaustive' is forced.
        """
        n = self.n
        if n == 0:
            return False
        if self.derived_subalgebra().dim != n:
            return False
        qn = self.field.order ** n
        if method == "auto":
            method = "exhaustive" if qn <= 1 << 20 else "meataxe"
        if method == "exhaustive":
            if qn > 1 << 20:
                raise SearchSpaceTooLarge(f"{qn} elements to scan; use method='meataxe'")
            return self._is_simple_exhaustive()
        if method == "meataxe":
            from . import meataxe

            return meataxe.is_irreducible(self.field, [self.ad(unit_vec(n, i)).rows for i in range(n)])
        raise ValueError(f"unknown method {method!r}")

    def _is_simple_exhaustive(self) -> bool:
        n = self.n
        if self.field.k == 1:
            # basis elements first: a proper ideal shows up early when present
            order = [1 << i for i in range(n)] + [x for x in range(1, 1 << n) if x.bit_count() > 1]
            for x in order:
                if len(self._ideal_closure_bits([x])) != n:
                    return False
            return True
        K = self.field
        for coords in itertools.product(range(K.order), repeat=n):
            if not any(coords):
                continue
            if self.ideal_closure([coords]).dim != n:
                return False
        return True

    # -- spaces of linear maps -------------------------------------------------

    def maps_from_subspace(self, s: Subspace) -> list[LinearMap]:
        """Unflatten rows of an n^2-dimensional subspace into maps."""
        n = self.n
        return [
            LinearMap(self.field, tuple(tuple(r[i * n:(i + 1) * n]) for i in range(n)))
            for r in s.rows
        ]

    @staticmethod
    def flatten_map(m: LinearMap) -> Vector:
        return tuple(c for row in m.rows for c in row)

    def centroid(self) -> Subspace:
        """Maps commuting with all adjoints, as a subspace of K^(n^2).

        chi([x, y]) = [chi(x), y] for all ordered basis pairs, including
        the diagonal pairs which force [chi(x), x] = 0.
        """
        n = self.n
        eqs = self._centroid_equations()
        if self.field.k == 1:
            return Subspace._from_bits(self.field, n * n, bitops.nullspace_bits(eqs, n * n))
        return nullspace(self.field, eqs, n * n)

    def _centroid_equations(self):
        # unknown chi[m][l] at index m*n + l
        n = self.n
        K = self.field
        packed = K.k == 1
        eqs = []
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                v = self.bracket_basis(i, j)
                for l in range(n):
                    row = {} if not packed else 0
                    # chi([e_i,e_j])_l = sum_m v_m chi[m][l]
                    for m, c in enumerate(v):
                        if c:
                            u = m * n + l
                            if packed:
                                row ^= 1 << u
                            else:
                                row[u] = row.get(u, 0) ^ c
                    # [chi(e_i), e_j]_l = sum_k chi[i][k] br(k,j)_l
                    for k in range(n):
                        c = self.bracket_basis(k, j)[l]
                        if c:
                            u = i * n + k
                            if packed:
                                row ^= 1 << u
                            else:
                                row[u] = row.get(u, 0) ^ c
                    if row:
                        eqs.append(row)
        # diagonal: [chi(e_i), e_i] = 0
        for i in range(n):
            for l in range(n):
                row = {} if not packed else 0
                for k in range(n):
                    c = self.bracket_basis(k, i)[l]
                    if c:
                        u = i * n + k
                        if packed:
                            row ^= 1 << u
                        else:
                            row[u] = row.get(u, 0) ^ c
                if row:
                    eqs.append(row)
        if packed:
            return eqs
        return [tuple(r.get(u, 0) for u in range(n * n)) for r in eqs]

    def derivation_algebra(self) -> Subspace:
        """Kernel of the Leibniz system, as a subspace of K^(n^2)."""
        n = self.n
        eqs = self._derivation_equations()
        if self.field.k == 1:
            return Subspace._from_bits(self.field, n * n, bitops.nullspace_bits(eqs, n * n))
        return nullspace(self.field, eqs, n * n)

    def _derivation_equations(self):
        # unknown d[m][l] at index m*n + l; one equation per (i<j, l):
        # D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j]
        n = self.n
        packed = self.field.k == 1
        eqs = []
        for i, j in itertools.combinations(range(n), 2):
            v = self.bracket_basis(i, j)
            for l in range(n):
                row = {} if not packed else 0
                for m, c in enumerate(v):
                    if c:
                        u = m * n + l
                        if packed:
                            row ^= 1 << u
                        else:
                            row[u] = row.get(u, 0) ^ c
                for k in range(n):
                    c = self.bracket_basis(k, j)[l]
                    if c:
                        u = i * n + k
                        if packed:
                            row ^= 1 << u
                        else:
                            row[u] = row.get(u, 0) ^ c
                    c = self.bracket_basis(i, k)[l]
                    if c:
                        u = j * n + k
                        if packed:
                            row ^= 1 << u
                        else:
                            row[u] = row.get(u, 0) ^ c
                if row:
                    eqs.append(row)
        if packed:
            return eqs
        return [tuple(r.get(u, 0) for u in range(n * n)) for r in eqs]


# ---------------------------------------------------------------------------
# Restricted structure
# ---------------------------------------------------------------------------

class RestrictedAlgebra:
    """An algebra table together with a 2-map on basis elements."""

    #: set by `two_envelope`: the basis realized as maps on the source algebra
    matrix_basis: list[LinearMap] | None = None

    def __init__(self, base: AlgebraTable, sq: dict[int, Sequence[int]]):
        self.base = base
        n = base.n
        table: dict[int, Vector] = {}
        for i, v in sq.items():
            v = tuple(v)
            if len(v) != n:
                raise ValueError(f"square of basis {i} has length {len(v)} != {n}")
            if any(v):
                table[i] = v
        self.sq = table

    @property
    def field(self) -> GF2k:
        return self.base.field

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.base.labels

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RestrictedAlgebra) and self.base == other.base and self.sq == other.sq

    def square_basis(self, i: int) -> Vector:
        return self.sq.get(i, zero_vec(self.n))

    def square(self, x: Sequence[int]) -> Vector:
        """(sum a_i x_i)^[2] by the quadratic extension rule."""
        K = self.field
        acc = zero_vec(self.n)
        nz = [(i, c) for i, c in enumerate(x) if c]
        for i, c in nz:
            acc = vec_add(acc, vec_scale(K, K.sqr(c), self.square_basis(i)))
        for (i, a), (j, b) in itertools.combinations(nz, 2):
            acc = vec_add(acc, vec_scale(K, K.mul(a, b), self.base.bracket_basis(i, j)))
        return acc

    @cached_property
    def square_bits(self) -> list[int]:
        if self.field.k != 1:
            raise ValueError("packed tables exist only over GF(2)")
        return [pack(self.square_basis(i)) for i in range(self.n)]

    def square_bits_of(self, x: int) -> int:
        sq = self.square_bits
        br = self.base.bracket_bits
        acc = 0
        bits = list(bitops.iter_bits(x))
        for i in bits:
            acc ^= sq[i]
        for a in range(len(bits)):
            row = br[bits[a]]
            for b in range(a + 1, len(bits)):
                acc ^= row[bits[b]]
        return acc

    def validate(self) -> ValidationReport:
        """Jacobi plus ad(x^[2]) = (ad x)^2 on basis elements.

        The scalar and sum axioms hold identically once the basis
        condition does, because squares of general elements are defined by
        the extension rule.
        """
        report = self.base.validate()
        n = self.n
        for i in range(n):
            adx = self.base.ad(unit_vec(n, i))
            lhs = self.base.ad(self.square_basis(i))
            if adx.then(adx) != lhs:
                report.violations.append(f"ad({self.labels[i]}^[2]) != (ad {self.labels[i]})^2")
        report.ok = not report.violations
        return report

    def is_toral(self, x: Sequence[int]) -> bool:
        return tuple(x) == self.square(x)

    def restricted_closure(self, s: Subspace | Sequence[Sequence[int]]) -> Subspace:
        """Smallest subspace containing s closed under bracket and squaring.

        s must be a subalgebra of the underlying algebra.
        """
        vecs = list(s.rows) if isinstance(s, Subspace) else [tuple(v) for v in s]
        span = IncrementalSpan(self.field, self.n)
        for v in vecs:
            span.insert(v)
        for u, v in itertools.combinations(vecs, 2):
            if self.base.product(u, v) not in span:
                raise ValueError("seed is not a subalgebra")
        basis = [v for v in vecs if any(v)]
        queue = list(basis)
        while queue:
            u = queue.pop()
            new = []
            for v in basis:
                new.append(self.base.product(u, v))
            new.append(self.square(u))
            for w in new:
                if not vec_is_zero(w) and span.insert(w):
                    basis.append(w)
                    queue.append(w)
        return Subspace.span(self.field, self.n, [r for r, _ in span.rows.values()])


# ---------------------------------------------------------------------------
# Subalgebra tables and the 2-envelope
# ---------------------------------------------------------------------------

def subalgebra_table(
    t: AlgebraTable,
    s: Subspace,
    labels: Sequence[str] | None = None,
    basis: Sequence[Sequence[int]] | None = None,
) -> tuple[AlgebraTable, list[Vector]]:
    """Structure constants of a product-closed subspace in its own basis.

    Uses the canonical RREF basis of s unless an explicit basis is given.
    Returns the table and the basis vectors (in the ambient coordinates).
    """
    vecs = [tuple(v) for v in basis] if basis is not None else list(s.rows)
    span = IncrementalSpan(t.field, t.n)
    for v in vecs:
        if not span.insert(v):
            raise ValueError("supplied basis is not independent")
    d = len(vecs)
    if labels is None:
        labels = [f"y{i+1}" for i in range(d)]
    sc = {}
    for i, j in itertools.combinations(range(d), 2):
        p = t.product(vecs[i], vecs[j])
        coords = span.express(p)
        if coords is None:
            raise ValueError("subspace is not closed under the product")
        sc[(i, j)] = coords
    return AlgebraTable(t.field, labels, sc), vecs


def _mat_sq(K: GF2k, rows: tuple[Vector, ...]) -> tuple[Vector, ...]:
    m = LinearMap(K, rows)
    return m.then(m).rows


def _mat_comm(K: GF2k, a: tuple[Vector, ...], b: tuple[Vector, ...]) -> tuple[Vector, ...]:
    ma, mb = LinearMap(K, a), LinearMap(K, b)
    return tuple(vec_add(x, y) for x, y in zip(ma.then(mb).rows, mb.then(ma).rows))


def two_envelope(t: AlgebraTable) -> tuple[RestrictedAlgebra, LinearMap]:
    """The smallest square-closed subspace of Der(t) containing ad(t).

    Requires a centerless algebra, so that x -> ad(x) embeds t.  Returns
    the envelope as a restricted algebra over its own basis, and the
    embedding of t into it.  New basis directions are the actual matrix
    squares, labeled `<base>^[2]`, `<base>^[4]`, ... after the element
    they square.
    """
    K = t.field
    n = t.n
    if t.centralizer(Subspace.full(K, n)).dim != 0:
        raise ValueError("2-envelope via adjoints needs a centerless algebra")
    span = IncrementalSpan(K, n * n)
    basis_mats: list[tuple[Vector, ...]] = []
    labels: list[str] = []

    def add(mat: tuple[Vector, ...], label: str) -> bool:
        flat = tuple(c for row in mat for c in row)
        if span.insert(flat):
            basis_mats.append(mat)
            labels.append(label)
            return True
        return False

    for i in range(n):
        if not add(t.ad(unit_vec(n, i)).rows, t.labels[i]):
            raise ValueError("adjoint images are dependent; algebra has a center")

    def sq_label(label: str) -> str:
        if label.endswith("]") and "^[" in label:
            stem, _, power = label.rpartition("^[")
            return f"{stem}^[{2 * int(power[:-1])}]"
        return f"{label}^[2]"

    # close under squaring; commutators of envelope elements are retaken
    # into the span as they arise, so the result is also bracket-closed
    frontier = list(range(n))
    while frontier:
        idx = frontier.pop(0)
        m = basis_mats[idx]
        if add(_mat_sq(K, m), sq_label(labels[idx])):
            new_idx = len(basis_mats) - 1
            frontier.append(new_idx)
            for other in range(new_idx):
                if add(_mat_comm(K, basis_mats[new_idx], basis_mats[other]),
                       f"[{labels[new_idx]},{labels[other]}]"):
                    frontier.append(len(basis_mats) - 1)

    d = len(basis_mats)
    sc = {}
    for i, j in itertools.combinations(range(d), 2):
        comm = _mat_comm(K, basis_mats[i], basis_mats[j])
        coords = span.express(tuple(c for row in comm for c in row))
        assert coords is not None, "envelope not closed under commutators"
        sc[(i, j)] = coords
    table = AlgebraTable(K, labels, sc)
    sq = {}
    for i in range(d):
        coords = span.express(tuple(c for row in _mat_sq(K, basis_mats[i]) for c in row))
        assert coords is not None, "envelope not closed under squaring"
        sq[i] = coords
    env = RestrictedAlgebra(table, sq)
    env.matrix_basis = [LinearMap(K, m) for m in basis_mats]
    embed = LinearMap(K, tuple(unit_vec(d, i) for i in range(n)))
    return env, embed


def envelope_span_in_derivations(env_embedding_mats: Iterable[LinearMap], field: GF2k, n: int) -> Subspace:
    """Flattened span of a family of maps inside K^(n^2)."""
    return Subspace.span(field, n * n, [AlgebraTable.flatten_map(m) for m in env_embedding_mats])


def is_isomorphism(src: AlgebraTable, dst: AlgebraTable, m: LinearMap) -> bool:
    """Whether m is a product-preserving bijection src -> dst."""
    if src.field != dst.field or src.n != dst.n or m.nrows != src.n or m.ncols != dst.n:
        return False
    if not m.is_invertible():
        return False
    for (i, j), v in src.sc.items():
        if m.apply(v) != dst.product(m.rows[i], m.rows[j]):
            return False
    # pairs with zero product must also map to zero products
    for i, j in itertools.combinations(range(src.n), 2):
        if (i, j) not in src.sc and any(dst.product(m.rows[i], m.rows[j])):
            return False
    return True


def is_automorphism(t: AlgebraTable, m: LinearMap) -> bool:
    return is_isomorphism(t, t, m)


# ---------------------------------------------------------------------------
# Divided powers, the 3-dimensional simple algebra, tensor products
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AssocTable:
    """A commutative associative algebra on a labeled basis."""

    field: GF2k
    labels: tuple[str, ...]
    products: tuple[tuple[Vector, ...], ...]  # products[i][j] = basis_i * basis_j

    @property
    def n(self) -> int:
        return len(self.labels)


def binomial_mod2(m: int, r: int) -> int:
    # Lucas: C(m, r) is odd iff r's bits are a subset of m's
    return 1 if (r & m) == r else 0


def divided_power_o12(K: GF2k) -> tuple[AssocTable, LinearMap]:
    """The 4-dimensional divided power algebra and its lowering derivation.

    Basis 1, x, x^(2), x^(3) with x^(i) x^(j) = C(i+j, i) x^(i+j) mod 2
    (zero beyond x^(3)); the derivation sends x^(i) to x^(i-1).
    """
    labels = ("1", "x", "x2", "x3")
    n = 4
    prods = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [0] * n
            if i + j < n and binomial_mod2(i + j, i):
                v[i + j] = 1
            row.append(tuple(v))
        prods.append(tuple(row))
    lowering = LinearMap(K, tuple(unit_vec(n, i - 1) if i > 0 else zero_vec(n) for i in range(n)))
    return AssocTable(K, labels, tuple(prods)), lowering


def sl2_char2(K: GF2k) -> AlgebraTable:
    """The 3-dimensional simple algebra [e,h]=e, [f,h]=f, [e,f]=h."""
    labels = ("e", "f", "h")
    sc = {
        (0, 1): (0, 0, 1),  # [e,f] = h
        (0, 2): (1, 0, 0),  # [e,h] = e
        (1, 2): (0, 1, 0),  # [f,h] = f
    }
    return AlgebraTable(K, labels, sc)


def tensor_product_lie(t: AlgebraTable, a: AssocTable) -> AlgebraTable:
    """The Lie algebra t (x) a with [s*u, r*v] = [s,r] * uv."""
    if t.field != a.field:
        raise ValueError("field mismatch between tensor factors")
    K = t.field
    nt, na = t.n, a.n
    n = nt * na
    labels = tuple(f"{t.labels[i]}*{a.labels[p]}" for i in range(nt) for p in range(na))

    def flat(i: int, p: int) -> int:
        return i * na + p

    sc = {}
    for (i, p), (j, q) in itertools.combinations(((i, p) for i in range(nt) for p in range(na)), 2):
        lie = t.bracket_basis(i, j)
        ass = a.products[p][q]
        v = [0] * n
        for m, cl in enumerate(lie):
            if not cl:
                continue
            for r, ca in enumerate(ass):
                if ca:
                    v[flat(m, r)] ^= K.mul(cl, ca) if K.k > 1 else (cl & ca)
        if any(v):
            sc[(flat(i, p), flat(j, q))] = tuple(v)
    return AlgebraTable(K, labels, sc)
