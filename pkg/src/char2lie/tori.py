"""Toral elements, torus enumeration, Cartan certificates, root spaces.

Over GF(2) a torus of a restricted algebra is exactly a subspace all of
whose nonzero elements are toral (x, y toral have toral sum iff they
commute), so tori are enumerated by growing canonical RREF bases inside
the commuting-toral graph: a basis is extended only by toral vectors
whose pivot exceeds the last pivot and which keep the row set reduced,
which generates every torus exactly once with no dedup table.

All element-exhaustive operations require GF(2); over larger fields only
verification of supplied candidates is offered, matching the fact that
the published counts are GF(2) counts.  The heavy loops run on packed
int vectors and can be partitioned across processes via the
CHAR2LIE_WORKERS environment variable.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from . import bitops
from .field import GF2k
from .liealg import AlgebraTable, RestrictedAlgebra, SearchSpaceTooLarge, subalgebra_table, two_envelope
from .linalg import LinearMap, Subspace, Vector, map_kernel, pack, unit_vec, unpack, vec_add

MAX_SCAN_DIM = 24


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CHAR2LIE_WORKERS", "1")))
    except ValueError:
        return 1


def _pmap(fn, jobs: list):
    """Apply fn to argument tuples, forking when CHAR2LIE_WORKERS > 1."""
    w = worker_count()
    if w <= 1 or len(jobs) <= 1:
        return [fn(*j) for j in jobs]
    import multiprocessing as mp

    with mp.get_context("fork").Pool(min(w, len(jobs))) as pool:
        return pool.starmap(fn, jobs)


def _check_scan_pre(r: RestrictedAlgebra) -> None:
    if r.field.k != 1:
        raise SearchSpaceTooLarge("element-exhaustive torus operations run over GF(2) only")
    if r.n > MAX_SCAN_DIM:
        raise SearchSpaceTooLarge(f"dimension {r.n} exceeds the scan limit {MAX_SCAN_DIM}")


# ---------------------------------------------------------------------------
# Toral elements
# ---------------------------------------------------------------------------

def _toral_scan_chunk(n: int, brcols: list[list[int]], sq: list[int], high: int, low_bits: int) -> list[int]:
    """Toral masks with the given high-bit prefix, walked in Gray order."""
    base = high << low_bits
    x = base
    s = 0
    for i in bitops.iter_bits(x):
        s ^= sq[i]
    bits = list(bitops.iter_bits(x))
    for a in range(len(bits)):
        col = brcols[bits[a]]
        for b in range(a + 1, len(bits)):
            s ^= col[bits[b]]
    out = [x] if x and s == x else []
    for flip in bitops.gray_flips(low_bits):
        col = brcols[flip]
        b = 0
        y = x
        while y:
            low = y & -y
            b ^= col[low.bit_length() - 1]
            y ^= low
        s ^= sq[flip] ^ b
        x ^= 1 << flip
        if s == x:
            out.append(x)
    return out


def toral_masks(r: RestrictedAlgebra) -> list[int]:
    """All nonzero packed x with x^[2] = x, by exhaustive Gray-code scan."""
    _check_scan_pre(r)
    n = r.n
    br = r.base.bracket_bits
    sq = r.square_bits
    brcols = [[br[j][i] for j in range(n)] for i in range(n)]
    low_bits = min(n, 16)
    highs = range(1 << (n - low_bits))
    chunks = _pmap(_toral_scan_chunk, [(n, brcols, sq, h, low_bits) for h in highs])
    out = sorted(m for chunk in chunks for m in chunk)
    return out


def toral_elements(r: RestrictedAlgebra) -> list[Vector]:
    return [unpack(m, r.n) for m in toral_masks(r)]


# ---------------------------------------------------------------------------
# Torus enumeration
# ---------------------------------------------------------------------------

def _commuting_bitsets(r: RestrictedAlgebra, masks: list[int]) -> list[int]:
    """adj[i] = bitset of toral indices commuting with toral i (incl. i)."""
    n = r.n
    br = r.base.bracket_bits
    rows = []
    for m in masks:
        picked = [br[i] for i in bitops.iter_bits(m)]
        acc = [0] * n
        for p in picked:
            acc = [a ^ b for a, b in zip(acc, p)]
        rows.append(acc)  # acc[j] = [m, e_j]
    adj = [0] * len(masks)
    for a in range(len(masks)):
        ra = rows[a]
        ma = masks[a]
        adj[a] |= 1 << a
        for b in range(a + 1, len(masks)):
            # [m_a, m_b] = xor over bits j of m_b of [m_a, e_j]
            acc = 0
            y = masks[b]
            while y:
                low = y & -y
                acc ^= ra[low.bit_length() - 1]
                y ^= low
            if acc == 0:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return adj


@dataclass
class _TorusNode:
    rows: tuple[int, ...]
    pivmask: int
    rowor: int
    commset: int
    lastpiv: int


def _grow_level(nodes: list[_TorusNode], masks, pivots, adj, piv_ge) -> list[_TorusNode]:
    out = []
    for node in nodes:
        cands = node.commset & piv_ge[node.lastpiv + 1]
        c = cands
        while c:
            low = c & -c
            idx = low.bit_length() - 1
            c ^= low
            m = masks[idx]
            p = pivots[idx]
            if m & node.pivmask:
                continue
            if (node.rowor >> p) & 1:
                continue
            out.append(_TorusNode(node.rows + (m,), node.pivmask | (1 << p),
                                  node.rowor | m, node.commset & adj[idx], p))
    return out


def _torus_levels_seeded(seed_indices, masks, pivots, adj, piv_ge, max_d):
    """Counts and row tuples per dimension for the subtrees of given seeds."""
    level = [
        _TorusNode((masks[i],), 1 << pivots[i], masks[i], adj[i], pivots[i])
        for i in seed_indices
    ]
    counts = {1: len(level)}
    rows = {1: [n.rows for n in level]}
    d = 1
    while level and (max_d is None or d < max_d):
        level = _grow_level(level, masks, pivots, adj, piv_ge)
        d += 1
        counts[d] = len(level)
        rows[d] = [n.rows for n in level]
    return counts, rows


def torus_census_masks(r: RestrictedAlgebra, max_d: int | None = None,
                       torals: list[int] | None = None) -> dict[int, list[tuple[int, ...]]]:
    """RREF row tuples of every torus, keyed by dimension.

    Dimensions are explored until a level is empty (or max_d).  The final
    dict also contains the first empty level as evidence of termination.
    """
    _check_scan_pre(r)
    masks = torals if torals is not None else toral_masks(r)
    if not masks:
        return {1: []}
    order = sorted(range(len(masks)), key=lambda i: ((masks[i] & -masks[i]).bit_length() - 1, masks[i]))
    masks = [masks[i] for i in order]
    pivots = [(m & -m).bit_length() - 1 for m in masks]
    adj = _commuting_bitsets(r, masks)
    piv_ge = [0] * (r.n + 2)
    for i, p in enumerate(pivots):
        piv_ge[p] |= 1 << i
    for p in range(r.n - 1, -1, -1):
        piv_ge[p] |= piv_ge[p + 1]

    w = worker_count()
    seeds = list(range(len(masks)))
    if w <= 1:
        parts = [_torus_levels_seeded(seeds, masks, pivots, adj, piv_ge, max_d)]
    else:
        chunk = (len(seeds) + w - 1) // w
        jobs = [(seeds[i:i + chunk], masks, pivots, adj, piv_ge, max_d) for i in range(0, len(seeds), chunk)]
        parts = _pmap(_torus_levels_seeded, jobs)
    merged: dict[int, list[tuple[int, ...]]] = {}
    for counts, rows in parts:
        for d, lst in rows.items():
            merged.setdefault(d, []).extend(lst)
    for d in merged:
        merged[d].sort()
    return merged


def enumerate_tori(r: RestrictedAlgebra, d: int) -> tuple[int, list[Subspace]]:
    """Count and canonical list of all d-dimensional tori (as subspaces)."""
    if d < 1:
        raise ValueError("torus dimension must be positive")
    levels = torus_census_masks(r, max_d=d)
    rows = levels.get(d, [])
    spaces = [Subspace._from_bits(r.field, r.n, rws) for rws in rows]
    return len(rows), spaces


def bases_per_torus(d: int) -> int:
    """Unordered bases of GF(2)^d: |GL(d,2)| / d!.

    A d-dimensional torus contains exactly this many d-element sets of
    pairwise commuting, linearly independent toral elements, which is the
    unit the published brute-force census counts in.
    """
    gl = 1
    for i in range(d):
        gl *= (1 << d) - (1 << i)
    fact = 1
    for i in range(2, d + 1):
        fact *= i
    return gl // fact


def _subset_dfs_chunk(adj: list[int], masks: list[int], seeds: list[int], max_d: int | None) -> dict[int, int]:
    counts: dict[int, int] = {}

    def rec(last_idx: int, cands: int, sums: set[int], depth: int) -> None:
        counts[depth] = counts.get(depth, 0) + 1
        if max_d is not None and depth >= max_d:
            return
        c = cands & ~((1 << (last_idx + 1)) - 1)
        while c:
            low = c & -c
            idx = low.bit_length() - 1
            c ^= low
            m = masks[idx]
            if m in sums:
                continue
            rec(idx, cands & adj[idx], sums | {s ^ m for s in sums} | {m}, depth + 1)

    for i in seeds:
        rec(i, adj[i], {masks[i]}, 1)
    return counts


def commuting_subset_counts(r: RestrictedAlgebra, max_d: int | None = None,
                            torals: list[int] | None = None) -> dict[int, int]:
    """Numbers of d-element sets of pairwise commuting, independent toral
    elements; each such set spans a torus, so this is the subspace count
    times `bases_per_torus(d)`.  Counted directly by depth-first search,
    independently of the subspace enumeration."""
    _check_scan_pre(r)
    masks = torals if torals is not None else toral_masks(r)
    if not masks:
        return {}
    adj = _commuting_bitsets(r, masks)
    seeds = list(range(len(masks)))
    w = worker_count()
    if w <= 1:
        parts = [_subset_dfs_chunk(adj, masks, seeds, max_d)]
    else:
        chunk = (len(seeds) + w - 1) // w
        parts = _pmap(_subset_dfs_chunk,
                      [(adj, masks, seeds[i:i + chunk], max_d) for i in range(0, len(seeds), chunk)])
    out: dict[int, int] = {}
    for part in parts:
        for d, c in part.items():
            out[d] = out.get(d, 0) + c
    return out


# ---------------------------------------------------------------------------
# Normalizers and Cartan certificates
# ---------------------------------------------------------------------------

def normalizer(r: RestrictedAlgebra, s: Subspace) -> Subspace:
    """{x : [x, s] <= s} inside the algebra carrying s."""
    t = r.base
    n = t.n
    if s.dim == 0:
        return Subspace.full(t.field, n)
    images = []
    for i in range(n):
        img: tuple = ()
        for v in s.rows:
            img = img + s.reduce(t._ad_row(i, v))
        images.append(img)
    return map_kernel(t.field, images, n * max(1, s.dim))


def is_cartan(r: RestrictedAlgebra, torus: Subspace) -> bool:
    """A torus equal to its own normalizer is a Cartan subalgebra."""
    return normalizer(r, torus) == torus


def _selfnorm_chunk(n: int, br: list[list[int]], tori_rows: list[tuple[int, ...]]) -> int:
    """How many of the given tori are self-normalizing."""
    good = 0
    for rows in tori_rows:
        d = len(rows)
        pivots = [(m & -m).bit_length() - 1 for m in rows]
        aug = []
        for i in range(n):
            img = 0
            for k, tmask in enumerate(rows):
                v = 0
                y = tmask
                row = br[i]
                while y:
                    low = y & -y
                    v ^= row[low.bit_length() - 1]
                    y ^= low
                for p, b in zip(pivots, rows):
                    if (v >> p) & 1:
                        v ^= b
                img |= v << (k * n)
            aug.append((img, 1 << i))
        basis = {}
        kernel = 0
        for img, low in aug:
            while img:
                p = (img & -img).bit_length() - 1
                hit = basis.get(p)
                if hit is None:
                    break
                img ^= hit[0]
                low ^= hit[1]
            if img:
                basis[(img & -img).bit_length() - 1] = (img, low)
            else:
                kernel += 1
        if kernel == d:
            good += 1
    return good


def count_self_normalizing(r: RestrictedAlgebra, tori_rows: list[tuple[int, ...]]) -> int:
    _check_scan_pre(r)
    br = r.base.bracket_bits
    w = worker_count()
    if w <= 1 or len(tori_rows) < 64:
        return _selfnorm_chunk(r.n, br, tori_rows)
    chunk = (len(tori_rows) + w - 1) // w
    jobs = [(r.n, br, tori_rows[i:i + chunk]) for i in range(0, len(tori_rows), chunk)]
    return sum(_pmap(_selfnorm_chunk, jobs))


@dataclass
class ToralRankResult:
    rank: int
    witness: Subspace | None
    witness_is_cartan: bool
    counts: dict[int, int]


def toral_rank(t: AlgebraTable, env: RestrictedAlgebra | None = None) -> ToralRankResult:
    """Maximal torus dimension in the 2-envelope, with a witness torus.

    When the witness is self-normalizing, that certifies the rank stays
    maximal after any base-field extension, so the field-relative number
    is also the absolute one.
    """
    if env is None:
        env, _ = two_envelope(t)
    levels = torus_census_masks(env)
    counts = {d: len(v) for d, v in levels.items()}
    rank = max((d for d, c in counts.items() if c), default=0)
    if rank == 0:
        return ToralRankResult(0, None, False, counts)
    witness_rows = levels[rank][0]
    witness = Subspace._from_bits(env.field, env.n, witness_rows)
    cartan = count_self_normalizing(env, [witness_rows]) == 1
    return ToralRankResult(rank, witness, cartan, counts)


# ---------------------------------------------------------------------------
# Root decompositions
# ---------------------------------------------------------------------------

@dataclass
class RootDecomposition:
    field: GF2k
    torus: tuple[Vector, ...]
    rootspaces: dict[tuple[int, ...], Subspace]
    zero_space: Subspace
    dim: int

    def weight_of(self, v: Sequence[int]) -> tuple[int, ...] | None:
        for w, s in self.rootspaces.items():
            if v in s:
                return w
        return None


def _action_on_algebra(t: AlgebraTable, env: RestrictedAlgebra, x: Sequence[int]) -> LinearMap:
    """The map of L induced by bracketing with an envelope element."""
    n = t.n
    rows = []
    for i in range(n):
        full = env.base._ad_row(i, tuple(x) + (0,) * (env.n - len(x)) if len(x) < env.n else x)
        if any(full[n:]):
            raise ValueError("envelope element does not act on the subalgebra")
        rows.append(full[:n])
    return LinearMap(t.field, tuple(rows))


def root_decomposition(t: AlgebraTable, env: RestrictedAlgebra, torus: Sequence[Sequence[int]]) -> RootDecomposition:
    """Simultaneous 0/1 eigenspace decomposition of L under a torus.

    The torus is given by an ordered list of envelope vectors; they must
    be toral and commute, which forces every adjoint to be idempotent so
    the only eigenvalues are 0 and 1.
    """
    K = t.field
    torus = [tuple(v) for v in torus]
    for v in torus:
        if env.square(v) != v:
            raise ValueError("torus basis element is not toral")
    for u, v in itertools.combinations(torus, 2):
        if any(env.base.product(u, v)):
            raise ValueError("torus basis elements do not commute")
    maps = [_action_on_algebra(t, env, v) for v in torus]
    n = t.n
    spaces: list[tuple[tuple[int, ...], list[Vector]]] = [((), [unit_vec(n, i) for i in range(n)])]
    for m in maps:
        nxt = []
        for weight, basis in spaces:
            if not basis:
                continue
            for eig in (0, 1):
                images = []
                for v in basis:
                    img = m.apply(v)
                    if eig:
                        img = vec_add(img, v)
                    images.append(img)
                combos = map_kernel(K, images, n)
                vecs = []
                for c in combos.rows:
                    acc = (0,) * n
                    for ci, v in zip(c, basis):
                        if ci:
                            acc = vec_add(acc, tuple(K.mul(ci, a) for a in v) if K.k > 1 else v)
                    vecs.append(acc)
                nxt.append((weight + (eig,), vecs))
        spaces = nxt
    rootspaces = {}
    zero = None
    total = 0
    for weight, vecs in spaces:
        sub = Subspace.span(K, n, vecs)
        total += sub.dim
        if any(weight):
            if sub.dim:
                rootspaces[weight] = sub
        else:
            zero = sub
    if total != n:
        raise RuntimeError("eigenspaces do not decompose the algebra")
    return RootDecomposition(K, tuple(torus), rootspaces, zero or Subspace.zero(K, n), n)


def is_thin(dec: RootDecomposition) -> tuple[bool, str]:
    """Thin: dim L = 2^m - 1, every nonzero weight occurs with a
    one-dimensional root space, and the zero-weight space vanishes."""
    m = len(dec.torus)
    if dec.dim != (1 << m) - 1:
        return False, f"dim {dec.dim} != 2^{m} - 1"
    if dec.zero_space.dim:
        return False, f"zero-weight space has dim {dec.zero_space.dim}"
    bad = [w for w, s in dec.rootspaces.items() if s.dim != 1]
    if bad or len(dec.rootspaces) != (1 << m) - 1:
        return False, "root spaces are not exactly the nonzero weights in dimension one"
    return True, f"all {(1 << m) - 1} nonzero weights occur with one-dimensional spaces"


def _weight_label(w: tuple[int, ...]) -> str:
    return "".join(str(b) for b in w)


def thin_table(t: AlgebraTable, dec: RootDecomposition,
               chosen: dict[tuple[int, ...], Sequence[int]] | None = None) -> AlgebraTable:
    """The multiplication table in the root-vector basis of a thin
    decomposition: every product is the root vector of the weight sum, or
    zero.  Defaults to the canonical basis vector of each root space."""
    ok, why = is_thin(dec)
    if not ok:
        raise ValueError(f"decomposition is not thin: {why}")
    K = t.field
    weights = sorted(dec.rootspaces, key=lambda w: int(_weight_label(w), 2))
    vecs = {}
    for w in weights:
        if chosen is not None and w in chosen:
            v = tuple(chosen[w])
            if v not in dec.rootspaces[w]:
                raise ValueError(f"chosen vector for {_weight_label(w)} is not in its root space")
            vecs[w] = v
        else:
            vecs[w] = dec.rootspaces[w].rows[0]
    labels = [f"e{_weight_label(w)}" for w in weights]
    index = {w: i for i, w in enumerate(weights)}
    sc = {}
    nn = len(weights)
    for a, b in itertools.combinations(range(nn), 2):
        wa, wb = weights[a], weights[b]
        p = t.product(vecs[wa], vecs[wb])
        if not any(p):
            continue
        wc = tuple(x ^ y for x, y in zip(wa, wb))
        target = vecs[wc]
        k = next(i for i, c in enumerate(target) if c)
        coeff = K.mul(p[k], K.inv(target[k]))
        if p != tuple(K.mul(coeff, c) for c in target):
            raise ValueError(
                f"[{labels[a]}, {labels[b]}] is not proportional to e{_weight_label(wc)}"
            )
        v = [0] * nn
        v[index[wc]] = coeff
        sc[(a, b)] = v
    return AlgebraTable(K, labels, sc)


def match_thin_labels(t: AlgebraTable, env: RestrictedAlgebra,
                      torus: Sequence[Sequence[int]],
                      printed: dict[str, Sequence[int]]) -> list[int]:
    """Fix the bit-label correspondence by eigenvalue computation.

    Returns the permutation perm such that bit position k of each printed
    label is the eigenvalue under torus generator perm[k]; fails loudly if
    no permutation reproduces all labels.
    """
    maps = [_action_on_algebra(t, env, v) for v in torus]
    eigs = {}
    for label, vec in printed.items():
        tup = []
        for m in maps:
            img = m.apply(vec)
            if img == tuple(vec):
                tup.append(1)
            elif not any(img):
                tup.append(0)
            else:
                raise ValueError(f"printed vector {label} is not a simultaneous eigenvector")
        eigs[label] = tup
    npos = len(next(iter(printed)))
    for perm in itertools.permutations(range(len(torus)), npos):
        if all(all(int(label[k]) == tup[perm[k]] for k in range(npos)) for label, tup in eigs.items()):
            return list(perm)
    raise ValueError("no bit-position permutation matches the printed labels")


# ---------------------------------------------------------------------------
# Thin check over every maximal torus
# ---------------------------------------------------------------------------

def _thin_chunk(nl: int, br_block: list[list[int]], tori_rows: list[tuple[int, ...]]) -> int:
    """How many of the given tori give a thin decomposition of L."""
    good = 0
    for rows in tori_rows:
        m = len(rows)
        mats = []
        for tmask in rows:
            rowsM = [0] * nl
            y = tmask
            while y:
                low = y & -y
                j = low.bit_length() - 1
                y ^= low
                for i in range(nl):
                    rowsM[i] ^= br_block[i][j]
            mats.append(rowsM)
        subspaces = [(False, [1 << i for i in range(nl)])]  # (nonzero-weight?, basis)
        ok = True
        for rowsM in mats:
            nxt = []
            for nzw, basis in subspaces:
                imgs = []
                for v in basis:
                    acc = 0
                    y = v
                    while y:
                        low = y & -y
                        acc ^= rowsM[low.bit_length() - 1]
                        y ^= low
                    imgs.append(acc)
                for eig in (0, 1):
                    bas = {}
                    ker = []
                    for img, v in zip(imgs, basis):
                        iv = img ^ (v if eig else 0)
                        low = v
                        while iv:
                            p = (iv & -iv).bit_length() - 1
                            hit = bas.get(p)
                            if hit is None:
                                break
                            iv ^= hit[0]
                            low ^= hit[1]
                        if iv:
                            bas[(iv & -iv).bit_length() - 1] = (iv, low)
                        else:
                            ker.append(low)
                    nxt.append((nzw or eig == 1, ker))
            subspaces = nxt
        for nzw, basis in subspaces:
            if nzw:
                if len(basis) != 1:
                    ok = False
                    break
            elif len(basis) != 0:
                ok = False
                break
        if ok:
            good += 1
    return good


def count_thin(t: AlgebraTable, env: RestrictedAlgebra, tori_rows: list[tuple[int, ...]]) -> int:
    """How many of the given envelope tori decompose L thinly."""
    if t.field.k != 1:
        raise SearchSpaceTooLarge("the bulk thin check runs over GF(2) only")
    nl = t.n
    br_env = env.base.bracket_bits
    mask = (1 << nl) - 1
    br_block = []
    for i in range(nl):
        row = br_env[i]
        if any(v & ~mask for v in row):
            raise ValueError("envelope action does not preserve the algebra")
        br_block.append(list(row))
    w = worker_count()
    if w <= 1 or len(tori_rows) < 64:
        return _thin_chunk(nl, br_block, tori_rows)
    chunk = (len(tori_rows) + w - 1) // w
    jobs = [(nl, br_block, tori_rows[i:i + chunk]) for i in range(0, len(tori_rows), chunk)]
    return sum(_pmap(_thin_chunk, jobs))


# ---------------------------------------------------------------------------
# Centralizer census and the invariant profile
# ---------------------------------------------------------------------------

@dataclass
class CentralizerRecord:
    toral: int                 # packed envelope vector
    dim: int
    simple: bool
    centroid_dim: int | None
    rank: int | None


@dataclass
class CentralizerCensus:
    records: list[CentralizerRecord]

    @property
    def dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.records:
            out[r.dim] = out.get(r.dim, 0) + 1
        return out

    @property
    def simple_count(self) -> int:
        return sum(1 for r in self.records if r.simple)

    @property
    def central_simple_count(self) -> int:
        return sum(1 for r in self.records if r.simple and r.centroid_dim == 1)

    @property
    def rank_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.records:
            if r.rank is not None:
                out[r.rank] = out.get(r.rank, 0) + 1
        return out


def _census_chunk(nl: int, br_block: list[list[int]], torals: list[int]) -> list[tuple[int, int, bool, int | None, int | None]]:
    from .field import GF2

    out = []
    for h in torals:
        images = []
        for i in range(nl):
            acc = 0
            y = h
            row = br_block[i]
            while y:
                low = y & -y
                acc ^= row[low.bit_length() - 1]
                y ^= low
            images.append(acc)
        cent = bitops.map_kernel(images, nl)
        d = len(cent)
        expr = bitops.BitExpresser(cent)
        sc = {}
        closed = True
        for a, b in itertools.combinations(range(d), 2):
            p = 0
            # product of centralizer basis vectors inside L
            for i in bitops.iter_bits(cent[a]):
                y = cent[b]
                row = br_block[i]  # [e_i, e_j] row over envelope columns: first nl are L
                while y:
                    low = y & -y
                    p ^= row[low.bit_length() - 1]
                    y ^= low
            c = expr.express(p)
            if c is None:
                closed = False
                break
            if c:
                sc[(a, b)] = unpack(c, d)
        if not closed:
            out.append((h, d, False, None, None))
            continue
        sub = AlgebraTable(GF2, [f"y{i+1}" for i in range(d)], sc)
        simple = sub.is_simple()
        centroid_dim = sub.centroid().dim if simple else None
        rank = None
        if simple and centroid_dim == 1:
            env_sub, _ = two_envelope(sub)
            levels = torus_census_masks(env_sub)
            rank = max((dd for dd, v in levels.items() if v), default=0)
        out.append((h, d, simple, centroid_dim, rank))
    return out


def centralizer_census(t: AlgebraTable, env: RestrictedAlgebra,
                       torals: list[int] | None = None) -> CentralizerCensus:
    """For every toral element of the envelope: the dimension of its
    centralizer in L, simplicity and centroid of that subalgebra, and the
    GF(2) toral rank of the simple ones."""
    if t.field.k != 1:
        raise SearchSpaceTooLarge("the census runs over GF(2) only")
    if torals is None:
        torals = toral_masks(env)
    nl = t.n
    br_env = env.base.bracket_bits
    br_block = [list(br_env[i]) for i in range(nl)]
    w = worker_count()
    if w <= 1 or len(torals) < 16:
        raw = _census_chunk(nl, br_block, torals)
    else:
        chunk = (len(torals) + w - 1) // w
        jobs = [(nl, br_block, torals[i:i + chunk]) for i in range(0, len(torals), chunk)]
        raw = [rec for part in _pmap(_census_chunk, jobs) for rec in part]
    return CentralizerCensus([CentralizerRecord(*r) for r in raw])


@dataclass
class InvariantProfile:
    """The (TR, N1, Nm, S) fingerprint of an algebra over GF(2)."""

    TR: int
    N1: int
    Nm: int
    S: int


def invariant_profile(t: AlgebraTable, env: RestrictedAlgebra | None = None,
                      levels: dict[int, list] | None = None) -> InvariantProfile:
    """TR = toral rank, N1 = toral elements, Nm = tori of dimension TR in
    the 2-envelope, S = dimension of the sandwich subalgebra."""
    from . import sandwich

    if env is None:
        env, _ = two_envelope(t)
    if levels is None:
        levels = torus_census_masks(env)
    n1 = len(levels.get(1, []))
    tr = max((d for d, v in levels.items() if v), default=0)
    # Nm in published-census units: independent commuting subsets, i.e.
    # subspaces times the number of unordered bases of GF(2)^TR
    nm = len(levels.get(tr, [])) * bases_per_torus(tr) if tr else 0
    s = sandwich.sandwich_subalgebra(t).dim
    return InvariantProfile(tr, n1, nm, s)
