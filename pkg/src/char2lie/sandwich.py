"""Sandwich elements, the sandwich subalgebra, and sandwich derivations.

A sandwich is an element x with (ad x)^2 = 0 and [[L,x],[L,x]] = 0; the
second condition does not follow from the first in characteristic 2.  A
sandwich derivation is a derivation D with D^2 = 0 and [D(L), D(L)] = 0.

The set-valued operations are exact over GF(2).  The defining conditions
are quadratic in the coordinates, so besides the exhaustive scans there
is a linearization solver: over GF(2) the conditions become linear in
the variables t_a and the products t_a t_b, the kernel of that system is
projected back to coordinate space, and every candidate is then verified
against the original quadratic conditions.  The projection contains all
true solutions, so the result is exact.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from . import bitops
from .field import GF2
from .liealg import AlgebraTable, RestrictedAlgebra, SearchSpaceTooLarge
from .linalg import LinearMap, Subspace, pack, unpack


def is_sandwich(t: AlgebraTable, x: Sequence[int]) -> bool:
    """(ad x)^2 = 0 and [[L,x],[L,x]] = 0, both checked exactly."""
    adx = t.ad(x)
    n = t.n
    zero = ((0,) * n,) * n
    if adx.then(adx).rows != zero:
        return False
    image = adx.image()
    for u, v in itertools.combinations_with_replacement(image.rows, 2):
        if any(t.product(u, v)):
            return False
    return True


# ---------------------------------------------------------------------------
# GF(2) quadratic systems by linearization
# ---------------------------------------------------------------------------

def solve_quadratic_gf2(nvars: int, mono_vec: Callable[[int, int], int], enum_cap: int = 20) -> list[int]:
    """All x in GF(2)^nvars with  sum_{a<=b set in x} mono_vec(a,b) = 0.

    mono_vec(a, b) packs the coefficient vector of the monomial t_a t_b
    (t_a^2 = t_a for a = b).  The system is linearized in the monomials
    and the kernel projected back to coordinate space; since substituting
    a basis of the projection yields a quadratic system in fewer
    variables, the step is iterated to a fixpoint, after which the
    remaining space is enumerated and verified against the original
    conditions.  Every step keeps all true solutions, so the returned
    list is exact and sorted.
    """
    diag_cache: dict[int, int] = {}

    def value(x: int) -> int:
        # the original quadratic map, evaluated honestly
        bits = list(bitops.iter_bits(x))
        acc = 0
        for i, a in enumerate(bits):
            acc ^= mono_vec(a, a)
            for b in bits[i + 1:]:
                acc ^= mono_vec(a, b)
        return acc

    def cached_value(x: int) -> int:
        if x not in diag_cache:
            diag_cache[x] = value(x)
        return diag_cache[x]

    basis = [1 << a for a in range(nvars)]
    while True:
        r = len(basis)
        diag = [cached_value(w) for w in basis]
        vecs = list(diag)
        for a, b in itertools.combinations(range(r), 2):
            vecs.append(cached_value(basis[a] ^ basis[b]) ^ diag[a] ^ diag[b])
        width = max((v.bit_length() for v in vecs), default=0)
        rows = [0] * width
        for u, vec in enumerate(vecs):
            for w in bitops.iter_bits(vec):
                rows[w] |= 1 << u
        kern = bitops.nullspace_bits(rows, len(vecs))
        low_mask = (1 << r) - 1
        projected = bitops.rref_bits(k & low_mask for k in kern)[0]
        new_basis = []
        for combo in projected:
            v = 0
            for a in bitops.iter_bits(combo):
                v ^= basis[a]
            new_basis.append(v)
        new_basis = bitops.rref_bits(new_basis)[0]
        if len(new_basis) == r:
            break
        basis = new_basis
    if len(basis) > enum_cap:
        raise SearchSpaceTooLarge(
            f"quadratic solution space not pinned below 2^{enum_cap} (still 2^{len(basis)})"
        )
    sols = [0] if value(0) == 0 else []
    acc = 0
    for flip in bitops.gray_flips(len(basis)):
        acc ^= basis[flip]
        if cached_value(acc) == 0:
            sols.append(acc)
    return sorted(sols)


def _check_solution_set_is_subspace(solutions: list[int]) -> bool:
    sol = set(solutions)
    rows, _ = bitops.rref_bits(solutions)
    return len(sol) == 1 << len(rows)


# ---------------------------------------------------------------------------
# Sandwich subalgebra
# ---------------------------------------------------------------------------

def _gf2_twin(t: AlgebraTable) -> AlgebraTable | None:
    """The same table over GF(2) when all structure constants are 0/1."""
    if t.field.k == 1:
        return t
    if all(c <= 1 for v in t.sc.values() for c in v):
        return AlgebraTable(GF2, t.labels, dict(t.sc))
    return None


def sandwich_elements_gf2(t: AlgebraTable) -> list[int]:
    """All packed sandwiches of a GF(2) algebra, by exhaustive scan.

    The scan walks a Gray code maintaining the rows of ad(x); the cheap
    (ad x)^2 = 0 filter runs first and the full pair condition only on
    survivors.
    """
    n = t.n
    br = t.bracket_bits
    rows = [0] * n  # rows[i] = [e_i, x]
    out = [0]
    x = 0
    for flip in bitops.gray_flips(n):
        col = br[flip]
        for i in range(n):
            rows[i] ^= col[i]
        x ^= 1 << flip
        # (ad x)^2 = 0?
        ok = True
        for i in range(n):
            r = rows[i]
            if r:
                acc = 0
                for j in bitops.iter_bits(r):
                    acc ^= rows[j]
                if acc:
                    ok = False
                    break
        if not ok:
            continue
        image, _ = bitops.rref_bits(rows)
        for u, v in itertools.combinations_with_replacement(image, 2):
            if t.product_bits(u, v):
                ok = False
                break
        if ok:
            out.append(x)
    return out


def sandwich_subalgebra(t: AlgebraTable) -> Subspace:
    """Linear span of all sandwiches (the span is already a subalgebra)."""
    if t.field.k == 1:
        sols = sandwich_elements_gf2(t)
        return Subspace._from_bits(t.field, t.n, sols)
    twin = _gf2_twin(t)
    if twin is None:
        raise SearchSpaceTooLarge(
            "sandwich scan is exact over GF(2) only; this table has no GF(2) form"
        )
    sols = sandwich_elements_gf2(twin)
    vectors = [unpack(m, t.n) for m in sols]
    for v in vectors:
        if not is_sandwich(t, v):
            raise SearchSpaceTooLarge("GF(2) sandwich span does not lift; exact scan unavailable")
    return Subspace.span(t.field, t.n, vectors)


# ---------------------------------------------------------------------------
# The weak-sandwich set of a restricted envelope
# ---------------------------------------------------------------------------

def _action_table(env: RestrictedAlgebra, ndom: int) -> list[list[int]]:
    """C[y][a] = [e_y, E_a] for y in the acted-on algebra, packed in ndom bits.

    Requires every such bracket to stay inside the first ndom coordinates.
    """
    br = env.base.bracket_bits
    mask = (1 << ndom) - 1
    table = []
    for y in range(ndom):
        row = []
        for a in range(env.n):
            v = br[y][a]
            if v & ~mask:
                raise ValueError("envelope action does not preserve the subalgebra")
            row.append(v)
        table.append(row)
    return table


def weak_sandwich_set(env: RestrictedAlgebra, ndom: int | None = None) -> Subspace:
    """{x in the envelope : [[L,x],[L,x]] = 0} where L is spanned by the
    first `ndom` basis vectors (default: the non-square part of the basis).

    Exact over GF(2) via the quadratic-system solver; larger fields have
    no exhaustive route and raise (see `vanishing_chain` for the
    field-independent certificate machinery).
    """
    if env.field.k != 1:
        raise SearchSpaceTooLarge("weak-sandwich scan is exact over GF(2) only")
    m = env.n
    if ndom is None:
        ndom = sum(1 for lab in env.labels if "^[" not in lab)
    act = _action_table(env, ndom)
    prod = AlgebraTable.product_bits  # bound below via base table
    base = env.base

    pairs = list(itertools.combinations(range(ndom), 2))

    def mono_vec(a: int, b: int) -> int:
        acc = 0
        for w, (y, z) in enumerate(pairs):
            if a == b:
                val = base.product_bits(act[y][a], act[z][a])
            else:
                val = base.product_bits(act[y][a], act[z][b]) ^ base.product_bits(act[y][b], act[z][a])
            if val:
                acc |= val << (w * ndom)
        return acc

    sols = solve_quadratic_gf2(m, mono_vec)
    assert _check_solution_set_is_subspace(sols), "weak-sandwich set is not a subspace"
    return Subspace._from_bits(env.field, m, sols)


# ---------------------------------------------------------------------------
# Sandwich derivations
# ---------------------------------------------------------------------------

def sandwich_derivations(t: AlgebraTable, der: Subspace | None = None) -> Subspace:
    """{D in Der(t) : D^2 = 0, [D(L), D(L)] = 0} as flattened maps in K^(n^2).

    Exact over GF(2): the conditions are quadratic in coordinates over a
    basis of the derivation algebra and solved by linearization.
    """
    if t.field.k != 1:
        raise SearchSpaceTooLarge("sandwich-derivation scan is exact over GF(2) only")
    if der is None:
        der = t.derivation_algebra()
    n = t.n
    mats = [row_pack for row_pack in ([pack(r) for r in m.rows] for m in t.maps_from_subspace(der))]
    r = len(mats)
    pairs = list(itertools.combinations(range(n), 2))
    nsq = n * n

    def flatten(rows: list[int]) -> int:
        acc = 0
        for i, row in enumerate(rows):
            acc |= row << (i * n)
        return acc

    def mono_vec(a: int, b: int) -> int:
        # block 1: (D^2)(e_i) coordinates; block 2: [D e_y, D e_z] per pair
        if a == b:
            sq = bitops.mat_mul(mats[a], mats[a])
            acc = flatten(sq)
            for w, (y, z) in enumerate(pairs):
                val = t.product_bits(mats[a][y], mats[a][z])
                if val:
                    acc |= val << (nsq + w * n)
            return acc
        ab = bitops.mat_mul(mats[a], mats[b])
        ba = bitops.mat_mul(mats[b], mats[a])
        acc = flatten([u ^ v for u, v in zip(ab, ba)])
        for w, (y, z) in enumerate(pairs):
            val = t.product_bits(mats[a][y], mats[b][z]) ^ t.product_bits(mats[b][y], mats[a][z])
            if val:
                acc |= val << (nsq + w * n)
        return acc

    sols = solve_quadratic_gf2(r, mono_vec)
    assert _check_solution_set_is_subspace(sols), "sandwich derivations do not form a subspace"
    flat_rows = []
    for s in sols:
        if not s:
            continue
        rows = [0] * n
        for a in bitops.iter_bits(s):
            rows = [u ^ v for u, v in zip(rows, mats[a])]
        flat_rows.append(flatten(rows))
    return Subspace._from_bits(t.field, nsq, flat_rows)


# ---------------------------------------------------------------------------
# Field-independent vanishing-chain certificates
# ---------------------------------------------------------------------------
#
# Polynomials over GF(2) in numbered variables: a polynomial is a frozenset
# of monomials, a monomial a sorted tuple of variable indices (repeats allowed,
# so (3, 3) is t_3 squared).  Addition is symmetric difference.

Poly = frozenset


def poly_var(i: int) -> Poly:
    return frozenset({(i,)})


def poly_add(p: Poly, q: Poly) -> Poly:
    return p ^ q


def poly_mul(p: Poly, q: Poly) -> Poly:
    acc: set = set()
    for m1 in p:
        for m2 in q:
            m = tuple(sorted(m1 + m2))
            if m in acc:
                acc.remove(m)
            else:
                acc.add(m)
    return frozenset(acc)


def poly_subst_zero(p: Poly, dead: set[int]) -> Poly:
    return frozenset(m for m in p if not any(v in dead for v in m))


def poly_is_power_of_single_var(p: Poly) -> int | None:
    """The variable v when p = v^(2^e) for some e >= 0, else None."""
    if len(p) != 1:
        return None
    (mono,) = p
    if len(set(mono)) != 1:
        return None
    deg = len(mono)
    if deg & (deg - 1):
        return None
    return mono[0]


def generic_bracket(env: RestrictedAlgebra, ndom: int, coeffs: list[Poly], basis_index: int) -> list[Poly]:
    """[e_basis, x] for a generic x with polynomial coordinates, inside L."""
    act = _action_table(env, ndom)
    out = [frozenset() for _ in range(ndom)]
    for a, c in enumerate(coeffs):
        if not c:
            continue
        img = act[basis_index][a]
        for j in bitops.iter_bits(img):
            out[j] = poly_add(out[j], c)
    return out


def poly_pair_bracket(base: AlgebraTable, u: list[Poly], v: list[Poly]) -> list[Poly]:
    """[u, v] for vectors with polynomial coordinates over a GF(2) table."""
    n = base.n
    out = [frozenset() for _ in range(n)]
    for i, ci in enumerate(u):
        if not ci:
            continue
        for j, cj in enumerate(v):
            if not cj:
                continue
            w = base.bracket_bits[i][j]
            if w:
                c = poly_mul(ci, cj)
                for l in bitops.iter_bits(w):
                    out[l] = poly_add(out[l], c)
    return out


def vanishing_chain(
    env: RestrictedAlgebra,
    obligations: Sequence[tuple[str, str, Sequence[tuple[str, str]]]],
    labels: Sequence[str] | None = None,
) -> list[int]:
    """Run a chain of bracket-pair vanishing arguments symbolically.

    Each obligation is (label_y, label_z, [(coord_label, forced_label), ...]):
    in [[x, e_y], [x, e_z]] = 0, the coefficient polynomial of each listed
    output coordinate, after substituting the variables already forced to
    zero, must be a (2-power) power of the single variable being forced;
    over a perfect field of characteristic 2 that makes the variable
    vanish.  Field-independent: only polynomial identities over GF(2) and
    perfectness are used.  Returns the variables not forced to zero.
    """
    if env.field.k != 1:
        raise ValueError("certificates are computed over the GF(2) form of the table")
    labels = labels if labels is not None else env.labels
    ndom = sum(1 for lab in labels if "^[" not in lab)
    m = env.n
    li = {lab: i for i, lab in enumerate(labels)}
    x = [poly_var(a) for a in range(m)]
    dead: set[int] = set()
    for lab_y, lab_z, forcings in obligations:
        u = generic_bracket(env, ndom, x, li[lab_y])
        v = generic_bracket(env, ndom, x, li[lab_z])
        w = poly_pair_bracket(env.base, u, v)
        for coord_lab, forced_lab in forcings:
            p = poly_subst_zero(w[li[coord_lab]], dead)
            var = poly_is_power_of_single_var(p)
            if var is None or var != li[forced_lab]:
                raise ValueError(
                    f"obligation [[x,{lab_y}],[x,{lab_z}]] coordinate {coord_lab} "
                    f"does not reduce to a power of {forced_lab}"
                )
            dead.add(var)
    return [a for a in range(m) if a not in dead]


def span_is_weak_sandwich(env: RestrictedAlgebra, members: Sequence[int], ndom: int | None = None) -> bool:
    """Check symbolically that every combination of the given basis vectors
    satisfies [[L,x],[L,x]] = 0 over every field of characteristic 2."""
    if ndom is None:
        ndom = sum(1 for lab in env.labels if "^[" not in lab)
    m = env.n
    coeffs = [frozenset() for _ in range(m)]
    for v, idx in zip(members, range(len(members))):
        for a in bitops.iter_bits(v):
            coeffs[a] = poly_add(coeffs[a], poly_var(idx))
    for y in range(ndom):
        u1 = generic_bracket(env, ndom, coeffs, y)
        for z in range(y + 1, ndom):
            u2 = generic_bracket(env, ndom, coeffs, z)
            if any(poly_pair_bracket(env.base, u1, u2)):
                return False
    return True
