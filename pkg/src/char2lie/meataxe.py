"""Module irreducibility over GF(2^k) by Norton's criterion.

Used as the large-field fallback of the simplicity test: a centerless Lie
algebra is simple iff it equals its derived subalgebra and the adjoint
representation is irreducible, and irreducibility of a matrix module can
be certified without enumerating elements.

The certificate: pick an algebra element A, factor its minimal
polynomial, and take an irreducible factor p with nullity(p(A)) equal to
deg p.  Then the module is irreducible iff one vector of ker p(A) spins
to the whole space and one vector of ker p(A^T) spins to the whole space
under the transposed action.  Any proper spin encountered along the way
certifies reducibility outright.
"""

from __future__ import annotations

import random
from typing import Sequence

from .field import GF2k
from .linalg import (
    IncrementalSpan,
    LinearMap,
    Vector,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)

Poly = tuple[int, ...]  # little-endian coefficients, no trailing zeros


def pnorm(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def pdeg(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return pnorm(out)


def pscale(K: GF2k, c: int, p: Poly) -> Poly:
    if c == 0:
        return ()
    return pnorm([K.mul(c, a) for a in p])


def pmul(K: GF2k, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] ^= K.mul(ca, cb)
    return pnorm(out)


def pdivmod(K: GF2k, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    binv = K.inv(b[-1])
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and any(r):
        if r[-1] == 0:
            r.pop()
            continue
        shift = len(r) - len(b)
        c = K.mul(r[-1], binv)
        q[shift] = c
        for i, cb in enumerate(b):
            r[shift + i] ^= K.mul(c, cb)
        r = list(pnorm(r)) or [0]
        if r == [0]:
            r = []
            break
    return pnorm(q), pnorm(r)


def pgcd(K: GF2k, a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, pdivmod(K, a, b)[1]
    return pmonic(K, a)


def pmonic(K: GF2k, p: Poly) -> Poly:
    if not p or p[-1] == 1:
        return p
    return pscale(K, K.inv(p[-1]), p)


def pderiv(p: Poly) -> Poly:
    # formal derivative in characteristic 2: only odd-degree terms survive
    return pnorm([p[i] if i % 2 == 1 else 0 for i in range(1, len(p))])


def plcm(K: GF2k, a: Poly, b: Poly) -> Poly:
    if not a:
        return b
    if not b:
        return a
    g = pgcd(K, a, b)
    q, _ = pdivmod(K, a, g)
    return pmonic(K, pmul(K, q, b))


def ppowmod(K: GF2k, base: Poly, e: int, mod: Poly) -> Poly:
    r: Poly = (1,)
    base = pdivmod(K, base, mod)[1]
    while e:
        if e & 1:
            r = pdivmod(K, pmul(K, r, base), mod)[1]
        base = pdivmod(K, pmul(K, base, base), mod)[1]
        e >>= 1
    return r


def _berlekamp_splitting(K: GF2k, f: Poly) -> list[Poly]:
    """Irreducible factors of a monic squarefree polynomial."""
    n = pdeg(f)
    if n <= 1:
        return [f]
    q = K.order
    xq = ppowmod(K, (0, 1), q, f)
    rows = []
    power: Poly = (1,)
    for _ in range(n):
        rows.append(tuple(power[i] if i < len(power) else 0 for i in range(n)))
        power = pdivmod(K, pmul(K, power, xq), f)[1]
    frob = LinearMap(K, tuple(rows))
    fixed = frob.fixed_space()
    r = fixed.dim  # number of irreducible factors
    if r == 1:
        return [f]
    factors = [f]
    for h_vec in fixed.rows:
        h = pnorm(h_vec)
        if pdeg(h) < 1:
            continue
        if len(factors) >= r:
            break
        new_factors = []
        for g in factors:
            if pdeg(g) <= 1:
                new_factors.append(g)
                continue
            pieces = []
            rest = g
            for c in K.elements():
                d = pgcd(K, rest, padd(h, (c,)))
                if 0 < pdeg(d) <= pdeg(rest):
                    pieces.append(d)
                    rest = pdivmod(K, rest, d)[0]
                    if pdeg(rest) == 0:
                        break
            if pdeg(rest) > 0:
                pieces.append(pmonic(K, rest))
            new_factors.extend(pieces if pieces else [g])
        factors = new_factors
    return factors


def distinct_irreducible_factors(K: GF2k, f: Poly) -> list[Poly]:
    f = pmonic(K, f)
    if pdeg(f) < 1:
        return []
    d = pderiv(f)
    if not d:
        # f = g(x)^2 with g recovered through square roots of coefficients
        g = pnorm([K.sqrt(f[2 * i]) for i in range(pdeg(f) // 2 + 1)])
        return distinct_irreducible_factors(K, g)
    g = pgcd(K, f, d)
    if pdeg(g) == 0:
        return sorted(_berlekamp_splitting(K, f))
    q, _ = pdivmod(K, f, g)
    seen = {}
    for p in distinct_irreducible_factors(K, g) + distinct_irreducible_factors(K, q):
        seen[p] = True
    return sorted(seen)


# ---------------------------------------------------------------------------
# Matrix-level helpers
# ---------------------------------------------------------------------------

def minpoly(K: GF2k, m: LinearMap) -> Poly:
    """Minimal polynomial via Krylov annihilators of the basis seeds."""
    n = m.nrows
    result: Poly = (1,)
    for i in range(n):
        v = unit_vec(n, i)
        if vec_is_zero(_eval_poly_vec(K, result, m, v)):
            continue
        span = IncrementalSpan(K, n)
        seq = [v]
        span.insert(v)
        while True:
            nxt = m.apply(seq[-1])
            coords = span.express(nxt)
            if coords is not None:
                ann = pnorm(list(coords) + [1])
                break
            span.insert(nxt)
            seq.append(nxt)
        result = plcm(K, result, ann)
    return result


def _eval_poly_vec(K: GF2k, p: Poly, m: LinearMap, v: Vector) -> Vector:
    acc = zero_vec(len(v))
    power = v
    for c in p:
        if c:
            acc = vec_add(acc, vec_scale(K, c, power))
        power = m.apply(power)
    return acc


def eval_poly_matrix(K: GF2k, p: Poly, m: LinearMap) -> LinearMap:
    n = m.nrows
    return LinearMap(K, tuple(_eval_poly_vec(K, p, m, unit_vec(n, i)) for i in range(n)))


def spin(K: GF2k, gens: Sequence[LinearMap], v: Vector) -> IncrementalSpan:
    """Smallest subspace containing v and invariant under all generators."""
    n = len(v)
    span = IncrementalSpan(K, n)
    queue = [v] if span.insert(v) else []
    while queue:
        u = queue.pop()
        for g in gens:
            w = g.apply(u)
            if not vec_is_zero(w) and span.insert(w):
                queue.append(w)
    return span


def _transpose(K: GF2k, m: LinearMap) -> LinearMap:
    n, c = m.nrows, m.ncols
    return LinearMap(K, tuple(tuple(m.rows[i][j] for i in range(n)) for j in range(c)))


def is_irreducible(K: GF2k, gen_rows: Sequence[Sequence[Sequence[int]]], max_attempts: int = 40) -> bool:
    """Norton irreducibility test for the module spanned by the given maps."""
    gens = [LinearMap(K, tuple(tuple(r) for r in g)) for g in gen_rows]
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nrows
    if n == 0:
        return False
    if n == 1:
        return True
    gens_t = [_transpose(K, g) for g in gens]
    rng = random.Random(0x1EA15)
    nonzero = [c for c in K.elements() if c]
    for attempt in range(max_attempts):
        a = rng.choice(gens)
        parts = rng.randrange(1, 3)
        for _ in range(parts):
            g = rng.choice(gens)
            c = rng.choice(nonzero)
            a = a.add(LinearMap(K, tuple(vec_scale(K, c, r) for r in g.rows)))
        if attempt > 3:
            a = a.then(rng.choice(gens)).add(a)
        mp = minpoly(K, a)
        for p in distinct_irreducible_factors(K, mp):
            pa = eval_poly_matrix(K, p, a)
            ker = pa.kernel()
            if ker.dim == 0:
                continue
            for v in ker.rows:
                if spin(K, gens, v).dim < n:
                    return False
            if ker.dim == pdeg(p):
                pat = eval_poly_matrix(K, p, _transpose(K, a))
                kert = pat.kernel()
                w = kert.rows[0]
                if spin(K, gens_t, w).dim < n:
                    return False
                return True
    raise RuntimeError("irreducibility undecided after random attempts; raise max_attempts")
