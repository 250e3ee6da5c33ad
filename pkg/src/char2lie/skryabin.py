"""The 15-dimensional simple algebra family L(beta, delta) and its data.

This module holds every pinned table and named element: the family's
multiplication table on the standard basis {b1..b9, c1..c5, d}, the
19-dimensional restricted envelope, the two parameter-removing basis
changes, the semisimple algebra the family deforms, a distinguished
4-dimensional torus in the envelope, the 15 root vectors of its thin
decomposition together with their multiplication table, a 7-dimensional
centralizer basis of Hamiltonian type, and the catalog of automorphism-
invariant subspaces with the recipes that characterize them intrinsically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import bitops, sandwich
from .field import GF2, GF2k
from .liealg import (
    AlgebraTable,
    RestrictedAlgebra,
    divided_power_o12,
    sl2_char2,
    tensor_product_lie,
)
from .linalg import LinearMap, Subspace, Vector, pack, unit_vec, unpack, vec_add, vec_scale

L_LABELS = ("b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9",
            "c1", "c2", "c3", "c4", "c5", "d")
ENV_LABELS = L_LABELS + ("b1^[2]", "b4^[2]", "b7^[2]", "c3^[2]")

_LI = {lab: i for i, lab in enumerate(L_LABELS)}
_EI = {lab: i for i, lab in enumerate(ENV_LABELS)}

# Products of the standard basis; coefficients are 1 unless marked with the
# deformation parameters.  Omitted pairs multiply to zero.
_FAMILY_PRODUCTS: dict[tuple[str, str], list[tuple[str, str]]] = {
    ("b1", "b2"): [("1", "b3")],
    ("b1", "b3"): [("1", "b1")],
    ("b1", "b4"): [("beta", "c5")],
    ("b1", "b5"): [("1", "b6")],
    ("b1", "b6"): [("1", "b4")],
    ("b1", "b7"): [("delta", "c4")],
    ("b1", "b8"): [("1", "b9")],
    ("b1", "b9"): [("1", "b7")],
    ("b1", "c1"): [("delta", "c5"), ("1", "d")],
    ("b1", "c2"): [("1", "c3")],
    ("b1", "c3"): [("1", "c1")],
    ("b1", "c4"): [("1", "b2")],
    ("b1", "c5"): [("1", "b5")],
    ("b1", "d"): [("beta", "c2")],
    ("b2", "b3"): [("1", "b2")],
    ("b2", "b4"): [("1", "b6")],
    ("b2", "b6"): [("1", "b5")],
    ("b2", "b7"): [("1", "b9")],
    ("b2", "b9"): [("1", "b8")],
    ("b2", "c1"): [("1", "c3")],
    ("b2", "c3"): [("1", "c2")],
    ("b3", "b4"): [("1", "b4")],
    ("b3", "b5"): [("1", "b5")],
    ("b3", "b7"): [("1", "b7")],
    ("b3", "b8"): [("1", "b8")],
    ("b3", "c1"): [("1", "c1")],
    ("b3", "c2"): [("1", "c2")],
    ("b4", "b7"): [("delta", "c5"), ("1", "d")],
    ("b4", "b8"): [("1", "c3")],
    ("b4", "b9"): [("1", "c1")],
    ("b4", "c1"): [("1", "b3")],
    ("b4", "c2"): [("1", "c4")],
    ("b4", "c3"): [("1", "b2")],
    ("b4", "c4"): [("1", "b5")],
    ("b4", "d"): [("1", "b1")],
    ("b5", "b7"): [("1", "c3")],
    ("b5", "b9"): [("1", "c2")],
    ("b5", "c1"): [("1", "c4")],
    ("b5", "d"): [("1", "b2")],
    ("b6", "b7"): [("1", "c1")],
    ("b6", "b8"): [("1", "c2")],
    ("b6", "c3"): [("1", "c4")],
    ("b6", "d"): [("1", "b3")],
    ("b7", "c1"): [("1", "b6")],
    ("b7", "c2"): [("1", "c5")],
    ("b7", "c3"): [("1", "b5")],
    ("b7", "c4"): [("1", "b8")],
    ("b7", "c5"): [("1", "c2")],
    ("b7", "d"): [("1", "b4")],
    ("b8", "c1"): [("1", "c5")],
    ("b8", "d"): [("1", "b5")],
    ("b9", "c3"): [("1", "c5")],
    ("b9", "d"): [("1", "b6")],
    ("c1", "c3"): [("1", "b8")],
    ("c1", "c4"): [("1", "c2")],
    ("c1", "d"): [("1", "b7")],
    ("c2", "d"): [("1", "b8")],
    ("c3", "d"): [("1", "b9")],
    ("c5", "d"): [("1", "c4")],
}

# Brackets of the standard basis with the four square generators, and of the
# square generators with one another.
_ENV_EXTRA_PRODUCTS: dict[tuple[str, str], str] = {
    ("b1", "c3^[2]"): "b8",
    ("b2", "b1^[2]"): "b1",
    ("b4", "b7^[2]"): "b4",
    ("b4", "c3^[2]"): "c2",
    ("b5", "b1^[2]"): "b4",
    ("b5", "b7^[2]"): "b5",
    ("b6", "b7^[2]"): "b6",
    ("b7", "b4^[2]"): "b1",
    ("b8", "b1^[2]"): "b7",
    ("b8", "b4^[2]"): "b2",
    ("b9", "b4^[2]"): "b3",
    ("c1", "b4^[2]"): "b4",
    ("c1", "b7^[2]"): "c1",
    ("c2", "b1^[2]"): "c1",
    ("c2", "b4^[2]"): "b5",
    ("c2", "b7^[2]"): "c2",
    ("c3", "b1^[2]"): "d",
    ("c3", "b4^[2]"): "b6",
    ("c3", "b7^[2]"): "c3",
    ("c4", "b1^[2]"): "b3",
    ("c5", "b1^[2]"): "b6",
    ("c5", "b7^[2]"): "c5",
    ("d", "b7^[2]"): "d",
    ("d", "c3^[2]"): "c5",
    ("b1^[2]", "c3^[2]"): "b9",
    ("b4^[2]", "c3^[2]"): "c4",
}

# The 2-map on the envelope basis: label -> label (missing means square 0).
_ENV_SQUARES: dict[str, str] = {
    "b1": "b1^[2]",
    "b2": "c4",
    "b3": "b3",
    "b4": "b4^[2]",
    "b7": "b7^[2]",
    "c1": "b9",
    "c3": "c3^[2]",
    "d": "b4^[2]",
    "b7^[2]": "b7^[2]",
}


@dataclass(frozen=True)
class SkryabinParams:
    """The two deformation parameters and the ground field."""

    beta: int
    delta: int
    field: GF2k


def skryabin_table(field: GF2k, beta: int = 0, delta: int = 0) -> AlgebraTable:
    """The 15-dimensional simple algebra L(beta, delta) on the standard basis."""
    field.check(beta)
    field.check(delta)
    coeff = {"1": 1, "beta": beta, "delta": delta}
    n = len(L_LABELS)
    sc: dict[tuple[int, int], list[int]] = {}
    for (la, lb), terms in _FAMILY_PRODUCTS.items():
        v = [0] * n
        for kind, target in terms:
            c = coeff[kind]
            if c:
                v[_LI[target]] ^= c
        i, j = _LI[la], _LI[lb]
        if any(v):
            sc[(i, j) if i < j else (j, i)] = v
    return AlgebraTable(field, L_LABELS, sc)


def skryabin_table_from_params(p: SkryabinParams) -> AlgebraTable:
    return skryabin_table(p.field, p.beta, p.delta)


def skryabin_envelope(field: GF2k) -> RestrictedAlgebra:
    """The 19-dimensional restricted envelope of L(0,0), from its own table."""
    n = len(ENV_LABELS)
    sc: dict[tuple[int, int], list[int]] = {}

    def put(la: str, lb: str, terms: list[tuple[str, str]]) -> None:
        v = [0] * n
        for kind, target in terms:
            if kind == "1":
                v[_EI[target]] ^= 1
        i, j = _EI[la], _EI[lb]
        if any(v):
            sc[(i, j) if i < j else (j, i)] = v

    for (la, lb), terms in _FAMILY_PRODUCTS.items():
        put(la, lb, [(k, t) for k, t in terms if k == "1"])
    for (la, lb), target in _ENV_EXTRA_PRODUCTS.items():
        put(la, lb, [("1", target)])
    table = AlgebraTable(field, ENV_LABELS, sc)
    sq = {}
    for lab, target in _ENV_SQUARES.items():
        v = [0] * n
        v[_EI[target]] = 1
        sq[_EI[lab]] = v
    return RestrictedAlgebra(table, sq)


def embed_in_envelope(v) -> Vector:
    """A vector of L viewed inside the envelope coordinates."""
    return tuple(v) + (0,) * (len(ENV_LABELS) - len(L_LABELS))


# ---------------------------------------------------------------------------
# Basis changes trivializing the parameters
# ---------------------------------------------------------------------------

def _map_from_corrections(field: GF2k, corrections: dict[str, list[tuple[int, str]]]) -> LinearMap:
    n = len(L_LABELS)
    rows = []
    for i, lab in enumerate(L_LABELS):
        row = list(unit_vec(n, i))
        for c, target in corrections.get(lab, []):
            row[_LI[target]] ^= c
        rows.append(tuple(row))
    return LinearMap(field, tuple(rows))


def lemma_basis_change(which: int, param: int, field: GF2k) -> LinearMap:
    """The basis change removing one deformation parameter.

    which=1 removes delta: an isomorphism L(beta,0) -> L(beta,delta) for
    every beta.  which=2 removes beta: an isomorphism L(0,0) -> L(beta,0).
    Rows give the primed images of the standard basis; unlisted basis
    elements are fixed.
    """
    field.check(param)
    if which == 1:
        s = field.sqrt(param)
        return _map_from_corrections(field, {
            "b1": [(s, "b6"), (param, "b8")],
            "b3": [(s, "b5")],
            "b4": [(param, "c2")],
            "b7": [(s, "c3")],
            "b9": [(s, "c2")],
            "c1": [(s, "c4")],
            "d": [(s, "b2")],
        })
    if which == 2:
        return _lemma2_map(field, param)
    raise ValueError("which must be 1 or 2")


def _lemma2_map(field: GF2k, param: int, corrected: bool | None = None) -> LinearMap:
    t = field.sqr(param)
    if corrected is None:
        corrected = lemma2_uses_corrected_c1(field)
    corrections: dict[str, list[tuple[int, str]]] = {
        "b1": [(t, "b9")],
        "b3": [(t, "b8")],
        "b4": [(t, "c3")],
        "b6": [(t, "c2")],
        "d": [(t, "b5")],
    }
    n = len(L_LABELS)
    rows = []
    for i, lab in enumerate(L_LABELS):
        row = list(unit_vec(n, i))
        for c, target in corrections.get(lab, []):
            row[_LI[target]] ^= c
        rows.append(row)
    # the printed image of c1 starts from b1 instead of c1; the corrected
    # variant starts from c1.  Both candidates are tried against the
    # isomorphism property and the surviving one is used.
    ci = _LI["c1"]
    if corrected:
        rows[ci] = list(unit_vec(n, ci))
    else:
        rows[ci] = list(unit_vec(n, _LI["b1"]))
    rows[ci][_LI["c5"]] ^= t
    return LinearMap(field, tuple(tuple(r) for r in rows))


def _lemma2_candidate_works(field: GF2k, corrected: bool) -> bool:
    from .liealg import is_isomorphism  # local import; defined below liealg

    for beta in field.nonzero():
        m = _lemma2_map(field, beta, corrected)
        if not is_isomorphism(skryabin_table(field, 0, 0), skryabin_table(field, beta, 0), m):
            return False
    return True


_LEMMA2_RESOLUTION: dict[GF2k, bool] = {}


def lemma2_uses_corrected_c1(field: GF2k = GF2) -> bool:
    """Whether the c1 image of the beta-removing map had to be repaired.

    The published image reads b1 + beta^2 c5; the corrected candidate is
    c1 + beta^2 c5.  Both are tested for the isomorphism property and the
    answer is cached per field.
    """
    if field not in _LEMMA2_RESOLUTION:
        if _lemma2_candidate_works(field, corrected=True):
            _LEMMA2_RESOLUTION[field] = True
        elif _lemma2_candidate_works(field, corrected=False):
            _LEMMA2_RESOLUTION[field] = False
        else:
            raise RuntimeError("neither c1 candidate of the beta-removing map is an isomorphism")
    return _LEMMA2_RESOLUTION[field]


def family_isomorphism_to_base(field: GF2k, beta: int, delta: int) -> LinearMap:
    """A witness isomorphism L(0,0) -> L(beta,delta), composed from the two
    parameter-removing basis changes."""
    m2 = lemma_basis_change(2, beta, field)   # L(0,0)    -> L(beta,0)
    m1 = lemma_basis_change(1, delta, field)  # L(beta,0) -> L(beta,delta)
    return m2.then(m1)


# ---------------------------------------------------------------------------
# The semisimple algebra the family deforms
# ---------------------------------------------------------------------------

def semisimple_form(field: GF2k) -> tuple[AlgebraTable, Subspace]:
    """sl2 (x) O + g (x) <1,x> + <D> on the standard labels, undeformed.

    Built from the divided-power and tensor constructions: the 12 tensor
    basis vectors are relabeled b1..b9, c1..c3, then c4 = g (x) 1 and
    c5 = g (x) x act through the outer derivation g = (ad f)^2 of sl2,
    and d acts as the lowering derivation on the divided-power factor.
    Returns the table and its 12-dimensional ideal sl2 (x) O.
    """
    ess = sl2_char2(field)
    o12, lowering = divided_power_o12(field)
    tensor = tensor_product_lie(ess, o12)
    n = 15

    def std(s: int, o: int) -> int:
        # (sl2 index, divided-power index) -> standard basis index
        return 3 * o + s if o < 3 else 9 + s

    def tix(s: int, o: int) -> int:
        return 4 * s + o  # index inside the tensor table

    perm = {tix(s, o): std(s, o) for s in range(3) for o in range(4)}
    sc: dict[tuple[int, int], list[int]] = {}

    def put(i: int, j: int, v: list[int]) -> None:
        if i > j:
            i, j = j, i
        if any(v):
            sc[(i, j)] = v

    for (ti, tj), tv in tensor.sc.items():
        v = [0] * n
        for m, c in enumerate(tv):
            if c:
                v[perm[m]] ^= c
        put(perm[ti], perm[tj], v)

    adf = ess.ad(unit_vec(3, 1))
    g_action = adf.then(adf)  # e -> f, f -> 0, h -> 0
    c4i, c5i, di = _LI["c4"], _LI["c5"], _LI["d"]
    K = field
    for s in range(3):
        gs = g_action.rows[s]
        for o in range(4):
            i = std(s, o)
            # [s (x) x^(o), g (x) x^(q)] = g(s) (x) x^(o) x^(q)
            for q, gq in ((0, c4i), (1, c5i)):
                prod = o12.products[o][q]
                v = [0] * n
                for r, ca in enumerate(prod):
                    if ca:
                        for m, cg in enumerate(gs):
                            if cg:
                                v[std(m, r)] ^= K.mul(ca, cg) if K.k > 1 else (ca & cg)
                put(i, gq, v)
            # [s (x) x^(o), d] = s (x) lowering(x^(o))
            low = lowering.rows[o]
            v = [0] * n
            for r, ca in enumerate(low):
                if ca:
                    v[std(s, r)] ^= ca
            put(i, di, v)
    # [g (x) x, d] = g (x) 1
    v = [0] * n
    v[c4i] = 1
    put(c5i, di, v)
    table = AlgebraTable(field, L_LABELS, sc)
    ideal = Subspace.span(field, n, [unit_vec(n, i) for i in range(12)])
    # certify the distinguished subspace is an ideal
    for i in range(n):
        for j in range(12):
            if table.bracket_basis(i, j) not in ideal:
                raise RuntimeError("sl2 (x) O is not an ideal; construction is broken")
    return table, ideal


def semisimple_phi_auto(field: GF2k, alpha: int) -> LinearMap:
    """The one lifted automorphism family: e -> e + alpha f on the sl2
    factor, identity on g (x) <1,x> and on the lowering derivation."""
    field.check(alpha)
    return _map_from_corrections(field, {
        "b1": [(alpha, "b2")],
        "b4": [(alpha, "b5")],
        "b7": [(alpha, "b8")],
        "c1": [(alpha, "c2")],
    })


# ---------------------------------------------------------------------------
# A distinguished 4-torus, its thin decomposition, a Hamiltonian centralizer
# ---------------------------------------------------------------------------

_TORUS_GENERATORS = (
    ("b1", "b3", "b1^[2]"),
    ("b2", "b3", "c4", "b7^[2]"),
    ("b4", "b6", "b4^[2]", "b7^[2]"),
    ("b8", "b9", "c1", "c3", "b7^[2]", "c3^[2]"),
)


def canonical_torus(field: GF2k) -> list[Vector]:
    """Four commuting toral elements spanning a maximal torus of the envelope."""
    n = len(ENV_LABELS)
    out = []
    for labs in _TORUS_GENERATORS:
        v = [0] * n
        for lab in labs:
            v[_EI[lab]] = 1
        out.append(tuple(v))
    return out


_THIN_BASIS = {
    "0001": ("b2", "b3", "b4", "b6", "c4"),
    "0010": ("b2", "b3", "c1", "c3", "c4"),
    "0011": ("b2", "b3", "b4", "b6", "c1", "c3", "c4"),
    "0100": ("b1", "b3", "b7", "b9", "d"),
    "0101": ("b7", "b9", "d"),
    "0110": ("b1", "b3", "b5", "b6", "c5", "d"),
    "0111": ("b5", "b6", "c5"),
    "1000": ("b2", "b3", "b8", "b9", "c1", "c2", "c3"),
    "1001": ("b2", "b3", "b4", "b5", "b6"),
    "1010": ("b2", "b3", "c1", "c2", "c3"),
    "1011": ("b2", "b3", "b4", "b5", "b6", "c1", "c2", "c3"),
    "1100": ("b1", "b2", "b3", "b7", "b8", "b9", "c2", "c3", "d"),
    "1101": ("b5", "b6", "b7", "b8", "b9", "c2", "c3", "d"),
    "1110": ("b1", "b2", "b3", "b5", "b6", "c2", "c3", "d"),
    "1111": ("b5", "b6"),
}


def thin_basis(field: GF2k) -> dict[str, Vector]:
    """The 15 root vectors of the thin decomposition for the distinguished
    torus, keyed by their 4-bit root labels."""
    n = len(L_LABELS)
    out = {}
    for key, labs in _THIN_BASIS.items():
        v = [0] * n
        for lab in labs:
            v[_LI[lab]] = 1
        out[key] = tuple(v)
    return out


# Products of the thin basis: key pair -> product key (missing pairs vanish).
THIN_TABLE = {
    ("0001", "0010"): "0011", ("0001", "0011"): "0010", ("0001", "0100"): "0101",
    ("0001", "0101"): "0100", ("0001", "1000"): "1001", ("0001", "1010"): "1011",
    ("0001", "1011"): "1010", ("0001", "1100"): "1101", ("0001", "1101"): "1100",
    ("0001", "1110"): "1111",
    ("0010", "0011"): "0001", ("0010", "0100"): "0110", ("0010", "0101"): "0111",
    ("0010", "0110"): "0100", ("0010", "1001"): "1011", ("0010", "1011"): "1001",
    ("0010", "1100"): "1110", ("0010", "1101"): "1111", ("0010", "1110"): "1100",
    ("0011", "0100"): "0111", ("0011", "0101"): "0110", ("0011", "0110"): "0101",
    ("0011", "1000"): "1011", ("0011", "1001"): "1010", ("0011", "1010"): "1001",
    ("0011", "1101"): "1110", ("0011", "1110"): "1101",
    ("0100", "0110"): "0010", ("0100", "0111"): "0011", ("0100", "1000"): "1100",
    ("0100", "1001"): "1101", ("0100", "1010"): "1110", ("0100", "1100"): "1000",
    ("0100", "1101"): "1001", ("0100", "1111"): "1011",
    ("0101", "0110"): "0011", ("0101", "0111"): "0010", ("0101", "1001"): "1100",
    ("0101", "1010"): "1111", ("0101", "1011"): "1110", ("0101", "1101"): "1000",
    ("0101", "1110"): "1011", ("0101", "1111"): "1010",
    ("0110", "0111"): "0001", ("0110", "1000"): "1110", ("0110", "1001"): "1111",
    ("0110", "1010"): "1100", ("0110", "1011"): "1101", ("0110", "1110"): "1000",
    ("0110", "1111"): "1001",
    ("0111", "1100"): "1011", ("0111", "1101"): "1010", ("0111", "1110"): "1001",
    ("1000", "1001"): "0001", ("1000", "1011"): "0011", ("1000", "1100"): "0100",
    ("1000", "1110"): "0110",
    ("1001", "1010"): "0011", ("1001", "1011"): "0010", ("1001", "1100"): "0101",
    ("1001", "1101"): "0100",
    ("1010", "1011"): "0001", ("1010", "1100"): "0110", ("1010", "1101"): "0111",
    ("1010", "1110"): "0100",
    ("1011", "1100"): "0111", ("1011", "1101"): "0110", ("1011", "1110"): "0101",
    ("1100", "1101"): "0001", ("1100", "1110"): "0010", ("1100", "1111"): "0011",
    ("1101", "1111"): "0010",
    ("1110", "1111"): "0001",
}


_HAMILTONIAN_CENTRALIZER = (
    ("b1", "b3"),
    ("b2", "c3", "c4"),
    ("b4", "b6"),
    ("b5", "b6", "c5"),
    ("b7", "b9"),
    ("c1", "c3"),
    ("d",),
)


def hamiltonian_centralizer(field: GF2k) -> list[Vector]:
    """A basis of the centralizer of b1 + b3 + b1^[2] inside L: a simple
    7-dimensional algebra of Hamiltonian type."""
    n = len(L_LABELS)
    out = []
    for labs in _HAMILTONIAN_CENTRALIZER:
        v = [0] * n
        for lab in labs:
            v[_LI[lab]] = 1
        out.append(tuple(v))
    return out


# ---------------------------------------------------------------------------
# Invariant subspace catalog
# ---------------------------------------------------------------------------

_PRINTED_SPANS: dict[str, tuple[str, ...]] = {
    "c2": ("c2",),
    "c4": ("c4",),
    "c5": ("c5",),
    "b5c2": ("b5", "c2"),
    "b8c2": ("b8", "c2"),
    "V4": ("b2", "b5", "b8", "c2"),
    "V5": ("b8", "c2", "c3", "c4", "c5"),
    "V6": ("b2", "b3", "b5", "b8", "c2", "c4"),
    "V6p": ("b5", "b6", "b8", "c2", "c4", "c5"),
    "V6pp": ("b5", "b8", "b9", "c2", "c4", "c5"),
    "V7": ("b5", "b6", "b8", "b9", "c2", "c4", "c5"),
    "V7p": ("b5", "b8", "b9", "c2", "c3", "c4", "c5"),
    "V8": ("b2", "b3", "b5", "b6", "b8", "c2", "c4", "c5"),
    "V8p": ("b2", "b5", "b6", "b8", "b9", "c2", "c4", "c5"),
    "V8pp": ("b2", "b5", "b6", "b8", "c2", "c3", "c4", "c5"),
    "V9": ("b2", "b3", "b5", "b6", "b8", "b9", "c2", "c4", "c5"),
    "V9p": ("b2", "b5", "b6", "b8", "b9", "c2", "c3", "c4", "c5"),
    "V11": ("b2", "b3", "b4", "b5", "b6", "b8", "c1", "c2", "c3", "c4", "c5"),
    "V11p": ("b2", "b3", "b5", "b6", "b8", "b9", "c1", "c2", "c3", "c4", "c5"),
    "V11pp": ("b2", "b3", "b5", "b6", "b8", "b9", "c2", "c3", "c4", "c5", "d"),
    "V12": ("b2", "b3", "b4", "b5", "b6", "b8", "b9", "c1", "c2", "c3", "c4", "c5"),
}

CATALOG_DISPLAY = {
    "c2": "<c2>", "c4": "<c4>", "c5": "<c5>", "b5c2": "<b5,c2>", "b8c2": "<b8,c2>",
    "V4": "V4", "V5": "V5", "V6": "V6", "V6p": "V6'", "V6pp": "V6''",
    "V7": "V7", "V7p": "V7'", "V8": "V8", "V8p": "V8'", "V8pp": "V8''",
    "V9": "V9", "V9p": "V9'", "V11": "V11", "V11p": "V11'", "V11pp": "V11''",
    "V12": "V12",
}


def printed_catalog_spans(field: GF2k) -> dict[str, Subspace]:
    n = len(L_LABELS)
    return {
        name: Subspace.span(field, n, [unit_vec(n, _LI[lab]) for lab in labs])
        for name, labs in _PRINTED_SPANS.items()
    }


class CatalogMismatchError(RuntimeError):
    pass


@dataclass
class CatalogEntry:
    name: str
    display: str
    recipe: str
    computed: Subspace
    printed: Subspace

    @property
    def matches(self) -> bool:
        return self.computed == self.printed


@dataclass
class NamedSubspaceCatalog:
    entries: dict[str, CatalogEntry]
    #: False when the published V12 characterization had to be replaced
    v12_literal_matches: bool = True

    def __getitem__(self, name: str) -> CatalogEntry:
        return self.entries[name]

    def __iter__(self):
        return iter(self.entries.values())

    @property
    def all_match(self) -> bool:
        return all(e.matches for e in self.entries.values())

    def subspaces(self) -> dict[str, Subspace]:
        return {name: e.computed for name, e in self.entries.items()}


def invariant_subspace_recipes(
    t: AlgebraTable,
    env: RestrictedAlgebra | None = None,
    strict: bool = True,
) -> NamedSubspaceCatalog:
    """Compute every catalog subspace from its intrinsic recipe over GF(2)
    and check it against the pinned span.

    The recipes start from the sandwich subalgebra S, which every
    automorphism preserves by definition, and build the remaining spaces
    through invariant constructions: products with invariant subspaces,
    centralizers, square-membership, and rank conditions.  Conditions that
    are not linear are settled by exhaustive element scans, which is why
    this computation is offered over GF(2) only.
    """
    if t.field.k != 1:
        raise ValueError("catalog recipes are scanned exhaustively over GF(2) only")
    if env is None:
        env = skryabin_envelope(t.field)
    n = t.n
    K = t.field
    br = t.bracket_bits

    def mk(rows) -> Subspace:
        return Subspace._from_bits(K, n, rows)

    def elements(rows: list[int]):
        acc = 0
        yield 0
        for flip in bitops.gray_flips(len(rows)):
            acc ^= rows[flip]
            yield acc

    def ad_rank(x: int) -> int:
        return len(bitops.rref_bits(t.ad_bits(x))[0])

    def bracket_space(a_rows: list[int], b_rows: list[int]) -> list[int]:
        prods = [t.product_bits(a, b) for a in a_rows for b in b_rows]
        return bitops.rref_bits(prods)[0]

    def meet(a: list[int], b: list[int]) -> list[int]:
        return mk(a).meet(mk(b)).packed()

    full_rows = [1 << i for i in range(n)]
    S = sandwich.sandwich_subalgebra(t)
    s_rows = S.packed()

    out: dict[str, tuple[str, list[int]]] = {}

    out["c5"] = ("{x in S : dim [L,x] <= 3}",
                 bitops.rref_bits([x for x in elements(s_rows) if x and ad_rank(x) <= 3])[0])
    c4c5 = bitops.rref_bits([x for x in elements(s_rows) if x and ad_rank(x) <= 4])[0]
    l_c5 = bitops.rref_bits([r for v in out["c5"][1] for r in t.ad_bits(v)])[0]
    out["c4"] = ("[L,c5] meet span{x in S : dim [L,x] <= 4}", meet(l_c5, c4c5))
    out["V4"] = ("[L, c4]", bitops.rref_bits([r for v in out["c4"][1] for r in t.ad_bits(v)])[0])
    out["c2"] = ("S meet V4", meet(s_rows, out["V4"][1]))
    out["V5"] = ("[L, c2]", bitops.rref_bits([r for v in out["c2"][1] for r in t.ad_bits(v)])[0])
    out["b8c2"] = ("V4 meet V5", meet(out["V4"][1], out["V5"][1]))
    out["V7p"] = ("[L, <b8,c2>]", bracket_space(full_rows, out["b8c2"][1]))
    v9p_space = t.centralizer(mk(s_rows))
    out["V9p"] = ("{x : [x, S] = 0}", v9p_space.packed())
    out["b5c2"] = ("[L,c5] meet V4 meet [V9', V9']",
                   meet(meet(l_c5, out["V4"][1]), bracket_space(out["V9p"][1], out["V9p"][1])))
    # square-membership scan: x^[2] back inside L
    env_l_mask = (1 << n) - 1
    v8p_rows = bitops.rref_bits(
        [x for x in elements(out["V9p"][1]) if x and env.square_bits_of(x) & ~env_l_mask == 0]
    )[0]
    out["V8p"] = ("{x in V9' : x^[2] in L}", v8p_rows)
    out["V8pp"] = ("[L, <b5,c2>]", bracket_space(full_rows, out["b5c2"][1]))

    # V7: elements of V8' whose induced adjoint action on V8'/S has rank <= 1
    expr = bitops.BitExpresser()
    for r in s_rows:
        expr.insert(r)
    quot_gens = [r for r in v8p_rows if expr.insert(r)]
    sdim = len(s_rows)

    def v8p_quot(v: int) -> int:
        c = expr.express(v)
        assert c is not None, "V8' is not closed as expected"
        return c >> sdim

    pair_q = [[v8p_quot(t.product_bits(a, b)) for b in v8p_rows] for a in v8p_rows]
    v7_members = []
    for combo in range(1 << len(v8p_rows)):
        imgs = set()
        ok = True
        for a in range(len(v8p_rows)):
            q = 0
            for c in bitops.iter_bits(combo):
                q ^= pair_q[a][c]
            if q:
                imgs.add(q)
                if len(imgs) > 1:
                    ok = False
                    break
        if ok:
            x = 0
            for c in bitops.iter_bits(combo):
                x ^= v8p_rows[c]
            v7_members.append(x)
    out["V7"] = ("{x in V8' : rank(ad x on V8'/S) <= 1}", bitops.rref_bits(v7_members)[0])

    out["V6p"] = ("V7 meet V8''", meet(out["V7"][1], out["V8pp"][1]))
    out["V6pp"] = ("V7 meet V7'", meet(out["V7"][1], out["V7p"][1]))

    # V11': [x, S] inside S, a linear condition
    s_space = mk(s_rows)
    images = []
    for i in range(n):
        img: tuple = ()
        for v in s_rows:
            red = s_space.reduce(unpack(t.product_bits(1 << i, v), n))
            img = img + red
        images.append(img)
    from .linalg import map_kernel

    out["V11p"] = ("{x : [x, S] in S}", map_kernel(K, images, n * len(s_rows)).packed())
    out["V11pp"] = ("centralizer of c4", t.centralizer(mk(out["c4"][1])).packed())
    out["V9"] = ("[V11'', V11'']", bracket_space(out["V11pp"][1], out["V11pp"][1]))

    # V12, first candidate: [x, V11'] inside V11' + Kx, scanned over all of L.
    # This is the published characterization, but it provably also admits
    # b7 (every bracket [b7, v] for v in V11' lands in V11' except
    # [b7, b3] = b7 itself, and V11' does not contain b4, whose bracket
    # [b7, b4] = d is what would exclude b7).  The second candidate, the
    # centralizer of <c5>, is equally automorphism-invariant; whichever
    # reproduces the pinned span is used and the choice is recorded.
    v12_literal = _stabilizer_scan(t, out["V11p"][1])
    printed_v12 = printed_catalog_spans(K)["V12"]
    v12_centralizer = t.centralizer(mk(out["c5"][1])).packed()
    if mk(v12_literal) == printed_v12:
        out["V12"] = ("{x : [x, V11'] in V11' + Kx}", v12_literal)
        v12_literal_matches = True
    else:
        out["V12"] = ("centralizer of <c5> ({x : [x, V11'] in V11' + Kx} does not match)",
                      v12_centralizer)
        v12_literal_matches = False
    out["V11"] = ("[V12, V12]", bracket_space(out["V12"][1], out["V12"][1]))
    out["V8"] = ("V9 meet V11", meet(out["V9"][1], out["V11"][1]))
    squares = []
    for x in elements(out["V8"][1]):
        sq = env.square_bits_of(x)
        assert sq & ~env_l_mask == 0, "a square of V8 left L"
        squares.append(sq)
    out["V6"] = ("span{x^[2] : x in V8}", bitops.rref_bits(squares)[0])

    printed = printed_catalog_spans(K)
    entries = {}
    for name in _PRINTED_SPANS:
        recipe, rows = out[name]
        entries[name] = CatalogEntry(name, CATALOG_DISPLAY[name], recipe, mk(rows), printed[name])
    catalog = NamedSubspaceCatalog(entries)
    catalog.v12_literal_matches = v12_literal_matches
    if strict and not catalog.all_match:
        bad = [e.name for e in catalog if not e.matches]
        raise CatalogMismatchError(f"recipe/span mismatch for: {', '.join(bad)}")
    return catalog


def _stabilizer_scan(t: AlgebraTable, w_rows: list[int]) -> list[int]:
    """RREF basis of the span of {x : [x, W] <= W + Kx}, scanned over GF(2)."""
    n = t.n
    K = t.field
    w_space = Subspace._from_bits(K, n, w_rows)
    qcols = w_space.basis_extension()

    def qproj(v: int) -> int:
        red = pack(w_space.reduce(unpack(v, n)))
        return sum(((red >> c) & 1) << k for k, c in enumerate(qcols))

    qe = [qproj(1 << i) for i in range(n)]
    mv_rows = []
    for v in w_space.packed():
        col = t.ad_bits(v)  # [e_i, v]
        mv_rows.append([qproj(col[i]) for i in range(n)])
    members = []
    for x in range(1 << n):
        bits = list(bitops.iter_bits(x))
        qx = 0
        for i in bits:
            qx ^= qe[i]
        ok = True
        for mv in mv_rows:
            q = 0
            for i in bits:
                q ^= mv[i]
            if q and q != qx:
                ok = False
                break
        if ok:
            members.append(x)
    return bitops.rref_bits(members)[0]


# ---------------------------------------------------------------------------
# Vanishing-chain obligations for the weak-sandwich certificate
# ---------------------------------------------------------------------------

# Each entry: bracket the generic element against the two listed basis
# vectors; the coefficient of each listed coordinate, after earlier
# substitutions, forces the listed coordinate variable to vanish.
WEAK_SANDWICH_OBLIGATIONS: tuple = (
    ("b8", "c5", (("c1", "b1^[2]"), ("c2", "b1"))),
    ("b6", "c4", (("c5", "b7"),)),
    ("b1", "c4", (("b8", "c1"),)),
    ("b6", "c2", (("b8", "d"),)),
    ("b8", "c3", (("b5", "b4^[2]"), ("c2", "b4"))),
    ("b1", "b8", (("b9", "b3"), ("c4", "b6"))),
    ("b4", "c2", (("c4", "b7^[2]"),)),
    ("b1", "b6", (("b5", "b2"), ("c2", "c3"))),
    ("b1", "c3", (("c2", "b9"),)),
    ("b1", "b4", (("c5", "b8"),)),
    ("b1", "b7", (("c4", "b5"),)),
)


def certify_weak_sandwich_span(field: GF2k = GF2) -> list[str]:
    """Field-independent certificate that the weak-sandwich set of the
    envelope equals the span of c2, c4, c5, c3^[2].

    Runs the vanishing chain symbolically over the GF(2) form of the
    envelope (the obligations are polynomial identities, so the argument
    holds over every perfect field of characteristic 2) and checks the
    surviving span satisfies the defining condition identically.  Returns
    the labels of the surviving basis directions.
    """
    env = skryabin_envelope(GF2)
    remaining = sandwich.vanishing_chain(env, WEAK_SANDWICH_OBLIGATIONS)
    labels = [ENV_LABELS[i] for i in remaining]
    members = [1 << i for i in remaining]
    if not sandwich.span_is_weak_sandwich(env, members):
        raise RuntimeError("surviving span fails the weak-sandwich condition")
    return labels
