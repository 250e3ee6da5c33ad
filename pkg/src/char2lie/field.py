"""Exact arithmetic in GF(2^k), 1 <= k <= 16.

Field elements are plain Python ints: the binary digits of an int are the
coefficients of a polynomial over GF(2) in the polynomial basis, so the
element x^2 + 1 of GF(8) is 0b101 = 5.  Zero and one are always 0 and 1.
Arithmetic is provided by a `GF2k` context object that is passed around
alongside the elements; there are no per-element wrapper objects.

Addition is xor.  Multiplication is carry-less polynomial multiplication
reduced by a fixed irreducible modulus, one pinned modulus per degree, so
serialized data and test vectors are bit-exact across runs.  Because the
Frobenius map a -> a^2 is bijective, every element has a unique square
root, computed by k-1 repeated squarings.
"""

from __future__ import annotations

from typing import Iterator

# Pinned irreducible modulus per extension degree (bit i = coefficient of
# x^i).  Low-weight polynomials from the standard published tables; each is
# verified irreducible on construction.  GF(2) itself needs no modulus.
MODULI: dict[int, int] = {
    2: 0b111,                # x^2 + x + 1
    3: 0b1011,               # x^3 + x + 1
    4: 0b10011,              # x^4 + x + 1
    5: 0b100101,             # x^5 + x^2 + 1
    6: 0b1000011,            # x^6 + x + 1
    7: 0b10001001,           # x^7 + x^3 + 1
    8: 0b100011101,          # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,         # x^9 + x^4 + 1
    10: 0b10000001001,       # x^10 + x^3 + 1
    11: 0b100000000101,      # x^11 + x^2 + 1
    12: 0b1000001010011,     # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,    # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,   # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,  # x^15 + x + 1
    16: 0b10001000000001011, # x^16 + x^12 + x^3 + x + 1
}

MAX_DEGREE = 16


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials encoded as ints."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pmod(p: int, m: int) -> int:
    """Remainder of polynomial p modulo m over GF(2)."""
    dm = m.bit_length() - 1
    while p.bit_length() - 1 >= dm and p:
        p ^= m << (p.bit_length() - 1 - dm)
    return p


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def poly_is_irreducible(f: int) -> bool:
    """Irreducibility of f over GF(2) via the Frobenius criterion.

    f of degree k is irreducible iff x^(2^k) == x (mod f) and, for every
    prime divisor p of k, gcd(x^(2^(k/p)) - x, f) = 1.
    """
    k = f.bit_length() - 1
    if k < 1:
        return False
    if k == 1:
        return True

    def frob_power(i: int) -> int:
        # x^(2^i) mod f
        s = 0b10
        for _ in range(i):
            s = _pmod(_clmul(s, s), f)
        return s

    if frob_power(k) != 0b10:
        return False
    primes = {p for p in range(2, k + 1) if k % p == 0 and all(p % q for q in range(2, p))}
    for p in primes:
        if _pgcd(frob_power(k // p) ^ 0b10, f) != 1:
            return False
    return True


class GF2k:
    """The field GF(2^k) with a fixed modulus polynomial.

    Use `GF2k(1)` for GF(2) and `GF2k(k)` for the extension of degree k
    with the pinned modulus; a custom irreducible modulus may be supplied
    explicitly.
    """

    def __init__(self, k: int, modulus: int | None = None):
        if not 1 <= k <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {k}")
        if k == 1:
            if modulus is not None:
                raise ValueError("GF(2) takes no modulus")
        else:
            if modulus is None:
                modulus = MODULI[k]
            if modulus.bit_length() - 1 != k:
                raise ValueError(f"modulus degree {modulus.bit_length() - 1} != k={k}")
            if not poly_is_irreducible(modulus):
                raise ValueError(f"modulus {modulus:#b} is reducible")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self._mask = self.order - 1

    # -- identification ------------------------------------------------

    @property
    def name(self) -> str:
        return "gf2" if self.k == 1 else f"gf2^{self.k}"

    @classmethod
    def from_name(cls, name: str) -> "GF2k":
        name = name.strip().lower()
        if name == "gf2":
            return cls(1)
        if name.startswith("gf2^"):
            return cls(int(name[4:]))
        raise ValueError(f"unknown field name {name!r}; expected 'gf2' or 'gf2^k'")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2k) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    def __repr__(self) -> str:
        return f"GF2k({self.k})"

    # -- element arithmetic ---------------------------------------------

    def check(self, a: int) -> int:
        """Validate that a is a field element; returns it unchanged."""
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element of {self.name}")
        return a

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a & b
        return _pmod(_clmul(a, b), self.modulus)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.sqr(a)
            n >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        """The unique square root, a^(2^(k-1))."""
        for _ in range(self.k - 1):
            a = self.sqr(a)
        return a

    # -- iteration -------------------------------------------------------

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def nonzero(self) -> Iterator[int]:
        return iter(range(1, self.order))

    def generator(self) -> int:
        """An element of multiplicative order 2^k - 1 (found by search)."""
        target = self.order - 1
        for g in range(2, self.order):
            e, n = g, 1
            while e != 1:
                e = self.mul(e, g)
                n += 1
            if n == target:
                return g
        return 1  # GF(2)


GF2 = GF2k(1)
