"""Table-backed arithmetic in GF(p^(2t)) and its index-2 subfield GF(q), q = p^t.

A field is built as GF(p)[X]/(f) for a monic irreducible f of degree 2t.  By
default f is the lexicographically smallest monic irreducible of that degree,
coefficients compared constant-term first, so element encodings are stable
across runs and machines (no Conway tables needed).  Elements are encoded as
integers e = sum(c_i * p**i) over the polynomial-basis coefficients c_i.

Multiplication, inversion, powering and Frobenius run on discrete-log tables
built eagerly at construction; addition is carry-free base-p digit addition
(plain XOR when p = 2).  Intended field sizes are small (p^(2t) <= 2^16).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

MAX_FIELD_SIZE = 1 << 16
_ADD_TABLE_LIMIT = 1 << 10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


# ---------------------------------------------------------------------------
# polynomials over GF(p): little-endian coefficient lists


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo b; b must be monic."""
    a = [c % p for c in a]
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(db):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return a[:db]


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_rem(out, mod, p)


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    d = len(f) - 1
    for deg in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            g = list(low) + [1]
            if not any(_poly_rem(list(f), g, p)):
                return False
    return True


@lru_cache(maxsize=None)
def _lex_smallest_irreducible(p: int, d: int) -> tuple[int, ...]:
    # ascending lex on (c_0, ..., c_{d-1}); itertools.product varies the last
    # slot fastest, which is exactly constant-term-first comparison order
    for low in itertools.product(range(p), repeat=d):
        f = low + (1,)
        if _is_irreducible(f, p):
            return f
    raise RuntimeError(f"no irreducible of degree {d} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------


class FieldElem:
    """One element of a Field, identified by its integer encoding.

    Instances are interned per field (field.elem(e) returns a shared object),
    so equality and hashing are cheap.  Arithmetic between elements of
    different Field instances raises ValueError.
    """

    __slots__ = ("field", "enc")

    def __init__(self, field: Field, enc: int):
        self.field = field
        self.enc = enc

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Polynomial-basis coefficients, little-endian, length 2t."""
        p, e = self.field.p, self.enc
        return tuple((e // p**i) % p for i in range(self.field.degree))

    @property
    def in_subfield(self) -> bool:
        return self.field.frob_enc(self.enc, self.field.t) == self.enc

    def _check(self, other) -> int:
        if not isinstance(other, FieldElem):
            raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")
        if other.field is not self.field:
            raise ValueError("mixed-field operands")
        return other.enc

    def __add__(self, other):
        f = self.field
        return f._elems[f.add_enc(self.enc, self._check(other))]

    def __sub__(self, other):
        f = self.field
        return f._elems[f.add_enc(self.enc, f.neg_enc(self._check(other)))]

    def __neg__(self):
        f = self.field
        return f._elems[f.neg_enc(self.enc)]

    def __mul__(self, other):
        f = self.field
        return f._elems[f.mul_enc(self.enc, self._check(other))]

    def __truediv__(self, other):
        f = self.field
        return f._elems[f.mul_enc(self.enc, f.inv_enc(self._check(other)))]

    def __pow__(self, k: int):
        f = self.field
        return f._elems[f.pow_enc(self.enc, k)]

    def __eq__(self, other):
        return (
            isinstance(other, FieldElem)
            and other.field is self.field
            and other.enc == self.enc
        )

    def __hash__(self):
        return hash((id(self.field), self.enc))

    def __bool__(self):
        return self.enc != 0

    def __repr__(self):
        return f"GF({self.field.size}):{self.enc}"


class Field:
    """GF(p^(2t)) with eager discrete-log tables; q = p^t.

    Public element-level API returns interned FieldElem objects; the *_enc
    methods are the integer-encoding kernel used by the hot loops.
    """

    def __init__(self, p: int, t: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if t < 1:
            raise ValueError(f"t = {t} must be >= 1")
        self.p = p
        self.t = t
        self.degree = 2 * t
        self.size = p**self.degree
        self.q = p**t
        if self.size > MAX_FIELD_SIZE:
            raise ValueError(f"field size {self.size} exceeds {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = _lex_smallest_irreducible(p, self.degree)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != self.degree + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree 2t")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = tuple(modulus)
        self._build_tables()
        self._elems = tuple(FieldElem(self, e) for e in range(self.size))
        self.zero = self._elems[0]
        self.one = self._elems[1]
        self.gen = self._elems[self.generator]
        self.subfield_encs = tuple(
            e for e in range(self.size) if self.frob_enc(e, t) == e
        )
        assert len(self.subfield_encs) == self.q
        self._subfield_set = frozenset(self.subfield_encs)

    # -- table construction -------------------------------------------------

    def _enc_to_poly(self, e: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.degree):
            out.append(e % p)
            e //= p
        return out

    def _poly_to_enc(self, poly: list[int]) -> int:
        e = 0
        for c in reversed(poly):
            e = e * self.p + (c % self.p)
        return e

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _poly_mul_mod(
            self._enc_to_poly(a), self._enc_to_poly(b), list(self.modulus), self.p
        )
        return self._poly_to_enc(prod)

    def _pow_slow(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            k >>= 1
        return r

    def _build_tables(self) -> None:
        n = self.size - 1
        factors = prime_factors(n)
        gen = 0
        for cand in range(2, self.size):
            if all(self._pow_slow(cand, n // r) != 1 for r in factors):
                gen = cand
                break
        assert gen, "no generator found"
        self.generator = gen
        exp = [0] * n
        log = [-1] * self.size
        acc = 1
        for i in range(n):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_slow(acc, gen)
        assert acc == 1, "generator order mismatch"
        self._exp = exp
        self._log = log
        if self.p > 2 and self.size <= _ADD_TABLE_LIMIT:
            self._add_table = [
                [self._add_digits(a, b) for b in range(self.size)]
                for a in range(self.size)
            ]
        else:
            self._add_table = None
        self._neg_table = [self._neg_digits(a) for a in range(self.size)]

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        shift = 1
        while a or b:
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def _neg_digits(self, a: int) -> int:
        p = self.p
        out = 0
        shift = 1
        while a:
            out += (-a % p) * shift
            a //= p
            shift *= p
        return out

    # -- integer-encoding kernel --------------------------------------------

    def add_enc(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg_enc(self, a: int) -> int:
        return self._neg_table[a]

    def mul_enc(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n = self.size - 1
        return self._exp[(self._log[a] + self._log[b]) % n]

    def inv_enc(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        n = self.size - 1
        return self._exp[-self._log[a] % n]

    def pow_enc(self, a: int, k: int) -> int:
        # exponents reduce mod p^(2t)-1 for nonzero bases
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of zero field element")
            return 0
        n = self.size - 1
        return self._exp[(self._log[a] * k) % n]

    def frob_enc(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("frobenius power must be >= 0")
        if a == 0:
            return 0
        n = self.size - 1
        return self._exp[(self._log[a] * pow(self.p, k, n)) % n]

    # -- element-level API ----------------------------------------------------

    @property
    def elements(self) -> tuple[FieldElem, ...]:
        return self._elems

    def elem(self, enc: int) -> FieldElem:
        if not 0 <= enc < self.size:
            raise ValueError(f"encoding {enc} out of range for GF({self.size})")
        return self._elems[enc]

    def from_coeffs(self, coeffs) -> FieldElem:
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise ValueError("too many coefficients")
        return self._elems[self._poly_to_enc(coeffs)]

    def subfield_elements(self) -> tuple[FieldElem, ...]:
        """The q elements of GF(q), ascending by encoding."""
        return tuple(self._elems[e] for e in self.subfield_encs)

    def __repr__(self):
        return f"Field(p={self.p}, t={self.t}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def _cached_field(p: int, t: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, t, modulus)


def make_field(p: int, t: int, modulus: tuple[int, ...] | None = None) -> Field:
    """Construct (and cache) GF(p^(2t)); equal field parameters give the same object.

    Passing the default modulus explicitly and passing None hit the same cache
    entry, so Field identity can be relied on after serialization round trips.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if t < 1:
        raise ValueError(f"t = {t} must be >= 1")
    if p ** (2 * t) > MAX_FIELD_SIZE:
        raise ValueError(f"field size {p ** (2 * t)} exceeds {MAX_FIELD_SIZE}")
    if modulus is None:
        modulus = _lex_smallest_irreducible(p, 2 * t)
    else:
        modulus = tuple(c % p for c in modulus)
    return _cached_field(p, t, modulus)


def field_for_q(q: int) -> Field:
    """GF(q^2) for a prime power q, via the deterministic default modulus."""
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            t = 0
            m = q
            while m % p == 0:
                m //= p
                t += 1
            if m != 1:
                break
            return make_field(p, t)
    raise ValueError(f"q = {q} is not a prime power")


# ---------------------------------------------------------------------------
# named maps on elements


def frobenius(x: FieldElem, k: int) -> FieldElem:
    """x^(p^k)."""
    return x.field._elems[x.field.frob_enc(x.enc, k)]


def norm_q(x: FieldElem) -> FieldElem:
    """Relative norm GF(q^2) -> GF(q): x^(q+1)."""
    return x.field._elems[x.field.pow_enc(x.enc, x.field.q + 1)]


def trace_q(x: FieldElem) -> FieldElem:
    """Relative trace GF(q^2) -> GF(q): x + x^q."""
    f = x.field
    return f._elems[f.add_enc(x.enc, f.frob_enc(x.enc, f.t))]


def abs_trace(x: FieldElem) -> int:
    """Absolute trace GF(q) -> GF(p), returned as an integer in [0, p)."""
    f = x.field
    if x.enc not in f._subfield_set:
        raise ValueError("abs_trace takes an element of the subfield GF(q)")
    acc = 0
    for i in range(f.t):
        acc = f.add_enc(acc, f.frob_enc(x.enc, i))
    if acc >= f.p:
        raise AssertionError("absolute trace not a prime-field scalar")
    return acc


def is_square(x: FieldElem) -> bool:
    """Whether x in GF(q) is a square there (q odd); 0 counts as a square."""
    f = x.field
    if f.p == 2:
        raise ValueError("is_square is for odd q only")
    if x.enc not in f._subfield_set:
        raise ValueError("is_square takes an element of the subfield GF(q)")
    if x.enc == 0:
        return True
    return f.pow_enc(x.enc, (f.q - 1) // 2) == 1
