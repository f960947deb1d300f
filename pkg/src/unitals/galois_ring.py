"""Galois rings Z/p^k[X]/(F) with Teichmüller lifts of GF(p^(2t)).

make_ring(field, k) Hensel-lifts the field modulus so that the roots of the
lifted modulus are Teichmüller units: X itself then satisfies X^(p^2t) = X in
the ring.  Reduction mod p is coefficientwise and recovers the field.

teichmuller_lift sends x in GF(p^2t) to the unique lift T(x) fixed by the
(p^2t)-power map; T is multiplicative, and T restricted to the subfield GF(q)
obeys the truncated additivity T(a+b) = (T(a)+T(b))^(q^l) mod q^l.

herm_char_value evaluates the ring-side characteristic function of the
complement of the standard Hermitian variety sum(x_i^(q+1)) = 0:
    (sum_i T(x_i)^(q+1))^(q^(2l+1) - q^(2l))  =  0 or 1  (mod q^(2l))
according as the point lies on or off the variety.
"""

from __future__ import annotations

from .finite_field import Field, FieldElem

_TEICH_ENUM_LIMIT = 1 << 16


class GaloisRingElem:
    """Element of a GaloisRing, held as a little-endian coefficient tuple."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _check(self, other) -> GaloisRingElem:
        if not isinstance(other, GaloisRingElem) or other.ring is not self.ring:
            raise ValueError("mixed-ring operands")
        return other

    def __add__(self, other):
        other = self._check(other)
        pk = self.ring.pk
        return GaloisRingElem(
            self.ring, tuple((a + b) % pk for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        other = self._check(other)
        pk = self.ring.pk
        return GaloisRingElem(
            self.ring, tuple((a - b) % pk for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        pk = self.ring.pk
        return GaloisRingElem(self.ring, tuple(-a % pk for a in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        return GaloisRingElem(self.ring, self.ring._mul(self.coeffs, other.coeffs))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative ring powers not supported")
        r = self.ring.one
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def __eq__(self, other):
        return (
            isinstance(other, GaloisRingElem)
            and other.ring is self.ring
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def congruent_mod(self, other: GaloisRingElem, p_exponent: int) -> bool:
        """Equality of coefficients mod p^p_exponent."""
        other = self._check(other)
        if p_exponent > self.ring.k:
            raise ValueError("precision exceeds the ring's")
        m = self.ring.p**p_exponent
        return all((a - b) % m == 0 for a, b in zip(self.coeffs, other.coeffs))

    def to_field(self) -> FieldElem:
        """Reduction mod p, as an element of the companion field."""
        field = self.ring.field
        if field is None:
            raise ValueError("ring has no companion field")
        return field.from_coeffs([c % self.ring.p for c in self.coeffs])

    def __repr__(self):
        return f"GR({self.ring.p}^{self.ring.k},{self.ring.degree}):{self.coeffs}"


class GaloisRing:
    """Z/p^k[X]/(modulus); modulus monic with coefficients mod p^k."""

    def __init__(
        self,
        p: int,
        k: int,
        modulus: tuple[int, ...],
        field: Field | None = None,
    ):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.p = p
        self.k = k
        self.pk = p**k
        modulus = tuple(c % self.pk for c in modulus)
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.field = field
        if field is not None:
            if field.p != p or field.degree != self.degree:
                raise ValueError("companion field does not match the ring")
            if any(
                (mc - fc) % p for mc, fc in zip(modulus, field.modulus)
            ):
                raise ValueError("modulus does not reduce to the field modulus")
        self.zero = GaloisRingElem(self, (0,) * self.degree)
        one = [0] * self.degree
        one[0] = 1
        self.one = GaloisRingElem(self, tuple(one))
        if self.degree >= 2:
            gen = [0] * self.degree
            gen[1] = 1
            self.gen = GaloisRingElem(self, tuple(gen))
        else:
            self.gen = self.zero
        self._teich: dict[int, GaloisRingElem] = {}

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        pk = self.pk
        d = self.degree
        out = [0] * (2 * d - 1 if d > 1 else 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % pk
        # reduce by the monic modulus
        for i in range(len(out) - 1, d - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(d):
                    out[i - d + j] = (out[i - d + j] - c * self.modulus[j]) % pk
        return tuple(out[:d])

    def elem(self, coeffs) -> GaloisRingElem:
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise ValueError("too many coefficients")
        coeffs += [0] * (self.degree - len(coeffs))
        return GaloisRingElem(self, tuple(c % self.pk for c in coeffs))

    def scalar(self, c: int) -> GaloisRingElem:
        out = [0] * self.degree
        out[0] = c % self.pk
        return GaloisRingElem(self, tuple(out))

    def teichmuller(self, x: FieldElem) -> GaloisRingElem:
        """The Teichmüller lift T(x): reduces to x, fixed by ^(p^degree)."""
        if self.field is None or x.field is not self.field:
            raise ValueError("element does not belong to the companion field")
        cached = self._teich.get(x.enc)
        if cached is not None:
            return cached
        y = self.elem(x.coeffs)
        e = self.p**self.degree
        for _ in range(self.k + 2):
            nxt = y**e
            if nxt == y:
                break
            y = nxt
        else:
            raise AssertionError("Teichmüller iteration failed to converge")
        assert y.to_field() == x
        self._teich[x.enc] = y
        return y

    def teichmuller_set(self) -> tuple[GaloisRingElem, ...]:
        """All ring elements fixed by the (p^degree)-power map."""
        if self.pk**self.degree > _TEICH_ENUM_LIMIT:
            raise ValueError("ring too large to enumerate")
        import itertools

        out = []
        e = self.p**self.degree
        for coeffs in itertools.product(range(self.pk), repeat=self.degree):
            el = GaloisRingElem(self, coeffs)
            if el**e == el:
                out.append(el)
        return tuple(out)

    def __repr__(self):
        return f"GaloisRing(p={self.p}, k={self.k}, modulus={self.modulus})"


def make_ring(field: Field, k: int) -> GaloisRing:
    """GR(p^k, 2t) over `field`, modulus lifted so its roots are Teichmüller."""
    p = field.p
    d = field.degree
    naive = GaloisRing(p, k, tuple(int(c) for c in field.modulus), field=None)
    tau = naive.gen
    e = p**d
    for _ in range(k + 2):
        nxt = tau**e
        if nxt == tau:
            break
        tau = nxt
    else:
        raise AssertionError("Hensel iteration failed to converge")
    # minimal polynomial of tau: product of (Y - tau^(p^i)) over the orbit
    poly = [naive.one]  # coefficients in the scratch ring, little-endian in Y
    conj = tau
    for _ in range(d):
        new = [naive.zero] * (len(poly) + 1)
        for j, coeff in enumerate(poly):
            new[j + 1] = new[j + 1] + coeff
            new[j] = new[j] - conj * coeff
        poly = new
        conj = conj**p
    assert conj == tau, "conjugate orbit did not close"
    lifted = []
    for c in poly:
        if any(c.coeffs[1:]):
            raise AssertionError("lifted modulus coefficient not a scalar")
        lifted.append(c.coeffs[0])
    assert lifted[-1] == 1
    ring = GaloisRing(p, k, tuple(lifted), field=field)
    assert ring.gen ** (p**d) == ring.gen, "modulus roots are not Teichmüller"
    return ring


def teichmuller_lift(ring: GaloisRing, x: FieldElem) -> GaloisRingElem:
    return ring.teichmuller(x)


def herm_char_value(ring: GaloisRing, point, ell: int) -> GaloisRingElem:
    """(sum_i T(x_i)^(q+1))^(q^(2l+1) - q^(2l)) in the ring.

    Needs ring precision k >= 2*t*l so that arithmetic mod q^(2l) is faithful.
    """
    field = ring.field
    if field is None:
        raise ValueError("ring has no companion field")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if ring.k < 2 * field.t * ell:
        raise ValueError(
            f"ring precision k = {ring.k} < 2*t*ell = {2 * field.t * ell}"
        )
    q = field.q
    acc = ring.zero
    for x in point:
        acc = acc + ring.teichmuller(x) ** (q + 1)
    return acc ** (q ** (2 * ell + 1) - q ** (2 * ell))
