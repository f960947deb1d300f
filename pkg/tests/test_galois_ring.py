import pytest

from unitals.finite_field import field_for_q, make_field, norm_q
from unitals.galois_ring import (
    GaloisRing,
    herm_char_value,
    make_ring,
    teichmuller_lift,
)
from unitals.proj_geom import enum_points
from unitals.varieties import HermitianForm, hermitian_variety


def test_ring_arithmetic_basics():
    f = make_field(2, 1)
    r = make_ring(f, 3)  # Z/8[X]/(F), deg 2
    assert r.pk == 8 and r.degree == 2
    a = r.elem([3, 5])
    b = r.elem([7, 1])
    assert (a + b).coeffs == (2, 6)
    assert (a - b).coeffs == (4, 4)
    assert (-b).coeffs == (1, 7)
    assert a + r.zero == a
    assert a * r.one == a
    assert a * b == b * a
    assert a**0 == r.one and a**1 == a and a**2 == a * a
    with pytest.raises(ValueError):
        a ** -1
    with pytest.raises(ValueError):
        a + make_ring(make_field(3, 1), 2).one
    assert r.scalar(11).coeffs == (3, 0)
    with pytest.raises(ValueError):
        r.elem([1, 2, 3])


def test_ring_validation():
    f = make_field(2, 1)
    with pytest.raises(ValueError):
        GaloisRing(2, 0, (1, 1, 1))
    with pytest.raises(ValueError):
        GaloisRing(2, 2, (1, 1, 2))  # not monic
    with pytest.raises(ValueError):
        GaloisRing(2, 2, (0, 1, 1), field=f)  # wrong reduction mod 2
    with pytest.raises(ValueError):
        GaloisRing(3, 2, (1, 1, 1), field=f)  # wrong characteristic


def test_make_ring_lifts_field_modulus():
    for p, t, k in [(2, 1, 2), (2, 1, 4), (3, 1, 2), (2, 2, 2)]:
        f = make_field(p, t)
        r = make_ring(f, k)
        assert r.field is f
        # reduces to the field modulus
        assert all((a - b) % p == 0 for a, b in zip(r.modulus, f.modulus))
        # X is a Teichmüller unit of the lifted modulus
        assert r.gen ** (p ** (2 * t)) == r.gen


def test_teichmuller_reduction_and_multiplicativity():
    f = make_field(3, 1)
    r = make_ring(f, 2)
    e = 3**2
    for x in f.elements:
        tx = teichmuller_lift(r, x)
        assert tx.to_field() == x
        assert tx**e == tx
        for y in f.elements:
            assert teichmuller_lift(r, x * y) == tx * r.teichmuller(y)
    with pytest.raises(ValueError):
        r.teichmuller(make_field(2, 1).one)


def test_teichmuller_set_is_exactly_the_lifts():
    f = make_field(2, 1)
    r = make_ring(f, 2)
    lifted = {r.teichmuller(x) for x in f.elements}
    assert set(r.teichmuller_set()) == lifted
    assert len(lifted) == f.size


def test_teichmuller_prime_field_values():
    # GR(9, 2) over GF(9): the prime subfield lifts to {0, 1, 8}
    f = make_field(3, 1)
    r = make_ring(f, 2)
    assert r.teichmuller(f.zero).coeffs == (0, 0)
    assert r.teichmuller(f.one).coeffs == (1, 0)
    assert r.teichmuller(-f.one).coeffs == (8, 0)


@pytest.mark.parametrize("q,ell", [(2, 1), (3, 1), (2, 2)])
def test_subfield_truncated_additivity(q, ell):
    """T(a+b) = (T(a)+T(b))^(q^ell) mod q^ell for a, b in GF(q)."""
    f = field_for_q(q)
    t = f.t
    r = make_ring(f, 2 * t * ell)
    qe = q**ell
    sub = f.subfield_elements()
    for a in sub:
        for b in sub:
            left = r.teichmuller(a + b)
            right = (r.teichmuller(a) + r.teichmuller(b)) ** qe
            assert left.congruent_mod(right, t * ell)


@pytest.mark.parametrize("q,ell", [(2, 1), (3, 1)])
def test_full_field_truncated_additivity(q, ell):
    """T(a+b) = (T(a)+T(b))^(q^(2ell)) mod q^(2ell) over all of GF(q^2)."""
    f = field_for_q(q)
    t = f.t
    r = make_ring(f, 2 * t * ell)
    qe = f.size**ell
    for a in f.elements:
        for b in f.elements:
            left = r.teichmuller(a + b)
            right = (r.teichmuller(a) + r.teichmuller(b)) ** qe
            assert left.congruent_mod(right, 2 * t * ell)


@pytest.mark.parametrize("q", [2, 3])
def test_teichmuller_power_sums(q):
    """sum_x T(x)^j mod p^k: q^2 at j = 0, q^2-1 at j = q^2-1, else 0."""
    f = field_for_q(q)
    r = make_ring(f, 2)
    m = f.size - 1
    for j in range(m + 1):
        tot = r.zero
        for x in f.elements:
            tot = tot + r.teichmuller(x) ** j
        if j == 0:
            assert tot == r.scalar(f.size)
        elif j == m:
            assert tot == r.scalar(m)
        else:
            assert tot == r.zero


@pytest.mark.parametrize("q,ell", [(2, 1), (3, 1), (2, 2)])
def test_herm_char_value(q, ell):
    """The ring-side indicator of the complement of the Hermitian curve."""
    f = field_for_q(q)
    t = f.t
    r = make_ring(f, 2 * t * ell)
    H = hermitian_variety(HermitianForm.identity(2, f))
    zero, one = r.zero, r.one
    for i, pt in enumerate(enum_points(2, f)):
        val = herm_char_value(r, pt, ell)
        want = zero if i in H else one
        assert val.congruent_mod(want, 2 * t * ell)
        # double check against the field-side norm sum
        norm_sum = sum((norm_q(x) for x in pt), f.zero)
        assert (norm_sum == f.zero) == (i in H)


def test_herm_char_value_precision_guard():
    f = make_field(2, 1)
    r = make_ring(f, 1)
    pt = enum_points(2, f)[0]
    with pytest.raises(ValueError):
        herm_char_value(r, pt, 1)
    with pytest.raises(ValueError):
        herm_char_value(make_ring(f, 2), pt, 0)
