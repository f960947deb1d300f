"""Hermitian varieties and Buekenhout-Metz unitals in PG(n, q^2).

A Hermitian form is given by a conjugate-symmetric matrix C over GF(q^2)
(entry(j,i) = entry(i,j)^q); its variety is the set of points P with
P^dagger C P = 0.  For n = 2 and C nonsingular this is the classical unital
of q^3+1 points.

The Buekenhout-Metz family is built in the affine chart
    U_{a,b} = {(1, y, a*y^2 + b*y^(q+1) + r) : y in GF(q^2), r in GF(q)}
              u {(0, 0, 1)},        q > 2,
which is Hermitian exactly when a = 0 (with b outside GF(q)).  Validity of
(a, b) for a != 0 is the usual discriminant/trace criterion; see bm_is_valid.

A unital is any set of q^3+1 points meeting every line in 1 or q+1 points;
its secant-line sections are the blocks of a 2-(q^3+1, q+1, 1) design.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property

from .finite_field import Field, FieldElem, abs_trace, frobenius, is_square
from .linalg import mat_det, nullspace_mod_p
from .proj_geom import PointSet, _space

_FIT_ENUM_LIMIT = 1 << 20


@dataclass(frozen=True)
class HermitianForm:
    """Conjugate-symmetric matrix over GF(q^2); validated at construction."""

    matrix: tuple[tuple[FieldElem, ...], ...]

    def __post_init__(self):
        m = self.matrix
        field = m[0][0].field
        t = field.t
        for i in range(len(m)):
            if len(m[i]) != len(m):
                raise ValueError("matrix must be square")
            for j in range(len(m)):
                if m[j][i] != frobenius(m[i][j], t):
                    raise ValueError("matrix is not conjugate-symmetric")

    @property
    def field(self) -> Field:
        return self.matrix[0][0].field

    @property
    def n(self) -> int:
        return len(self.matrix) - 1

    @cached_property
    def is_nonsingular(self) -> bool:
        return bool(mat_det(self.matrix))

    def evaluate(self, coords) -> FieldElem:
        """P^dagger C P; always lands in GF(q)."""
        field = self.field
        t = field.t
        conj = [frobenius(x, t) for x in coords]
        acc = field.zero
        for i, row in enumerate(self.matrix):
            ci = conj[i]
            if ci:
                for j, m in enumerate(row):
                    if m and coords[j]:
                        acc = acc + ci * m * coords[j]
        return acc

    @staticmethod
    def identity(n: int, field: Field) -> HermitianForm:
        return HermitianForm(
            tuple(
                tuple(field.one if i == j else field.zero for j in range(n + 1))
                for i in range(n + 1)
            )
        )


def hermitian_variety(form: HermitianForm) -> PointSet:
    """All points P of PG(n, q^2) with form(P) = 0; form must be nonsingular."""
    if not form.is_nonsingular:
        raise ValueError("form is singular")
    field = form.field
    sp = _space(form.n, field)
    zero = field.zero
    ids = [i for i, pt in enumerate(sp.points) if form.evaluate(pt) == zero]
    return PointSet(form.n, field, tuple(ids))


def _random_form_candidates(n: int, field: Field, rng: random.Random):
    sub = field.subfield_elements()
    elems = field.elements
    t = field.t
    while True:
        m = [[field.zero] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            m[i][i] = sub[rng.randrange(len(sub))]
            for j in range(i + 1, n + 1):
                x = elems[rng.randrange(len(elems))]
                m[i][j] = x
                m[j][i] = frobenius(x, t)
        yield HermitianForm(tuple(tuple(row) for row in m))


def random_hermitian_form(
    n: int, field: Field, seed: int, _reject_log: list | None = None
) -> HermitianForm:
    """Seeded nonsingular conjugate-symmetric matrix (rejection sampling)."""
    rng = random.Random(seed)
    for form in _random_form_candidates(n, field, rng):
        if form.is_nonsingular:
            return form
        if _reject_log is not None:
            _reject_log.append(form)


# ---------------------------------------------------------------------------
# Buekenhout-Metz unitals


@dataclass(frozen=True)
class BMParams:
    """Parameters (a, b) of U_{a,b}; both elements of the same GF(q^2)."""

    a: FieldElem
    b: FieldElem

    def __post_init__(self):
        if self.a.field is not self.b.field:
            raise ValueError("mixed-field parameters")

    @property
    def field(self) -> Field:
        return self.a.field


def bm_is_valid(params: BMParams) -> bool:
    """Whether U_{a,b} is a unital.

    For a = 0 this is the Hermitian case, valid iff b lies outside GF(q).
    For a != 0 and q odd: (b^q - b)^2 + 4a^(q+1) must be a nonsquare of GF(q).
    For a != 0 and q even: b must lie outside GF(q) (equivalently b^q + b != 0)
    and a^(q+1)/(b^q + b)^2 must have absolute trace 0.  Both branches agree
    with the exhaustive brute-force line test at q = 3 and q = 4.
    """
    a, b = params.a, params.b
    field = params.field
    q, t = field.q, field.t
    if not a:
        return not b.in_subfield
    if field.p != 2:
        d = frobenius(b, t) - b
        four = field.from_coeffs([4 % field.p])
        w = d * d + four * a ** (q + 1)
        if not w.in_subfield:
            raise AssertionError("discriminant escaped GF(q)")
        return not is_square(w)
    if b.in_subfield:
        return False
    d = frobenius(b, t) + b
    w = a ** (q + 1) / (d * d)
    if not w.in_subfield:
        raise AssertionError("trace argument escaped GF(q)")
    return abs_trace(w) == 0


def _bm_point_ids(field: Field, a: FieldElem, b: FieldElem) -> tuple[int, ...]:
    """Indices of U_{a,b} without any validity check (q^3+1 points always)."""
    sp = _space(2, field)
    q = field.q
    index = sp.index
    ids = [index[(0, 0, 1)]]
    for y in field.elements:
        base = a * y * y + b * y ** (q + 1)
        for r_enc in field.subfield_encs:
            z = field.add_enc(base.enc, r_enc)
            ids.append(index[(1, y.enc, z)])
    assert len(set(ids)) == q**3 + 1, "affine points collided"
    return tuple(sorted(ids))


def bm_unital(params: BMParams) -> PointSet:
    """The point set U_{a,b}; raises on q <= 2 or invalid parameters."""
    field = params.field
    if field.q <= 2:
        raise ValueError("the Buekenhout-Metz construction needs q > 2")
    if not bm_is_valid(params):
        raise ValueError(
            f"(a, b) = ({params.a.enc}, {params.b.enc}) fails the validity criterion"
        )
    return PointSet(2, field, _bm_point_ids(field, params.a, params.b))


def all_valid_bm_params(field: Field) -> tuple[BMParams, ...]:
    """Every valid (a, b), full sweep of GF(q^2)^2, a = 0 cases included."""
    out = []
    for a in field.elements:
        for b in field.elements:
            params = BMParams(a, b)
            if bm_is_valid(params):
                out.append(params)
    return tuple(out)


def bm_affine_value(params: BMParams, y: FieldElem, z: FieldElem) -> FieldElem:
    """a^q*y^(2q) - a*y^2 + (b^q - b)*y^(q+1) - z^q + z.

    Vanishes exactly on the affine points (1, y, z) of U_{a,b}; off the
    unital its 2(q-1) power is 1.
    """
    a, b = params.a, params.b
    field = params.field
    q, t = field.q, field.t
    return (
        frobenius(a, t) * y ** (2 * q)
        - a * y * y
        + (frobenius(b, t) - b) * y ** (q + 1)
        - frobenius(z, t)
        + z
    )


# ---------------------------------------------------------------------------
# unital verification


@dataclass(frozen=True)
class UnitalCheck:
    """Line-intersection diagnostic; truthy iff the set is a unital."""

    ok: bool
    size: int
    tangent_count: int
    secant_count: int
    profile: tuple[tuple[int, int], ...]  # (line section size, line count)

    def __bool__(self):
        return self.ok


def is_unital_embedded(S: PointSet) -> UnitalCheck:
    """Check |S| = q^3+1 and every line meets S in 1 or q+1 points."""
    if S.n != 2:
        raise ValueError("unital check lives in a projective plane (n = 2)")
    field = S.field
    q = field.q
    hist: dict[int, int] = {}
    smask = S.mask
    for lm in _space(2, field).subspace_masks(2):
        c = (lm & smask).bit_count()
        hist[c] = hist.get(c, 0) + 1
    ok = len(S) == q**3 + 1 and set(hist) <= {1, q + 1}
    return UnitalCheck(
        ok=ok,
        size=len(S),
        tangent_count=hist.get(1, 0),
        secant_count=hist.get(q + 1, 0),
        profile=tuple(sorted(hist.items())),
    )


def blocks_of(S: PointSet) -> tuple[tuple[int, ...], ...]:
    """Secant-line sections of a unital, verified as a 2-(q^3+1, q+1, 1) design."""
    check = is_unital_embedded(S)
    if not check.ok:
        raise ValueError(f"not a unital: profile {check.profile}, size {check.size}")
    field = S.field
    q = field.q
    sp = _space(2, field)
    smask = S.mask
    blocks = []
    for ids, lm in zip(sp.subspace_point_indices(2), sp.subspace_masks(2)):
        if (lm & smask).bit_count() == q + 1:
            blocks.append(tuple(i for i in ids if smask & (1 << i)))
    v = q**3 + 1
    if len(blocks) != q * q * (q * q - q + 1):
        raise AssertionError("secant count off")
    seen = set()
    for blk in blocks:
        if len(blk) != q + 1:
            raise AssertionError("block size off")
        for pair in itertools.combinations(blk, 2):
            if pair in seen:
                raise AssertionError(f"pair {pair} covered twice")
            seen.add(pair)
    if len(seen) != v * (v - 1) // 2:
        raise AssertionError("pair coverage incomplete")
    return tuple(blocks)


def check_property_I(S: PointSet, r: int, beta: int) -> bool:
    """Every r-dim subspace meets S in a multiple of p^beta points."""
    if not 1 < r <= S.n:
        raise ValueError(f"r = {r} must lie in (1, {S.n}]")
    pb = S.field.p**beta
    smask = S.mask
    return all(
        (m & smask).bit_count() % pb == 0
        for m in _space(S.n, S.field).subspace_masks(r)
    )


# ---------------------------------------------------------------------------
# recovering a Hermitian form from a point set


def _subfield_gfp_basis(field: Field) -> list[FieldElem]:
    """A GF(p)-basis of GF(q) inside GF(q^2), greedy over encodings."""
    p = field.p
    basis: list[FieldElem] = []
    echelon: list[tuple[int, ...]] = []
    for enc in field.subfield_encs:
        if enc == 0:
            continue
        vec = list(field.elem(enc).coeffs)
        for row in echelon:
            lead = next(i for i, c in enumerate(row) if c)
            if vec[lead]:
                f = vec[lead] * pow(row[lead], -1, p)
                vec = [(a - f * b) % p for a, b in zip(vec, row)]
        if any(vec):
            basis.append(field.elem(enc))
            echelon.append(tuple(vec))
        if len(basis) == field.t:
            break
    assert len(basis) == field.t
    return basis


def fit_hermitian_form(S: PointSet) -> HermitianForm | None:
    """A nonsingular Hermitian form vanishing on all of S, if one exists.

    Solves the GF(p)-linear system over the t*(n+1)^2-dimensional space of
    conjugate-symmetric matrices, then scans the nullspace for a nonsingular
    member.  Returns None when no nonsingular form vanishes on S.
    """
    field = S.field
    n = S.n
    p, t = field.p, field.t
    d = field.degree
    pts = [_space(n, field).points[i] for i in S.members]

    unknowns = []  # (i, j, elem) with j >= i; j == i means diagonal over GF(q)
    for i in range(n + 1):
        for g in _subfield_gfp_basis(field):
            unknowns.append((i, i, g))
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            for k in range(d):
                unknowns.append((i, j, field.elem(p**k)))

    rows = []
    for P in pts:
        conj = [frobenius(x, t) for x in P]
        cols = []
        for i, j, g in unknowns:
            if i == j:
                val = conj[i] * g * P[i]
            else:
                val = conj[i] * g * P[j] + conj[j] * frobenius(g, t) * P[i]
            cols.append(val.coeffs)
        for bit in range(d):
            rows.append([c[bit] for c in cols])

    null = nullspace_mod_p(rows, p)
    if not null:
        return None
    if p ** len(null) > _FIT_ENUM_LIMIT:
        raise ValueError(f"nullspace too large to scan ({len(null)} dims)")
    for combo in itertools.product(range(p), repeat=len(null)):
        if not any(combo):
            continue
        coeffs = [
            sum(c * vec[k] for c, vec in zip(combo, null)) % p
            for k in range(len(unknowns))
        ]
        m = [[field.zero] * (n + 1) for _ in range(n + 1)]
        for (i, j, g), c in zip(unknowns, coeffs):
            if not c:
                continue
            scalar = field.elem(c)  # encodings < p are prime-field scalars
            m[i][j] = m[i][j] + scalar * g
            if i != j:
                m[j][i] = m[j][i] + scalar * frobenius(g, t)
        form = HermitianForm(tuple(tuple(row) for row in m))
        if form.is_nonsingular:
            return form
    return None
