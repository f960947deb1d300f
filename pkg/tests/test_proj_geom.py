import json
import random

import pytest

from unitals.finite_field import field_for_q, make_field
from unitals.proj_geom import (
    PointSet,
    all_points_set,
    apply_collineation,
    enum_points,
    enum_subspaces,
    gaussian_binomial,
    incidence_matrix,
    line_through,
    normalize_point,
    point_index,
    subspace_member_indices,
)


def test_gaussian_binomial():
    assert gaussian_binomial(3, 1, 4) == 21  # points of PG(2,4)
    assert gaussian_binomial(3, 1, 9) == 91
    assert gaussian_binomial(4, 2, 4) == 357  # lines of PG(3,4)
    assert gaussian_binomial(4, 1, 4) == 85
    assert gaussian_binomial(3, 3, 9) == 1
    assert gaussian_binomial(3, 4, 9) == 0


def test_normalize_point():
    f = make_field(3, 1)
    two = f.elem(2)
    pt = normalize_point((f.zero, two, f.one))
    assert pt[0] == f.zero and pt[1] == f.one
    assert pt == normalize_point((f.zero, f.one, two))
    with pytest.raises(ValueError):
        normalize_point((f.zero, f.zero, f.zero))


@pytest.mark.parametrize("n,q,npoints", [(2, 2, 21), (2, 3, 91), (3, 2, 85)])
def test_point_enumeration(n, q, npoints):
    f = field_for_q(q)
    pts = enum_points(n, f)
    assert len(pts) == npoints == gaussian_binomial(n + 1, 1, f.size)
    # normalized, distinct, and indexed consistently
    encs = set()
    for i, pt in enumerate(pts):
        lead = next(x for x in pt if x)
        assert lead == f.one
        encs.add(tuple(x.enc for x in pt))
        assert point_index(n, f, pt) == i
    assert len(encs) == npoints
    # scaling does not change the index
    g = f.gen
    assert point_index(n, f, tuple(g * x for x in pts[5])) == 5


def test_point_order_is_lexicographic():
    f = make_field(2, 1)  # plane PG(2,4)
    encs = [tuple(x.enc for x in pt) for pt in enum_points(2, f)]
    assert encs == sorted(encs)
    assert encs[0] == (0, 0, 1)
    assert encs[-1] == (1, 3, 3)


@pytest.mark.parametrize(
    "n,r,q,count",
    [(2, 2, 2, 21), (2, 2, 3, 91), (3, 2, 2, 357), (3, 3, 2, 85)],
)
def test_subspace_enumeration(n, r, q, count):
    f = field_for_q(q)
    subs = enum_subspaces(n, r, f)
    assert len(subs) == count == gaussian_binomial(n + 1, r, f.size)
    members = subspace_member_indices(n, r, f)
    assert len(members) == count
    expected = gaussian_binomial(r, 1, f.size)
    for ids in members:
        assert len(ids) == expected
        assert list(ids) == sorted(ids)
    # no two subspaces share the same point set
    assert len(set(members)) == count


@pytest.mark.parametrize("q", [2, 3])
def test_incidence_matrix_line_counts(q):
    f = field_for_q(q)
    A = incidence_matrix(2, 2, f)
    q2 = f.size
    npts = gaussian_binomial(3, 1, q2)
    assert A.n_rows == A.n_cols == npts
    for i in range(A.n_rows):
        assert A.row_sum(i) == q2 + 1  # points per line
    for j in range(A.n_cols):
        assert A.col_sum(j) == q2 + 1  # lines per point
    dense = A.to_dense()
    assert sum(map(sum, dense)) == npts * (q2 + 1)
    assert A.entry(0, 0) == dense[0][0]


def test_two_points_span_one_line():
    f = make_field(2, 1)
    members = subspace_member_indices(2, 2, f)
    npts = len(enum_points(2, f))
    for a in range(npts):
        for b in range(a + 1, npts):
            hits = [ids for ids in members if a in ids and b in ids]
            assert len(hits) == 1


def test_line_through_matches_enumeration():
    f = make_field(3, 1)
    pts = enum_points(2, f)
    members = {frozenset(ids) for ids in subspace_member_indices(2, 2, f)}
    rng = random.Random(2)
    for _ in range(10):
        i, j = rng.sample(range(len(pts)), 2)
        line = line_through(2, f, pts[i], pts[j])
        assert len(line) == f.size + 1
        assert frozenset(line.members) in members
    with pytest.raises(ValueError):
        line_through(2, f, pts[3], pts[3])


def test_pointset_basics():
    f = make_field(2, 1)
    s = PointSet.of(2, f, [5, 1, 3, 3])
    assert s.members == (1, 3, 5)
    assert 3 in s and 2 not in s
    comp = s.complement()
    assert len(comp) == 21 - 3
    assert not set(s.members) & set(comp.members)
    assert len(s.intersect(comp)) == 0
    assert len(s.intersect(all_points_set(2, f))) == 3
    with pytest.raises(ValueError):
        PointSet(2, f, (3, 1))  # not sorted
    with pytest.raises(ValueError):
        PointSet(2, f, (0, 99))  # out of range
    with pytest.raises(ValueError):
        s.intersect(PointSet.of(2, make_field(3, 1), [0]))


def test_pointset_json_round_trip():
    f = make_field(3, 1)
    s = PointSet.of(2, f, [0, 4, 17, 88])
    blob = json.dumps(s.to_json_dict())
    back = PointSet.from_json_dict(json.loads(blob))
    assert back == s
    assert back.field is f


def test_apply_collineation():
    f = make_field(2, 1)
    pts = enum_points(2, f)
    s = PointSet.of(2, f, range(7))
    ident = tuple(
        tuple(f.one if i == j else f.zero for j in range(3)) for i in range(3)
    )
    assert apply_collineation(ident, s) == s
    # a cyclic coordinate shift permutes points but keeps the ambient count
    shift = tuple(
        tuple(f.one if (i + 1) % 3 == j else f.zero for j in range(3))
        for i in range(3)
    )
    out = apply_collineation(shift, s)
    assert len(out) == len(s)
    full = all_points_set(2, f)
    assert apply_collineation(shift, full) == full
    singular = tuple(tuple(f.zero for _ in range(3)) for _ in range(3))
    with pytest.raises(ValueError):
        apply_collineation(singular, s)
    # collineations send lines to lines
    line = line_through(2, f, pts[0], pts[1])
    img = apply_collineation(shift, line)
    members = {frozenset(ids) for ids in subspace_member_indices(2, 2, f)}
    assert frozenset(img.members) in members
