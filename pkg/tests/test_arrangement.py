"""Exact face enumeration, geometric composition and restriction, constructions."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omarr import arrangement as arr
from omarr.arrangement import (DomainError, Hyperplane, RationalArrangement, bisect, collinearity_determinant,
                               cone, coplanarity_determinant, covectors, face_counts, faces,
                               general_position, geometric_compose, geometric_restrict, goodman_pollack8,
                               gp8_points, max_chambers, max_vertices, pappus, pappus_points,
                               product_with_axis, sign_feasible, trivial)
from omarr.catalog import get
from omarr.oriented_matroid import check_axioms, face_poset, rank
from omarr.signvec import ResourceError, SignVector, all_sign_vectors, compose, restrict

from conftest import sv, svs

# labels of the two-line picture: lines x = 0 (1) and y = 0 (2)
FIG2 = {"A": "00", "P": "+0", "S": "-0", "Q": "0+", "R": "0-",
        "W": "++", "Y": "+-", "X": "-+", "Z": "--"}
# labels of the five-plane worked example (cone of the four-line file, marked last)
FIG4 = {"X": "+++++", "Y": "---++", "W": "-+00+", "Q": "-+-++", "Z": "-++++",
        "P": "0++++", "S": "++0++", "R": "0+0++"}


def names(fs, table):
    back = {v: k for k, v in table.items()}
    return {back.get(str(f.covector), str(f.covector)) for f in fs}


@st.composite
def small_arrangements(draw, d=None, max_n=5):
    d = d or draw(st.integers(1, 3))
    n = draw(st.integers(1, max_n))
    coord = st.integers(-3, 3)
    hs = []
    for _ in range(n):
        normal = draw(st.tuples(*[coord] * d).filter(any))
        h = Hyperplane(normal, draw(coord))
        if all(not h.same_locus(g) for g in hs):
            hs.append(h)
    return RationalArrangement(d, hs)


# -- sign feasibility and faces ------------------------------------------------

def test_sign_feasible_examples():
    assert sign_feasible(get("fig2").arrangement, "00")
    strip = RationalArrangement(1, [((1,), 0), ((1,), 1)])
    assert sign_feasible(strip, "+-") and not sign_feasible(strip, "-+")
    assert sign_feasible(get("fig4-cone").arrangement, "-+00+")


def test_faces_of_two_crossing_lines():
    fs = faces(get("fig2").arrangement)
    assert len(fs) == 9
    by_dim = [sum(1 for f in fs if f.dimension == k) for k in range(3)]
    assert by_dim == [1, 4, 4]
    assert [f.bounded for f in fs if f.dimension == 0] == [True]
    assert not any(f.bounded for f in fs if f.dimension > 0)


def test_single_hyperplane():
    fs = faces(RationalArrangement(3, [((1, 2, 3), 4)]))
    assert [str(f.covector) for f in fs] == ["0", "+", "-"]
    assert [f.dimension for f in fs] == [2, 3, 3]


def test_general_position_five_planes():
    c = face_counts(general_position(5, 3))
    assert c["chambers"] == 26 == max_chambers(5, 3)
    assert c["vertices"] == 10 == max_vertices(5, 3)
    assert c["bounded_chambers"] == 4


def test_general_position_small():
    assert face_counts(general_position(3, 2))["bounded_chambers"] == 1
    c = face_counts(general_position(4, 3))
    assert c["chambers"] == 15 and c["bounded_chambers"] == 1


@pytest.mark.parametrize("n, d", [(4, 2), (5, 3), (6, 3), (9, 2)])
def test_vertex_bound_is_met(n, d):
    c = face_counts(general_position(n, d))
    assert c["vertices"] == max_vertices(n, d)
    assert c["chambers"] == max_chambers(n, d)


def test_formulas():
    assert max_chambers(5, 3) == 26
    assert all(max_chambers(n, d) == 2 ** n for d in range(1, 5) for n in range(0, d + 1))
    assert max_vertices(9, 2) == 36


def test_trivial_arrangement():
    for n in range(1, 5):
        c = face_counts(trivial(n, 3))
        assert c["chambers"] == n + 1 and c["vertices"] == 0


def test_scale_bound():
    with pytest.raises(ResourceError):
        faces(trivial(13, 2))
    with pytest.raises(ResourceError):
        faces(RationalArrangement(5, [((1, 0, 0, 0, 0), 0)]))


def test_distinct_hyperplanes_required():
    with pytest.raises(ValueError):
        RationalArrangement(2, [((1, 1), 1), ((-2, -2), -2)])
    with pytest.raises(ValueError):
        Hyperplane((0, 0), 1)


@given(small_arrangements(max_n=4))
def test_faces_agree_with_exhaustive_feasibility(A):
    """The pruned search finds exactly the sign vectors an exhaustive sweep accepts."""
    brute = {s for s in all_sign_vectors(A.n) if sign_feasible(A, s)}
    assert {f.covector for f in faces(A)} == brute
    for f in faces(A):
        assert A.covector_of(f.point) == f.covector


@given(small_arrangements(max_n=4))
def test_face_dimension_and_boundedness(A):
    fs = faces(A)
    dims = {f.covector: f.dimension for f in fs}
    P = face_poset(f.covector for f in fs)
    for a, b in P.covers:
        assert dims[b] == dims[a] + 1
    assert rank([f.covector for f in fs]) == A.rank()
    # a face is bounded iff every face above it... only needs: vertices are bounded, chambers of
    # an arrangement with fewer than d+1 hyperplanes never are
    assert all(f.bounded for f in fs if f.dimension == 0)
    if A.n <= A.d:
        assert not any(f.bounded for f in fs if f.dimension > 0)


@given(small_arrangements(max_n=4))
def test_cone_is_central_and_passes_the_axioms(A):
    C = cone(A)
    assert C.is_central() and C.n == A.n + 1 and C.d == A.d + 1
    assert C.rank() == A.rank() + 1
    assert check_axioms(covectors(C)).ok


# -- worked examples -------------------------------------------------------------

def test_two_line_compositions():
    A = get("fig2").arrangement
    f = lambda x, y: geometric_compose(A, FIG2[x], FIG2[y])  # noqa: E731
    assert str(f("P", "Q").covector) == FIG2["W"]
    assert str(f("R", "X").covector) == FIG2["Z"]
    assert str(f("X", "R").covector) == FIG2["X"]
    assert str(f("Q", "A").covector) == FIG2["Q"] == str(f("A", "Q").covector)
    assert str(f("X", "X").covector) == FIG2["X"]


def test_two_line_restrictions():
    A = get("fig2").arrangement
    assert names(geometric_restrict(A, FIG2["Y"], FIG2["X"]), FIG2) == {"P", "A", "R"}
    assert names(geometric_restrict(A, FIG2["P"], FIG2["S"]), FIG2) == {"A"}
    assert names(geometric_restrict(A, FIG2["Z"], FIG2["Y"]), FIG2) == {"R"}


def test_five_plane_compositions():
    C = get("fig4-cone").arrangement
    assert str(geometric_compose(C, FIG4["W"], FIG4["X"]).covector) == FIG4["Z"]
    assert str(geometric_compose(C, FIG4["W"], FIG4["Y"]).covector) == FIG4["Q"]
    assert str(geometric_compose(C, FIG4["Y"], FIG4["W"]).covector) == FIG4["Y"]
    assert compose(sv(FIG4["W"]), sv(FIG4["X"])) == sv(FIG4["Z"])


def test_five_plane_restrictions():
    C = get("fig4-cone").arrangement
    seen = geometric_restrict(C, FIG4["X"], FIG4["Y"])
    assert names(seen, FIG4) == {"P", "S", "R"}
    abstract = restrict(sv(FIG4["X"]), sv(FIG4["Y"]))
    assert len(abstract) == 7
    assert {f.covector for f in seen} < abstract
    # four abstract members are not faces of the arrangement at all
    assert len(abstract - set(covectors(C).vectors)) == 4
    assert names(geometric_restrict(C, FIG4["X"], FIG4["W"]), FIG4) == {"P"}


def test_the_worked_example_is_a_cone_of_four_lines():
    C = get("fig4-cone").arrangement
    L = get("fig4-lines").arrangement
    assert C == cone(L)
    assert set(covectors(C).vectors) >= svs(*FIG4.values())


def test_restriction_guard():
    A = get("fig2").arrangement
    with pytest.raises(DomainError):
        geometric_restrict(A, FIG2["W"], FIG2["P"])       # not separated
    with pytest.raises(DomainError):
        geometric_restrict(A, FIG2["P"], FIG2["X"])       # X leaves line 1, which P lies on
    with pytest.raises(DomainError):
        geometric_compose(A, "++", "+++")


def test_geometry_matches_algebra_on_catalog(catalog_entries):
    """Geometric and abstract composition agree on every ordered face pair; the geometric
    restriction is a nonempty subset of the abstract one (all pairs on small entries, a fixed
    stride of pairs on large ones)."""
    for e in catalog_entries:
        A = e.arrangement
        fs = faces(A)
        if len(fs) > 150:
            continue
        stride = 1 if len(fs) <= 40 else 7
        for k, (x, y) in enumerate(itertools.product(fs, fs)):
            assert geometric_compose(A, x, y).covector == compose(x.covector, y.covector), e.name
            if k % stride:
                continue
            if x.covector.separation(y.covector) and not (y.covector.support & x.covector.zero_set):
                got = {f.covector for f in geometric_restrict(A, x, y)}
                assert got and got <= restrict(x.covector, y.covector), e.name


# -- constructions ------------------------------------------------------------------

def test_cone_of_a_point():
    C = cone(RationalArrangement(1, [((1,), 0)]))
    assert C.d == 2 and C.n == 2 and C.is_central()
    assert len(faces(C)) == 9


def test_cone_orientation():
    A = general_position(3, 2)
    C = cone(A)
    assert C.hyperplanes[-1] == Hyperplane((0, 0, 1), 0)
    assert C.hyperplanes[0] == Hyperplane((1, 1, -1), 0)


def test_product_preserves_structure():
    L = get("fig3-class3").arrangement
    P = product_with_axis(L)
    fl, fp = faces(L), faces(P)
    assert [f.covector for f in fl] == [f.covector for f in fp]
    assert [f.dimension + 1 for f in fl] == [f.dimension for f in fp]
    assert P.rank() == L.rank()
    assert not any(f.bounded for f in fp)


def test_bisecting_a_product_doubles_its_chambers():
    for k in range(1, 9):
        P = product_with_axis(get(f"fig3-class{k}").arrangement)
        assert face_counts(bisect(P))["chambers"] == 2 * face_counts(P)["chambers"]


def test_two_perpendicular_planes_leave_one_bounded_edge():
    A = get("fig10-left").arrangement
    assert sum(1 for f in faces(A) if f.dimension == 1 and f.bounded) == 1


def test_pappus_configuration():
    P = pappus_points()
    assert collinearity_determinant(P["x"], P["y"], P["z"]) == 0
    A = pappus()
    assert A.n == 9
    assert all(A.hyperplanes[8].value(P[k]) == 0 for k in "xyz")
    assert collinearity_determinant(P["a1"], P["b1"], P["x"]) != 0


def test_gp8_configuration():
    p = gp8_points()
    assert coplanarity_determinant(p["O"], p["P"], p["Q"], p["R"]) == 0
    assert coplanarity_determinant(p["O"], p["A"], p["B"], p["C"]) != 0
    A = goodman_pollack8()
    assert A.n == 8 and A.d == 3
    assert all(A.hyperplanes[7].value(p[k]) == 0 for k in "OPQR")
    for k, e in (("A'", "A"), ("B'", "B"), ("C'", "C")):
        assert 0 < p[k][["A", "B", "C"].index(e)] < 4


def test_counterexample_axioms(coned_covectors):
    assert check_axioms(covectors(pappus())).sv2.passed
    assert check_axioms(coned_covectors["pappus"]).ok
    assert check_axioms(coned_covectors["gp8"]).ok


def test_exact_arithmetic():
    A = RationalArrangement(2, [((Fraction(1, 3), 1), Fraction(1, 7)), ((1, Fraction(-2, 9)), 0)])
    for f in faces(A):
        assert all(isinstance(c, Fraction) for c in f.point)
        assert A.covector_of(f.point) == f.covector
