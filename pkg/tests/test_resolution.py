from fractions import Fraction

import pytest

from gwci import make_frame
from gwci.gframe import expansion_from_text
from gwci.problem import fixture_data
from gwci.resolution import (LengthExceedsS, NotAComplex, NotGWCI, ShapeMismatch, check_gwci, check_minimal,
                             homology_rank, load_resolution, reconstruct_matrices, resolution_from_json,
                             resolution_to_json, rewrite_in_g, taylor_resolution)


def test_load_rejects_non_complex(frames):
    F = frames["vars"]
    P = F.parse
    with pytest.raises(NotAComplex):
        load_resolution([1, 2, 1], [[[P("x^2"), P("x*y")]], [[P("y")], [P("x")]]])
    with pytest.raises(ShapeMismatch):
        load_resolution([1, 2], [[[P("x")]]])


def test_gwci_negative_control():
    F = make_frame(["x"], "lex", ["x^2"])
    R = load_resolution([1, 1], [[[F.parse("x")]]])
    assert not check_gwci(R, F)
    with pytest.raises(NotGWCI):
        homology_rank(R, F, 1)


def test_homology_ranks(massey):
    R, F = massey.resolution, massey.frame
    assert [homology_rank(R, F, ell) for ell in range(5)] == [1, 3, 2, 0, 0]
    assert check_minimal(R)


def test_length_exceeds_s():
    F = make_frame(["x"], "lex", ["x"])
    x = F.parse("x")
    zero = F.parse("0")
    # a complex of length 2 over one variable cannot be a g-WCI resolution
    R = load_resolution([1, 1, 1], [[[x]], [[zero]]])
    with pytest.raises(LengthExceedsS):
        homology_rank(R, F, 1)


def test_rewrite_matches_printed_matrices(twisted):
    R, F = twisted.resolution, twisted.frame
    RE = rewrite_in_g(R, F)
    printed = fixture_data("twisted235")["rewritten"]
    for i, M in enumerate(printed):
        for m, row in enumerate(M):
            for p, text in enumerate(row):
                assert RE.expansions[i][m][p] == expansion_from_text(text, F), (i + 1, m, p)
    assert reconstruct_matrices(RE, F) == R.diffs


def test_taylor_complex_is_exact_shape(plane):
    F = plane.frame
    T = taylor_resolution([(2, 1), (4, 0), (0, 3)], F)
    assert T.ranks == [1, 3, 3, 1]
    # the pair {2,3} has the same lcm as the full set, giving a unit entry
    assert not check_gwci(T, F)
    assert not check_minimal(T)


def test_printed_plane_resolution_is_pruned_taylor(plane):
    F, R = plane.frame, plane.resolution
    T = taylor_resolution([(2, 1), (4, 0), (0, 3)], F)
    assert T.d(1) == R.d(1)
    kept = [[row[c] for c in (0, 1)] for row in T.d(2)]  # columns {1,2} and {1,3}
    assert kept == R.d(2)
    assert check_gwci(R, F)


def test_taylor_of_monomials_in_g_is_gwci_when_lcms_differ(frames):
    F = frames["plane"]
    T = taylor_resolution([(2, 0), (0, 2)], F)  # a complete intersection
    assert T.ranks == [1, 2, 1]
    assert check_gwci(T, F)


def test_scale_basis(massey):
    R = massey.resolution
    S = R.scale_basis(1, 0, 3)
    assert S.d(1)[0][0] == R.d(1)[0][0].scale(3)
    assert S.d(2)[0][0] == R.d(2)[0][0].scale(Fraction(1, 3))
    load_resolution(S.ranks, S.diffs)  # still a complex


def test_json_round_trip(small):
    ring = small.frame.ring
    data = resolution_to_json(small.resolution, ring)
    assert resolution_from_json(data, ring).diffs == small.resolution.diffs
