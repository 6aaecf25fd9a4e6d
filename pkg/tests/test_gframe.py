import pytest

from gwci.gframe import (NotHomogeneous, WrongCount, euler, expansion_from_json, expansion_from_text,
                         expansion_to_json, format_expansion, g_degree, g_expand, g_reconstruct,
                         has_constant_coefficients, hatted_partial, make_frame, parse_with_g, partial)
from gwci.groebner import NotZeroDimensional


def test_frame_validation():
    with pytest.raises(WrongCount):
        make_frame(["x", "y"], "lex", ["x"])
    with pytest.raises(NotHomogeneous):
        make_frame(["x", "y"], "lex", ["x+1", "y"])
    with pytest.raises(NotHomogeneous):
        make_frame(["x", "y"], "lex", ["x^2+y", "y"])
    with pytest.raises(NotZeroDimensional):
        make_frame(["x", "y"], "lex", ["x*y", "x^2"])


def test_twisted_expansion(frames):
    F = frames["twisted"]
    assert F.dim == 30
    E = g_expand(F.parse("x^4*y^2+x^2*y^3*z"), F)
    assert E == {(2, 0, 0): F.parse("y^2"), (1, 1, 0): F.parse("-z")}


def test_expansion_of_constant_and_zero(frames):
    F = frames["powers"]
    assert g_expand(F.parse("7"), F) == {(0, 0, 0): F.parse("7")}
    assert g_expand(F.parse("0"), F) == {}


def test_partials_of_monomial(frames):
    F = frames["powers"]
    q = F.parse("x^2*y^8")
    assert [F.format(hatted_partial(q, j, F)) for j in range(3)] == ["1/3*y^8", "2/3*x^2*y^5", "0"]
    assert partial(F.parse("x^2*y^3*z^5"), 0, F) == F.parse("y^3*z^5")
    with pytest.raises(IndexError):
        partial(q, 3, F)


def test_product_rule_fails_without_correction(frames):
    # d/dg1 of x * x = x^2 = g1 is 1, but x d(x) + d(x) x = 0
    F = frames["powers"]
    x = F.parse("x")
    assert partial(x * x, 0, F) == F.parse("1")
    assert partial(x, 0, F).is_zero()


def test_g_degree(frames):
    F = frames["twisted"]
    assert g_degree(F.parse("x^4*y^2+x^2*y^3*z"), F) == 2
    assert g_degree(F.parse("x^4+x^2*y*z"), F) is None  # g1^2 - yz g1
    assert g_degree(F.parse("0"), F) == 0


def test_constant_coefficients(frames):
    F = frames["plane"]
    assert has_constant_coefficients(parse_with_g("g1^2*g2 - 3*g2^3", F), F)
    assert not has_constant_coefficients(F.parse("x^3"), F)


def test_euler_on_pure_powers(frames):
    F = frames["plane"]
    q = parse_with_g("g1^2*g2", F)
    assert euler(q, F) == q.scale(3)


def test_text_and_json_round_trips(frames):
    F = frames["twisted"]
    E = expansion_from_text("y^2*g1^2 - z*g1*g2", F)
    assert format_expansion(E, F) == "y^2*g1^2 - z*g1*g2"
    assert expansion_from_json(expansion_to_json(E, F), F) == E
    assert g_reconstruct(E, F) == F.parse("x^4*y^2+x^2*y^3*z")


def test_hatted_partials_sum_to_identity(frames):
    # sum_j hatted_j(q) g_j = q - sigma(q)
    F = frames["twisted"]
    q = F.parse("x^5*y^2*z + 3*y^7 - x*z^6 + 2")
    total = sum((hatted_partial(q, j, F) * F.g[j] for j in range(F.s)), F.parse("0"))
    assert total == q - F.sigma(q)
