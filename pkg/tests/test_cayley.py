"""Graph points over rationals: metric, action, embeddings, ball export."""

import json
from fractions import Fraction
from random import Random

import pytest

from bigfree.cayley import (
    CayleyPoint,
    ResourceLimitError,
    ball_dot,
    ball_graph,
    ball_json,
    cayley_act,
    cayley_dist,
    cayley_point,
    direction_word,
    embed_compare,
    format_cayley_point,
    parse_cayley_point,
    position,
)
from bigfree.ordered_abelian import BigFreeError, LexVector, ZERO
from bigfree.sampling import random_cayley_point, random_reduced_word
from bigfree.words import IDENTITY, double_gromov, inverse, length_vector, multiply, parse_word, word_dist


def W(text):
    return parse_word(text)


def vec(*coords, top=0):
    return LexVector.from_coords(coords, top=top)


def test_cayley_dist_examples():
    x = cayley_point(IDENTITY, 1, 1, Fraction(1, 2))
    assert cayley_dist(x, x) == ZERO
    assert cayley_dist(x, IDENTITY) == LexVector({1: Fraction(1, 2)})
    rng = Random(157)
    for _ in range(200):
        w = random_reduced_word(rng, 10, 4)
        v = random_reduced_word(rng, 10, 4)
        assert cayley_dist(w, v) == word_dist(w, v)  # vertices carry the word metric


def test_cayley_point_construction():
    assert cayley_point(W("a2"), 1, 1, 0) == W("a2")
    assert cayley_point(W("a2"), 1, 1, 1) == W("a2 a1")
    assert cayley_point(W("a1"), 1, -1, 1) == IDENTITY
    with pytest.raises(BigFreeError):
        CayleyPoint(W("a1^-1"), 1, 1, Fraction(1, 3))
    with pytest.raises(BigFreeError):
        CayleyPoint(W("a2"), 1, 1, Fraction(3, 2))


def test_cayley_act_examples():
    x = cayley_point(IDENTITY, 1, -1, Fraction(1, 3))
    assert cayley_act(IDENTITY, x) == x
    assert cayley_act(W("a1"), x) == cayley_point(IDENTITY, 1, 1, Fraction(2, 3))
    y = cayley_point(IDENTITY, 1, 1, Fraction(1, 3))
    assert cayley_act(W("a2"), y) == cayley_point(W("a2"), 1, 1, Fraction(1, 3))


def test_cayley_metric_axioms_sampled():
    rng = Random(163)
    for _ in range(400):
        x = random_cayley_point(rng, 8, 4)
        y = random_cayley_point(rng, 8, 4)
        z = random_cayley_point(rng, 8, 4)
        assert cayley_dist(x, y) == cayley_dist(y, x)
        assert cayley_dist(x, x) == ZERO
        assert cayley_dist(x, y) >= ZERO
        if x != y:
            assert cayley_dist(x, y) > ZERO
        assert cayley_dist(x, z) <= cayley_dist(x, y) + cayley_dist(y, z)


def test_cayley_action_is_isometric_with_group_laws():
    rng = Random(167)
    for _ in range(300):
        u = random_reduced_word(rng, 8, 4)
        v = random_reduced_word(rng, 8, 4)
        x = random_cayley_point(rng, 8, 4)
        y = random_cayley_point(rng, 8, 4)
        assert cayley_dist(cayley_act(u, x), cayley_act(u, y)) == cayley_dist(x, y)
        assert cayley_act(u, cayley_act(v, x)) == cayley_act(multiply(u, v), x)


def test_cayley_zero_hyperbolic_at_the_identity():
    rng = Random(173)
    for _ in range(400):
        pts = [random_cayley_point(rng, 8, 4) for _ in range(3)]
        pos = [position(p) for p in pts]
        prods = [pos[0] + pos[1] - cayley_dist(pts[0], pts[1]),
                 pos[0] + pos[2] - cayley_dist(pts[0], pts[2]),
                 pos[1] + pos[2] - cayley_dist(pts[1], pts[2])]
        lo = min(prods)
        assert prods.count(lo) >= 2


def test_special_case_formulas_under_their_guards():
    rng = Random(179)
    checked_far = checked_near = flagged = 0
    for _ in range(600):
        x = random_cayley_point(rng, 8, 4)
        y = random_cayley_point(rng, 8, 4)
        exact = cayley_dist(x, y)
        dx, dy = direction_word(x), direction_word(y)
        px, py = position(x), position(y)
        two_c = double_gromov(dx, dy)
        wx = x if isinstance(x, CayleyPoint) else None
        wy = y if isinstance(y, CayleyPoint) else None
        lw = length_vector(wx.w) if wx else length_vector(x)
        lv = length_vector(wy.w) if wy else length_vector(y)
        if two_c <= lw.double() and two_c <= lv.double():
            la = LexVector.unit(wx.index).scale(1 - wx.t) if wx else ZERO
            lb = LexVector.unit(wy.index).scale(1 - wy.t) if wy else ZERO
            assert length_vector(multiply(inverse(dx), dy)) - la - lb == exact
            checked_far += 1
        if px.double() <= two_c:
            stated = py - px
            if dx == dy and py < px:
                assert stated == -exact  # the known sign-flip class
                flagged += 1
            else:
                assert stated == exact
                checked_near += 1
    assert checked_far > 50 and checked_near > 20


def test_embed_compare_examples():
    report = embed_compare(IDENTITY, 1)
    assert report.endpoints_only()
    assert (Fraction(0), ZERO) in report.matches
    assert (Fraction(1), vec(1)) in report.matches
    report = embed_compare(W("a2"), 1, t_grid=[Fraction(1, 2)])
    assert report.matches == ()


def test_embed_compare_interior_never_matches():
    rng = Random(181)
    for _ in range(100):
        w = random_reduced_word(rng, 8, 4)
        index = rng.randint(1, 4)
        assert embed_compare(w, index).endpoints_only()


# -- finite balls ---------------------------------------------------------------------

def oracle_ball_vertices(center, max_len, max_letter):
    """Independent enumeration: all products center * u with u short words."""
    letters = [(k, s) for k in range(1, max_letter + 1) for s in (1, -1)]
    seen = {center}
    tails = [()]
    for _ in range(max_len):
        new_tails = []
        for tail in tails:
            for lt in letters:
                if tail and tail[-1] == (lt[0], -lt[1]):
                    continue
                new_tails.append(tail + (lt,))
        for tail in new_tails:
            from bigfree.words import Word

            seen.add(multiply(center, Word(tail)))
        tails = new_tails
    return seen


def test_ball_counts():
    empty = ball_graph(IDENTITY, 0, 3)
    assert len(empty.vertices) == 1 and len(empty.edges) == 0
    one = ball_graph(IDENTITY, 1, 3)
    assert len(one.vertices) == 7 and len(one.edges) == 6
    two = ball_graph(IDENTITY, 2, 3)
    assert len(two.vertices) == 37 and len(two.edges) == 36


def test_ball_matches_enumeration_oracle():
    for center_text, max_len, max_letter in (("", 2, 2), ("a1 a2", 2, 2), ("a2^-1 a1", 1, 3)):
        center = W(center_text)
        graph = ball_graph(center, max_len, max_letter)
        assert set(graph.vertices) == oracle_ball_vertices(center, max_len, max_letter)
        assert len(graph.edges) == len(graph.vertices) - 1


def test_ball_cap_guard():
    with pytest.raises(ResourceLimitError):
        ball_graph(IDENTITY, 5, 5, cap=100)


def test_ball_dot_output_is_deterministic_and_well_formed():
    graph = ball_graph(IDENTITY, 1, 2)
    dot = ball_dot(graph)
    assert dot == ball_dot(ball_graph(IDENTITY, 1, 2))
    assert dot.startswith("digraph ball {")
    assert '"1" [shape=doublecircle];' in dot
    assert '"1" -> "a1" [label="a1"];' in dot
    assert '"a1^-1" -> "1" [label="a1"];' in dot
    assert dot.rstrip().endswith("}")


def test_ball_json_schema():
    graph = ball_graph(W("a1"), 1, 2)
    payload = json.loads(ball_json(graph))
    assert set(payload) == {"center", "vertices", "edges"}
    assert payload["center"] == "a1"
    assert "" in payload["vertices"]  # the identity is one step from a1
    assert len(payload["edges"]) == len(payload["vertices"]) - 1
    for edge in payload["edges"]:
        assert set(edge) == {"from", "to", "label"}


# -- text form --------------------------------------------------------------------------

def test_cayley_point_text_roundtrip():
    x = cayley_point(W("a2"), 1, 1, Fraction(2, 7))
    assert format_cayley_point(x) == "(a2 ; a1^1 ; 2/7)"
    assert parse_cayley_point(format_cayley_point(x)) == x
    assert parse_cayley_point("a1 a2") == W("a1 a2")
    assert parse_cayley_point("( ; a1^-1 ; 1/3)") == cayley_point(IDENTITY, 1, -1, Fraction(1, 3))
