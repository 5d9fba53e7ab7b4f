"""The big Cayley graph: rational edge offsets, metric, action, ball export.

Points are vertices (reduced words) or interior points (w, a^p, t) of the
unit edge from w to w a^p with exact rational 0 < t < 1.  Distances extend
the word metric: the position of a point is L(w) + t L(a) and the distance
subtracts twice the smallest of the two positions and the Gromov product of
the far endpoints.  Finite balls export to DOT and JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from .ordered_abelian import (
    TOP,
    Alphabet,
    AlphabetIndex,
    BigFreeError,
    LexVector,
    OMEGA,
    ParseError,
    ZERO,
    check_index,
)
from .words import (
    Letter,
    Word,
    double_gromov,
    format_word,
    length_vector,
    multiply,
)

class ResourceLimitError(BigFreeError):
    """A finite construction would exceed its configured cap."""


class CayleyPoint:
    """Interior point of a labeled unit edge; vertices are bare Words."""

    __slots__ = ("w", "index", "sign", "t")

    def __init__(self, w: Word, index: AlphabetIndex, sign: int, t: Fraction):
        check_index(index)
        if sign not in (1, -1):
            raise BigFreeError(f"edge sign must be +1 or -1, got {sign!r}")
        if not w.reduced:
            raise BigFreeError("base word must be reduced")
        if w.letters and w.letters[-1] == (index, -sign):
            raise BigFreeError("non-canonical point: base word ends in the inverse letter")
        t = Fraction(t)
        if not (0 < t < 1):
            raise BigFreeError(f"edge parameter {t} outside (0, 1)")
        self.w = w
        self.index = index
        self.sign = sign
        self.t = t

    def far_word(self) -> Word:
        return Word._make(self.w.letters + ((self.index, self.sign),), True)

    def __eq__(self, other):
        if not isinstance(other, CayleyPoint):
            return NotImplemented
        return (self.w, self.index, self.sign, self.t) == (other.w, other.index, other.sign, other.t)

    def __hash__(self):
        return hash((self.w, self.index, self.sign, self.t))

    def __str__(self):
        return format_cayley_point(self)

    def __repr__(self):
        return f"CayleyPoint({format_cayley_point(self)!r})"


GraphPoint = Union[CayleyPoint, Word]


def cayley_point(w: Word, index: AlphabetIndex, sign: int, t) -> GraphPoint:
    """Build a point, collapsing the endpoints t = 0 and t = 1 to vertices."""
    t = Fraction(t)
    if t == 0:
        if not w.reduced:
            raise BigFreeError("base word must be reduced")
        return w
    if t == 1:
        return multiply(w, Word._make(((index, sign),), True))
    return CayleyPoint(w, index, sign, t)


def position(x: GraphPoint) -> LexVector:
    """Distance from the identity vertex: L(w) + t L(a)."""
    if isinstance(x, Word):
        return length_vector(x)
    return length_vector(x.w) + LexVector.unit(x.index).scale(x.t)


def direction_word(x: GraphPoint) -> Word:
    """The word whose interval from the identity contains x."""
    return x if isinstance(x, Word) else x.far_word()


def cayley_dist(x: GraphPoint, y: GraphPoint) -> LexVector:
    """Rational-coordinate distance extending the word metric."""
    px, py = position(x), position(y)
    # min(2px, 2py, 2c) is twice the min subtracted by the metric formula
    doubled_min = min(px.double(), py.double(), double_gromov(direction_word(x), direction_word(y)))
    return px + py - doubled_min


def cayley_act(u: Word, x: GraphPoint) -> GraphPoint:
    """Left action; flips the edge description when uw collides with it."""
    if not u.reduced:
        raise BigFreeError("acting word must be reduced")
    if isinstance(x, Word):
        return multiply(u, x)
    uw = multiply(u, x.w)
    if uw.letters and uw.letters[-1] == (x.index, -x.sign):
        return CayleyPoint(Word._make(uw.letters[:-1], True), x.index, -x.sign, 1 - x.t)
    return CayleyPoint(uw, x.index, x.sign, x.t)


# -- embedding comparison -------------------------------------------------------

@dataclass(frozen=True)
class EmbedReport:
    """Coincidences between the graph-edge and lattice-edge embeddings.

    Both embeddings send an edge of the graph into the interval from 0 to
    L(w a); the graph edge tracks L(w) + t L(a) for rational t in [0,1], the
    lattice edge tracks L(w) + s for lattice s in [0, L(a)].  The two images
    should meet only at the shared endpoints.
    """

    w: Word
    index: AlphabetIndex
    t_count: int
    s_count: int
    matches: Tuple[Tuple[Fraction, LexVector], ...]

    def endpoints_only(self) -> bool:
        expected = {(Fraction(0), ZERO), (Fraction(1), LexVector.unit(self.index))}
        return set(self.matches) == expected


def default_t_grid(points: int = 100) -> List[Fraction]:
    return [Fraction(k, points) for k in range(points + 1)]


def default_s_grid(index: AlphabetIndex, span: int = 5, depth: int = 10) -> List[LexVector]:
    """Lattice sample of [0, L(a)]: endpoints plus two-sided perturbations."""
    unit = LexVector.unit(index)
    grid = [ZERO, unit]
    if index is TOP:
        return grid  # the TOP interval has no interior lattice points
    for j in range(1, span + 1):
        for c in range(1, depth + 1):
            bump = LexVector.unit(index + j, c)
            grid.append(bump)         # just above 0
            grid.append(unit - bump)  # just below L(a)
    return grid


def embed_compare(
    w: Word,
    index: AlphabetIndex,
    t_grid: Optional[Iterable[Fraction]] = None,
    s_grid: Optional[Iterable[LexVector]] = None,
) -> EmbedReport:
    """Report every grid coincidence of the two edge embeddings."""
    if not w.reduced:
        raise BigFreeError("base word must be reduced")
    check_index(index)
    ts = list(default_t_grid() if t_grid is None else t_grid)
    ss = list(default_s_grid(index) if s_grid is None else s_grid)
    unit = LexVector.unit(index)
    lattice = set(ss)
    matches = []
    for t in ts:
        t = Fraction(t)
        image = unit.scale(t)  # common offset L(w) cancels from both sides
        if image in lattice:
            matches.append((t, image))
    return EmbedReport(w, index, len(ts), len(ss), tuple(matches))


# -- finite balls -----------------------------------------------------------------

@dataclass(frozen=True)
class BallGraph:
    """Tree of all words within a letter-count radius of the center."""

    center: Word
    vertices: Tuple[Word, ...]
    edges: Tuple[Tuple[Word, Letter], ...]  # (parent, letter): child = parent * letter
    max_len: int
    max_letter: int


def _letter_key(lt: Letter) -> tuple:
    idx, sign = lt
    return (idx is TOP, idx if idx is not TOP else 0, 0 if sign > 0 else 1)


def _word_key(w: Word) -> tuple:
    return (len(w.letters), tuple(_letter_key(lt) for lt in w.letters))


def ball_graph(center: Word, max_len: int, max_letter: int, cap: int = 100_000) -> BallGraph:
    """All reduced words within max_len letters of the center.

    Uses letters of index <= max_letter; the result is a tree rooted at the
    center.  Raises ResourceLimitError when the vertex count would pass cap.
    """
    if not center.reduced:
        raise BigFreeError("ball center must be reduced")
    if max_len < 0 or max_letter < 0:
        raise BigFreeError("ball radius and letter bound must be >= 0")
    alphabet = [(k, s) for k in range(1, max_letter + 1) for s in (1, -1)]
    vertices = [center]
    edges: list = []
    frontier: List[Tuple[Word, Optional[Letter]]] = [(center, None)]
    for _ in range(max_len):
        next_frontier = []
        for v, came_by in frontier:
            for lt in alphabet:
                if came_by is not None and lt == (came_by[0], -came_by[1]):
                    continue  # would backtrack toward the center
                child = multiply(v, Word._make((lt,), True))
                edges.append((v, lt))
                vertices.append(child)
                next_frontier.append((child, lt))
                if len(vertices) > cap:
                    raise ResourceLimitError(f"ball would exceed {cap} vertices")
        frontier = next_frontier
    order = sorted(range(len(vertices)), key=lambda i: _word_key(vertices[i]))
    ordered_vertices = tuple(vertices[i] for i in order)
    edges.sort(key=lambda e: (_word_key(e[0]), _letter_key(e[1])))
    return BallGraph(center, ordered_vertices, tuple(edges), max_len, max_letter)


def _vertex_label(w: Word) -> str:
    return format_word(w) or "1"


def _letter_label(lt: Letter) -> str:
    idx, _ = lt
    return "b" if idx is TOP else f"a{idx}"


def ball_dot(graph: BallGraph) -> str:
    """Deterministic DOT text; edges point along the positive generator."""
    lines = ["digraph ball {"]
    center_label = _vertex_label(graph.center)
    lines.append(f'  "{center_label}" [shape=doublecircle];')
    for v in graph.vertices:
        if v != graph.center:
            lines.append(f'  "{_vertex_label(v)}";')
    for parent, lt in graph.edges:
        child = multiply(parent, Word._make((lt,), True))
        tail, head = (parent, child) if lt[1] > 0 else (child, parent)
        lines.append(f'  "{_vertex_label(tail)}" -> "{_vertex_label(head)}" [label="{_letter_label(lt)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def ball_json(graph: BallGraph) -> str:
    """JSON with vertices, edges and center keys; word grammar strings."""
    payload = {
        "center": format_word(graph.center),
        "vertices": [format_word(v) for v in graph.vertices],
        "edges": [
            {
                "from": format_word(parent),
                "to": format_word(multiply(parent, Word._make((lt,), True))),
                "label": _letter_label(lt) + ("" if lt[1] > 0 else "^-1"),
            }
            for parent, lt in graph.edges
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


# -- text form --------------------------------------------------------------------

def format_cayley_point(x: GraphPoint) -> str:
    if isinstance(x, Word):
        return format_word(x)
    name = "b" if x.index is TOP else f"a{x.index}"
    return f"({format_word(x.w)} ; {name}^{x.sign} ; {x.t})"


def parse_cayley_point(text: str, alphabet: Alphabet = OMEGA) -> GraphPoint:
    from .triples import parse_letter_token
    from .words import parse_word

    raw = text.strip()
    if not (raw.startswith("(") and raw.endswith(")")):
        w = parse_word(raw, alphabet)
        if not w.reduced:
            raise BigFreeError("vertex word must be reduced")
        return w
    parts = raw[1:-1].split(";")
    if len(parts) != 3:
        raise BigFreeError(f"point must be '(<word> ; a<k>^<p> ; <t>)', got {text!r}")
    w = parse_word(parts[0].strip(), alphabet)
    idx, sign = parse_letter_token(parts[1], alphabet)
    try:
        t = Fraction(parts[2].strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad edge parameter {parts[2].strip()!r}: {exc}") from None
    return cayley_point(w, idx, sign, t)
