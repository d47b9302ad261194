"""Robinson-triangle substitution geometry.

Two decorated isosceles triangles tile the fragments built here: the
large tile L is the acute triangle with sides (1, tau, tau) and the
small tile S is the obtuse one with sides (tau, 1, 1), tau being the
golden ratio.  Inflating to order N applies the merge hierarchy N
times; read top-down, a large tile splits into a large and a small tile
of the next level down via a single cevian, and a small tile is
relabelled as the large tile it coincides with.

Every node stores its vertex triple in role order (a, b, c): a-b is the
base (the odd side) and c the apex between the two equal legs.  The
shapes of large tiles alternate between acute and obtuse down the
levels -- merging an acute with an obtuse triangle cannot reproduce
either shape -- so levels scale linearly by tau every second step
(by tau in area every step).

Combinatorics (types, addresses) is authoritative and float geometry is
used only for rendering, point location and matching checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .relalg import Relation
from .seqspace import TruncSeq
from .reptheory import RelRep
from .theory import TILES

TAU = (1 + math.sqrt(5)) / 2

# side lengths (base, leg, leg) of the two level-0 tiles
TILE_SIDES = {"L": (1.0, TAU, TAU), "S": (TAU, 1.0, 1.0)}

ACUTE, GNOMON = "acute", "gnomon"

BLACK, WHITE = "black", "white"

# Vertex colours in role order (a, b, c) and the one oriented edge,
# written tail-role -> head-role, for the two level-0 tiles.
DECORATIONS = {
    ACUTE: ((WHITE, BLACK, BLACK), (1, 2)),
    GNOMON: ((BLACK, WHITE, WHITE), (1, 2)),
}


class BoundaryError(ValueError):
    """The point lies on or too close to an edge or vertex."""


class OutOfFragmentError(ValueError):
    """The point lies outside the inflated fragment."""


Point = tuple[float, float]


@dataclass
class TileDecoration:
    """Vertex colours by role and the oriented edge as a role pair."""

    vertex_colors: tuple[str, str, str]
    oriented_edge: tuple[int, int]


@dataclass(eq=False)
class TileNode:
    """One triangle of the hierarchy; treat as immutable once built."""

    type: str  # "L" or "S"
    level: int
    shape: str  # "acute" or "gnomon"
    vertices: tuple[Point, Point, Point]  # role order (a, b, c)
    parent: "TileNode | None" = None
    children: list["TileNode"] = field(default_factory=list)
    decoration: TileDecoration | None = None  # leaves only

    def ancestor(self, level: int) -> "TileNode":
        node = self
        while node.level < level:
            if node.parent is None:
                raise ValueError(f"no ancestor at level {level}")
            node = node.parent
        return node

    def centroid(self) -> Point:
        xs, ys = zip(*self.vertices)
        return (sum(xs) / 3.0, sum(ys) / 3.0)


@dataclass
class TileTree:
    root: TileNode
    order: int
    leaves: list[TileNode]


def _shape_of(tile_type: str, level: int) -> str:
    if tile_type == "L":
        return ACUTE if level % 2 == 0 else GNOMON
    return GNOMON if level % 2 == 0 else ACUTE


def _linear_scale(tile_type: str, level: int) -> float:
    # area grows by tau per level, so the linear scale advances by tau
    # every time the similarity class comes back around
    if tile_type == "L":
        exponent = level // 2 if level % 2 == 0 else (level + 1) // 2
    else:
        exponent = level // 2 if level % 2 == 0 else (level - 1) // 2
    return TAU**exponent


def _template(shape: str, scale: float) -> tuple[Point, Point, Point]:
    if shape == ACUTE:
        base = scale
        height = scale * math.sqrt(TAU**2 - 0.25)
    else:
        base = scale * TAU
        height = scale * math.sqrt(1 - TAU**2 / 4)
    return ((0.0, 0.0), (base, 0.0), (base / 2.0, height))


def _lerp(p: Point, q: Point, t: float) -> Point:
    return (p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)


def _split(node: TileNode) -> list[TileNode]:
    """Children of a node, in [L, S] order for large tiles.

    A small tile coincides with its single large child.  A large obtuse
    tile is cut by the cevian from its apex to the base point at a/tau
    of the base length from role b; a large acute tile by the cevian
    from base vertex a to the point at 1/tau^2 of the leg length from
    b.  The children's role assignments below are the unique combination
    (out of the cevian-side and base-orientation choices) under which
    the level-0 decoration templates agree across every shared edge of
    every fragment of order up to 8, for both root types.
    """
    a, b, c = node.vertices
    level = node.level - 1
    if node.type == "S":
        return [TileNode("L", level, node.shape, (a, b, c), parent=node)]
    if node.shape == GNOMON:
        m = _lerp(b, a, 1 / TAU)
        large = TileNode("L", level, ACUTE, (m, c, b), parent=node)
        small = TileNode("S", level, GNOMON, (c, a, m), parent=node)
    else:
        m = _lerp(b, c, 1 / TAU**2)
        large = TileNode("L", level, GNOMON, (c, a, m), parent=node)
        small = TileNode("S", level, ACUTE, (b, m, a), parent=node)
    return [large, small]


def inflate(root_type: str, order: int) -> TileTree:
    """Build the full inflation tree of the given order.

    The root triangle is placed with its base on the x axis; leaves are
    collected depth-first with the large child first.
    """
    if root_type not in TILES:
        raise ValueError(f"root type must be L or S, got {root_type!r}")
    if order < 0:
        raise ValueError(f"negative order: {order}")
    shape = _shape_of(root_type, order)
    root = TileNode(root_type, order, shape, _template(shape, _linear_scale(root_type, order)))
    leaves: list[TileNode] = []

    def build(node: TileNode) -> None:
        if node.level == 0:
            colors, arrow = DECORATIONS[node.shape]
            node.decoration = TileDecoration(colors, arrow)
            leaves.append(node)
            return
        node.children = _split(node)
        for child in node.children:
            build(child)

    build(root)
    return TileTree(root, order, leaves)


def leaf_address(tree: TileTree, leaf: TileNode) -> str:
    """The ancestor type chain, level 0 first, ending with the root type."""
    letters = []
    node: TileNode | None = leaf
    while node is not None:
        letters.append(node.type)
        node = node.parent
    return "".join(letters)


def leaf_to_seq(tree: TileTree, leaf: TileNode) -> TruncSeq:
    """Bits 0..N-1 of the ancestor chain: 0 for a large, 1 for a small tile.

    The root's own letter is dropped under the tail-zero convention,
    which is why only L-rooted trees support sequence extraction.
    """
    if tree.root.type != "L":
        raise ValueError("sequence extraction needs an L-rooted tree")
    address = leaf_address(tree, leaf)
    return TruncSeq(tuple(0 if letter == "L" else 1 for letter in address[:-1]))


# ---------------------------------------------------------------------------
# Point location
# ---------------------------------------------------------------------------


def _barycentric(tri: tuple[Point, Point, Point], p: Point) -> tuple[float, float, float]:
    (x1, y1), (x2, y2), (x3, y3) = tri
    det = (y2 - y3) * (x1 - x3) + (x3 - x2) * (y1 - y3)
    l1 = ((y2 - y3) * (p[0] - x3) + (x3 - x2) * (p[1] - y3)) / det
    l2 = ((y3 - y1) * (p[0] - x3) + (x1 - x3) * (p[1] - y3)) / det
    return l1, l2, 1.0 - l1 - l2

def _segment_distance(p: Point, q: Point, r: Point) -> float:
    """Distance from r to the segment p-q."""
    vx, vy = q[0] - p[0], q[1] - p[1]
    wx, wy = r[0] - p[0], r[1] - p[1]
    seg_len2 = vx * vx + vy * vy
    t = 0.0 if seg_len2 == 0 else max(0.0, min(1.0, (wx * vx + wy * vy) / seg_len2))
    cx, cy = p[0] + t * vx - r[0], p[1] + t * vy - r[1]
    return math.hypot(cx, cy)


def _edge_distance(tri: tuple[Point, Point, Point], p: Point) -> float:
    return min(
        _segment_distance(tri[0], tri[1], p),
        _segment_distance(tri[1], tri[2], p),
        _segment_distance(tri[2], tri[0], p),
    )


def point_to_sequence(tree: TileTree, p: Point, tolerance: float = 1e-9) -> TruncSeq:
    """The sequence of the leaf whose interior strictly contains ``p``."""
    inside_root = all(v >= -1e-12 for v in _barycentric(tree.root.vertices, p))
    if not inside_root:
        if _edge_distance(tree.root.vertices, p) <= tolerance:
            raise BoundaryError(f"point {p} lies on the fragment boundary")
        raise OutOfFragmentError(f"point {p} lies outside the fragment")
    for leaf in tree.leaves:
        if all(v >= -1e-12 for v in _barycentric(leaf.vertices, p)):
            if _edge_distance(leaf.vertices, p) <= tolerance:
                raise BoundaryError(f"point {p} lies on or near a tile edge")
            return leaf_to_seq(tree, leaf)
    raise BoundaryError(f"point {p} could not be located strictly inside a tile")


# ---------------------------------------------------------------------------
# The finite geometrical representation
# ---------------------------------------------------------------------------


def geometric_rep(tree: TileTree) -> RelRep:
    """The representation on the leaves of an L-rooted fragment.

    A level-n transition relates leaf x to leaf y exactly when both lie
    in the same level-(n+1) tile and y's level-n ancestor has the
    generator's type: the finite counterpart of translating the origin
    within a successor tile and reading the tile type where it lands.
    """
    if tree.root.type != "L":
        raise ValueError("the geometrical representation needs an L-rooted tree")
    leaves = tree.leaves
    n = len(leaves)
    order = tree.order
    chains = []
    for leaf in leaves:
        chain = [leaf]
        while chain[-1].parent is not None:
            chain.append(chain[-1].parent)
        chains.append(chain)
    labels = tuple(leaf_address(tree, leaf) for leaf in leaves)
    gen_map: dict[tuple[int, str], Relation] = {}
    for lvl in range(order):
        successor = np.array([id(chain[lvl + 1]) for chain in chains], dtype=np.int64)
        shared = successor[:, None] == successor[None, :]
        types = np.array([chain[lvl].type == "S" for chain in chains], dtype=bool)
        gen_map[(lvl, "L")] = Relation(n, shared & ~types[None, :])
        gen_map[(lvl, "S")] = Relation(n, shared & types[None, :])
    return RelRep(labels, order, gen_map)


# ---------------------------------------------------------------------------
# Matching rules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchVerdict:
    passed: bool
    detail: str | None

    def to_text(self) -> str:
        return "matching rules: PASS" if self.passed else f"matching rules: FAIL  {self.detail}"


def _close(p: Point, q: Point, tol: float) -> bool:
    return math.hypot(p[0] - q[0], p[1] - q[1]) <= tol


def matching_check(tree: TileTree, tolerance: float = 1e-9) -> MatchVerdict:
    """Check decorations across every pair of leaves sharing an edge.

    Coinciding vertices must carry equal colours and a shared edge that
    is oriented on both sides must point the same way (an edge oriented
    on one side only is also a violation).  Returns the first violation
    in leaf-index order.
    """
    leaves = tree.leaves
    edges = [((0, 1), (1, 2), (2, 0))] * len(leaves)
    for i, leaf1 in enumerate(leaves):
        for j in range(i + 1, len(leaves)):
            leaf2 = leaves[j]
            for e1 in edges[i]:
                p1, q1 = leaf1.vertices[e1[0]], leaf1.vertices[e1[1]]
                for e2 in edges[j]:
                    p2, q2 = leaf2.vertices[e2[0]], leaf2.vertices[e2[1]]
                    if _close(p1, p2, tolerance) and _close(q1, q2, tolerance):
                        pairing = ((e1[0], e2[0]), (e1[1], e2[1]))
                    elif _close(p1, q2, tolerance) and _close(q1, p2, tolerance):
                        pairing = ((e1[0], e2[1]), (e1[1], e2[0]))
                    else:
                        continue
                    problem = _check_shared_edge(leaf1, leaf2, e1, e2, pairing)
                    if problem:
                        return MatchVerdict(False, f"leaves {i} and {j}: {problem}")
    return MatchVerdict(True, None)


def _check_shared_edge(leaf1, leaf2, e1, e2, pairing) -> str | None:
    d1, d2 = leaf1.decoration, leaf2.decoration
    for r1, r2 in pairing:
        if d1.vertex_colors[r1] != d2.vertex_colors[r2]:
            return (
                f"colour clash at shared vertex: {d1.vertex_colors[r1]} vs "
                f"{d2.vertex_colors[r2]}"
            )
    oriented1 = set(e1) == set(d1.oriented_edge)
    oriented2 = set(e2) == set(d2.oriented_edge)
    if oriented1 != oriented2:
        return "edge oriented on one side only"
    if oriented1 and oriented2:
        role_map = dict(pairing)
        tail1, head1 = d1.oriented_edge
        if (role_map[tail1], role_map[head1]) != d2.oriented_edge:
            return "oriented edges point in opposite directions"
    return None


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


@dataclass
class SvgOptions:
    width: float = 640.0
    margin: float = 12.0
    fill_large: str = "#f2e3b6"
    fill_small: str = "#b6cbe8"
    stroke: str = "#404040"
    stroke_width: float = 1.2
    vertex_colors: bool = False
    arrows: bool = False
    outline_level: int | None = None
    outline_stroke: str = "#b03030"


def render_svg(tree: TileTree, options: SvgOptions | None = None) -> str:
    """An SVG document with one triangle polygon per leaf.

    Optional extras (drawn as paths and circles, never as polygons):
    vertex-colour dots, arrowheads on oriented edges, and the outlines
    of all tiles at a chosen level.
    """
    opt = options or SvgOptions()
    xs = [v[0] for leaf in tree.leaves for v in leaf.vertices]
    ys = [v[1] for leaf in tree.leaves for v in leaf.vertices]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1e-12)
    scale = (opt.width - 2 * opt.margin) / span
    height = (max_y - min_y) * scale + 2 * opt.margin

    def place(p: Point) -> tuple[float, float]:
        return (
            opt.margin + (p[0] - min_x) * scale,
            height - opt.margin - (p[1] - min_y) * scale,
        )

    def fmt(p: Point) -> str:
        x, y = place(p)
        return f"{x:.3f},{y:.3f}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{opt.width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {opt.width:.0f} {height:.0f}">',
    ]
    for leaf in tree.leaves:
        fill = opt.fill_large if leaf.type == "L" else opt.fill_small
        points = " ".join(fmt(v) for v in leaf.vertices)
        parts.append(
            f'<polygon points="{points}" fill="{fill}" stroke="{opt.stroke}" '
            f'stroke-width="{opt.stroke_width}"/>'
        )
    if opt.arrows:
        for leaf in tree.leaves:
            tail_role, head_role = leaf.decoration.oriented_edge
            parts.append(
                _arrow_path(
                    place(leaf.vertices[tail_role]),
                    place(leaf.vertices[head_role]),
                    opt.stroke,
                )
            )
    if opt.vertex_colors:
        radius = max(2.0, opt.width / 320.0)
        for leaf in tree.leaves:
            for role, color in enumerate(leaf.decoration.vertex_colors):
                x, y = place(leaf.vertices[role])
                fill = "#000000" if color == BLACK else "#ffffff"
                parts.append(
                    f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{radius:.2f}" '
                    f'fill="{fill}" stroke="#000000" stroke-width="0.8"/>'
                )
    if opt.outline_level is not None:
        for node in _nodes_at_level(tree.root, opt.outline_level):
            a, b, c = (fmt(v) for v in node.vertices)
            parts.append(
                f'<path d="M {a} L {b} L {c} Z" fill="none" '
                f'stroke="{opt.outline_stroke}" stroke-width="{2.5 * opt.stroke_width}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _arrow_path(tail: tuple[float, float], head: tuple[float, float], stroke: str) -> str:
    """A small arrowhead at the midpoint of the edge, pointing tail->head."""
    mx, my = (tail[0] + head[0]) / 2.0, (tail[1] + head[1]) / 2.0
    dx, dy = head[0] - tail[0], head[1] - tail[1]
    norm = math.hypot(dx, dy) or 1.0
    ux, uy = dx / norm, dy / norm
    size = max(3.0, norm / 12.0)
    tip = (mx + ux * size, my + uy * size)
    left = (mx - uy * size * 0.5, my + ux * size * 0.5)
    right = (mx + uy * size * 0.5, my - ux * size * 0.5)
    return (
        f'<path d="M {left[0]:.3f} {left[1]:.3f} L {tip[0]:.3f} {tip[1]:.3f} '
        f'L {right[0]:.3f} {right[1]:.3f}" fill="none" stroke="{stroke}" '
        f'stroke-width="1.0"/>'
    )


def _nodes_at_level(root: TileNode, level: int) -> list[TileNode]:
    if level > root.level:
        return []
    out = []

    def walk(node: TileNode) -> None:
        if node.level == level:
            out.append(node)
            return
        for child in node.children:
            walk(child)

    walk(root)
    return out
