"""
Geometry of regular m-tier benzenoid strips.

A strip is described by the shapes of its fragments f_1..f_{m+1} and by its
length n. Interfaces i_1..i_m are the rows of vertical bonds of the tiers;
fragment f_k sits between interfaces i_{k-1} and i_k.

The explicit graph uses brick-wall coordinates: vertex (X, Y) with Y growing
downwards, tier k occupying rows Y = k-1 and Y = k, and its p-th vertical
bond at X = x_k + 2(p-1), where x_k is the tier offset in half-hexagon units.
"""
import re
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx

from zz_strips.errors import StripParseError, InvalidStripError

logger = logging.getLogger(__name__)


class Shape(str, Enum):
    W = "W"  # wide: first and last interface bond in the lower interface
    N = "N"  # narrow: both in the upper interface
    R = "R"  # right: first in the upper, last in the lower interface
    L = "L"  # left: first in the lower, last in the upper interface


# Change of |i_k| (and of ord(i_k)) across a fragment of the given shape
SIZE_STEP = {Shape.W: 1, Shape.N: -1, Shape.R: 0, Shape.L: 0}

# Shift of the lower tier's left edge, in half-hexagon units
OFFSET_STEP = {Shape.W: -1, Shape.N: 1, Shape.R: 1, Shape.L: -1}


@dataclass(frozen=True)
class StripSpec:
    shapes: Tuple[Shape, ...]
    n: int

    @property
    def m(self):
        """Number of tiers (and of non-empty interfaces)."""
        return len(self.shapes) - 1

    @property
    def shape_string(self):
        return "".join(s.value for s in self.shapes)

    def __str__(self):
        return f"{self.shape_string} {self.n}"

    def to_dict(self):
        return {"shapes": [s.value for s in self.shapes], "n": self.n}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        try:
            return make_strip(data["shapes"], data["n"])
        except (KeyError, TypeError) as e:
            raise StripParseError(f"Malformed strip object: {data!r}") from e

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise StripParseError(f"Malformed strip JSON: {e}") from e
        return cls.from_dict(data)


@dataclass(frozen=True)
class InterfaceProfile:
    n: int
    sizes: Tuple[int, ...]
    orders: Tuple[int, ...]

    @property
    def m(self):
        return len(self.sizes)

    def size(self, k):
        """|i_k| for k in [m] (1-based)."""
        return self.sizes[k - 1]

    def order(self, k):
        """ord(i_k) for k in [m] (1-based)."""
        return self.orders[k - 1]

    @property
    def is_kekulean(self):
        return min(self.orders, default=0) >= 0

    @property
    def poset_size(self):
        return sum(self.orders) if self.is_kekulean else 0


@dataclass(frozen=True)
class FragmentInfo:
    index: int
    shape: Shape
    upper: int
    lower: int
    first_bond_interface: int
    last_bond_interface: int


@dataclass(frozen=True)
class ValidationReport:
    first_is_w: bool
    last_is_n: bool
    last_order_is_one: bool
    tiers_nonempty: bool
    is_kekulean: bool
    orders: Tuple[int, ...] = ()
    sizes: Tuple[int, ...] = ()

    @property
    def valid(self):
        return self.first_is_w and self.last_is_n and self.last_order_is_one and self.tiers_nonempty

    def negative_orders(self):
        """(k, ord(i_k)) for every interface with a negative order."""
        return [(k, o) for k, o in enumerate(self.orders, start=1) if o < 0]

    def problems(self):
        msgs = []
        if not self.first_is_w:
            msgs.append("first fragment must have shape W")
        if not self.last_is_n:
            msgs.append("last fragment must have shape N")
        if not self.last_order_is_one:
            msgs.append(f"ord(i_m) must be 1, got {self.orders[-1] if self.orders else None}")
        if not self.tiers_nonempty:
            small = [k for k, s in enumerate(self.sizes, start=1) if s < 2]
            msgs.append(f"every tier needs a hexagon: |i_k| < 2 for k = {small}")
        return msgs

    def non_kekulean_message(self):
        return ", ".join(f"non-Kekuléan: ord(i_{k}) = {o}" for k, o in self.negative_orders())

    def to_dict(self):
        return {
            "valid": self.valid,
            "is_kekulean": self.is_kekulean,
            "first_is_w": self.first_is_w,
            "last_is_n": self.last_is_n,
            "last_order_is_one": self.last_order_is_one,
            "tiers_nonempty": self.tiers_nonempty,
            "orders": list(self.orders),
            "sizes": list(self.sizes),
            "problems": self.problems(),
        }


@dataclass(frozen=True)
class Hexagon:
    """
    One lattice hexagon. Vertices are listed clockwise starting at the
    upper-left corner: UL, T, UR, LR, B, LL. Edges are (min, max) id pairs.
    """
    tier: int
    index: int
    vertices: Tuple[int, ...]
    left_edge: Tuple[int, int]
    right_edge: Tuple[int, int]
    upper_left: Tuple[int, int]
    upper_right: Tuple[int, int]
    lower_left: Tuple[int, int]
    lower_right: Tuple[int, int]

    @property
    def edges(self):
        return (self.upper_left, self.upper_right, self.right_edge,
                self.lower_right, self.lower_left, self.left_edge)


@dataclass(frozen=True)
class BenzenoidGraph:
    spec: StripSpec
    graph: nx.Graph = field(compare=False)
    coords: Dict[int, Tuple[int, int]] = field(compare=False)
    hexagons: Tuple[Hexagon, ...]
    interfaces: Tuple[Tuple[Tuple[int, int], ...], ...]
    offsets: Tuple[int, ...]

    @property
    def vertex_count(self):
        return self.graph.number_of_nodes()

    @property
    def edge_count(self):
        return self.graph.number_of_edges()

    def interface(self, k):
        """Vertical bonds of interface i_k, left to right (e_{k,1}, e_{k,2}, ...)."""
        return self.interfaces[k - 1]


def edge_key(u, v):
    return (u, v) if u < v else (v, u)


def make_strip(shapes, n):
    """
    Builds a StripSpec from a sequence of shape letters and a length.

    Args:
        shapes (str | iterable): Shape letters, e.g. "WWRNN" or ["W", "R", "N"].
        n (int): Strip length, at least 1.

    Returns:
        StripSpec: The parsed strip (not yet validated).
    """
    try:
        letters = [str(s.value if isinstance(s, Shape) else s).upper() for s in shapes]
        parsed = tuple(Shape(letter) for letter in letters)
    except ValueError:
        raise StripParseError(f"Unknown shape letter in {shapes!r}; expected letters from W, N, R, L")
    if len(parsed) < 2:
        raise StripParseError("A strip needs at least two fragments (e.g. WN)")
    try:
        length = int(n)
    except (TypeError, ValueError):
        raise StripParseError(f"Strip length must be an integer, got {n!r}")
    if length < 1:
        raise StripParseError(f"Strip length must be at least 1, got {length}")
    return StripSpec(shapes=parsed, n=length)


def parallelogram(m_tiers, n):
    """M(m_tiers, n): shapes W, R x (m_tiers - 1), N."""
    if int(m_tiers) < 1:
        raise StripParseError(f"M needs at least one tier, got {m_tiers}")
    return make_strip("W" + "R" * (int(m_tiers) - 1) + "N", n)


_STRIP_RE = re.compile(r"^\s*([A-Za-z]+)\s+(\S+)(?:\s+(\S+))?\s*$")


def parse_strip(text):
    """
    Parses a strip description: "M <tiers> <n>" or "<shape letters> <n>".

    Args:
        text (str): The description, e.g. "WWRNN 3" or "M 2 2".

    Returns:
        StripSpec: The parsed strip.
    """
    match = _STRIP_RE.match(text or "")
    if not match:
        raise StripParseError(f"Malformed strip description: {text!r}")
    head, first, second = match.groups()
    if head == "M":
        if second is None:
            raise StripParseError(f"Expected 'M <tiers> <n>', got {text!r}")
        try:
            return parallelogram(int(first), int(second))
        except ValueError:
            raise StripParseError(f"Malformed token in {text!r}")
    if second is not None:
        raise StripParseError(f"Unexpected trailing token in {text!r}")
    return make_strip(head, first)


def interface_profile(spec):
    """
    Computes |i_k| and ord(i_k) = |i_k| - n for k = 1..m.
    Works for any shape sequence; validity is judged by validate().
    """
    sizes = []
    size = spec.n + 1
    for k in range(1, spec.m + 1):
        if k > 1:
            size += SIZE_STEP[spec.shapes[k - 1]]
        sizes.append(size)
    return InterfaceProfile(n=spec.n, sizes=tuple(sizes), orders=tuple(s - spec.n for s in sizes))


def validate(spec):
    profile = interface_profile(spec)
    return ValidationReport(
        first_is_w=spec.shapes[0] == Shape.W,
        last_is_n=spec.shapes[-1] == Shape.N,
        last_order_is_one=bool(profile.orders) and profile.orders[-1] == 1,
        tiers_nonempty=all(s >= 2 for s in profile.sizes),
        is_kekulean=profile.is_kekulean,
        orders=profile.orders,
        sizes=profile.sizes,
    )


def require_valid(spec):
    """Returns the ValidationReport, raising InvalidStripError if the geometry is invalid."""
    report = validate(spec)
    if not report.valid:
        raise InvalidStripError(f"Invalid strip {spec}: " + "; ".join(report.problems()), report)
    return report


def fragments(spec):
    """FragmentInfo for f_1..f_{m+1}."""
    infos = []
    for index, shape in enumerate(spec.shapes, start=1):
        upper, lower = index - 1, index
        first = lower if shape in (Shape.W, Shape.L) else upper
        last = lower if shape in (Shape.W, Shape.R) else upper
        infos.append(FragmentInfo(index, shape, upper, lower, first, last))
    return tuple(infos)


def tier_offsets(spec):
    """Left offsets x_1..x_m of the tiers in half-hexagon units (x_1 = 0)."""
    offsets = [0]
    for shape in spec.shapes[1:spec.m]:
        offsets.append(offsets[-1] + OFFSET_STEP[shape])
    return tuple(offsets)


def bond_x(offsets, k, p):
    """Horizontal coordinate of the interface bond e_{k,p}."""
    return offsets[k - 1] + 2 * (p - 1)


def build_graph(spec):
    """
    Materializes the benzenoid graph of a valid strip.

    Returns:
        BenzenoidGraph: networkx graph whose edges carry kind="interface"
        (with interface k and position p) or kind="spine".
    """
    report = require_valid(spec)
    offsets = tier_offsets(spec)

    # Collect hexagon corners in coordinates first so that ids follow (Y, X)
    corner_sets = []
    for k, size in enumerate(report.sizes, start=1):
        for p in range(1, size):
            x0 = bond_x(offsets, k, p)
            corner_sets.append((k, p, [(x0, k - 1), (x0 + 1, k - 1), (x0 + 2, k - 1),
                                       (x0 + 2, k), (x0 + 1, k), (x0, k)]))
    points = sorted({pt for _, _, corners in corner_sets for pt in corners}, key=lambda pt: (pt[1], pt[0]))
    ids = {pt: i for i, pt in enumerate(points)}

    graph = nx.Graph()
    for pt, i in ids.items():
        graph.add_node(i, pos=pt)

    hexagons = []
    for k, p, corners in corner_sets:
        ul, t, ur, lr, b, ll = (ids[pt] for pt in corners)
        hexagon = Hexagon(
            tier=k, index=p, vertices=(ul, t, ur, lr, b, ll),
            left_edge=edge_key(ul, ll), right_edge=edge_key(ur, lr),
            upper_left=edge_key(ul, t), upper_right=edge_key(t, ur),
            lower_left=edge_key(ll, b), lower_right=edge_key(b, lr),
        )
        hexagons.append(hexagon)
        for u, v in hexagon.edges:
            graph.add_edge(u, v, kind="spine")

    interfaces = []
    for k, size in enumerate(report.sizes, start=1):
        bonds = []
        for p in range(1, size + 1):
            x = bond_x(offsets, k, p)
            e = edge_key(ids[(x, k - 1)], ids[(x, k)])
            graph.edges[e].update(kind="interface", interface=k, position=p)
            bonds.append(e)
        interfaces.append(tuple(bonds))

    logger.debug("Built graph for %s: %d vertices, %d edges, %d hexagons",
                 spec, graph.number_of_nodes(), graph.number_of_edges(), len(hexagons))
    return BenzenoidGraph(
        spec=spec, graph=graph, coords={i: pt for pt, i in ids.items()},
        hexagons=tuple(hexagons), interfaces=tuple(interfaces), offsets=offsets,
    )


def shapes_from_graph(bg):
    """
    Re-derives the fragment shapes from the built graph by locating the
    leftmost and rightmost interface bonds of each fragment.
    """
    m = len(bg.interfaces)
    xs = [[bg.coords[e[0]][0] for e in bonds] for bonds in bg.interfaces]
    shapes = []
    for index in range(1, m + 2):
        upper = xs[index - 2] if index >= 2 else []
        lower = xs[index - 1] if index <= m else []
        candidates = [(x, "upper") for x in upper] + [(x, "lower") for x in lower]
        first = min(candidates)[1]
        last = max(candidates)[1]
        shapes.append({("lower", "lower"): Shape.W, ("upper", "upper"): Shape.N,
                       ("upper", "lower"): Shape.R, ("lower", "upper"): Shape.L}[(first, last)])
    return tuple(shapes)


def minimal_length(shapes):
    """Least n for which every tier of the shape sequence has a hexagon."""
    orders = interface_profile(make_strip(shapes, 1)).orders
    return max(1, 2 - min(orders, default=1))
