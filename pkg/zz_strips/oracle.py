"""
Brute-force ground truth on the explicit benzenoid graph.

Everything here works edge by edge on the graph from build_graph and never
looks at the DIB poset, so it can certify the poset-side results.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple

from zz_strips.config import resolve_limit
from zz_strips.dib_poset import build_poset
from zz_strips.errors import GuardExceededError, KekuleAssignmentError
from zz_strips.kekule_bijection import KekuleAssignment, enumerate_kekule
from zz_strips.order_polynomials import IntPolynomial, ZzPolynomial, a_coefficients, shift_to_x, zz_polynomial
from zz_strips.strip_geometry import build_graph, edge_key, require_valid

logger = logging.getLogger(__name__)

# Matched edges of a proper sextet, and of its mirror image
SEXTET_PATTERNS = {
    "right": ("right_edge", "upper_left", "lower_left"),
    "left": ("left_edge", "upper_right", "lower_right"),
}


@dataclass(frozen=True)
class Matching:
    edges: FrozenSet[Tuple[int, int]]

    def __contains__(self, edge):
        return edge_key(*edge) in self.edges

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class ExplicitClarCover:
    """Aromatic hexagons (indices into BenzenoidGraph.hexagons) plus a perfect matching of the rest."""
    hexagons: Tuple[int, ...]
    matching: Matching

    @property
    def order(self):
        return len(self.hexagons)


def _check_guard(bg, max_vertices):
    max_vertices = resolve_limit(max_vertices, "max_vertices")
    if bg.vertex_count > max_vertices:
        raise GuardExceededError("oracle graph vertices", max_vertices, bg.vertex_count)


def _sorted_adjacency(bg):
    return {v: sorted(bg.graph.neighbors(v)) for v in sorted(bg.graph.nodes)}


def enumerate_perfect_matchings(bg, max_vertices=None):
    """
    All perfect matchings, by branching on the partner of the lowest-id
    uncovered vertex.

    Raises:
        GuardExceededError: If the graph has more than max_vertices vertices.
    """
    _check_guard(bg, max_vertices)
    adjacency = _sorted_adjacency(bg)
    order = list(adjacency)
    covered = set()
    chosen = []
    found = []

    def recurse(i):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            found.append(Matching(frozenset(chosen)))
            return
        v = order[i]
        covered.add(v)
        for w in adjacency[v]:
            if w in covered:
                continue
            covered.add(w)
            chosen.append(edge_key(v, w))
            recurse(i + 1)
            chosen.pop()
            covered.discard(w)
        covered.discard(v)

    recurse(0)
    logger.debug("%s: %d perfect matchings", bg.spec, len(found))
    return found


def enumerate_clar_covers(bg, max_vertices=None):
    """
    All Clar covers: vertex-disjoint aromatic hexagons H with a perfect
    matching of the vertices outside H.

    The lowest-id uncovered vertex is either matched to a neighbour or
    covered by one of its hexagons, so every cover is produced exactly once.
    """
    _check_guard(bg, max_vertices)
    adjacency = _sorted_adjacency(bg)
    hexagons_at = {v: [] for v in adjacency}
    for index, hexagon in enumerate(bg.hexagons):
        for v in hexagon.vertices:
            hexagons_at[v].append(index)

    order = list(adjacency)
    covered = set()
    chosen = []
    rings = []
    found = []

    def recurse(i):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            found.append(ExplicitClarCover(tuple(sorted(rings)), Matching(frozenset(chosen))))
            return
        v = order[i]
        covered.add(v)
        for w in adjacency[v]:
            if w in covered:
                continue
            covered.add(w)
            chosen.append(edge_key(v, w))
            recurse(i + 1)
            chosen.pop()
            covered.discard(w)
        covered.discard(v)
        for index in hexagons_at[v]:
            ring = bg.hexagons[index].vertices
            if any(u in covered for u in ring):
                continue
            covered.update(ring)
            rings.append(index)
            recurse(i + 1)
            rings.pop()
            covered.difference_update(ring)

    recurse(0)
    found.sort(key=lambda c: (c.order, c.hexagons, sorted(c.matching.edges)))
    logger.debug("%s: %d Clar covers", bg.spec, len(found))
    return found


def count_proper_sextets(bg, mch, pattern="right"):
    """Hexagons whose three matched edges form the proper-sextet pattern."""
    names = SEXTET_PATTERNS[pattern]
    return sum(1 for hexagon in bg.hexagons
               if all(getattr(hexagon, name) in mch.edges for name in names))


def sextet_histogram(bg, pattern="right", matchings=None):
    """a(B, k): number of perfect matchings with exactly k sextets of the given pattern."""
    matchings = enumerate_perfect_matchings(bg) if matchings is None else matchings
    counts = Counter(count_proper_sextets(bg, m, pattern) for m in matchings)
    return tuple(counts.get(k, 0) for k in range(max(counts, default=-1) + 1))


def zz_from_covers(covers):
    counts = Counter(c.order for c in covers)
    return ZzPolynomial.from_coeffs(counts.get(k, 0) for k in range(max(counts, default=-1) + 1))


def zz_from_matchings(bg, pattern="right", matchings=None):
    """Σ_k a(B, k) (x + 1)^k."""
    return shift_to_x(IntPolynomial.from_coeffs(sextet_histogram(bg, pattern, matchings)))


def extract_ki(bg, mch):
    """The double interface bonds of a matching, as a KekuleAssignment."""
    bonds = [(k, p)
             for k, interface in enumerate(bg.interfaces, start=1)
             for p, edge in enumerate(interface, start=1)
             if edge in mch.edges]
    return KekuleAssignment.from_interface_bonds(bonds)


def matching_from_assignment(bg, ka, matchings=None):
    """The unique perfect matching whose double interface bonds are those of ka."""
    matchings = enumerate_perfect_matchings(bg) if matchings is None else matchings
    target = ka.interface_bonds()
    hits = [m for m in matchings if extract_ki(bg, m).interface_bonds() == target]
    if len(hits) != 1:
        raise KekuleAssignmentError(f"{len(hits)} perfect matchings carry the bonds {list(target)}")
    return hits[0]


def sextet_mismatches(spec, pattern="right", bg=None, matchings=None):
    """
    Structures (A, μ) from the poset whose matching does not have exactly |A|
    sextets of the given pattern. Empty for the proper pattern.
    """
    bg = bg or build_graph(spec)
    matchings = enumerate_perfect_matchings(bg) if matchings is None else matchings
    by_bonds = {extract_ki(bg, m).interface_bonds(): m for m in matchings}
    mismatches = []
    for om, ka in enumerate_kekule(spec):
        found = count_proper_sextets(bg, by_bonds[ka.interface_bonds()], pattern)
        if found != len(om):
            mismatches.append((om, found))
    return mismatches


@dataclass
class OracleReport:
    spec: object
    zz_poset: ZzPolynomial
    zz_covers: ZzPolynomial
    zz_matchings: ZzPolynomial
    matching_count: int
    kekule_count: int
    diff: List[str] = field(default_factory=list)

    @property
    def agrees(self):
        return not self.diff

    def to_dict(self):
        return {
            "strip": self.spec.to_dict(),
            "zz_poset": str(self.zz_poset),
            "zz_covers": str(self.zz_covers),
            "zz_matchings": str(self.zz_matchings),
            "matchings": self.matching_count,
            "kekule_structures": self.kekule_count,
            "agrees": self.agrees,
            "diff": list(self.diff),
        }


def oracle_report(spec, max_vertices=None, guard_p=None):
    """
    Runs the three ZZ computations and compares the K_I sets of the poset
    enumeration with those of the oracle's perfect matchings. For Kekuléan
    strips the subset sums a(S, k) are also checked against the sextet
    histogram of the matchings.
    """
    report = require_valid(spec)
    bg = build_graph(spec)
    matchings = enumerate_perfect_matchings(bg, max_vertices)
    covers = enumerate_clar_covers(bg, max_vertices)

    zz_poset = zz_polynomial(spec)
    zz_covers = zz_from_covers(covers)
    zz_matchings = zz_from_matchings(bg, matchings=matchings)

    oracle_bonds = Counter(extract_ki(bg, m).interface_bonds() for m in matchings)
    diff = []
    poset_bonds = Counter()
    if report.is_kekulean:
        poset = build_poset(spec)
        poset_bonds = Counter(ka.interface_bonds() for _, ka in enumerate_kekule(spec, poset))
        a_poset = a_coefficients(spec, guard_p=guard_p)
        a_oracle = sextet_histogram(bg, matchings=matchings)
        if a_poset != a_oracle:
            diff.append(f"a(S, k) {list(a_poset)} != sextet histogram {list(a_oracle)}")

    if zz_poset != zz_covers:
        diff.append(f"poset ZZ {zz_poset} != Clar-cover ZZ {zz_covers}")
    if zz_poset != zz_matchings:
        diff.append(f"poset ZZ {zz_poset} != sextet-histogram ZZ {zz_matchings}")
    if any(c > 1 for c in oracle_bonds.values()):
        diff.append("distinct perfect matchings share the same double interface bonds")
    if oracle_bonds != poset_bonds:
        missing = sorted(oracle_bonds - poset_bonds)
        extra = sorted(poset_bonds - oracle_bonds)
        diff.append(f"K_I sets differ: {len(missing)} only in the oracle, {len(extra)} only in the poset enumeration")

    return OracleReport(
        spec=spec, zz_poset=zz_poset, zz_covers=zz_covers, zz_matchings=zz_matchings,
        matching_count=len(matchings), kekule_count=sum(poset_bonds.values()), diff=diff,
    )
