"""
Kekulé structures and Clar covers of a strip, generated from the DIB poset.

A Kekulé structure is represented by the positions of its double interface
bonds: pos(s_{k,j}) = p means the j-th double bond of interface i_k is the
vertical bond e_{k,p}. Structures correspond one-to-one to pairs (A, μ) of an
induced subposet A ⊆ S and a strictly order-preserving map μ: A -> [n]; the
DIBs in A are exactly those whose left hexagon is a proper sextet.
"""
import json
import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from zz_strips.dib_poset import Dib, build_poset, induced_subposets, natural_labeling
from zz_strips.errors import KekuleAssignmentError, OrderMapError
from zz_strips.strip_geometry import bond_x, fragments, interface_profile, tier_offsets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderMap:
    """A map μ: A -> [n] on an induced subposet A, as (Dib, value) pairs sorted by Dib."""
    values: Tuple[Tuple[Dib, int], ...]

    @classmethod
    def from_mapping(cls, mapping):
        return cls(tuple(sorted(dict(mapping).items())))

    @property
    def support(self):
        """The subposet elements A."""
        return tuple(d for d, _ in self.values)

    def as_dict(self) -> Dict[Dib, int]:
        return dict(self.values)

    def __len__(self):
        return len(self.values)

    def to_dict(self):
        return {"A": [d.to_dict() for d, _ in self.values], "mu": [v for _, v in self.values]}


@dataclass(frozen=True)
class KekuleAssignment:
    """pos(s_{k,j}) for every DIB, as (Dib, position) pairs sorted by Dib."""
    positions: Tuple[Tuple[Dib, int], ...]

    @classmethod
    def from_mapping(cls, mapping):
        return cls(tuple(sorted(dict(mapping).items())))

    @classmethod
    def from_interface_bonds(cls, bonds):
        """Builds the assignment from (k, p) pairs; ranks j follow p within each interface."""
        per_interface = {}
        for k, p in sorted(bonds):
            per_interface.setdefault(k, []).append(p)
        return cls.from_mapping({Dib(k, j): p
                                 for k, ps in per_interface.items()
                                 for j, p in enumerate(ps, start=1)})

    def position(self, dib):
        return dict(self.positions)[dib]

    def as_dict(self):
        return dict(self.positions)

    def interface_bonds(self):
        """The set K_I as sorted (k, p) pairs."""
        return tuple(sorted((d.k, p) for d, p in self.positions))

    def to_dict(self):
        return {"pos": [[d.k, p] for d, p in self.positions]}

    @classmethod
    def from_dict(cls, data):
        return cls.from_interface_bonds((int(k), int(p)) for k, p in data["pos"])


@dataclass(frozen=True)
class ClarCoverRecord:
    """
    A Clar cover built on a Kekulé structure: the DIBs in aromatic have their
    proper sextet turned into an aromatic ring. word is the linear extension
    of A the map μ is attributed to, selection the matching increasing
    sequence in [n + des(word)].
    """
    base: KekuleAssignment
    order_map: OrderMap
    aromatic: Tuple[Dib, ...]
    word: Tuple[int, ...] = ()
    selection: Tuple[int, ...] = ()

    @property
    def order(self):
        return len(self.aromatic)

    def to_dict(self):
        data = self.order_map.to_dict()
        data.update(self.base.to_dict())
        data["aromatic"] = [d.to_dict() for d in self.aromatic]
        data["word"] = list(self.word)
        data["selection"] = list(self.selection)
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))


def check_order_map(poset, om, n):
    """Raises OrderMapError unless om maps a subset of poset strictly order-preservingly into [n]."""
    mu = om.as_dict()
    for dib, value in mu.items():
        if dib not in poset:
            raise OrderMapError(f"{dib} is not an element of the poset")
        if not 1 <= value <= n:
            raise OrderMapError(f"μ({dib}) = {value} is outside [1, {n}]")
    for a, b in poset.relations():
        if a in mu and b in mu and not mu[a] < mu[b]:
            raise OrderMapError(f"{a} < {b} but μ({a}) = {mu[a]} is not below μ({b}) = {mu[b]}")


def check_assignment(spec, poset, ka):
    """
    Raises KekuleAssignmentError unless ka places every DIB on an existing
    interface bond, increasing with j inside each interface, with the DIBs
    of every interior fragment alternating between its two interfaces.
    """
    profile = interface_profile(spec)
    pos = ka.as_dict()
    if set(pos) != set(poset.elements):
        raise KekuleAssignmentError("Assignment does not cover exactly the DIBs of the strip")
    for dib, p in pos.items():
        if not 1 <= p <= profile.size(dib.k):
            raise KekuleAssignmentError(f"pos({dib}) = {p} is outside [1, {profile.size(dib.k)}]")
        below = Dib(dib.k, dib.j - 1)
        if below in pos and pos[below] >= p:
            raise KekuleAssignmentError(f"Positions in interface {dib.k} do not increase with j")

    offsets = tier_offsets(spec)
    for info in fragments(spec)[1:spec.m]:
        bonds = sorted((bond_x(offsets, d.k, p), d.k)
                       for d, p in pos.items() if d.k in (info.upper, info.lower))
        if not bonds:
            continue
        if bonds[0][1] != info.first_bond_interface:
            raise KekuleAssignmentError(
                f"Fragment f_{info.index}: first double bond must lie in interface {info.first_bond_interface}")
        if any(a[1] == b[1] for a, b in zip(bonds, bonds[1:])):
            raise KekuleAssignmentError(f"Fragment f_{info.index}: double interface bonds do not alternate")


def kekule_from_map(spec, om, poset=None):
    """
    The unique Kekulé structure whose proper-sextet DIBs are A with map μ.

    DIBs outside A take μ̃(s) = max({μ(a) : a ∈ A, a < s} ∪ {0}); then
    pos(s_{k,j}) = μ̃(s_{k,j}) + j.
    """
    poset = poset or build_poset(spec)
    check_order_map(poset, om, spec.n)
    mu = om.as_dict()
    positions = {}
    for dib in poset.elements:
        if dib in mu:
            lifted = mu[dib]
        else:
            lifted = max((mu[a] for a in poset.predecessors(dib) if a in mu), default=0)
        positions[dib] = lifted + dib.j
    return KekuleAssignment.from_mapping(positions)


def map_from_kekule(spec, ka, poset=None):
    """
    Recovers (A_K, μ_K) from a Kekulé structure: μ_K(s_{k,j}) = pos - j and
    A_K holds the DIBs whose μ_K exceeds that of all their predecessors (and 0).
    """
    poset = poset or build_poset(spec)
    check_assignment(spec, poset, ka)
    mu = {dib: p - dib.j for dib, p in ka.positions}
    support = {dib: value for dib, value in mu.items()
               if value > max((mu[a] for a in poset.predecessors(dib)), default=0)}
    return OrderMap.from_mapping(support)


def iter_strict_maps(subposet, n):
    """Strictly order-preserving maps subposet -> [n], lexicographic in element order."""
    elements = subposet.elements
    values = []

    def assign(i):
        if i == len(elements):
            yield OrderMap(tuple(zip(elements, values)))
            return
        current = elements[i]
        for v in range(1, n + 1):
            if all((not subposet.less(prev, current) or values[t] < v) and
                   (not subposet.less(current, prev) or v < values[t])
                   for t, prev in enumerate(elements[:i])):
                values.append(v)
                yield from assign(i + 1)
                values.pop()

    yield from assign(0)


def enumerate_kekule(spec, poset=None):
    """
    Yields (OrderMap, KekuleAssignment) for every Kekulé structure: subposets A
    in bitmask order, then maps μ in lexicographic order.
    """
    poset = poset or build_poset(spec)
    count = 0
    for sub in induced_subposets(poset):
        for om in iter_strict_maps(sub, spec.n):
            count += 1
            yield om, kekule_from_map(spec, om, poset)
    logger.debug("Enumerated %d Kekulé structures of %s", count, spec)


def clar_attribution(om, labeling):
    """
    The linear extension v of A compatible with μ, and the increasing
    selection g_i = μ(v_i) + #{descents of v before i}.

    A is labeled by the restriction of labeling; v lists A by μ ascending,
    ties by label descending.
    """
    local = labeling.restrict(om.support)
    ranked = sorted(om.values, key=lambda item: (item[1], -local.label(item[0])))
    word = tuple(local.label(dib) for dib, _ in ranked)
    selection = []
    descents = 0
    for i, (_, value) in enumerate(ranked):
        if i > 0 and word[i - 1] > word[i]:
            descents += 1
        selection.append(value + descents)
    return word, tuple(selection)


def generate_clar_covers(spec, poset=None, labeling=None):
    """
    Yields the Clar covers of the strip: for every Kekulé structure with
    sextet set A, one record per subset of A turned aromatic (bitmask order).
    """
    poset = poset or build_poset(spec)
    labeling = labeling or natural_labeling(poset)
    for om, ka in enumerate_kekule(spec, poset):
        word, selection = clar_attribution(om, labeling)
        support = om.support
        for mask in range(1 << len(support)):
            aromatic = tuple(d for i, d in enumerate(support) if mask >> i & 1)
            yield ClarCoverRecord(base=ka, order_map=om, aromatic=aromatic, word=word, selection=selection)
