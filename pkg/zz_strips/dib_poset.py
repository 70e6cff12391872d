"""
The poset S of double interface bonds (DIBs) of a regular strip.

Elements s_{k,j} are ordered by the cover rule of each interior fragment:
when the first interface bond of f_κ lies in its upper interface the DIBs
of the two interfaces alternate starting from the upper one, otherwise
starting from the lower one.
"""
import json
import random
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Tuple

import networkx as nx

from zz_strips.errors import NonKekuleanError
from zz_strips.strip_geometry import fragments, interface_profile, require_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Dib:
    k: int
    j: int

    def __str__(self):
        return f"s_{{{self.k},{self.j}}}"

    def to_dict(self):
        return {"k": self.k, "j": self.j}


class DibPoset:
    """
    A finite poset on Dib elements.

    The order is given by any set of relations (a, b) meaning a < b; the
    transitive closure and the Hasse diagram (covers) are derived from it.
    Instances are immutable once built.
    """

    def __init__(self, elements, relations=()):
        self.elements = tuple(sorted(set(elements)))
        self.index = {e: i for i, e in enumerate(self.elements)}

        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.elements)
        for a, b in relations:
            if a not in self.index or b not in self.index:
                raise ValueError(f"Relation {a} < {b} refers to an element outside the poset")
            digraph.add_edge(a, b)
        if not nx.is_directed_acyclic_graph(digraph):
            raise ValueError("Relations contain a cycle; not a partial order")

        closure = nx.transitive_closure_dag(digraph)
        hasse = nx.transitive_reduction(digraph)
        self.covers = tuple(sorted(hasse.edges()))
        self._below: Dict[Dib, FrozenSet[Dib]] = {e: frozenset(closure.predecessors(e)) for e in self.elements}
        self._above: Dict[Dib, FrozenSet[Dib]] = {e: frozenset(closure.successors(e)) for e in self.elements}

    @property
    def size(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        return element in self.index

    def __eq__(self, other):
        if not isinstance(other, DibPoset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        return f"DibPoset(p={self.size}, covers={len(self.covers)})"

    def less(self, a, b):
        """a <_S b (strict)."""
        return a in self._below[b]

    def predecessors(self, element):
        """All elements strictly below element."""
        return self._below[element]

    def successors(self, element):
        """All elements strictly above element."""
        return self._above[element]

    def relations(self):
        """Every strict relation (a, b) with a < b, in element order."""
        return [(a, b) for b in self.elements for a in sorted(self._below[b])]

    def minimal_elements(self, remaining=None):
        pool = self.elements if remaining is None else [e for e in self.elements if e in remaining]
        pool_set = set(pool)
        return [e for e in pool if not (self._below[e] & pool_set)]

    def induced(self, members):
        """The induced subposet on members, with the order inherited from self."""
        chosen = [e for e in self.elements if e in set(members)]
        chosen_set = set(chosen)
        relations = [(a, b) for b in chosen for a in self._below[b] if a in chosen_set]
        return DibPoset(chosen, relations)

    def is_natural(self, labeling):
        if set(labeling.order) != set(self.elements):
            return False
        return all(labeling.label(a) < labeling.label(b) for a, b in self.covers)

    def to_dict(self):
        return {
            "elements": [e.to_dict() for e in self.elements],
            "covers": [[self.index[a], self.index[b]] for a, b in self.covers],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))


@dataclass(frozen=True)
class NaturalLabeling:
    """Order-preserving bijection ω from the poset to [p]; order[i - 1] carries label i."""
    order: Tuple[Dib, ...]
    _labels: Dict[Dib, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_labels", {e: i for i, e in enumerate(self.order, start=1)})

    def label(self, element):
        return self._labels[element]

    def element(self, label):
        return self.order[label - 1]

    def restrict(self, members):
        """Labeling of an induced subposet: the restriction of ω renumbered to 1..|members|."""
        keep = set(members)
        return NaturalLabeling(tuple(e for e in self.order if e in keep))

    def as_dict(self):
        return {str(e): i for e, i in self._labels.items()}


def chain_poset(p):
    """s_{1,1} < s_{2,1} < ... < s_{p,1}."""
    elements = [Dib(k, 1) for k in range(1, p + 1)]
    return DibPoset(elements, list(zip(elements, elements[1:])))


def antichain_poset(p):
    return DibPoset([Dib(k, 1) for k in range(1, p + 1)])


def fence_poset(p):
    """Zigzag s_1 < s_2 > s_3 < s_4 ..."""
    elements = [Dib(k, 1) for k in range(1, p + 1)]
    relations = []
    for k in range(1, p):
        a, b = elements[k - 1], elements[k]
        relations.append((a, b) if k % 2 == 1 else (b, a))
    return DibPoset(elements, relations)


def build_poset(spec):
    """
    Builds the DIB poset S of a valid Kekuléan strip.

    Args:
        spec (StripSpec): The strip.

    Returns:
        DibPoset: Elements s_{k,j} for k in [m], j in [ord(i_k)] with the covers of every interior fragment.

    Raises:
        InvalidStripError: If the strip geometry is invalid.
        NonKekuleanError: If some interface order is negative.
    """
    report = require_valid(spec)
    if not report.is_kekulean:
        raise NonKekuleanError(f"No DIB poset for {spec}: {report.non_kekulean_message()}")

    profile = interface_profile(spec)
    elements = [Dib(k, j) for k in range(1, spec.m + 1) for j in range(1, profile.order(k) + 1)]
    present = set(elements)

    covers = []
    for info in fragments(spec)[1:spec.m]:
        u, l = info.upper, info.lower
        first, second = (u, l) if info.first_bond_interface == u else (l, u)
        # DIBs of the two interfaces alternate left to right, starting at `first`
        for j in range(1, max(profile.order(u), profile.order(l)) + 1):
            a, b, c = Dib(first, j), Dib(second, j), Dib(first, j + 1)
            if a in present and b in present:
                covers.append((a, b))
            if b in present and c in present:
                covers.append((b, c))

    poset = DibPoset(elements, covers)
    logger.debug("Poset of %s: p=%d, %d covers", spec, poset.size, len(poset.covers))
    return poset


def induced_subposets(poset):
    """
    Yields the 2^p induced subposets, subset bitmask ascending (bit i selects poset.elements[i]).
    """
    p = poset.size
    for mask in range(1 << p):
        yield poset.induced([poset.elements[i] for i in range(p) if mask >> i & 1])


def natural_labeling(poset):
    """Labels minimal elements one by one, always taking the smallest (j, k) first."""
    remaining = set(poset.elements)
    order = []
    while remaining:
        nxt = min(poset.minimal_elements(remaining), key=lambda e: (e.j, e.k))
        order.append(nxt)
        remaining.discard(nxt)
    return NaturalLabeling(tuple(order))


def random_natural_labeling(poset, rng=None):
    """A uniformly chosen minimal element at each step; used to test labeling invariance."""
    rng = rng or random.Random()
    remaining = set(poset.elements)
    order = []
    while remaining:
        nxt = rng.choice(poset.minimal_elements(remaining))
        order.append(nxt)
        remaining.discard(nxt)
    return NaturalLabeling(tuple(order))


def poset_from_dict(data):
    elements = [Dib(int(e["k"]), int(e["j"])) for e in data["elements"]]
    covers = [(elements[a], elements[b]) for a, b in data["covers"]]
    return DibPoset(elements, covers)


def poset_from_json(text):
    return poset_from_dict(json.loads(text))


def to_dot(poset, labeling=None, name="S"):
    """DOT rendering of the Hasse diagram, drawn bottom-up."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for e in poset.elements:
        caption = f"s{e.k},{e.j}"
        if labeling is not None:
            caption += f" ({labeling.label(e)})"
        lines.append(f'  "s{e.k}_{e.j}" [label="{caption}"];')
    for a, b in poset.covers:
        lines.append(f'  "s{a.k}_{a.j}" -> "s{b.k}_{b.j}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
