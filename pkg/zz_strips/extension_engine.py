"""
Linear extensions of a naturally labeled poset, with their descent and
fixed-label statistics.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from zz_strips.errors import KekuleAssignmentError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearExtensionRecord:
    word: Tuple[int, ...]
    descents: FrozenSet[int]
    fixed: FrozenSet[int]

    @property
    def des(self):
        return len(self.descents)

    @property
    def fix(self):
        return len(self.fixed)

    def to_line(self):
        return (f"{format_word(self.word)} des={self.des} fix={self.fix} "
                f"descents={format_set(self.descents)} fixed={format_set(self.fixed)}")

    def to_dict(self):
        return {
            "word": list(self.word),
            "des": self.des,
            "fix": self.fix,
            "descents": sorted(self.descents),
            "fixed": sorted(self.fixed),
        }


def format_word(word):
    if all(label < 10 for label in word):
        return "".join(str(label) for label in word) or "()"
    return " ".join(str(label) for label in word)


def format_set(values):
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def parse_word(text):
    """Inverse of format_word for words written as digits ("123546") or space-separated labels."""
    text = text.strip()
    if text in ("", "()"):
        return ()
    if " " in text or "," in text:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)


def linear_extensions(poset, labeling):
    """
    All label words w_1..w_p of linear extensions, lexicographically ordered.

    Backtracks over the currently minimal elements, trying them in
    increasing label order.
    """
    p = poset.size
    # below[l] is a bitmask of the labels that must precede label l
    below = [0] * (p + 1)
    for element in poset.elements:
        mask = 0
        for pred in poset.predecessors(element):
            mask |= 1 << labeling.label(pred)
        below[labeling.label(element)] = mask

    words = []
    word = []

    def extend(placed):
        if len(word) == p:
            words.append(tuple(word))
            return
        for label in range(1, p + 1):
            bit = 1 << label
            if placed & bit or below[label] & ~placed:
                continue
            word.append(label)
            extend(placed | bit)
            word.pop()

    extend(0)
    logger.debug("Poset of size %d has %d linear extensions", p, len(words))
    return words


def descent_stats(word):
    """Descent set D(w) = {i : w_i > w_{i+1}} (1-based) and its size."""
    descents = frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])
    return descents, len(descents)


def check_extension(word, poset, labeling):
    """Raises KekuleAssignmentError unless word is a linear extension of poset under labeling."""
    p = poset.size
    if sorted(word) != list(range(1, p + 1)):
        raise KekuleAssignmentError(f"Word {format_word(word)} is not a permutation of [{p}]")
    position = {label: i for i, label in enumerate(word)}
    for a, b in poset.covers:
        if position[labeling.label(a)] > position[labeling.label(b)]:
            raise KekuleAssignmentError(
                f"Word {format_word(word)} places {b} before {a}; not a linear extension")


def fixed_labels(word, poset, labeling):
    """
    The fixed labels F(w) and their number.

    Label w_i is fixed when i - 1 or i is a descent, or when
    L(w_i) = {l < i : w_l > w_i} is non-empty and its maximum exceeds the
    maximum of J(w_i) = {j : ω⁻¹(w_j) < ω⁻¹(w_i)}, with max ∅ = 0.
    """
    check_extension(word, poset, labeling)
    descents, _ = descent_stats(word)
    position = {label: i for i, label in enumerate(word, start=1)}

    fixed = set()
    for i, label in enumerate(word, start=1):
        if (i - 1) in descents or i in descents:
            fixed.add(label)
            continue
        larger_before = [l for l in range(1, i) if word[l - 1] > label]
        if not larger_before:
            continue
        below = [position[labeling.label(pred)] for pred in poset.predecessors(labeling.element(label))]
        if max(larger_before) > max(below, default=0):
            fixed.add(label)
    return frozenset(fixed), len(fixed)


def extension_records(poset, labeling):
    """LinearExtensionRecord for every linear extension, in word order."""
    records = []
    for word in linear_extensions(poset, labeling):
        descents, _ = descent_stats(word)
        fixed, _ = fixed_labels(word, poset, labeling)
        records.append(LinearExtensionRecord(word, descents, fixed))
    return records
