"""
Strict order polynomials, extended strict order polynomials and the ZZ
polynomial of a strip.

E°(n, z) is computed along two independent paths: the sum over induced
subposets Q of Ω°_Q(n) z^|Q|, and the closed sum over linear extensions
using descents and fixed labels. The ZZ polynomial is E°(n, x + 1).
"""
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Tuple

import sympy
from sympy import Poly
from sympy.abc import k, n as n_symbol, x

from zz_strips.config import resolve_limit
from zz_strips.dib_poset import build_poset, induced_subposets, natural_labeling
from zz_strips.errors import GuardExceededError, NonKekuleanError
from zz_strips.extension_engine import descent_stats, extension_records, linear_extensions
from zz_strips.strip_geometry import require_valid

logger = logging.getLogger(__name__)


def binom(a, b):
    """C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _trim(coeffs):
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with exact integer coefficients, lowest degree first; () is the zero polynomial."""
    coeffs: Tuple[int, ...]
    var: str = "z"

    @classmethod
    def from_coeffs(cls, coeffs, **kwargs):
        return cls(_trim(coeffs), **kwargs)

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, power):
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __call__(self, value):
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if power == 0:
                body = str(c)
            else:
                monomial = self.var if power == 1 else f"{self.var}^{power}"
                body = monomial if c == 1 else f"{c}{monomial}"
            terms.append(body)
        return " + ".join(terms)

    def to_sympy(self):
        gen = sympy.Symbol(self.var)
        return Poly.from_list(list(reversed(self.coeffs)) or [0], gens=gen)

    def to_dict(self):
        return {"coeffs": list(self.coeffs)}


@dataclass(frozen=True)
class ZzPolynomial(IntPolynomial):
    """ZZ(S, x) = Σ c_k x^k; c_k counts the Clar covers of order k."""
    var: str = "x"

    @classmethod
    def from_dict(cls, data):
        return cls.from_coeffs(data["coeffs"])

    @property
    def kekule_count(self):
        return self(0)

    @property
    def clar_cover_count(self):
        return self(1)

    @property
    def clar_number(self):
        return None if self.is_zero else self.degree

    @property
    def clar_structures(self):
        return self.coeffs[-1] if self.coeffs else 0

    def summary(self):
        return {
            "coeffs": list(self.coeffs),
            "text": str(self),
            "kekule_count": self.kekule_count,
            "clar_covers": self.clar_cover_count,
            "clar_number": self.clar_number,
            "clar_structures": self.clar_structures,
        }


def shift_to_x(z_poly):
    """Substitutes z = 1 + x: Σ e_k z^k -> Σ c_k x^k."""
    if z_poly.is_zero:
        return ZzPolynomial(())
    composed = Poly.from_list(list(reversed(z_poly.coeffs)), gens=x).compose(Poly(x + 1, x))
    return ZzPolynomial.from_coeffs(reversed(composed.all_coeffs()))


def strict_order_poly(subposet, n, labeling=None):
    """
    Ω°_Q(n): the number of strictly order-preserving maps Q -> [n],
    computed as Σ_{w ∈ L(Q)} C(n + des(w), |Q|).
    """
    labeling = labeling or natural_labeling(subposet)
    size = subposet.size
    return sum(binom(n + descent_stats(w)[1], size) for w in linear_extensions(subposet, labeling))


def brute_force_strict_maps(subposet, n, max_maps=None):
    """
    Every map Q -> [n] with s < t => φ(s) < φ(t), as value tuples aligned
    with subposet.elements, in lexicographic order.
    """
    max_maps = resolve_limit(max_maps, "max_maps")
    total = n ** subposet.size
    if total > max_maps:
        raise GuardExceededError("brute-force strict maps n^|Q|", max_maps, total)
    relations = [(subposet.index[a], subposet.index[b]) for a, b in subposet.relations()]
    return [values for values in itertools.product(range(1, n + 1), repeat=subposet.size)
            if all(values[a] < values[b] for a, b in relations)]


def extended_poly_subposet_sum(poset, n, guard_p=None):
    """E°_P(n, z) = Σ_{Q ⊆ P} Ω°_Q(n) z^|Q|, as an IntPolynomial in z."""
    guard_p = resolve_limit(guard_p, "guard_p")
    if poset.size > guard_p:
        raise GuardExceededError("subposet enumeration p", guard_p, poset.size)
    coeffs = [0] * (poset.size + 1)
    for sub in induced_subposets(poset):
        coeffs[sub.size] += strict_order_poly(sub, n)
    return IntPolynomial.from_coeffs(coeffs)


def extended_poly_extension_formula(poset, labeling, n):
    """
    E°_P(n, z) = Σ_k Σ_{w ∈ L(P)} C(p - fix(w), k - fix(w)) C(n + des(w), k) z^k.
    """
    groups = Counter((r.des, r.fix) for r in extension_records(poset, labeling))
    return IntPolynomial.from_coeffs(_grouped_coefficients(poset.size, groups, n))


def _grouped_coefficients(p, groups, n):
    return [sum(mult * binom(p - f, k_ - f) * binom(n + d, k_) for (d, f), mult in groups.items())
            for k_ in range(p + 1)]


def zz_polynomial(spec, labeling=None):
    """
    ZZ(S, x) = E°_S(n, x + 1); the zero polynomial for non-Kekuléan strips.

    Raises:
        InvalidStripError: If the strip geometry is invalid.
    """
    report = require_valid(spec)
    if not report.is_kekulean:
        logger.warning(report.non_kekulean_message())
        return ZzPolynomial(())
    poset = build_poset(spec)
    labeling = labeling or natural_labeling(poset)
    zz = shift_to_x(extended_poly_extension_formula(poset, labeling, spec.n))
    logger.debug("ZZ(%s) = %s", spec, zz)
    return zz


def a_coefficients(spec, guard_p=None):
    """a(S, k) = Σ_{A ⊆ S, |A| = k} Ω°_A(n): Kekulé structures with exactly k proper sextets."""
    report = require_valid(spec)
    if not report.is_kekulean:
        raise NonKekuleanError(f"No sextet distribution for {spec}: {report.non_kekulean_message()}")
    return extended_poly_subposet_sum(build_poset(spec), spec.n, guard_p=guard_p).coeffs


@dataclass(frozen=True, order=True)
class ExtensionGroup:
    des: int
    fix: int
    mult: int

    def to_dict(self):
        return {"des": self.des, "fix": self.fix, "mult": self.mult}


@dataclass(frozen=True)
class ClosedForm:
    """
    ZZ as a function of n: Σ_k Σ_groups mult · C(p - fix, k - fix) C(n + des, k) (1 + x)^k.
    An empty group list is the zero polynomial of a non-Kekuléan family.
    """
    p: int
    groups: Tuple[ExtensionGroup, ...]
    shapes: str = ""

    @classmethod
    def zero(cls, shapes=""):
        return cls(p=0, groups=(), shapes=shapes)

    @property
    def extension_count(self):
        return sum(g.mult for g in self.groups)

    def z_polynomial(self, n):
        groups = {(g.des, g.fix): g.mult for g in self.groups}
        return IntPolynomial.from_coeffs(_grouped_coefficients(self.p, groups, n))

    def evaluate(self, n):
        return shift_to_x(self.z_polynomial(n))

    def to_sympy(self):
        inner = sympy.Add(*[g.mult * sympy.binomial(self.p - g.fix, k - g.fix) * sympy.binomial(n_symbol + g.des, k)
                            for g in self.groups])
        return sympy.Sum(inner * (1 + x) ** k, (k, 0, self.p))

    def to_latex(self):
        if not self.groups:
            return "0"
        return sympy.latex(self.to_sympy())

    def to_text(self):
        if not self.groups:
            return "0"
        parts = []
        for g in self.groups:
            lower = "k" if g.fix == 0 else f"k-{g.fix}"
            top = "n" if g.des == 0 else f"n+{g.des}"
            prefix = "" if g.mult == 1 else f"{g.mult} "
            parts.append(f"{prefix}C({self.p - g.fix},{lower}) C({top},k)")
        return f"sum_{{k=0}}^{{{self.p}}} [" + " + ".join(parts) + "] (1+x)^k"

    def to_dict(self):
        return {"p": self.p, "groups": [g.to_dict() for g in self.groups]}

    @classmethod
    def from_dict(cls, data, shapes=""):
        groups = tuple(sorted(ExtensionGroup(int(g["des"]), int(g["fix"]), int(g["mult"])) for g in data["groups"]))
        return cls(p=int(data["p"]), groups=groups, shapes=shapes)


def closed_form(spec, labeling=None):
    """
    Groups the linear extensions of S by (des, fix).

    Only the shapes of spec matter; its n is ignored.

    Raises:
        InvalidStripError: If the strip geometry is invalid.
        NonKekuleanError: If some interface order is negative.
    """
    poset = build_poset(spec)
    labeling = labeling or natural_labeling(poset)
    counts = Counter((r.des, r.fix) for r in extension_records(poset, labeling))
    groups = tuple(sorted(ExtensionGroup(d, f, mult) for (d, f), mult in counts.items()))
    return ClosedForm(p=poset.size, groups=groups, shapes=spec.shape_string)
