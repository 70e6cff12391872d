"""ZZ (Clar covering) polynomials of regular m-tier benzenoid strips via their DIB posets."""
from zz_strips.strip_geometry import Shape, StripSpec, build_graph, interface_profile, parse_strip, validate
from zz_strips.dib_poset import Dib, DibPoset, build_poset, induced_subposets, natural_labeling
from zz_strips.extension_engine import descent_stats, fixed_labels, linear_extensions
from zz_strips.order_polynomials import (ClosedForm, ZzPolynomial, a_coefficients, closed_form,
                                         extended_poly_extension_formula, extended_poly_subposet_sum,
                                         strict_order_poly, zz_polynomial)
from zz_strips.kekule_bijection import (ClarCoverRecord, KekuleAssignment, OrderMap, enumerate_kekule,
                                        generate_clar_covers, kekule_from_map, map_from_kekule)

__version__ = "1.0.0"
