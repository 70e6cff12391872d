"""
Batch generation of closed forms for every regular strip family up to a
given number of tiers.
"""
import csv
import itertools
import logging
import multiprocessing
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from zz_strips.config import resolve_limit
from zz_strips.order_polynomials import ClosedForm, closed_form
from zz_strips.strip_geometry import SIZE_STEP, Shape, interface_profile, make_strip, minimal_length, require_valid

logger = logging.getLogger(__name__)

CATALOG_DIR = Path("experiments") / "catalog"

CATALOG_HEADER = ["shapes", "tiers", "minimal_length", "kekulean", "p", "extensions", "groups", "closed_form"]

_MIRROR = str.maketrans("RL", "LR")
_SWAP_WN = str.maketrans("WN", "NW")
_LETTER_RANK = str.maketrans("WNRL", "abcd")


def symmetry_images(shapes):
    """
    Images of a shape string under the symmetries of the strip: left-right
    mirror, rotation by 180 degrees and top-bottom flip.
    """
    rotated = shapes[::-1].translate(_SWAP_WN)
    return {shapes, shapes.translate(_MIRROR), rotated, rotated.translate(_MIRROR)}


def canonical_shapes(shapes):
    """Representative of the symmetry orbit: smallest image in the letter order W < N < R < L."""
    return min(symmetry_images(shapes), key=lambda s: s.translate(_LETTER_RANK))


def is_kekulean_sequence(shapes):
    return interface_profile(make_strip(shapes, 1)).is_kekulean


def enumerate_shape_sequences(max_tiers, dedup=True, kekulean_only=True):
    """
    Shape strings W...N with 1 <= m <= max_tiers whose last interface has order 1.

    Args:
        max_tiers (int): Largest number of tiers m.
        dedup (bool): Keep only the smallest string of each symmetry orbit.
        kekulean_only (bool): Drop sequences with a negative interface order.

    Returns:
        list: Shape strings, sorted by length and then alphabetically.
    """
    found = []
    for m in range(1, max_tiers + 1):
        for middle in itertools.product("WNRL", repeat=m - 1):
            if sum(SIZE_STEP[Shape(s)] for s in middle) != 0:
                continue
            shapes = "W" + "".join(middle) + "N"
            if kekulean_only and not is_kekulean_sequence(shapes):
                continue
            if dedup and canonical_shapes(shapes) != shapes:
                continue
            found.append(shapes)
    return sorted(found, key=lambda s: (len(s), s))


@dataclass(frozen=True)
class CatalogEntry:
    shapes: str
    minimal_length: int
    kekulean: bool
    form: ClosedForm

    @property
    def tiers(self):
        return len(self.shapes) - 1

    def to_dict(self):
        return {
            "shapes": self.shapes,
            "tiers": self.tiers,
            "minimal_length": self.minimal_length,
            "kekulean": self.kekulean,
            "closed_form": self.form.to_dict(),
            "text": self.form.to_text(),
        }

    def to_row(self):
        groups = ";".join(f"{g.des}/{g.fix}/{g.mult}" for g in self.form.groups)
        return [self.shapes, self.tiers, self.minimal_length, self.kekulean, self.form.p,
                self.form.extension_count, groups, self.form.to_text()]


def closed_form_or_zero(spec):
    """closed_form, or the zero form for a family with a negative interface order."""
    report = require_valid(spec)
    if report.is_kekulean:
        return closed_form(spec)
    logger.warning("%s: %s", spec.shape_string, report.non_kekulean_message())
    return ClosedForm.zero(spec.shape_string)


def catalog_entry(shapes):
    """Closed form of one family, evaluated at its smallest valid length."""
    length = minimal_length(shapes)
    spec = make_strip(shapes, length)
    kekulean = interface_profile(spec).is_kekulean
    form = closed_form_or_zero(spec)
    return CatalogEntry(shapes=shapes, minimal_length=length, kekulean=kekulean, form=form)


def catalog_entries(max_tiers, dedup=True, include_non_kekulean=False, workers: Optional[int] = None):
    """
    Closed forms for every family of enumerate_shape_sequences, sorted by shape string.
    Families are distributed over a process pool when workers > 1.
    """
    sequences = enumerate_shape_sequences(max_tiers, dedup=dedup, kekulean_only=not include_non_kekulean)
    workers = resolve_limit(workers, "workers")
    logger.info("Catalog up to %d tiers: %d families, %d workers", max_tiers, len(sequences), workers)
    if workers > 1 and len(sequences) > 1:
        with multiprocessing.Pool(processes=min(workers, len(sequences))) as pool:
            entries = pool.map(catalog_entry, sequences)
    else:
        entries = [catalog_entry(s) for s in sequences]
    return sorted(entries, key=lambda e: (len(e.shapes), e.shapes))


def export_catalog_csv(entries, max_tiers, base_dir=CATALOG_DIR):
    """
    Writes the entries to catalog_tiers_<T>_run_<i>.csv under base_dir, using
    the next free run index. Returns the path written.
    """
    base_dir = Path(base_dir)
    base_dir.mkdir(parents=True, exist_ok=True)

    existing_files = list(base_dir.glob(f"catalog_tiers_{max_tiers}_run_*.csv"))
    indices = [int(f.stem.split('_')[-1]) for f in existing_files if f.stem.split('_')[-1].isdigit()]
    next_index = max(indices) + 1 if indices else 1

    file_name = base_dir / f"catalog_tiers_{max_tiers}_run_{next_index}.csv"
    with open(file_name, 'w', encoding='UTF8', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(CATALOG_HEADER)
        writer.writerows(e.to_row() for e in entries)

    logger.info("Catalog saved to %s", file_name)
    return file_name
