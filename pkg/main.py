import itertools
import logging
from enum import Enum
from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse

from zz_strips import __version__
from zz_strips.catalog import closed_form_or_zero
from zz_strips.config import get_settings, setup_logging
from zz_strips.dib_poset import build_poset, natural_labeling, to_dot
from zz_strips.errors import GuardExceededError, NonKekuleanError, ZZError
from zz_strips.extension_engine import extension_records
from zz_strips.kekule_bijection import enumerate_kekule, generate_clar_covers
from zz_strips.oracle import oracle_report, sextet_mismatches
from zz_strips.order_polynomials import a_coefficients, zz_polynomial
from zz_strips.strip_geometry import interface_profile, make_strip, minimal_length, validate


class SextetPattern(str, Enum):
    right = "right"
    left = "left"

# Define your tags
tags_metadata = [
    {
        "name": "Strip Geometry",
        "description": "Interface sizes, interface orders and structural validation of a strip.",
    },
    {
        "name": "Poset",
        "description": "The poset of double interface bonds (DIBs) and its linear extensions.",
    },
    {
        "name": "Polynomials",
        "description": "ZZ polynomial, sextet distribution and closed binomial form.",
    },
    {
        "name": "Enumeration",
        "description": "Explicit Kekulé structures and Clar covers generated from the poset.",
    },
    {
        "name": "Oracle",
        "description": "Brute-force cross-validation on the explicit benzenoid graph.",
    },
]

app = FastAPI(
    title="ZZ Polynomials of Regular Benzenoid Strips API Documentation",
    openapi_tags=tags_metadata,
    version=__version__,
    description="""
- This API computes the Zhang-Zhang (Clar covering) polynomial of regular m-tier benzenoid strips.

- A strip is given by the shapes of its fragments (letters W, N, R, L, first W and last N) and its length n, e.g. `shapes=WWRNN&n=3`.

---

### Computation steps:

**1) PROFILE**

Interface sizes |i_k| and orders ord(i_k) = |i_k| - n. A negative order means no Kekulé structure exists.

**2) POSET**

The double interface bonds s_{k,j} are ordered by the cover rule of each fragment.

**3) POLYNOMIAL**

Linear extensions are grouped by descents and fixed labels; substituting z = 1 + x in the extended strict order polynomial gives ZZ.

**4) ENUMERATION & ORACLE**

Kekulé structures and Clar covers are generated from (A, μ) pairs and checked against brute force on the molecular graph.

"""
)

setup_logging()
logger = logging.getLogger("zz_strips.api")


def http_error(e):
    """Maps a zz_strips error to the matching HTTP status."""
    if isinstance(e, GuardExceededError):
        return HTTPException(status_code=413, detail=str(e))
    if isinstance(e, NonKekuleanError):
        return HTTPException(status_code=422, detail=str(e))
    return HTTPException(status_code=400, detail=str(e))


def strip_from_query(shapes, n):
    return make_strip(shapes, n if n is not None else minimal_length(shapes))


# -------------------------------------------- STRIP GEOMETRY --------------------------------------------#
@app.get("/",
         summary="Get service info",
         tags=["Strip Geometry"],
         description="Endpoint to get the service version and the configured brute-force guards")
async def info_endpoint():
    try:
        settings = get_settings()
        message = {
            "version": __version__,
            "guard-p": settings.guard_p,
            "max-vertices": settings.max_vertices,
            "max-maps": settings.max_maps,
        }
        return {"zz-strips-info": message}
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

@app.get("/profile",
         summary="Get interface profile",
         tags=["Strip Geometry"],
         description="Endpoint to get the sizes and orders of the interfaces i_1..i_m")
def profile_endpoint(shapes: str = Query(..., description="Fragment shapes, e.g. WWRNN"),
                     n: int = Query(..., description="Strip length")):
    try:
        spec = make_strip(shapes, n)
        profile = interface_profile(spec)
        return {"strip": spec.to_dict(), "sizes": list(profile.sizes), "orders": list(profile.orders)}
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

@app.get("/validate",
         summary="Validate a strip",
         tags=["Strip Geometry"],
         description="Endpoint to check the structural conditions and the Kekulé criterion of a strip")
def validate_endpoint(shapes: str, n: int):
    try:
        spec = make_strip(shapes, n)
        return {"strip": spec.to_dict(), "validation": validate(spec).to_dict()}
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

# -------------------------------------------- POSET --------------------------------------------#
@app.get("/poset",
         summary="Get DIB poset",
         tags=["Poset"],
         description="Endpoint to get the elements and cover relations of the DIB poset, with the canonical natural labeling")
def poset_endpoint(shapes: str, n: Optional[int] = None):
    try:
        poset = build_poset(strip_from_query(shapes, n))
        labeling = natural_labeling(poset)
        payload = poset.to_dict()
        payload["labels"] = [labeling.label(e) for e in poset.elements]
        return payload
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

@app.get("/poset/dot",
         summary="Get Hasse diagram",
         tags=["Poset"],
         description="Endpoint to get the Hasse diagram of the DIB poset in DOT format",
         response_class=PlainTextResponse)
def poset_dot_endpoint(shapes: str, n: Optional[int] = None):
    try:
        poset = build_poset(strip_from_query(shapes, n))
        return to_dot(poset, natural_labeling(poset))
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

@app.get("/extensions",
         summary="Get linear extensions",
         tags=["Poset"],
         description="Endpoint to list the linear extensions of the DIB poset with descents and fixed labels")
def extensions_endpoint(shapes: str, n: Optional[int] = None):
    try:
        poset = build_poset(strip_from_query(shapes, n))
        records = extension_records(poset, natural_labeling(poset))
        return {"count": len(records), "extensions": [r.to_dict() for r in records]}
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

# -------------------------------------------- POLYNOMIALS --------------------------------------------#
@app.get("/zz",
         summary="Get ZZ polynomial",
         tags=["Polynomials"],
         description="Endpoint to compute ZZ(S, x); non-Kekuléan strips give the zero polynomial")
def zz_endpoint(shapes: str, n: int, sextets: bool = False):
    try:
        spec = make_strip(shapes, n)
        zz = zz_polynomial(spec)
        payload = {"strip": spec.to_dict(), "zz": zz.summary()}
        if sextets and not zz.is_zero:
            payload["a"] = list(a_coefficients(spec))
        return payload
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

@app.get("/closed_form",
         summary="Get closed form",
         tags=["Polynomials"],
         description="Endpoint to get ZZ as a binomial sum in n, grouped by (des, fix); non-Kekuléan families give 0")
def closed_form_endpoint(shapes: str):
    try:
        form = closed_form_or_zero(strip_from_query(shapes, None))
        return {"shapes": form.shapes, "closed_form": form.to_dict(),
                "text": form.to_text(), "latex": form.to_latex()}
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

# -------------------------------------------- ENUMERATION --------------------------------------------#
@app.get("/kekule",
         summary="List Kekulé structures",
         tags=["Enumeration"],
         description="Endpoint to list Kekulé structures as (A, μ) pairs with their double interface bonds")
def kekule_endpoint(shapes: str, n: int, limit: int = Query(1000, ge=1)):
    try:
        spec = make_strip(shapes, n)
        structures = []
        for om, ka in itertools.islice(enumerate_kekule(spec), limit):
            item = om.to_dict()
            item.update(ka.to_dict())
            structures.append(item)
        return {"count": len(structures), "structures": structures}
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

@app.get("/clar",
         summary="List Clar covers",
         tags=["Enumeration"],
         description="Endpoint to list Clar covers generated from the Kekulé structures")
def clar_endpoint(shapes: str, n: int, limit: int = Query(1000, ge=1)):
    try:
        spec = make_strip(shapes, n)
        covers = [r.to_dict() for r in itertools.islice(generate_clar_covers(spec), limit)]
        return {"count": len(covers), "covers": covers}
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

# -------------------------------------------- ORACLE --------------------------------------------#
@app.get("/oracle",
         summary="Run the oracle",
         tags=["Oracle"],
         description="Endpoint to compare the poset ZZ with brute-force Clar covers and sextet counts")
def oracle_endpoint(shapes: str, n: int):
    try:
        report = oracle_report(make_strip(shapes, n))
        if not report.agrees:
            logger.warning("Oracle disagreement for %s %s: %s", shapes, n, report.diff)
        return report.to_dict()
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))

@app.get("/oracle/sextets",
         summary="Check sextet pattern",
         tags=["Oracle"],
         description="Endpoint to count poset structures whose matching does not show |A| sextets of the given pattern")
def oracle_sextets_endpoint(shapes: str, n: int, pattern: SextetPattern = SextetPattern.right):
    try:
        mismatches = sextet_mismatches(make_strip(shapes, n), pattern.value)
        return {"pattern": pattern.value, "mismatches": len(mismatches)}
    except ZZError as e:
        raise http_error(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))
