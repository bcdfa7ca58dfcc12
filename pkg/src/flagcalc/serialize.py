"""Stable JSON encoding of the exact types.

Scalars are {"re": "num/den", "im": "num/den"} with decimal-string
integers, so arbitrary precision survives any JSON parser.  Biform terms
are sorted in the fixed descending-lex monomial order and projective data
is emitted in canonical form, which makes the output diff-stable and makes
round trips exact.
"""

from __future__ import annotations

from fractions import Fraction

from .binforms import BinaryForm
from .biforms import BiForm
from .errors import SchemaError
from .flag import Conic, ProjPoint
from .gaussian import GaussianRational


def frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"not a rational number: {s!r}") from exc


def gr_to_json(z: GaussianRational) -> dict:
    return {"re": frac_str(z.re), "im": frac_str(z.im)}


def gr_from_json(obj) -> GaussianRational:
    if isinstance(obj, str):
        return GaussianRational(parse_frac(obj))
    if isinstance(obj, int):
        return GaussianRational(obj)
    if isinstance(obj, dict):
        return GaussianRational(parse_frac(obj.get("re", 0)), parse_frac(obj.get("im", 0)))
    raise SchemaError(f"not a scalar: {obj!r}")


def point_to_json(pt: ProjPoint) -> list:
    return [gr_to_json(c) for c in pt.coords]


def point_from_json(obj) -> ProjPoint:
    if not isinstance(obj, list) or len(obj) != 3:
        raise SchemaError("a projective point is a list of 3 scalars")
    return ProjPoint([gr_from_json(c) for c in obj])


def conic_to_json(C: Conic) -> dict:
    return {"q": point_to_json(C.q), "m": point_to_json(C.m)}


def conic_from_json(obj) -> Conic:
    if not isinstance(obj, dict) or "q" not in obj or "m" not in obj:
        raise SchemaError("a conic is {'q': point, 'm': point}")
    return Conic(point_from_json(obj["q"]), point_from_json(obj["m"]))


def conics_from_json(obj) -> list[Conic]:
    if isinstance(obj, dict) and "conics" in obj:
        obj = obj["conics"]
    if not isinstance(obj, list):
        raise SchemaError("expected a list of conics")
    return [conic_from_json(c) for c in obj]


def biform_to_json(F: BiForm) -> dict:
    return {
        "bidegree": list(F.bidegree),
        "terms": [
            {"p": list(pe), "l": list(le), "c": gr_to_json(c)}
            for (pe, le), c in F.sorted_terms()
        ],
    }


def biform_from_json(obj) -> BiForm:
    if not isinstance(obj, dict) or "bidegree" not in obj or "terms" not in obj:
        raise SchemaError("a surface is {'bidegree': [a, b], 'terms': [...]}")
    try:
        a, b = obj["bidegree"]
        terms = {}
        for t in obj["terms"]:
            key = (tuple(int(e) for e in t["p"]), tuple(int(e) for e in t["l"]))
            terms[key] = gr_from_json(t["c"])
        return BiForm((int(a), int(b)), terms)
    except SchemaError:
        raise
    except Exception as exc:
        raise SchemaError(f"malformed surface JSON: {exc}") from exc


def binary_form_to_json(f: BinaryForm) -> list:
    return [gr_to_json(c) for c in f.coeffs]


def binary_form_from_json(obj) -> BinaryForm:
    if not isinstance(obj, list) or not obj:
        raise SchemaError("a binary form is a nonempty list of scalars")
    return BinaryForm([gr_from_json(c) for c in obj])


def forms_to_json(forms) -> dict:
    return {"degree": forms[0].degree, "forms": [binary_form_to_json(f) for f in forms]}


def forms_from_json(obj) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
    if isinstance(obj, dict):
        obj = obj.get("forms")
    if not isinstance(obj, list) or len(obj) != 3:
        raise SchemaError("expected {'forms': [form, form, form]}")
    f0, f1, f2 = (binary_form_from_json(f) for f in obj)
    return (f0, f1, f2)
