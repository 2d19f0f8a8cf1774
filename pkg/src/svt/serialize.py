"""JSON and ASCII forms of tableaux, paths, counts and the composite objects.

JSON is canonical: sorted keys, no insignificant whitespace, cells as
ascending integer arrays and counts as decimal strings, so re-parsing and
re-emitting any object reproduces it byte for byte.
"""

from __future__ import annotations

import json

from .bijections import LatticePath, RaneyTuple, TennisArrangement
from .core import SetValuedTableau, check_density, check_shape


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def parse_shape(text: str):
    text = text.strip()
    if not text:
        return ()
    return check_shape(int(x) for x in text.split(","))


def parse_density(text: str, shape=None):
    """Parse ``"1,1,1;2,2,2"`` (rows split by ';', cells by ',')."""
    text = text.strip()
    rows = () if not text else tuple(
        tuple(int(x) for x in row.split(",") if x.strip() != "") for row in text.split(";")
    )
    if shape is None:
        shape = tuple(len(r) for r in rows)
    return check_density(shape, rows)


def format_density(rho) -> str:
    return ";".join(",".join(str(x) for x in row) for row in rho)


def tableau_to_obj(t: SetValuedTableau) -> dict:
    return {"shape": list(t.shape), "cells": t.to_lists()}


def tableau_from_obj(obj) -> SetValuedTableau:
    t = SetValuedTableau(obj["cells"])
    if "shape" in obj and list(obj["shape"]) != list(t.shape):
        raise ValueError(f"declared shape {obj['shape']} does not match cells {list(t.shape)}")
    return t


def path_to_obj(p: LatticePath) -> dict:
    return {"steps": p.steps}


def path_from_obj(obj) -> LatticePath:
    return LatticePath(obj["steps"])


def count_to_obj(n: int) -> dict:
    return {"value": str(n)}


def count_from_obj(obj) -> int:
    n = int(obj["value"])
    if n < 0:
        raise ValueError("counts are non-negative")
    return n


def raney_to_obj(rt: RaneyTuple) -> dict:
    return {"k": rt.k, "r": rt.r, "blocks": [tableau_to_obj(b) for b in rt.blocks]}


def raney_from_obj(obj) -> RaneyTuple:
    return RaneyTuple(tuple(tableau_from_obj(b) for b in obj["blocks"]), int(obj["k"]), int(obj["r"]))


def tennis_to_obj(arr: TennisArrangement) -> dict:
    return {"s": list(arr.s_vec), "t": list(arr.t_vec), "lawn": list(arr.lawn)}


def tennis_from_obj(obj) -> TennisArrangement:
    return TennisArrangement(tuple(obj["s"]), tuple(obj["t"]), tuple(obj["lawn"]))


def density_spec_from_obj(obj):
    """``{"shape": [...], "density": [[...], ...]}`` -> (shape, density)."""
    shape = check_shape(obj["shape"])
    return shape, check_density(shape, obj["density"])


def guess_kind(obj) -> str:
    if "steps" in obj:
        return "path"
    if "blocks" in obj:
        return "raney"
    if "lawn" in obj:
        return "tennis"
    if "cells" in obj:
        return "tableau"
    if "density" in obj:
        return "density"
    if "value" in obj:
        return "count"
    raise ValueError("unrecognised JSON object")


def render_tableau(t: SetValuedTableau) -> str:
    """Boxed drawing, one row of boxes per tableau row.

    Column widths are shared between rows so columns line up::

        +-----+-----+
        | 1 2 | 3 4 |
        +-----+-----+
        | 5 6 | 7 8 |
        +-----+-----+
    """
    if not t.cells:
        return "(empty)"
    text = [[" ".join(map(str, c)) for c in row] for row in t.cells]
    ncols = len(text[0])
    widths = [max(len(row[j]) for row in text if j < len(row)) for j in range(ncols)]
    widths = [max(w, 1) for w in widths]

    def rule(length):
        return "+" + "+".join("-" * (widths[j] + 2) for j in range(length)) + "+"

    lines = [rule(len(text[0]))]
    for row in text:
        lines.append("|" + "|".join(f" {row[j]:<{widths[j]}} " for j in range(len(row))) + "|")
        lines.append(rule(len(row)))  # rows never grow going down
    return "\n".join(lines)
