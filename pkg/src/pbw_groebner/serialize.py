"""Text and JSON export of bases, polytope points and Dyck paths."""

from __future__ import annotations

import json
from fractions import Fraction

from .fflv import DyckPath, enumerate_dyck_paths, exponent_from_json, exponent_to_json, path_bound, sink_key
from .groebner import Generator, GroebnerBasis, Provenance
from .roots import DominantWeight
from .uea import UEA, Element, enveloping_algebra


def _coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def element_to_json(x: Element) -> list[dict]:
    return [{"monomial": x.alg.render_monomial(m), "coeff": _coeff(c)} for m, c in x.sorted_terms()]


def element_from_json(alg: UEA, terms: list[dict]) -> Element:
    return alg.element({alg.parse_monomial(t["monomial"]): Fraction(t["coeff"]) for t in terms})


def provenance_to_json(p: Provenance) -> dict:
    if p.kind != "f":
        return {"kind": p.kind, "root": p.root.label if p.root else None}
    return {
        "kind": "f",
        "s": exponent_to_json(p.s),
        "source": p.source,
        "sink": p.sink.label,
        "path": [r.label for r in p.path],
        "top": p.top.label,
        "power": p.power,
        "word": [{"root": r.label, "exp": a} for r, a in p.word],
        "method": p.method,
    }


def provenance_from_json(rs, d: dict) -> Provenance:
    if d["kind"] != "f":
        return Provenance(d["kind"], root=rs.from_label(d["root"]) if d.get("root") else None)
    return Provenance(
        "f",
        s=exponent_from_json(rs, d["s"]),
        source=d["source"],
        sink=rs.from_label(d["sink"]),
        path=tuple(rs.from_label(x) for x in d["path"]),
        top=rs.from_label(d["top"]),
        power=d["power"],
        word=tuple((rs.from_label(w["root"]), w["exp"]) for w in d["word"]),
        method=d["method"],
    )


def basis_to_json(G: GroebnerBasis, full: bool = False) -> dict:
    rs = G.lam.system
    gens = G.full if full else G.elements
    return {
        "type": rs.type,
        "rank": rs.rank,
        "weight": list(G.lam.m),
        "variant": "full" if full else "pruned",
        "elements": [
            {"provenance": provenance_to_json(g.provenance), "terms": element_to_json(g.element)} for g in gens
        ],
    }


def basis_from_json(data: dict) -> GroebnerBasis:
    """Rebuild a basis from :func:`basis_to_json` output (one variant only)."""
    alg = enveloping_algebra(data["type"], data["rank"])
    lam = DominantWeight(alg.root_system, tuple(data["weight"]))
    gens = [
        Generator(element_from_json(alg, d["terms"]), provenance_from_json(alg.root_system, d["provenance"]))
        for d in data["elements"]
    ]
    full = data.get("variant") == "full"
    return GroebnerBasis(lam, alg, [] if full else gens, gens if full else [])


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def basis_text(G: GroebnerBasis, full: bool = False) -> str:
    gens = G.full if full else G.elements
    return "".join(f"{g}\n" for g in gens)


def points_text(alg: UEA, points) -> str:
    monos = [alg.f_monomial(dict(s)) for s in points]
    monos.sort(key=alg.sort_key, reverse=True)
    return "".join(alg.render_monomial(m) + "\n" for m in monos)


def points_json(alg: UEA, points, violators=()) -> dict:
    monos = sorted(points, key=lambda s: alg.sort_key(alg.f_monomial(dict(s))), reverse=True)
    return {
        "points": [exponent_to_json(s) for s in monos],
        "violators": [
            {"s": exponent_to_json(v.s), "source": v.source, "sink": v.sink.label, "path": [r.label for r in v.path.roots]}
            for v in violators
        ],
    }


def _paths_sorted(lam: DominantWeight) -> list[DyckPath]:
    table = enumerate_dyck_paths(lam.system)
    return [p for key in sorted(table, key=lambda k: sink_key(*k)) for p in table[key]]


def paths_text(lam: DominantWeight) -> str:
    lines = []
    for p in _paths_sorted(lam):
        lines.append(f"D({p.source},{p.sink.label}) bound {path_bound(p, lam)}: {p}\n")
    return "".join(lines)


def paths_json(lam: DominantWeight) -> dict:
    return {
        "paths": [
            {
                "source": p.source,
                "sink": p.sink.label,
                "symplectic": p.symplectic,
                "bound": path_bound(p, lam),
                "roots": [r.label for r in p.roots],
            }
            for p in _paths_sorted(lam)
        ]
    }
