"""Record (JSON) and table renderings of results.

Records are plain dicts; ``dump_record`` serialises them with sorted keys so
the output is byte-identical across runs.  Every record carries a ``notes``
list kept separate from the data fields.
"""

from __future__ import annotations

import json

from .dims import DimReport
from .ec_arith import CurveAnalysis, CurveSpec
from .exact_seq import PROPERTIES, RankSolution
from .isometry import AutoequivKernelReport, EndMatrix

SCHEMA_VERSION = 1


def rank_solution_record(sol: RankSolution) -> dict:
    spec = sol.spec
    maps = []
    for i, c in enumerate(sol.classification):
        entry = {
            "index": i,
            "label": spec.map_label(i),
            "source_dim": spec.dims[i],
            "target_dim": spec.dims[i + 1],
            "ranks": list(c.ranks),
            "forced": list(c.forced),
            "summary": c.summary,
        }
        entry.update({p: getattr(c, p) for p in PROPERTIES})
        maps.append(entry)
    rec = {
        "dims": list(spec.dims),
        "left_closed": spec.left_closed,
        "right_open": spec.right_open,
        "feasible": sol.feasible,
        "profiles": [list(p) for p in sol.sorted_profiles()],
        "maps": maps,
        "notes": list(sol.notes),
    }
    if spec.node_labels:
        rec["node_labels"] = list(spec.node_labels)
    return rec


def dim_report_record(rep: DimReport) -> dict:
    return {
        "g": rep.g,
        "hodge": [
            {"p": p, "q": q, "dim": d} for (p, q), d in sorted(rep.hodge.items())
        ],
        "hochschild": list(rep.hochschild),
        "formal_def_dim": rep.formal_def_dim,
        "polarized_def_dim": rep.polarized_def_dim,
        "aut_tangent_dim": rep.aut_tangent_dim,
        "aut_obstruction_dim": rep.aut_obstruction_dim,
        "extra_lift_dim": rep.extra_lift_dim,
        "characteristic": rep.characteristic,
        "hkr_valid": rep.hkr_valid,
        "notes": list(rep.notes),
    }


def curve_record(c: CurveSpec) -> dict:
    return {"p": c.p, "a": c.a, "b": c.b}


def analysis_record(an: CurveAnalysis) -> dict:
    return {
        "curve": curve_record(an.curve),
        "point_count": an.point_count,
        "trace": an.trace,
        "p_rank": an.p_rank,
        "ordinary": an.ordinary,
        "j": an.j,
        "aut_order_geometric": an.aut_order_geometric,
        "aut_order_rational": an.aut_order_rational,
        "notes": list(an.notes),
    }


def matrix_record(f: EndMatrix) -> dict:
    return {
        "ring": str(f.ring),
        "coordinates": list(f.coordinates()),
        "display": str(f),
    }


def kernel_record(curve: CurveSpec, rep: AutoequivKernelReport) -> dict:
    return {
        "curve": curve_record(curve),
        "free_rank": rep.free_rank,
        "point_count": rep.point_count,
        "dual_point_count": rep.dual_point_count,
        "finite_order": rep.finite_order,
        "notes": [],
    }


def dump_record(command: str, results: list[dict]) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "results": results}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- tables ---------------------------------------------------------------


def _notes(rec: dict) -> list[str]:
    return [f"  note: {n}" for n in rec.get("notes", [])]


def rank_solution_table(rec: dict) -> list[str]:
    lines = [
        f"dims {rec['dims']}  left_closed={rec['left_closed']}  right_open={rec['right_open']}",
        f"feasible: {rec['feasible']}  profiles: {rec['profiles']}",
    ]
    for m in rec["maps"]:
        lines.append(
            f"  {m['label']:<6} {m['source_dim']:>3} -> {m['target_dim']:<3} "
            f"ranks {m['ranks']}  {m['summary']}"
        )
    return lines + _notes(rec)


def dim_report_table(rec: dict) -> list[str]:
    g = rec["g"]
    hodge = {(h["p"], h["q"]): h["dim"] for h in rec["hodge"]}
    width = max(len(str(v)) for v in hodge.values()) + 1
    lines = [f"g = {g}", "hodge h^{p,q} (rows p, columns q):"]
    lines.append("     " + "".join(f"{q:>{width}}" for q in range(g + 1)))
    for p in range(g + 1):
        lines.append(f"  {p:>2} " + "".join(f"{hodge[p, q]:>{width}}" for q in range(g + 1)))
    lines.append("hochschild:")
    lines += [f"  HH^{n} = {d}" for n, d in enumerate(rec["hochschild"])]
    for key in (
        "formal_def_dim",
        "polarized_def_dim",
        "aut_tangent_dim",
        "aut_obstruction_dim",
        "extra_lift_dim",
    ):
        lines.append(f"{key} = {rec[key]}")
    if rec["hkr_valid"] is not None:
        lines.append(f"hkr_valid = {rec['hkr_valid']} (char {rec['characteristic']})")
    return lines + _notes(rec)


def analysis_table(rec: dict) -> list[str]:
    c = rec["curve"]
    return [
        f"y^2 = x^3 + {c['a']}x + {c['b']} over F_{c['p']}: "
        f"N={rec['point_count']} t={rec['trace']} p_rank={rec['p_rank']} "
        f"{'ordinary' if rec['ordinary'] else 'supersingular'} j={rec['j']} "
        f"aut={rec['aut_order_geometric']} (rational {rec['aut_order_rational']})"
    ] + _notes(rec)


def derived_eq_table(rec: dict) -> list[str]:
    e, f = rec["first"], rec["second"]
    return [
        f"({e['a']},{e['b']}) vs ({f['a']},{f['b']}) over F_{e['p']}: "
        f"j={rec['j_first']} / {rec['j_second']}  derived_equivalent={rec['derived_equivalent']}"
    ] + _notes(rec)


def isometric_table(rec: dict) -> list[str]:
    return [
        f"{rec['matrix']['display']} over {rec['matrix']['ring']}: "
        f"isometric={rec['isometric']}  tilde={rec['tilde']['display']}"
    ] + _notes(rec)


def enumerate_table(rec: dict) -> list[str]:
    lines = [f"ring {rec['ring']} height {rec['height']}: {rec['count']} isometric matrices"]
    lines += [f"  {m['display']}" for m in rec["matrices"]]
    return lines + _notes(rec)


def kernel_table(rec: dict) -> list[str]:
    c = rec["curve"]
    return [
        f"y^2 = x^3 + {c['a']}x + {c['b']} over F_{c['p']}: free_rank={rec['free_rank']} "
        f"finite_order={rec['finite_order']} ({rec['point_count']} x {rec['dual_point_count']})"
    ] + _notes(rec)
