"""
Commands shared by the command-line and HTTP front ends.

Each command takes a parsed JSON document and returns a JSON-ready
document; `render_text` turns any of those documents into the plain text
form.
"""

import logging
from typing import Callable, Dict, Optional, Tuple

from services.angle import classify, measure
from services.circumcircle import circumcircles
from services.config import get_settings
from services.documents import (
    angle_to_doc,
    classification_to_doc,
    construction_to_doc,
    incircle_to_doc,
    parse_angle,
    parse_circle,
    parse_or_raise,
    parse_point,
    parse_triangle,
    solution_to_doc,
    triangle_to_doc,
)
from services.exact import format_rational
from services.figures import builtin_scene, load_scene, render_svg
from services.incircle import incircle, paper_construction
from services.storage import write_report
from services.triangle import classify_triangle
from services.verify import SuiteReport, SweepConfig, inscribed_angle_demo, run_suite

logger = logging.getLogger(__name__)


def classify_command(doc: Dict) -> Dict:
    t = parse_or_raise(parse_triangle, doc)
    result = classification_to_doc(classify_triangle(t))
    result["triangle"] = triangle_to_doc(t)
    return result


def circumcircle_command(doc: Dict) -> Dict:
    t = parse_or_raise(parse_triangle, doc)
    result = solution_to_doc(circumcircles(t))
    result["triangle"] = triangle_to_doc(t)
    return result


def incircle_command(doc: Dict) -> Dict:
    """Incircle result, plus the arc-length construction for inscribed triangles."""
    t = parse_or_raise(parse_triangle, doc)
    construction = None
    if classify_triangle(t).is_inscribed:
        construction = construction_to_doc(paper_construction(t))
    return {
        "triangle": triangle_to_doc(t),
        "incircle": incircle_to_doc(incircle(t)),
        "construction": construction,
    }


def angle_command(doc: Dict) -> Dict:
    """
    Either an angle ({"vertex", "ray1", "ray2"}) to measure and classify, or
    an inscribed-angle configuration ({"circle", "arc_start", "arc_end",
    "vertex"}) whose inscribed and central measures are compared.
    """
    if isinstance(doc, dict) and "circle" in doc:
        def parse(d):
            return (parse_circle(d["circle"]), parse_point(d["arc_start"]),
                    parse_point(d["arc_end"]), parse_point(d["vertex"]))
        circle, start, end, vertex = parse_or_raise(parse, doc)
        alpha, theta = inscribed_angle_demo(circle, start, end, vertex)
        return {"alpha": format_rational(alpha), "theta": format_rational(theta)}

    a = parse_or_raise(parse_angle, doc)
    return {"angle": angle_to_doc(a), "measure": format_rational(measure(a)), "class": classify(a).value}


def figure_command(name: Optional[str] = None, scene_path: Optional[str] = None) -> str:
    scene = load_scene(scene_path) if scene_path else builtin_scene(name)
    logger.info("→ Rendering figure %s (%d items)", scene.name, len(scene.items))
    return render_svg(scene)


def verify_command(cfg: SweepConfig, report_dir: Optional[str] = None) -> Tuple[SuiteReport, Tuple[str, str]]:
    """Run the property suite and write report.json and report.txt."""
    report = run_suite(cfg)
    paths = write_report(report.to_document(), report.to_text(), report_dir or get_settings().report_dir)
    logger.info("  ✓ Reports written to %s", ", ".join(paths))
    return report, paths


COMMANDS: Dict[str, Callable[[Dict], Dict]] = {
    "classify": classify_command,
    "circumcircle": circumcircle_command,
    "incircle": incircle_command,
    "angle": angle_command,
}


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _pt(value) -> str:
    return f"({value[0]}, {value[1]})"


def _circle(doc: Dict) -> str:
    return f"center {_pt(doc['center'])} radius {doc['radius']}"


def _render_classify(doc: Dict) -> list:
    lines = []
    for v, cls, m in zip(doc["triangle"]["vertices"], doc["classes"], doc["angle_measures"]):
        lines.append(f"  vertex {_pt(v)}: {cls}, measure {m}")
    lines.append(f"inscribed: {'yes' if doc['is_inscribed'] else 'no'}")
    lines.append(f"completely inscribed angles: {doc['completely_count']}")
    return lines


def _render_circumcircle(doc: Dict) -> list:
    lines = [f"multiplicity: {doc['multiplicity']}"]
    for f in doc["components"]:
        line = f"  {f['kind']}: {_circle(f['base'])}"
        if f["center_velocity"] is not None:
            span = "∞" if f["t_max"] is None else f["t_max"]
            line += (f", center velocity {_pt(f['center_velocity'])}, radius rate {f['radius_rate']},"
                     f" τ in [0, {span}]")
        lines.append(line)
    return lines


def _render_incircle(doc: Dict) -> list:
    inc = doc["incircle"]
    if inc["variant"] == "incircle":
        lines = [f"incircle: {_circle(inc['circle'])}", f"unique: {'yes' if inc['unique'] else 'no'}"]
    else:
        lines = [f"no incircle; largest contained circle: {_circle(inc['witness'])}"]
    lines.append(f"distinct corners touching: {inc['distinct_corner_count']}")
    for touch in inc["touches"]:
        corners = "/".join(touch["corners"]) or "-"
        lines.append(f"  side {touch['side']}: {touch['contact']} {corners}")
    pc = doc.get("construction")
    if pc is not None:
        lines.append(f"construction: gamma vertex {pc['gamma_vertex']} ({pc['frame']}), "
                     f"alpha {pc['alpha']}, beta {pc['beta']}, AB {pc['side_ab']}")
        lines.append(f"  r_alpha {pc['r_alpha']}, r_beta {pc['r_beta']}, P {_pt(pc['p'])}, "
                     f"l {pc['arc_length_l']}, rho {pc['rho']}")
        lines.append(f"  applicable: {'yes' if pc['applicable'] else 'no'}, "
                     f"containment: {'ok' if pc['containment_ok'] else 'failed'}")
    return lines


def _render_angle(doc: Dict) -> list:
    if "alpha" in doc:
        return [f"inscribed angle: {doc['alpha']}", f"central angle: {doc['theta']}"]
    return [f"measure: {doc['measure']}", f"class: {doc['class']}"]


_RENDERERS = {
    "classify": _render_classify,
    "circumcircle": _render_circumcircle,
    "incircle": _render_incircle,
    "angle": _render_angle,
}


def render_text(command: str, doc: Dict) -> str:
    lines = []
    if "triangle" in doc:
        lines.append("TRIANGLE " + " ".join(_pt(v) for v in doc["triangle"]["vertices"]))
        lines.append("=" * 60)
    lines.extend(_RENDERERS[command](doc))
    return "\n".join(lines) + "\n"
