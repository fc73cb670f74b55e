from fractions import Fraction

import pytest

from services.circle import TaxicabCircle
from services.documents import dump_document
from services.errors import ConfigError, DocumentError
from services.exact import Point
from services.figures import (
    BUILTIN_SCENES,
    SceneDescription,
    SceneItem,
    builtin_scene,
    escape_xml,
    load_scene,
    parse_scene,
    render_svg,
    scene_to_doc,
)


@pytest.mark.parametrize("name", sorted(BUILTIN_SCENES))
def test_builtin_scenes_render_deterministically(name):
    first = render_svg(builtin_scene(name))
    second = render_svg(builtin_scene(name))
    assert first == second
    assert first.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<!-- taxicab scene ' + name)
    assert "y up maps to canvas" in first
    assert first.endswith("</svg>\n")


@pytest.mark.parametrize("name", sorted(BUILTIN_SCENES))
def test_builtin_scene_documents_round_trip(name):
    scene = builtin_scene(name)
    assert parse_scene(scene_to_doc(scene)) == scene


def test_unknown_figure():
    with pytest.raises(ConfigError, match="unknown figure"):
        builtin_scene("figure-99")


def test_inscribed_angle_failure_labels_measures():
    labels = [item.label for item in builtin_scene("inscribed-angle-failure").items]
    assert "α = 1" in labels
    assert "θ = 2" in labels
    assert "θ' = 5/2" in labels


def test_circumcircle_families_scene_draws_families():
    kinds = [item.kind for item in builtin_scene("circumcircle-families").items]
    assert kinds.count("triangle") == 3
    assert "family" in kinds


def test_duplicate_labels_rejected():
    with pytest.raises(ConfigError, match="duplicate"):
        SceneDescription("s", "t", (
            SceneItem("point", "A", (Point(0, 0),)),
            SceneItem("point", "A", (Point(1, 1),)),
        ))


def test_unknown_item_kind_rejected():
    with pytest.raises(ConfigError):
        SceneDescription("s", "t", (SceneItem("blob", "A"),))
    with pytest.raises(DocumentError):
        parse_scene({"items": [{"kind": "blob", "label": "A"}]})


def test_scene_missing_items():
    with pytest.raises(DocumentError, match="missing field"):
        parse_scene({"name": "empty"})


def test_load_and_render_scene_file(tmp_path):
    scene = SceneDescription("mine", "A <small> scene", (
        SceneItem("triangle", "T", (Point(0, 0), Point(4, 0), Point(0, 2))),
        SceneItem("circle", "C", circle=TaxicabCircle(Point(1, 1), 1)),
    ))
    path = tmp_path / "scene.json"
    path.write_text(dump_document(scene_to_doc(scene)), encoding="utf-8")
    loaded = load_scene(str(path))
    assert loaded == scene
    svg = render_svg(loaded, width=200, decimal_places=2)
    assert 'width="200.00"' in svg
    assert "A &lt;small&gt; scene" in svg
    assert svg.count("<polygon") == 2


def test_escape_xml():
    assert escape_xml('a<b & "c">') == "a&lt;b &amp; &quot;c&quot;&gt;"


def test_incircle_arcs_follow_the_taxicab_circles():
    items = {item.label: item for item in builtin_scene("incircle").items}
    arc = items["arc β"]
    assert arc.kind == "path"
    # the arc about B = (4, -3) with radius 133/59 turns at its north corner
    assert Point(4, Fraction(-44, 59)) in arc.points
    assert {arc.points[0], arc.points[-1]} == {
        Point(Fraction(1313, 295), Fraction(-353, 295)),
        Point(Fraction(160, 59), Fraction(-120, 59)),
    }
    # both ends of arc α sit on the same edge, so it stays straight
    assert len(items["arc α"].points) == 2


def test_path_items_need_two_points():
    with pytest.raises(DocumentError, match="two points"):
        parse_scene({"items": [{"kind": "path", "label": "A", "points": [[0, 0]]}]})
