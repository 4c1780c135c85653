from xml.etree import ElementTree

from glr_drawing.layouts.one_bend import layout_one_bend
from glr_drawing.layouts.svg import to_svg
from glr_drawing.models.tree import parse_tree

_NS = "{http://www.w3.org/2000/svg}"


def test_to_svg() -> None:
    drawing = layout_one_bend(parse_tree("(()()())"))
    svg = ElementTree.fromstring(to_svg(drawing, scale=10))
    assert svg.tag == f"{_NS}svg"
    assert svg.get("width") == "30"
    assert svg.get("height") == "60"
    circles = svg.findall(f"{_NS}circle")
    assert [circle.find(f"{_NS}title").text for circle in circles] == ["0", "1", "2", "3"]
    assert len(svg.findall(f"{_NS}polyline")) == 3
    # The path column and one bend.
    assert len(svg.findall(f"{_NS}rect")) == 2


def test_to_svg_default_scale() -> None:
    svg = ElementTree.fromstring(to_svg(layout_one_bend(parse_tree("()"))))
    assert svg.get("width") == "40"
    assert svg.find(f"{_NS}circle").get("r") == "4"
