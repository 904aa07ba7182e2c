import xml.etree.ElementTree as ElementTree

from p3embed import svg

from conftest import SEVENTEEN_INSERTIONS, centroid_drawing, points


def _elements(path, tag):
    root = ElementTree.parse(path).getroot()
    return [element for element in root.iter() if element.tag.endswith(tag)]


def test_drawing(tmp_path, seventeen):
    pts = centroid_drawing(SEVENTEEN_INSERTIONS)
    path = tmp_path / 'drawing.svg'
    svg.export_svg(seventeen, pts, pts, str(path))

    circles = _elements(path, 'circle')
    # drawsvg writes lines as paths
    lines = [p for p in _elements(path, 'path') if p.get('class') == 'edge']
    assert len(circles) == 17
    assert len(lines) == len(seventeen.edges)
    assert {(int(e.get('data-u')), int(e.get('data-v'))) for e in lines} == set(seventeen.edges)
    drawn = {(int(c.get('data-x')), int(c.get('data-y'))) for c in circles}
    assert drawn == set(pts)
    assert {int(c.get('data-vertex')) for c in circles} == set(range(17))
    assert len([p for p in _elements(path, 'path') if p.get('class') == 'outer-face']) == 1


def test_bare_point_set(tmp_path, k4):
    path = tmp_path / 'points.svg'
    svg.export_svg(k4, points((0, 0), (10, 0), (10, 10), (0, 10)), None, str(path))
    circles = _elements(path, 'circle')
    assert len(circles) == 4
    assert not _elements(path, 'path')
    assert all(c.get('data-vertex') is None for c in circles)


def test_unused_points_are_marked(k4, k4_points):
    extra = points((20, 20))
    d = svg.render(k4, k4_points + extra, k4_points)
    text = d.as_svg()
    assert text.count(svg.UNUSED_FILL) == 1
    assert text.count('<circle') == 5


def test_y_axis_points_up(k4, k4_points):
    view = svg._Viewport(k4_points)
    low = view((0, 0))
    high = view((0, 10))
    assert high[1] < low[1]
    assert low == (svg.MARGIN, svg.MARGIN + 10 * view.scale)
