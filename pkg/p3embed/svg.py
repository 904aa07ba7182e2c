"""SVG rendering of point sets and straight-line drawings using drawsvg."""
import logging

import drawsvg as draw

logger = logging.getLogger(__name__)

CANVAS_SIZE = 800
MARGIN = 20

POINT_FILL = '#1e293b'
UNUSED_FILL = '#94a3b8'
EDGE_COLOR = '#64748b'
OUTER_FILL = '#fef3c7'
OUTER_STROKE = '#f59e0b'


class _Viewport:
    """
    Maps point coordinates onto the canvas, y pointing up.
    """
    def __init__(self, points, size=CANVAS_SIZE, margin=MARGIN):
        xs = [p[0] for p in points] or [0]
        ys = [p[1] for p in points] or [0]
        self.min_x, self.max_y = min(xs), max(ys)
        span = max(max(xs) - self.min_x, self.max_y - min(ys), 1)
        self.scale = (size - 2 * margin) / span
        self.margin = margin
        self.width = margin * 2 + (max(xs) - self.min_x) * self.scale
        self.height = margin * 2 + (self.max_y - min(ys)) * self.scale

    def __call__(self, p):
        return self.margin + (p[0] - self.min_x) * self.scale, self.margin + (self.max_y - p[1]) * self.scale


def render(graph, points, mapping=None) -> draw.Drawing:
    """
    :param graph: PlaneGraphInput, only used with a mapping
    :param mapping: points indexed by vertex, or None to draw the bare point set
    """
    points = list(points)
    view = _Viewport(points)
    d = draw.Drawing(view.width, view.height)
    d.append(draw.Rectangle(0, 0, view.width, view.height, fill='#ffffff'))

    used = set()
    if mapping is not None:
        mapping = list(mapping)
        used = set(mapping)
        outer = [coordinate for v in graph.outer for coordinate in view(mapping[v])]
        d.append(draw.Lines(*outer, close=True, fill=OUTER_FILL, stroke=OUTER_STROKE, stroke_width=2,
                            class_='outer-face'))
        for u, v in graph.edges:
            (x1, y1), (x2, y2) = view(mapping[u]), view(mapping[v])
            d.append(draw.Line(x1, y1, x2, y2, stroke=EDGE_COLOR, stroke_width=1, class_='edge',
                               data_u=u, data_v=v))

    owner = {p: v for v, p in enumerate(mapping)} if mapping is not None else {}
    for p in points:
        cx, cy = view(p)
        fill = POINT_FILL if mapping is None or p in used else UNUSED_FILL
        extra = {'data_vertex': owner[p]} if p in owner else {}
        d.append(draw.Circle(cx, cy, 3, fill=fill, class_='point', data_x=p[0], data_y=p[1], **extra))
    return d


def export_svg(graph, points, mapping, path):
    """
    Writes the drawing (or the bare point set if mapping is None) to path.
    Exact point coordinates are kept in the data-x and data-y attributes of every dot.
    """
    d = render(graph, points, mapping)
    d.save_svg(path)
    logger.info(f'SVG written to {path}')
    return d
