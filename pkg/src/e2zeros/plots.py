"""Hand-written SVG renderings of the zero set, the real locus of h and the
image of the fundamental domain under h.  No plotting library is used."""
import math
from dataclasses import dataclass, replace
from xml.sax.saxutils import escape

from .eisenstein import SQRT3_2, V0
from .equivariant import STRIP_EPS, h, real_locus_height

FIGURES = ("zeros_scatter", "real_locus", "h_image", "circles")

MARGIN = 48
MARKER_RADIUS = 2


@dataclass(frozen=True)
class PlotSpec:
    figure_id: str
    x_range: tuple
    y_range: tuple
    width_px: int = 640
    height_px: int = 480
    parabolas: bool = True
    strip_lines: bool = True
    samples: int = 1000
    y_max: float = 4.0  # top of the sides of D traced for h_image

    def __post_init__(self):
        if self.figure_id not in FIGURES:
            raise ValueError(f"unknown figure {self.figure_id!r}")
        if not (self.x_range[0] < self.x_range[1] and self.y_range[0] < self.y_range[1]):
            raise ValueError("plot ranges must be nonempty")
        if self.width_px < 64 or self.height_px < 64:
            raise ValueError("pixel dimensions must be >= 64")
        if self.samples < 2:
            raise ValueError("need at least 2 samples")


_DEFAULT_RANGES = {
    "zeros_scatter": ((-0.5, 0.5), (0.002, 0.022)),
    "real_locus": ((-0.5, 0.5), (V0 - 0.0004, V0 + 0.0004)),
    "h_image": ((-0.8, 0.8), (-1.0, 2.3)),
    "circles": ((-0.55, 0.55), (0.0, 0.6)),
}


def default_spec(figure_id, **overrides):
    xr, yr = _DEFAULT_RANGES[figure_id]
    return replace(PlotSpec(figure_id, xr, yr), **overrides)


class Canvas:
    """Affine map from a data rectangle to pixels, y pointing up."""

    def __init__(self, spec, title=""):
        self.spec = spec
        self.w, self.h = spec.width_px, spec.height_px
        (self.x0, self.x1), (self.y0, self.y1) = spec.x_range, spec.y_range
        self.items = []  # frame and labels
        self.data = []  # clipped to the frame
        self.markers = 0
        self._frame(title)

    def px(self, x, y):
        sx = MARGIN + (x - self.x0) / (self.x1 - self.x0) * (self.w - 2 * MARGIN)
        sy = self.h - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (self.h - 2 * MARGIN)
        return sx, sy

    def scale(self):
        return ((self.w - 2 * MARGIN) / (self.x1 - self.x0),
                (self.h - 2 * MARGIN) / (self.y1 - self.y0))

    def _frame(self, title):
        left, top = MARGIN, MARGIN
        right, bottom = self.w - MARGIN, self.h - MARGIN
        self.items.append(
            f'<rect x="{left}" y="{top}" width="{right - left}" height="{bottom - top}" '
            'fill="none" stroke="black" stroke-width="1"/>')
        for k in range(5):
            x = self.x0 + (self.x1 - self.x0) * k / 4
            y = self.y0 + (self.y1 - self.y0) * k / 4
            sx, _ = self.px(x, self.y0)
            _, sy = self.px(self.x0, y)
            self.items.append(f'<text x="{sx:.2f}" y="{bottom + 16}" font-size="10" '
                              f'text-anchor="middle">{x:.4g}</text>')
            self.items.append(f'<text x="{left - 4}" y="{sy + 3:.2f}" font-size="10" '
                              f'text-anchor="end">{y:.6g}</text>')
        if title:
            self.items.append(f'<text x="{self.w / 2:.2f}" y="{top - 16}" font-size="13" '
                              f'text-anchor="middle">{escape(title)}</text>')

    def polyline(self, points, stroke="black", width=1.0, dashed=False):
        pts = " ".join("{:.2f},{:.2f}".format(*self.px(x, y)) for x, y in points)
        dash = ' stroke-dasharray="4,3"' if dashed else ""
        self.data.append(f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
                          f'stroke-width="{width}"{dash}/>')

    def hline(self, y, **style):
        self.polyline([(self.x0, y), (self.x1, y)], **style)

    def marker(self, x, y, fill="crimson"):
        sx, sy = self.px(x, y)
        self.data.append(f'<circle class="marker" cx="{sx:.2f}" cy="{sy:.2f}" '
                          f'r="{MARKER_RADIUS}" fill="{fill}"/>')
        self.markers += 1

    def ellipse(self, x, y, rx, ry, stroke="steelblue"):
        sx, sy = self.px(x, y)
        kx, ky = self.scale()
        self.data.append(f'<ellipse cx="{sx:.2f}" cy="{sy:.2f}" rx="{rx * kx:.2f}" '
                          f'ry="{ry * ky:.2f}" fill="none" stroke="{stroke}" '
                          'stroke-width="0.8"/>')

    def inside(self, x, y):
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def render(self):
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{self.w}" height="{self.h}" viewBox="0 0 {self.w} {self.h}">')
        clip = (f'<clipPath id="frame"><rect x="{MARGIN}" y="{MARGIN}" '
                f'width="{self.w - 2 * MARGIN}" height="{self.h - 2 * MARGIN}"/></clipPath>')
        frame = "\n".join(self.items)
        data = "\n".join(self.data)
        return (f'<?xml version="1.0" encoding="UTF-8"?>\n{head}\n<defs>{clip}</defs>\n'
                f'{frame}\n<g clip-path="url(#frame)">\n{data}\n</g>\n</svg>\n')

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.render())


def _check(spec, figure_id):
    if spec.figure_id != figure_id:
        raise ValueError(f"spec is for {spec.figure_id!r}, not {figure_id!r}")


def plot_zeros_svg(catalog, spec, path):
    """Scatter of refined zeros, with the parabolas ``y = pi x^2 / (6 d^2)``."""
    _check(spec, "zeros_scatter")
    cv = Canvas(spec, "Zeros of E2")
    if spec.parabolas:
        n = spec.samples
        for d in range(1, 5):
            pts = [(cv.x0 + (cv.x1 - cv.x0) * k / (n - 1), 0) for k in range(n)]
            pts = [(x, math.pi * x * x / (6 * d * d)) for x, _ in pts]
            cv.polyline([p for p in pts if p[1] <= cv.y1], stroke="gray", width=0.6, dashed=True)
    for rec in catalog:
        z = rec.refined
        if cv.inside(z.real, z.imag):
            cv.marker(z.real, z.imag)
    cv.save(path)
    return cv


def plot_real_locus_svg(spec, path):
    """The curve ``Im h = 0`` in the fundamental domain, between the strip lines."""
    _check(spec, "real_locus")
    cv = Canvas(spec, "Real locus of h in D")
    n = spec.samples
    xs = [-0.5 + k / (n - 1) for k in range(n)]
    cv.polyline([(x, real_locus_height(x)) for x in xs], stroke="navy", width=1.2)
    if spec.strip_lines:
        cv.hline(V0 + STRIP_EPS, stroke="gray", dashed=True)
        cv.hline(V0 - STRIP_EPS, stroke="gray", dashed=True)
    cv.save(path)
    return cv


def h_image_curves(spec):
    """Images under h of the left side, bottom arc and right side of D."""
    n = spec.samples
    ys = [SQRT3_2 + (spec.y_max - SQRT3_2) * k / (n - 1) for k in range(n)]
    thetas = [math.pi / 3 + (math.pi / 3) * k / (n - 1) for k in range(n)]
    pieces = {
        "left": [complex(-0.5, y) for y in ys],
        "arc": [complex(math.cos(t), math.sin(t)) for t in thetas],
        "right": [complex(0.5, y) for y in ys],
    }
    curves = {}
    for name, zs in pieces.items():
        # samples at a pole of h are dropped
        curves[name] = [w for w in (h(z) for z in zs) if w is not None]
    return curves


def plot_h_image_svg(spec, path):
    _check(spec, "h_image")
    cv = Canvas(spec, "Image of D under h")
    for name, ws in h_image_curves(spec).items():
        cv.polyline([(w.real, w.imag) for w in ws],
                    stroke="darkgreen" if name == "arc" else "black")
    cv.hline(0, stroke="gray", width=0.5, dashed=True)
    cv.save(path)
    return cv


def plot_circles_svg(catalog, spec, path):
    """Circles tangent to R at ``-d/c`` of diameter ``1/(c^2 v0)``, with the zeros."""
    _check(spec, "circles")
    cv = Canvas(spec, "Zeros of E2 on the circles g^-1 C")
    for rec in catalog:
        r = 1 / (2 * rec.c**2 * V0)
        cv.ellipse(-rec.d / rec.c, r, r, r)
    for rec in catalog:
        z = rec.refined
        if cv.inside(z.real, z.imag):
            cv.marker(z.real, z.imag)
        # integer translates that fall in the frame, e.g. the zero at x = -1/2
        for k in (-1, 1):
            if cv.inside(z.real + k, z.imag):
                r = 1 / (2 * rec.c**2 * V0)
                cv.ellipse(-rec.d / rec.c + k, r, r, r)
                cv.marker(z.real + k, z.imag)
    cv.save(path)
    return cv
