# Four SVG figures, written to the current directory (or the first argument)

import pathlib
import sys

from e2zeros import build_catalog
from e2zeros import plots

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

cv = plots.plot_zeros_svg(build_catalog(min_height=0.002), plots.default_spec("zeros_scatter"),
                          out / "zeros_scatter.svg")
print("zeros_scatter.svg:", cv.markers, "zeros in .002 < y < .022")

plots.plot_real_locus_svg(plots.default_spec("real_locus"), out / "real_locus.svg")
plots.plot_h_image_svg(plots.default_spec("h_image"), out / "h_image.svg")

cv = plots.plot_circles_svg(build_catalog(6), plots.default_spec("circles"), out / "circles.svg")
print("circles.svg:", cv.markers, "zeros drawn on their circles")
