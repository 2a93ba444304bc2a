"""Color the integers -9..16 by their class mod 5 and write SVG files.

Writes number_line.svg and number_line_grays.svg to the current directory.
"""
from pathlib import Path

from residua import LineRenderSpec, render_svg, render_text

spec = LineRenderSpec(5, -9, 16, highlights=(-9, 16))
print(render_text(spec, color=True))
Path("number_line.svg").write_text(render_svg(spec))

# three grays: dark for multiples of 5, one shade for +-1, a lighter one for +-2
grays = LineRenderSpec(5, -9, 16, highlights=(-9, 16), grays=True)
Path("number_line_grays.svg").write_text(render_svg(grays))
print("wrote number_line.svg and number_line_grays.svg")
