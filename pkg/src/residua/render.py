"""Draw a stretch of the integer line with congruent cells in the same color."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .classes import least_residues
from .errors import ResidueError
from .integers import Modulus, divide_with_remainder

DEFAULT_PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f3b73", "#8cd17d",
)
# gray levels 0.45 / 0.65 / 0.80 for absolutely least residues 0 / +-1 / +-2
FIGURE_GRAYS = ("#737373", "#a6a6a6", "#cccccc")

CELL = 24
BORDER = 2


@dataclass(frozen=True)
class LineRenderSpec:
    m: Modulus
    lo: int
    hi: int
    highlights: tuple[int, ...] = ()
    palette: tuple[str, ...] = DEFAULT_PALETTE
    grays: bool = False
    values: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "m", Modulus(self.m))
        object.__setattr__(self, "highlights", tuple(self.highlights))
        object.__setattr__(self, "palette", tuple(self.palette))
        if self.lo > self.hi:
            raise ResidueError(f"empty range: lo={self.lo} > hi={self.hi}")
        if not self.palette:
            raise ResidueError("palette is empty")
        object.__setattr__(self, "values", tuple(range(self.lo, self.hi + 1)))
        if not self.grays and self.m > len(self.palette):
            warnings.warn(
                f"modulus {self.m} exceeds the {len(self.palette)}-color palette; "
                "colors repeat, so equal colors no longer imply congruence",
                stacklevel=3,
            )

    def color_index(self, n: int) -> int:
        """Least positive residue of ``n``, or the gray level when ``grays`` is set."""
        if self.grays:
            return abs(least_residues(n, self.m).absolutely_least)
        return divide_with_remainder(n, self.m)[1]

    def color(self, n: int) -> str:
        idx = self.color_index(n)
        if self.grays:
            return gray_levels(self.m)[idx]
        return self.palette[idx % len(self.palette)]


def gray_levels(m) -> tuple[str, ...]:
    """One gray per absolute residue size ``0..m//2``, darkest for 0."""
    m = Modulus(m)
    n = m // 2 + 1
    if n == len(FIGURE_GRAYS):
        return FIGURE_GRAYS
    if n == 1:
        return FIGURE_GRAYS[:1]
    out = []
    for j in range(n):
        level = round(255 * (0.45 + 0.35 * j / (n - 1)))
        out.append(f"#{level:02x}{level:02x}{level:02x}")
    return tuple(out)


def render_svg(spec: LineRenderSpec) -> str:
    """A one-row SVG; each cell is a ``<g class="cell">`` holding a rect and a label."""
    n = len(spec.values)
    width, height = CELL * n, CELL
    marks = set(spec.highlights)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" data-modulus="{spec.m}">',
    ]
    for i, v in enumerate(spec.values):
        x = i * CELL
        hl = v in marks
        out.append(
            f'<g class="cell" data-value="{v}" data-class="{spec.color_index(v)}"'
            + (' data-highlight="true"' if hl else "")
            + ">"
        )
        out.append(f'<rect x="{x}" y="0" width="{CELL}" height="{CELL}" fill="{spec.color(v)}"/>')
        if hl:
            o = BORDER / 2
            out.append(
                f'<rect class="highlight" x="{x + o:g}" y="{o:g}" width="{CELL - BORDER}" '
                f'height="{CELL - BORDER}" fill="none" stroke="#000000" stroke-width="{BORDER}"/>'
            )
        out.append(
            f'<text x="{x + CELL / 2:g}" y="{CELL / 2 + 4:g}" font-family="monospace" '
            f'font-size="9" text-anchor="middle">{escape(str(v))}</text>'
        )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _ansi_bg(hex_color: str) -> str:
    r, g, b = (int(hex_color[i:i + 2], 16) for i in (1, 3, 5))
    return f"\x1b[48;2;{r};{g};{b}m\x1b[30m"


def render_text(spec: LineRenderSpec, color: bool = True) -> str:
    """Three rows: the integers, their color index, and ``^`` under highlights.

    With ``color`` the first row gets ANSI background colors.
    """
    w = max(len(str(v)) for v in spec.values) + 1
    marks = set(spec.highlights)
    cells, idx, hl = [], [], []
    for v in spec.values:
        label = str(v).rjust(w)
        cells.append(f"{_ansi_bg(spec.color(v))}{label}\x1b[0m" if color else label)
        idx.append(str(spec.color_index(v)).rjust(w))
        hl.append(("^" if v in marks else "").rjust(w))
    lines = ["".join(cells), "".join(idx)]
    if marks:
        lines.append("".join(hl).rstrip())
    return "\n".join(lines) + "\n"
