"""Hand-emitted SVG scatter plots of tuple atlases (no plotting dependency).

Figures are for human inspection; the CSV output of the atlas is the
machine-readable artifact.
"""

from typing import Optional

_SIZE = 800
_MARGIN = 60
_SPAN = _SIZE - 2 * _MARGIN


def _scale(v, lo, hi):
    if hi == lo:
        return _MARGIN + _SPAN / 2
    return _MARGIN + _SPAN * (v - lo) / (hi - lo)


def _color(t: float) -> str:
    # blue (cold, low) to red (hot, high)
    r = int(40 + 215 * t)
    b = int(255 - 215 * t)
    return f"rgb({r},60,{b})"


def atlas_svg(atlas, path_g: Optional[list] = None) -> str:
    """Scatter of atlas tuples in an 800x800 viewport.

    hmax = 3: points are (|2A|, |3A|); path_g, if given, is drawn as a red
    polyline (the explicit h = 3 path).  hmax >= 4: points are the
    (|3A|, |4A|) projection colored by the minimum |2A| in each cell.
    """
    tuples = list(atlas.tuples)
    if not tuples:
        raise ValueError("empty atlas")
    if atlas.hmax >= 4:
        cells = {}
        for t in tuples:
            key = (t[1], t[2])
            cells[key] = min(cells.get(key, t[0]), t[0])
        pts = [(x, y, m) for (x, y), m in cells.items()]
        legend = "color: min |2A| per (|3A|,|4A|)"
        xlab, ylab = "|3A|", "|4A|"
    else:
        pts = [(t[0], t[1], None) for t in tuples]
        legend = "(|2A|, |3A|)"
        xlab, ylab = "|2A|", "|3A|"
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    xlo, xhi = min(xs), max(xs)
    ylo, yhi = min(ys), max(ys)
    ms = [p[2] for p in pts if p[2] is not None]
    mlo, mhi = (min(ms), max(ms)) if ms else (0, 1)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
        f'<text x="{_SIZE // 2}" y="{_SIZE - 15}" text-anchor="middle" '
        f'font-size="14">{xlab} &#8212; k={atlas.k}, {legend}</text>',
        f'<text x="20" y="{_SIZE // 2}" font-size="14" '
        f'transform="rotate(-90 20 {_SIZE // 2})" text-anchor="middle">{ylab}</text>',
    ]
    for x, y, m in pts:
        cx = _scale(x, xlo, xhi)
        cy = _SIZE - _scale(y, ylo, yhi)
        fill = "black" if m is None else _color((m - mlo) / max(1, mhi - mlo))
        out.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="3" fill="{fill}"/>')
    if path_g and atlas.hmax < 4:
        coords = " ".join(
            f"{_scale(x, xlo, xhi):.1f},{_SIZE - _scale(y, ylo, yhi):.1f}"
            for x, y in path_g
        )
        out.append(f'<polyline points="{coords}" fill="none" stroke="red" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
