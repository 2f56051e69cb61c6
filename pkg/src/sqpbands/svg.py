"""SVG rendering of the disk-band diagram of a band word.

Disks are horizontal rails stacked by strand index; the band of letter k
is drawn at horizontal slot k, passing in front of intermediate rails,
with a small twist glyph at its lower foot. Deterministic output.
"""

from __future__ import annotations

from .words import BandWord

_RAIL_GAP = 42
_SLOT_GAP = 46
_MARGIN = 36
_BAND_W = 12


def band_diagram_svg(word: BandWord) -> str:
    n, letters = word.strands, word.letters
    width = 2 * _MARGIN + max(len(letters), 1) * _SLOT_GAP
    height = 2 * _MARGIN + (n - 1) * _RAIL_GAP

    def rail_y(d: int) -> int:
        return _MARGIN + (d - 1) * _RAIL_GAP

    def slot_x(k: int) -> int:
        return _MARGIN + (k - 1) * _SLOT_GAP + _SLOT_GAP // 2

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<style>.rail{stroke:#1a466b;stroke-width:6;fill:none}'
        ".band{fill:#d28a2c;stroke:#8a5a17;stroke-width:1.5}"
        ".gap{stroke:#ffffff;stroke-width:10;fill:none}"
        ".lbl{font:12px monospace;fill:#333}</style>",
    ]
    for d in range(1, n + 1):
        y = rail_y(d)
        parts.append(f'<path class="rail" d="M {_MARGIN - 18} {y} H {width - _MARGIN + 18}"/>')
        parts.append(f'<text class="lbl" x="6" y="{y + 4}">{d}</text>')
    for k, (i, j) in enumerate(letters, start=1):
        x = slot_x(k)
        y1, y2 = rail_y(i), rail_y(j)
        for d in range(i + 1, j):  # white gap: the band passes in front
            y = rail_y(d)
            parts.append(f'<path class="gap" d="M {x - _BAND_W} {y} H {x + _BAND_W}"/>')
        parts.append(
            f'<rect class="band" x="{x - _BAND_W // 2}" y="{y1}" '
            f'width="{_BAND_W}" height="{y2 - y1}" rx="3"/>'
        )
        # half-twist glyph at the lower foot
        parts.append(
            f'<path d="M {x - 7} {y2 - 14} L {x + 7} {y2 - 2} M {x + 7} {y2 - 14} '
            f'L {x - 7} {y2 - 2}" stroke="#8a5a17" stroke-width="2" fill="none"/>'
        )
        parts.append(f'<text class="lbl" x="{x - 10}" y="{height - 8}">{k}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
