"""ASCII and SVG pictures of a path, its lasers, and its partition pair."""

from __future__ import annotations

import math
from fractions import Fraction

from .partitions import LabeledNCPair, pi_map
from .paths import DyckPath, fire_laser


def _laser_end(path: DyckPath, i: int) -> tuple:
    """Exact endpoint of the laser from label i on its target east step."""
    h = path.bottom(i)
    x0 = fire_laser(path, i).target
    top = path.top(x0)
    return Fraction(i) + Fraction(path.b * (top - h), path.a), Fraction(top)


def ascii_diagram(path: DyckPath) -> str:
    a, b = path.a, path.b
    rows, cols = 2 * a + 1, 3 * b + 1
    grid = [[" "] * cols for _ in range(rows)]
    row = lambda y: 2 * (a - y)
    # diagonal y = a x / b sampled on each row
    for y in range(a + 1):
        x = Fraction(b * y, a)
        grid[row(y)][round(3 * x)] = "."
    x = y = 0
    for n in path.runs:
        for _ in range(n):
            grid[row(y)][3 * x] = "+"
            grid[row(y) - 1][3 * x] = "|"
            y += 1
        grid[row(y)][3 * x] = "+"
        grid[row(y)][3 * x + 1] = "_"
        grid[row(y)][3 * x + 2] = "_"
        x += 1
    grid[row(y)][3 * x] = "+"
    for i in range(1, b):
        grid[row(path.bottom(i))][3 * i] = str(i) if i < 10 else "*"
    lines = ["".join(r).rstrip() for r in grid]
    lasers = []
    for i in range(1, b):
        if path.runs[i]:
            lasers.append(f"({i},{fire_laser(path, i).target})")
    lines.append("")
    lines.append(f"path {path} ({path.ne_string()}) for (a,b)=({a},{b})")
    lines.append("lasers " + (" ".join(lasers) if lasers else "none"))
    return "\n".join(lines) + "\n"


def show_text(path: DyckPath) -> str:
    pq = pi_map(path)
    return ascii_diagram(path) + f"pair {pq}\n" + pq.to_json() + "\n"


def _f(v) -> str:
    return f"{float(v):.2f}".rstrip("0").rstrip(".")


def svg_diagram(path: DyckPath) -> str:
    a, b = path.a, path.b
    unit = 30
    pad = 20
    w_path = b * unit + 2 * pad
    h = a * unit + 2 * pad
    radius = 90
    disk_cx = w_path + radius + pad
    disk_cy = pad + radius + 10
    width = disk_cx + radius + 2 * pad
    height = max(h, disk_cy + radius + 2 * pad)
    X = lambda x: pad + float(x) * unit
    Y = lambda y: pad + (a - float(y)) * unit
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">']
    for x in range(b + 1):
        out.append(f'<line x1="{_f(X(x))}" y1="{_f(Y(0))}" x2="{_f(X(x))}" y2="{_f(Y(a))}" stroke="#ddd"/>')
    for y in range(a + 1):
        out.append(f'<line x1="{_f(X(0))}" y1="{_f(Y(y))}" x2="{_f(X(b))}" y2="{_f(Y(y))}" stroke="#ddd"/>')
    out.append(f'<line x1="{_f(X(0))}" y1="{_f(Y(0))}" x2="{_f(X(b))}" y2="{_f(Y(a))}" stroke="#999" stroke-dasharray="4,3"/>')
    pts, x, y = [(0, 0)], 0, 0
    for n in path.runs:
        y += n
        pts.append((x, y))
        x += 1
        pts.append((x, y))
    poly = " ".join(f"{_f(X(px))},{_f(Y(py))}" for px, py in pts)
    out.append(f'<polyline points="{poly}" fill="none" stroke="black" stroke-width="2"/>')
    for i in range(1, b):
        out.append(f'<text x="{_f(X(i) + 3)}" y="{_f(Y(path.bottom(i)) + 12)}" font-size="10">{i}</text>')
        if path.runs[i]:
            ex, ey = _laser_end(path, i)
            out.append(f'<line x1="{_f(X(i))}" y1="{_f(Y(path.bottom(i)))}" x2="{_f(X(ex))}" y2="{_f(Y(ey))}" stroke="red"/>')
    out.extend(_disk(pi_map(path), disk_cx, disk_cy, radius))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _disk(pq: LabeledNCPair, cx: float, cy: float, r: float) -> list:
    n = pq.n
    pos = lambda i: (cx + r * math.sin(2 * math.pi * (i - 0.5) / n), cy - r * math.cos(2 * math.pi * (i - 0.5) / n))
    mid = lambda i: (cx + r * math.sin(2 * math.pi * i / n), cy - r * math.cos(2 * math.pi * i / n))
    out = [f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" fill="none" stroke="#999"/>']
    for i in range(1, n + 1):
        px, py = pos(i)
        out.append(f'<circle cx="{_f(px)}" cy="{_f(py)}" r="3" fill="black"/>')
        out.append(f'<text x="{_f(cx + 1.15 * (px - cx))}" y="{_f(cy + 1.15 * (py - cy))}" font-size="10">{i}</text>')
    for B, rank in pq.P:
        pts = " ".join(f"{_f(pos(i)[0])},{_f(pos(i)[1])}" for i in B)
        out.append(f'<polygon points="{pts}" fill="none" stroke="black"/>')
        tx = sum(pos(i)[0] for i in B) / len(B)
        ty = sum(pos(i)[1] for i in B) / len(B)
        out.append(f'<text x="{_f(tx)}" y="{_f(ty)}" font-size="9">{rank}</text>')
    # Q lives on the points between i and i+1
    for B, rank in pq.Q:
        pts = " ".join(f"{_f(mid(i)[0])},{_f(mid(i)[1])}" for i in B)
        out.append(f'<polygon points="{pts}" fill="none" stroke="blue" stroke-dasharray="3,2"/>')
        if rank:
            tx = sum(mid(i)[0] for i in B) / len(B)
            ty = sum(mid(i)[1] for i in B) / len(B)
            out.append(f'<text x="{_f(tx)}" y="{_f(ty)}" font-size="9" fill="blue">{rank}</text>')
    return out
