"""SVG figures of a point set and, optionally, a certified curve.

The curve is drawn by marching squares on the dehomogenized polynomial.
This module is the only place where floating point is used.
"""

from ordcurves.curves import monomial_basis


def _dehomogenize(cert):
    terms = [(c, a, b) for c, (a, b, _) in zip(cert.coeffs, monomial_basis(cert.degree)) if c]

    def f(x, y):
        return sum(c * x**a * y**b for c, a, b in terms)

    return f


def _segments(f, x0, y0, x1, y1, res):
    dx = (x1 - x0) / res
    dy = (y1 - y0) / res
    grid = [[f(x0 + i * dx, y0 + j * dy) for i in range(res + 1)] for j in range(res + 1)]
    segs = []
    for j in range(res):
        for i in range(res):
            corners = [
                (x0 + i * dx, y0 + j * dy, grid[j][i]),
                (x0 + (i + 1) * dx, y0 + j * dy, grid[j][i + 1]),
                (x0 + (i + 1) * dx, y0 + (j + 1) * dy, grid[j + 1][i + 1]),
                (x0 + i * dx, y0 + (j + 1) * dy, grid[j + 1][i]),
            ]
            cross = []
            for k in range(4):
                xa, ya, va = corners[k]
                xb, yb, vb = corners[(k + 1) % 4]
                if (va < 0) != (vb < 0):
                    t = va / (va - vb)
                    cross.append((xa + t * (xb - xa), ya + t * (yb - ya)))
            for k in range(0, len(cross) - 1, 2):
                segs.append((cross[k], cross[k + 1]))
    return segs


def emit_plot(A, cert=None, window=(-10.0, -10.0, 10.0, 10.0), size=600, res=200):
    """SVG text showing the affine points of A inside ``window``."""
    x0, y0, x1, y1 = (float(v) for v in window)
    sx = size / (x1 - x0)
    sy = size / (y1 - y0)

    def tx(x):
        return f"{(x - x0) * sx:.3f}"

    def ty(y):
        return f"{(y1 - y) * sy:.3f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if cert is not None:
        path = []
        for (ax, ay), (bx, by) in _segments(_dehomogenize(cert), x0, y0, x1, y1, res):
            path.append(f"M{tx(ax)} {ty(ay)}L{tx(bx)} {ty(by)}")
        out.append(f'<path class="curve" d="{"".join(path)}" stroke="steelblue" fill="none" stroke-width="1.5"/>')
    on = set(cert.incident) if cert is not None else set()
    for i, (x, y, z) in enumerate(A):
        if z == 0:
            continue
        px, py = x / z, y / z
        if not (x0 <= px <= x1 and y0 <= py <= y1):
            continue
        if i in on:
            out.append(f'<circle class="incident" cx="{tx(px)}" cy="{ty(py)}" r="4" fill="crimson"/>')
        else:
            out.append(f'<circle class="point" cx="{tx(px)}" cy="{ty(py)}" r="2.5" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
