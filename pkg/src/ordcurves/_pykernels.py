"""Pure-Python hot kernels.

These are the reference implementations; ``_ckernels.pyx`` mirrors every
function here with identical results. All arithmetic is on Python integers.
"""

from math import gcd


def primitive(v):
    """Divide an integer vector by its content and make the first nonzero entry positive.

    Returns None for the zero vector.
    """
    g = 0
    for a in v:
        if a:
            g = gcd(g, a)
    if g == 0:
        return None
    lead = 0
    for a in v:
        if a:
            lead = a
            break
    if lead < 0:
        g = -g
    if g == 1:
        return tuple(v)
    return tuple(a // g for a in v)


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def pair_groups(triples):
    """Group the normalized cross products of all pairs.

    For points this yields every spanned line with the indices on it; for
    lines it yields every pairwise meet with the indices of lines through it.
    Pairs with a zero cross product (equal elements) are skipped. Index lists
    are sorted; the mapping is keyed by the normalized triple.
    """
    groups = {}
    m = len(triples)
    for i in range(m):
        u0, u1, u2 = triples[i]
        for j in range(i + 1, m):
            v0, v1, v2 = triples[j]
            c = primitive((u1 * v2 - u2 * v1, u2 * v0 - u0 * v2, u0 * v1 - u1 * v0))
            if c is None:
                continue
            s = groups.get(c)
            if s is None:
                groups[c] = {i, j}
            else:
                s.add(i)
                s.add(j)
    return {k: sorted(s) for k, s in groups.items()}


def _reduce(v, pivots):
    # pivots: list of (col, row) with row[col] > 0
    for c, r in pivots:
        a = v[c]
        if a:
            p = r[c]
            v = [p * x - a * y for x, y in zip(v, r)]
            g = 0
            for x in v:
                if x:
                    g = gcd(g, x)
            if g > 1:
                v = [x // g for x in v]
    return v


def echelon(rows, ncols):
    """Canonical integer reduced row echelon form.

    Fraction-free Gauss-Jordan: rows are combined by integer cross
    multiplication and the content of every touched row is stripped, which
    keeps entries near the size of the corresponding minors. The result is
    the unique list of primitive rows, pivot positive, zero in every other
    pivot column, sorted by pivot column; it equals the rational RREF up to
    a positive scale per row.
    """
    pivots = []
    for row in rows:
        if len(pivots) == ncols:
            break
        v = _reduce(list(row), pivots)
        c = 0
        while c < ncols and v[c] == 0:
            c += 1
        if c == ncols:
            continue
        v = list(primitive(v))
        for k, (pc, r) in enumerate(pivots):
            a = r[c]
            if a:
                w = [v[c] * x - a * y for x, y in zip(r, v)]
                g = 0
                for x in w:
                    if x:
                        g = gcd(g, x)
                if g > 1:
                    w = [x // g for x in w]
                pivots[k] = (pc, w)
        pivots.append((c, v))
    pivots.sort()
    return [tuple(r) for _, r in pivots]


def nullspace(rows, ncols):
    """Canonical integer basis of the right kernel of an integer matrix.

    The basis is returned in canonical echelon form (see :func:`echelon`), so
    equal kernels give identical output.
    """
    red = echelon(rows, ncols)
    pcols = []
    for r in red:
        c = 0
        while r[c] == 0:
            c += 1
        pcols.append(c)
    pset = set(pcols)
    raw = []
    for j in range(ncols):
        if j in pset:
            continue
        scale = 1
        for r, c in zip(red, pcols):
            if r[j]:
                p = r[c]
                scale = scale * p // gcd(scale, p)
        v = [0] * ncols
        v[j] = scale
        for r, c in zip(red, pcols):
            if r[j]:
                v[c] = -r[j] * (scale // r[c])
        raw.append(v)
    return echelon(raw, ncols)


def monomial_rows(exponents, points):
    """Evaluate every monomial at every point: one row per point."""
    rows = []
    for x, y, z in points:
        px = [1]
        py = [1]
        pz = [1]
        d = sum(exponents[0]) if exponents else 0
        for _ in range(d):
            px.append(px[-1] * x)
            py.append(py[-1] * y)
            pz.append(pz[-1] * z)
        rows.append([px[a] * py[b] * pz[c] for a, b, c in exponents])
    return rows


def dot_rows(vectors, rows):
    """Matrix of dot products: out[i][k] = vectors[k] . rows[i]."""
    return [[sum(a * b for a, b in zip(v, r)) for v in vectors] for r in rows]
