"""Straight-line models of curves on the unit torus R^2 / Z^2."""
from __future__ import annotations

from fractions import Fraction


def _det(a, b):
    return a[0] * b[1] - a[1] * b[0]


def count_crossings(v, w, offset=(Fraction(1, 7), Fraction(2, 11))):
    """Transverse crossings of the lines t*v and offset + u*w, by brute force.

    Every lift ``t v - u w = offset + z`` with ``z`` in a box large enough to
    hold all solutions is solved exactly and kept when ``0 <= t, u < 1``.
    """
    d = _det(v, w)
    if d == 0:
        return 0
    found = set()
    rx = abs(v[0]) + abs(w[0]) + 2
    ry = abs(v[1]) + abs(w[1]) + 2
    for zx in range(-rx, rx + 1):
        for zy in range(-ry, ry + 1):
            bx, by = offset[0] + zx, offset[1] + zy
            # t v - u w = b  ->  Cramer's rule on the columns v, -w
            t = Fraction(_det((bx, by), (-w[0], -w[1])), _det(v, (-w[0], -w[1])))
            u = Fraction(_det(v, (bx, by)), _det(v, (-w[0], -w[1])))
            if 0 <= t < 1 and 0 <= u < 1:
                found.add((t, u))
    return len(found)


def _ext_gcd_partner(w):
    """An integer vector z0 with det(z0, w) = 1 (w primitive)."""
    p, q = w
    for x in range(-abs(p) - abs(q) - 1, abs(p) + abs(q) + 2):
        for y in range(-abs(p) - abs(q) - 1, abs(p) + abs(q) + 2):
            if x * q - y * p == 1:
                return (x, y)
    raise ValueError(f"{w} is not primitive")


def resolve(v, m1, w, m2):
    """Oriented resolution of m1 parallel copies of direction v and m2 of w.

    Returns the homology class of every resulting component.  Crossings are
    smoothed the only way that respects orientation: arriving along one
    strand, leave along the other.
    """
    if _det(v, w) == 0:
        return [tuple(v)] * m1 + [tuple(w)] * m2
    z0v = _ext_gcd_partner(v)
    z0w = _ext_gcd_partner(w)
    # copies of a curve are shifted across it by fractions of a primitive transversal
    starts1 = [(z0v[0] * (k + 0.5) / m1, z0v[1] * (k + 0.5) / m1) for k in range(m1)]
    starts2 = [(0.1234 + z0w[0] * (k + 0.5) / m2, 0.5678 + z0w[1] * (k + 0.5) / m2) for k in range(m2)]
    ww = w[0] * w[0] + w[1] * w[1]
    on1 = [[] for _ in range(m1)]
    on2 = [[] for _ in range(m2)]
    crossings = []
    D = _det(v, w)
    for i, P in enumerate(starts1):
        for j, Q in enumerate(starts2):
            dv = (Q[0] - P[0], Q[1] - P[1])
            base = _det(dv, w)
            for k in range(abs(D)):
                t = ((base + k) / D) % 1.0
                X = (t * v[0] - dv[0], t * v[1] - dv[1])
                K = round(_det(X, w))
                rx, ry = X[0] - K * z0w[0], X[1] - K * z0w[1]
                u = ((rx * w[0] + ry * w[1]) / ww) % 1.0
                x = len(crossings)
                crossings.append((i, t, j, u))
                on1[i].append((t, x))
                on2[j].append((u, x))
    for lst in on1 + on2:
        lst.sort()
    pos1 = {}
    pos2 = {}
    for i, lst in enumerate(on1):
        for k, (_, x) in enumerate(lst):
            pos1[x] = (i, k)
    for j, lst in enumerate(on2):
        for k, (_, x) in enumerate(lst):
            pos2[x] = (j, k)

    def arc(kind, strand, k):
        lst = (on1 if kind == 1 else on2)[strand]
        t0 = lst[k][0]
        k1 = (k + 1) % len(lst)
        t1 = lst[k1][0]
        span = t1 - t0 if k1 > k else t1 - t0 + 1.0
        return span, lst[k1][1]

    seen = set()
    classes = []
    for kind, lists in ((1, on1), (2, on2)):
        for s, lst in enumerate(lists):
            for k in range(len(lst)):
                if (kind, s, k) in seen:
                    continue
                x_total = [0.0, 0.0]
                cur = (kind, s, k)
                while cur not in seen:
                    seen.add(cur)
                    ck, cs, ci = cur
                    span, x = arc(ck, cs, ci)
                    vec = v if ck == 1 else w
                    x_total[0] += span * vec[0]
                    x_total[1] += span * vec[1]
                    # switch strands at the crossing just reached
                    cur = (2, *pos2[x]) if ck == 1 else (1, *pos1[x])
                cls = (round(x_total[0]), round(x_total[1]))
                assert abs(cls[0] - x_total[0]) < 1e-6 and abs(cls[1] - x_total[1]) < 1e-6
                classes.append(cls)
    return classes
