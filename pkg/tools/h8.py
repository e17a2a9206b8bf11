"""Structure constants of the eight-dimensional Kac-Paljutkin Hopf algebra
and its action on k<u,v>/(u^2 - v^2), derived from the defining relations."""
from gmpy2 import mpq

LABELS = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]
HALF = mpq(1, 2)


def _g(bx, by):
    return bx + 2 * by


def _bits(i):
    return i & 1, (i >> 1) & 1


def _gmul(i, j):
    a, b = _bits(i)
    c, d = _bits(j)
    return _g(a ^ c, b ^ d)


def _phi(i):
    a, b = _bits(i)
    return _g(b, a)


def _add(out, k, c):
    out[k] = out.get(k, 0) + c
    if not out[k]:
        del out[k]


E = {0: HALF, 1: HALF, 2: HALF, 3: -HALF}  # z^2 = (1 + x + y - xy)/2


def mult(i, j):
    g1, a = i % 4, i // 4
    g2, b = j % 4, j // 4
    g = _gmul(g1, _phi(g2) if a else g2)
    if a + b < 2:
        return {g + 4 * (a + b): mpq(1)}
    out = {}
    for k, c in E.items():
        _add(out, _gmul(g, k), c)
    return out


def coproduct(i):
    g, a = i % 4, i // 4
    if not a:
        return {(g, g): mpq(1)}
    base = {(4, 4): HALF, (4, 5): HALF, (6, 4): HALF, (6, 5): -HALF}
    out = {}
    for (p, q), c in base.items():
        lp, lq = mult(g, p), mult(g, q)
        for k1, c1 in lp.items():
            for k2, c2 in lq.items():
                _add(out, (k1, k2), c * c1 * c2)
    return out


def antipode(i):
    g, a = i % 4, i // 4
    if not a:
        return {g: mpq(1)}
    return {_phi(g) + 4: mpq(1)}  # S(gz) = z g = phi(g) z


def tables():
    n = 8
    return dict(
        dim=n,
        labels=LABELS,
        mult=[[mult(i, j) for j in range(n)] for i in range(n)],
        coproduct=[coproduct(i) for i in range(n)],
        counit=[mpq(1)] * n,
        antipode=[antipode(i) for i in range(n)],
        unit={0: mpq(1)},
        integral={i: mpq(1, 8) for i in range(n)},
    )


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def generator_matrices():
    """Columns are images of u, v: x = diag(-1, 1), y = diag(1, -1), z swaps u and v."""
    one = [[1, 0], [0, 1]]
    x = [[-1, 0], [0, 1]]
    y = [[1, 0], [0, -1]]
    z = [[0, 1], [1, 0]]
    g = [one, x, y, _matmul(x, y)]
    return [[[mpq(c) for c in row] for row in m] for m in g + [_matmul(m, z) for m in g]]
