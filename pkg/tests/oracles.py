"""Brute-force reference computations, independent of the package.

Everything here works in the free algebra with Fraction coefficients and its
own Gaussian elimination: dimensions are ranks of explicitly listed spanning
sets, group actions act on words letter by letter.
"""
from fractions import Fraction
from itertools import product


def rank(vectors):
    """Rank of a list of {key: Fraction} vectors."""
    pivots = {}
    r = 0
    for v in vectors:
        v = {k: Fraction(c) for k, c in v.items() if c}
        while v:
            k = max(v)
            if k not in pivots:
                pivots[k] = v
                r += 1
                break
            p = pivots[k]
            f = v[k] / p[k]
            for kk, c in p.items():
                x = v.get(kk, 0) - f * c
                if x:
                    v[kk] = x
                else:
                    v.pop(kk, None)
    return r


def words(n_gens, d):
    return [tuple(w) for w in product(range(n_gens), repeat=d)]


def ideal_slice(relations, n_gens, d):
    """Padded relations u r v of total degree d (all generators degree one).

    ``relations`` are dicts {word tuple: coeff}.
    """
    out = []
    for r in relations:
        rd = len(next(iter(r)))
        for a in range(d - rd + 1):
            for u in words(n_gens, a):
                for v in words(n_gens, d - rd - a):
                    out.append({u + w + v: Fraction(c) for w, c in r.items()})
    return out


def algebra_dims(relations, n_gens, N):
    dims = []
    for d in range(N + 1):
        dims.append(n_gens ** d - rank(ideal_slice(relations, n_gens, d)))
    return dims


def mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def group_elements(generators):
    gens = [tuple(tuple(Fraction(x) for x in row) for row in g) for g in generators]
    n = len(gens[0])
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mat_mul(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


def act_word(g, w):
    """g applied to a word of the free algebra: letterwise, column j is g(x_j)."""
    out = {(): Fraction(1)}
    n = len(g)
    for letter in w:
        new = {}
        for u, c in out.items():
            for i in range(n):
                x = g[i][letter]
                if x:
                    key = u + (i,)
                    new[key] = new.get(key, 0) + c * x
        out = {k: v for k, v in new.items() if v}
    return out


def averaged(group, w):
    out = {}
    for g in group:
        for u, c in act_word(g, w).items():
            out[u] = out.get(u, 0) + c / len(group)
    return {k: v for k, v in out.items() if v}


def free_invariants(group, n_gens, d):
    return [averaged(group, w) for w in words(n_gens, d)]


class GroupOracle:
    """R = A^G for A = k<x_1..x_n>/(relations), all generators of degree one."""

    def __init__(self, relations, generators, N):
        self.rels = relations
        self.G = group_elements(generators)
        self.n = len(generators[0])
        self.N = N
        self.I = [ideal_slice(relations, self.n, d) for d in range(N + 1)]
        self.rankI = [rank(x) for x in self.I]
        self.FG = [free_invariants(self.G, self.n, d) for d in range(N + 1)]

    def algebra_dims(self):
        return [self.n ** d - self.rankI[d] for d in range(self.N + 1)]

    def invariant_dims(self):
        return [rank(self.FG[d] + self.I[d]) - self.rankI[d] for d in range(self.N + 1)]

    def _products(self, d):
        out = []
        for i in range(1, d):
            for a in self.FG[i]:
                for b in self.FG[d - i]:
                    p = {}
                    for u, x in a.items():
                        for v, y in b.items():
                            p[u + v] = p.get(u + v, 0) + x * y
                    out.append(p)
        return out

    def new_generator_counts(self):
        """dim R_d - dim (R_+^2)_d."""
        out = [0]
        for d in range(1, self.N + 1):
            top = rank(self.FG[d] + self.I[d])
            dec = rank(self._products(d) + self.I[d])
            out.append(top - dec)
        return out

    def hilbert_ideal_codims(self, side="left"):
        """codim of A R_{>=1} (left) or R_{>=1} A (right) in A_d."""
        out = []
        for d in range(self.N + 1):
            span = list(self.I[d])
            for e in range(1, d + 1):
                for r in self.FG[e]:
                    for w in words(self.n, d - e):
                        if side == "left":
                            span.append({w + u: c for u, c in r.items()})
                        else:
                            span.append({u + w: c for u, c in r.items()})
            out.append(self.n ** d - rank(span))
        return out


def series_coefficients(num, den, n):
    """Power series of num/den through degree n (den[0] = 1)."""
    out = []
    for k in range(n + 1):
        c = Fraction(num[k]) if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            c -= den[j] * out[k - j]
        out.append(c)
    return [int(c) for c in out]
