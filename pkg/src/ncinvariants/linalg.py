"""Sparse exact linear algebra.

Vectors are dicts {index: coefficient} with no zero entries.  The pivot of
a vector is its largest index; every echelon in the package uses that
convention, so with indices ordered by deglex the leading word of a vector
is its deglex-largest word.
"""
from __future__ import annotations

import heapq

from .exactfield import inv


def vclean(v: dict) -> dict:
    return {k: c for k, c in v.items() if c}


def vadd(v: dict, w: dict, c=1) -> dict:
    """Return v + c*w."""
    out = dict(v)
    vaddto(out, w, c)
    return out


def vaddto(v: dict, w: dict, c=1) -> None:
    """In place v += c*w."""
    for k, a in w.items():
        s = v.get(k)
        val = a * c if s is None else s + a * c
        if val:
            v[k] = val
        elif s is not None:
            del v[k]


def vscale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: a * c for k, a in v.items()}


def vshift(v: dict, offset: int) -> dict:
    return {k + offset: a for k, a in v.items()}


class Echelon:
    """Semi-echelon basis of a subspace: each row has a distinct pivot
    (its largest index) with coefficient 1.

    ``reduce`` returns the canonical remainder modulo the subspace, supported
    on non-pivot indices only; it does not depend on insertion order.
    """

    __slots__ = ("rows",)

    def __init__(self, vectors=()):
        self.rows: dict = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon()
        e.rows = dict(self.rows)
        return e

    def pivots(self):
        return sorted(self.rows)

    def reduce(self, v: dict, track: bool = False):
        r = dict(v)
        coefs = {} if track else None
        rows = self.rows
        heap = [-k for k in r if k in rows]
        heapq.heapify(heap)
        while heap:
            k = -heapq.heappop(heap)
            c = r.get(k)
            if not c:
                continue
            row = rows[k]
            for j, a in row.items():
                s = r.get(j)
                if s is None:
                    r[j] = -c * a
                    if j in rows:
                        heapq.heappush(heap, -j)
                else:
                    val = s - c * a
                    if val:
                        r[j] = val
                    else:
                        del r[j]
            if track:
                coefs[k] = c
        if track:
            return r, coefs
        return r

    def add(self, v: dict):
        """Insert v; return the new normalized row, or None if v is dependent."""
        r = self.reduce(v)
        if not r:
            return None
        p = max(r)
        lead = r[p]
        if lead != 1:
            s = inv(lead)
            r = {k: a * s for k, a in r.items()}
        self.rows[p] = r
        return r

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: dict) -> dict:
        """Coefficients {pivot: c} with v = sum c*row[pivot]; v must lie in the span."""
        r, coefs = self.reduce(v, track=True)
        if r:
            raise ValueError("vector not in span")
        return coefs

    def basis(self) -> list:
        """Rows ordered by pivot."""
        return [self.rows[p] for p in sorted(self.rows)]

    def rref(self) -> list:
        """Fully reduced rows ordered by pivot."""
        out = []
        for p in sorted(self.rows):
            tail = {k: a for k, a in self.rows[p].items() if k != p}
            row = self.reduce(tail)
            row[p] = self.rows[p][p]
            out.append(row)
        return out

    def complement_indices(self, dim: int) -> list:
        return [i for i in range(dim) if i not in self.rows]


def rank(vectors) -> int:
    return len(Echelon(vectors))


def kernel(vectors: list, width: int | None = None) -> list:
    """Basis of {c : sum_k c_k vectors[k] = 0}, as dicts over range(len(vectors))."""
    n = len(vectors)
    e = Echelon()
    for k, v in enumerate(vectors):
        aug = {j + n: a for j, a in v.items()}
        aug[k] = 1
        e.add(aug)
    out = [row for p, row in sorted(e.rows.items()) if p < n]
    return out


def intersect(basis_u: list, basis_w: list) -> list:
    """Basis of span(U) and span(W) intersected."""
    if not basis_u or not basis_w:
        return []
    ker = kernel(list(basis_u) + [vscale(w, -1) for w in basis_w])
    out = Echelon()
    nu = len(basis_u)
    for c in ker:
        v = {}
        for k, a in c.items():
            if k < nu:
                vaddto(v, basis_u[k], a)
        if v:
            out.add(v)
    return out.basis()


def mat_apply(columns: list, v: dict) -> dict:
    """Apply a matrix given by its column vectors to v."""
    out = {}
    for j, a in v.items():
        vaddto(out, columns[j], a)
    return out


def mat_mul(a_cols: list, b_cols: list) -> list:
    return [mat_apply(a_cols, col) for col in b_cols]
