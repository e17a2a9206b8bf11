"""Graded algebras and graded left modules, truncated at a common degree.

An algebra here exposes ``max_degree``, ``dim(d)`` and ``mul(d1, i, d2, j)``
(product of basis element i of degree d1 with basis element j of degree d2,
returned as a coordinate dict in degree d1 + d2).  Degree 0 always has the
single basis element 0, the unit.

Modules are left modules over such an algebra and expose ``dim(d)``,
``min_degree`` and ``act(e, b, d, m)``.  Right modules are handled as left
modules over the opposite algebra.
"""
from __future__ import annotations

from .algebra import GradedBasisTable, TruncationError
from .linalg import Echelon, vaddto


class TableAlgebra:
    """A presented algebra through its basis table."""

    def __init__(self, table: GradedBasisTable, name: str = "A"):
        self.table = table
        self.max_degree = table.max_degree
        self.name = name
        self._mul = {}

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        return self.table.dim(d)

    def mul(self, d1, i, d2, j) -> dict:
        key = (d1, i, d2, j)
        r = self._mul.get(key)
        if r is None:
            r = self.table.mul_basis(d1, i, d2, j)
            self._mul[key] = r
        return r

    def vector(self, d: int, i: int) -> dict:
        return {i: 1}


class SubAlgebra:
    """Graded subalgebra of a table algebra given by per-degree bases.

    ``bases[d]`` must be row-reduced with distinct pivots and leading
    coefficient 1 (as produced by ``Echelon.rref``); bases[0] is the unit.
    """

    def __init__(self, table: GradedBasisTable, bases: list, name: str = "R"):
        self.table = table
        self.bases = [list(b) for b in bases]
        self.max_degree = len(bases) - 1
        self.name = name
        self._ech = []
        self._pos = []
        for rows in self.bases:
            e = Echelon()
            pos = {}
            for k, row in enumerate(rows):
                p = max(row)
                if row[p] != 1 or p in e.rows:
                    raise ValueError("subalgebra basis must be reduced with distinct pivots")
                e.rows[p] = row
                pos[p] = k
            self._ech.append(e)
            self._pos.append(pos)
        self._mul = {}

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.max_degree:
            raise TruncationError(f"degree {d} exceeds truncation {self.max_degree}")
        return len(self.bases[d])

    def coordinates(self, d: int, v: dict) -> dict:
        """Coordinates of an element of A_d lying in the subalgebra."""
        pos = self._pos[d]
        return {pos[p]: c for p, c in self._ech[d].coordinates(v).items()}

    def contains(self, d: int, v: dict) -> bool:
        return self._ech[d].contains(v)

    def vector(self, d: int, i: int) -> dict:
        return self.bases[d][i]

    def mul(self, d1, i, d2, j) -> dict:
        key = (d1, i, d2, j)
        r = self._mul.get(key)
        if r is None:
            prod = self.table.multiply(self.bases[d1][i], d1, self.bases[d2][j], d2)
            r = self.coordinates(d1 + d2, prod)
            self._mul[key] = r
        return r


class Opposite:
    """The opposite algebra: same basis, reversed product."""

    def __init__(self, algebra):
        self.base = algebra
        self.max_degree = algebra.max_degree
        self.name = algebra.name + "^op"

    def dim(self, d):
        return self.base.dim(d)

    def mul(self, d1, i, d2, j):
        return self.base.mul(d2, j, d1, i)

    def vector(self, d, i):
        return self.base.vector(d, i)


# ---------------------------------------------------------------------------
# algebra maps into a table algebra


class Inclusion:
    """The inclusion of a SubAlgebra into its ambient table."""

    def __init__(self, sub: SubAlgebra):
        self.source = sub
        self.target = sub.table

    def image(self, d: int, i: int) -> dict:
        return self.source.bases[d][i]


class PresentedMap:
    """Algebra map from a presented algebra S into a table T, given by images
    of S's generators (vectors in T of the generator's degree)."""

    def __init__(self, source_table: GradedBasisTable, target: GradedBasisTable, gen_images: list, name: str = "S"):
        self.source = TableAlgebra(source_table, name)
        self.source_table = source_table
        self.target = target
        self.gen_images = [dict(v) for v in gen_images]
        degs = source_table.presentation.gen_degrees
        self._images = {}
        for g, v in enumerate(self.gen_images):
            for k in v:
                if k >= target.dim(degs[g]):
                    raise ValueError(f"image of generator {g} has an index outside T_{degs[g]}")

    def word_image(self, word) -> dict:
        degs = self.source_table.presentation.gen_degrees
        v, d = {0: 1}, 0
        for g in word:
            v = self.target.multiply(v, d, self.gen_images[g], degs[g])
            d += degs[g]
        return v

    def image(self, d: int, i: int) -> dict:
        key = (d, i)
        r = self._images.get(key)
        if r is None:
            r = self.word_image(self.source_table.basis[d][i])
            self._images[key] = r
        return r

    def relation_defects(self) -> list:
        """Relations of S (within the target truncation) whose image is nonzero."""
        p = self.source_table.presentation
        bad = []
        for k, rel in enumerate(p.relations):
            d = p.relation_degree(k)
            if d > self.target.max_degree:
                continue
            img = {}
            for word, c in rel.terms.items():
                vaddto(img, self.word_image(word), c)
            if img:
                bad.append(k)
        return bad


# ---------------------------------------------------------------------------
# modules


class TrivialModule:
    """k = B/B_{>=1}, concentrated in degree 0."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.max_degree = algebra.max_degree
        self.min_degree = 0

    def dim(self, d):
        return 1 if d == 0 else 0

    def act(self, e, b, d, m):
        return {0: 1} if e == 0 and d == 0 else {}


class FreeModule:
    """Direct sum of shifted copies B(-s_j), in the order given."""

    def __init__(self, algebra, shifts):
        self.algebra = algebra
        self.shifts = list(shifts)
        self.max_degree = algebra.max_degree
        self.min_degree = min(self.shifts) if self.shifts else 0
        self._blocks = {}

    def blocks(self, d):
        """List of (j, offset, size) for the degree-d piece."""
        r = self._blocks.get(d)
        if r is None:
            r, off = [], 0
            for j, s in enumerate(self.shifts):
                if s <= d:
                    size = self.algebra.dim(d - s)
                    if size:
                        r.append((j, off, size))
                        off += size
            self._blocks[d] = r
        return r

    def dim(self, d):
        return sum(size for _, _, size in self.blocks(d))

    def offset(self, d, j):
        for jj, off, size in self.blocks(d):
            if jj == j:
                return off
        return None

    def locate(self, d, m):
        for j, off, size in self.blocks(d):
            if off <= m < off + size:
                return j, m - off
        raise IndexError(m)

    def act(self, e, b, d, m):
        j, idx = self.locate(d, m)
        s = self.shifts[j]
        prod = self.algebra.mul(e, b, d - s, idx)
        off = self.offset(d + e, j)
        return {off + k: c for k, c in prod.items()}

    def component(self, d, v, j):
        """The B-coordinates of the j-th component of v in degree d."""
        off = self.offset(d, j)
        if off is None:
            return {}
        size = self.algebra.dim(d - self.shifts[j])
        return {k - off: c for k, c in v.items() if off <= k < off + size}

    def embed(self, d, j, w):
        off = self.offset(d, j)
        return {off + k: c for k, c in w.items()}


class ImageModule:
    """A subspace M of a table T that is stable under multiplication by the
    image of an algebra map f: B -> T, on the left or on the right.

    ``bases`` gives per-degree bases (reduced rows) of M; None means M = T.
    For side 'right' the module is a left module over the opposite of B.
    """

    def __init__(self, amap, side: str = "left", bases=None):
        if side not in ("left", "right"):
            raise ValueError(side)
        self.amap = amap
        self.side = side
        self.table = amap.target
        self.algebra = amap.source if side == "left" else Opposite(amap.source)
        self.max_degree = min(self.table.max_degree, amap.source.max_degree)
        self.bases = bases
        self._ech = None
        if bases is not None:
            self._ech, self._pos = [], []
            for rows in bases:
                e, pos = Echelon(), {}
                for k, row in enumerate(rows):
                    p = max(row)
                    e.rows[p] = row
                    pos[p] = k
                self._ech.append(e)
                self._pos.append(pos)
        self.min_degree = 0
        while self.min_degree < self.max_degree and not self.dim(self.min_degree):
            self.min_degree += 1
        self._act = {}

    def dim(self, d):
        if d < 0:
            return 0
        if self.bases is None:
            return self.table.dim(d)
        return len(self.bases[d])

    def vector(self, d, m):
        return {m: 1} if self.bases is None else self.bases[d][m]

    def coordinates(self, d, v):
        if self.bases is None:
            return v
        pos = self._pos[d]
        return {pos[p]: c for p, c in self._ech[d].coordinates(v).items()}

    def act(self, e, b, d, m):
        key = (e, b, d, m)
        r = self._act.get(key)
        if r is None:
            x = self.amap.image(e, b)
            v = self.vector(d, m)
            if self.side == "left":
                prod = self.table.multiply(x, e, v, d)
            else:
                prod = self.table.multiply(v, d, x, e)
            r = self.coordinates(d + e, prod)
            self._act[key] = r
        return r


class QuotientModule:
    """M / L for a submodule L given by per-degree Echelons over M's basis."""

    def __init__(self, module, sub: dict):
        self.module = module
        self.algebra = module.algebra
        self.max_degree = module.max_degree
        self.sub = sub
        self._keep = {}
        self.min_degree = module.min_degree
        while self.min_degree < self.max_degree and not self.dim(self.min_degree):
            self.min_degree += 1

    def _kept(self, d):
        r = self._keep.get(d)
        if r is None:
            ech = self.sub.get(d)
            n = self.module.dim(d)
            idx = [i for i in range(n) if ech is None or i not in ech.rows]
            r = (idx, {i: k for k, i in enumerate(idx)})
            self._keep[d] = r
        return r

    def dim(self, d):
        return len(self._kept(d)[0])

    def project(self, d, v):
        ech = self.sub.get(d)
        r = ech.reduce(v) if ech is not None else v
        pos = self._kept(d)[1]
        return {pos[i]: c for i, c in r.items()}

    def act(self, e, b, d, m):
        i = self._kept(d)[0][m]
        return self.project(d + e, self.module.act(e, b, d, i))


def act_vec(module, e, b, d, v) -> dict:
    """Action of basis element b of B_e on a vector v of M_d."""
    out = {}
    for m, c in v.items():
        vaddto(out, module.act(e, b, d, m), c)
    return out


def act_elem(module, e, x: dict, d, v) -> dict:
    """Action of an algebra element x in B_e (coordinate dict) on v in M_d."""
    out = {}
    for b, c in x.items():
        vaddto(out, act_vec(module, e, b, d, v), c)
    return out
