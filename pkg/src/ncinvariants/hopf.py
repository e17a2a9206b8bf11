"""Finite-dimensional Hopf algebras by structure constants, and their
actions on graded algebras extended through the measuring condition."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import CapExceeded, GradedBasisTable, NcPolynomial
from .exactfield import QQ, FieldSpec, inv
from .linalg import Echelon, mat_mul, vaddto, vscale

DEFAULT_GROUP_CAP = 512


class ActionError(ValueError):
    """An action or Hopf structure failed validation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


@dataclass
class ValidationReport:
    ok: bool = True
    failures: list = dc_field(default_factory=list)
    checked: list = dc_field(default_factory=list)

    def fail(self, axiom, witness, message):
        self.ok = False
        self.failures.append({"axiom": axiom, "witness": list(witness), "message": message})

    def to_json(self):
        return {"ok": self.ok, "checked": list(self.checked), "failures": list(self.failures)}


@dataclass
class HopfData:
    """mult[i][j] = h_i h_j, coproduct[i] = {(j, k): c}, antipode[i] = S(h_i);
    elements of H are sparse coordinate dicts."""

    dim: int
    labels: list
    mult: list
    coproduct: list
    counit: list
    antipode: list
    unit: dict
    integral: dict
    field: FieldSpec = QQ

    # algebra helpers -------------------------------------------------
    def mul(self, u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            row = self.mult[i]
            for j, b in v.items():
                vaddto(out, row[j], a * b)
        return out

    def eps(self, u: dict):
        acc = self.field.zero()
        for i, a in u.items():
            acc = acc + a * self.counit[i]
        return acc

    def delta(self, u: dict) -> dict:
        out = {}
        for i, a in u.items():
            vaddto(out, self.coproduct[i], a)
        return out

    def S(self, u: dict) -> dict:
        out = {}
        for i, a in u.items():
            vaddto(out, self.antipode[i], a)
        return out

    def e(self, i: int) -> dict:
        return {i: self.field.one()}


def validate_hopf(h: HopfData) -> ValidationReport:
    """Check every Hopf axiom and the integral conditions exactly."""
    rep = ValidationReport()
    n = h.dim
    one = h.field.one()
    shape_ok = (
        len(h.mult) == n
        and all(len(row) == n for row in h.mult)
        and len(h.coproduct) == n
        and len(h.counit) == n
        and len(h.antipode) == n
        and len(h.labels) == n
    )
    idx_ok = shape_ok and all(
        0 <= k < n for row in h.mult for v in row for k in v
    ) and all(0 <= j < n and 0 <= k < n for t in h.coproduct for (j, k) in t) and all(
        0 <= k < n for v in h.antipode for k in v
    ) and all(0 <= k < n for k in h.unit) and all(0 <= k < n for k in h.integral)
    rep.checked.append("shape")
    if not idx_ok:
        rep.fail("shape", [], "structure tables are not dimensionally consistent")
        return rep

    def tensor_mul(x: dict, y: dict) -> dict:
        out = {}
        for (a, b), c in x.items():
            for (a2, b2), c2 in y.items():
                left = h.mult[a][a2]
                right = h.mult[b][b2]
                for p, u in left.items():
                    for q, v in right.items():
                        vaddto(out, {(p, q): c * c2 * u * v})
        return out

    rep.checked.append("unit")
    for i in range(n):
        ei = h.e(i)
        if h.mul(h.unit, ei) != ei or h.mul(ei, h.unit) != ei:
            rep.fail("unit", [i], f"unit does not act as identity on {h.labels[i]}")
    rep.checked.append("associativity")
    for i in range(n):
        for j in range(n):
            hij = h.mult[i][j]
            for k in range(n):
                left = h.mul(hij, h.e(k))
                right = h.mul(h.e(i), h.mult[j][k])
                if left != right:
                    rep.fail("associativity", [i, j, k], "(h_i h_j) h_k != h_i (h_j h_k)")
    rep.checked.append("coassociativity")
    for i in range(n):
        left, right = {}, {}
        for (a, b), c in h.coproduct[i].items():
            for (p, q), c2 in h.coproduct[a].items():
                vaddto(left, {(p, q, b): c * c2})
            for (p, q), c2 in h.coproduct[b].items():
                vaddto(right, {(a, p, q): c * c2})
        if left != right:
            rep.fail("coassociativity", [i], "(D x id) D != (id x D) D")
    rep.checked.append("counit")
    for i in range(n):
        left, right = {}, {}
        for (a, b), c in h.coproduct[i].items():
            vaddto(left, {b: c * h.counit[a]})
            vaddto(right, {a: c * h.counit[b]})
        if left != h.e(i) or right != h.e(i):
            rep.fail("counit", [i], "counit law fails")
    rep.checked.append("bialgebra")
    if h.delta(h.unit) != {(k, l): a * b for k, a in h.unit.items() for l, b in h.unit.items()} or h.eps(h.unit) != one:
        rep.fail("bialgebra", [], "coproduct or counit not unital")
    for i in range(n):
        for j in range(n):
            if h.delta(h.mult[i][j]) != tensor_mul(h.coproduct[i], h.coproduct[j]):
                rep.fail("bialgebra", [i, j], "coproduct not multiplicative")
            if h.eps(h.mult[i][j]) != h.counit[i] * h.counit[j]:
                rep.fail("bialgebra", [i, j], "counit not multiplicative")
    rep.checked.append("antipode")
    for i in range(n):
        left, right = {}, {}
        for (a, b), c in h.coproduct[i].items():
            vaddto(left, h.mul(h.antipode[a], h.e(b)), c)
            vaddto(right, h.mul(h.e(a), h.antipode[b]), c)
        target = vscale(h.unit, h.counit[i])
        if left != target or right != target:
            rep.fail("antipode", [i], "m(S x id)D or m(id x S)D differs from unit*counit")
    rep.checked.append("integral")
    lam = h.integral
    for i in range(n):
        target = vscale(lam, h.counit[i])
        if h.mul(h.e(i), lam) != target:
            rep.fail("integral", [i], "h Lambda != eps(h) Lambda")
        if h.mul(lam, h.e(i)) != target:
            rep.fail("integral", [i], "Lambda h != eps(h) Lambda")
    rep.checked.append("integral-normalization")
    if h.eps(lam) != one:
        rep.fail("integral-normalization", [], f"eps(Lambda) = {h.eps(lam)} != 1")
    return rep


# ---------------------------------------------------------------------------
# groups


def _mat_key(m):
    return tuple(tuple(row) for row in m)


def _mat_mult(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), a[0][0] * 0) for j in range(n)] for i in range(n)]


def matrix_rank(m) -> int:
    n = len(m)
    cols = [{i: m[i][j] for i in range(n) if m[i][j]} for j in range(n)]
    return len(Echelon(cols))


def group_closure(generators, field: FieldSpec = QQ, cap: int = DEFAULT_GROUP_CAP):
    """Elements of the matrix group generated by ``generators`` (identity first, BFS order)."""
    if not generators:
        raise ValueError("need at least one group generator")
    n = len(generators[0])
    for gi, g in enumerate(generators):
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError(f"group generator {gi} is not {n}x{n}")
        if matrix_rank(g) != n:
            raise ActionError(f"group generator {gi} is not invertible")
    ident = [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]
    elems = [ident]
    index = {_mat_key(ident): 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                p = _mat_mult(g, m)
                key = _mat_key(p)
                if key not in index:
                    if len(elems) >= cap:
                        raise CapExceeded(f"group closure exceeds cap {cap}")
                    index[key] = len(elems)
                    elems.append(p)
                    nxt.append(p)
        frontier = nxt
    return elems, index


def group_hopf(elems, index, field: FieldSpec = QQ, labels=None) -> HopfData:
    """kG with Lambda = (1/|G|) sum g."""
    n = len(elems)
    one = field.one()
    mult = [[{index[_mat_key(_mat_mult(elems[i], elems[j]))]: one} for j in range(n)] for i in range(n)]
    ident_idx = 0
    antipode = []
    for i in range(n):
        inv_idx = next(j for j in range(n) if mult[i][j] == {ident_idx: one})
        antipode.append({inv_idx: one})
    lam_c = field.coerce(1) * inv(field.coerce(n))
    return HopfData(
        dim=n,
        labels=labels or [f"g{i}" for i in range(n)],
        mult=mult,
        coproduct=[{(i, i): one} for i in range(n)],
        counit=[one] * n,
        antipode=antipode,
        unit={ident_idx: one},
        integral={i: lam_c for i in range(n)},
        field=field,
    )


# ---------------------------------------------------------------------------
# actions


class ActionData:
    """A Hopf algebra acting on the generator space of a presentation.

    ``gen_cols[h][j]`` is h applied to generator j, as {generator index: coeff}.
    """

    def __init__(self, hopf: HopfData, gen_cols, gen_degrees, group_matrices=None, group_generators=None):
        self.hopf = hopf
        self.gen_cols = gen_cols
        self.gen_degrees = list(gen_degrees)
        self.group_matrices = group_matrices
        self.group_generators = group_generators
        self._cache = {}
        self._free_cache = {}

    @property
    def is_group(self):
        return self.group_matrices is not None

    @classmethod
    def from_group(cls, generators, gen_degrees, field: FieldSpec = QQ, cap: int = DEFAULT_GROUP_CAP):
        elems, index = group_closure(generators, field, cap)
        hopf = group_hopf(elems, index, field)
        n = len(gen_degrees)
        gen_cols = [[{i: m[i][j] for i in range(n) if m[i][j]} for j in range(n)] for m in elems]
        gen_idx = [index[_mat_key(g)] for g in generators]
        return cls(hopf, gen_cols, gen_degrees, elems, gen_idx)

    @classmethod
    def from_matrices(cls, hopf: HopfData, matrices, gen_degrees):
        n = len(gen_degrees)
        gen_cols = [[{i: m[i][j] for i in range(n) if m[i][j]} for j in range(n)] for m in matrices]
        return cls(hopf, gen_cols, gen_degrees)

    # free algebra action -------------------------------------------------
    def act_free_word(self, h: int, word: tuple) -> dict:
        key = (h, word)
        got = self._free_cache.get(key)
        if got is not None:
            return got
        hopf = self.hopf
        if not word:
            out = {(): hopf.counit[h]} if hopf.counit[h] else {}
        else:
            g, rest = word[0], word[1:]
            out = {}
            for (j, k), c in hopf.coproduct[h].items():
                left = self.gen_cols[j][g]
                if not left:
                    continue
                right = self.act_free_word(k, rest)
                for gi, x in left.items():
                    for w, y in right.items():
                        vaddto(out, {(gi,) + w: c * x * y})
        self._free_cache[key] = out
        return out

    def act_free(self, h: int, poly: NcPolynomial) -> NcPolynomial:
        out = {}
        for w, c in poly.terms.items():
            vaddto(out, self.act_free_word(h, w), c)
        return NcPolynomial(out)


def extend_action(a: ActionData, t: GradedBasisTable, d: int) -> list:
    """Per Hopf basis element, the list of columns (h applied to each basis word of A_d)."""
    cache = a._cache.setdefault(id(t), {})
    got = cache.get(d)
    if got is not None:
        return got
    hopf = a.hopf
    n = hopf.dim
    if d == 0:
        mats = [[{0: hopf.counit[h]} if hopf.counit[h] else {}] for h in range(n)]
    else:
        basis = t.basis[d]
        mats = [[None] * len(basis) for _ in range(n)]
        degs = t.gen_degrees
        for bi, w in enumerate(basis):
            g, rest = w[0], w[1:]
            e = degs[g]
            lower = extend_action(a, t, d - e)
            rest_vec = t.nf_word(rest)
            low_basis = t.basis[d - e]
            for h in range(n):
                out = {}
                for (j, k), c in hopf.coproduct[h].items():
                    left = a.gen_cols[j][g]
                    if not left:
                        continue
                    right = {}
                    for b, y in rest_vec.items():
                        vaddto(right, lower[k][b], y)
                    for gi, x in left.items():
                        cx = c * x
                        for b, y in right.items():
                            vaddto(out, t.nf_word((gi,) + low_basis[b]), cx * y)
                mats[h][bi] = out
    cache[d] = mats
    return mats


def act(a: ActionData, t: GradedBasisTable, h: dict, v: dict, d: int) -> dict:
    """Apply a Hopf element h (coordinates) to v in A_d."""
    mats = extend_action(a, t, d)
    out = {}
    for i, c in h.items():
        for b, y in v.items():
            vaddto(out, mats[i][b], c * y)
    return out


def validate_action(a: ActionData, p, t: GradedBasisTable) -> ValidationReport:
    """Homogeneity, module axioms on generators, and descent to the quotient."""
    rep = ValidationReport()
    hopf = a.hopf
    n = hopf.dim
    ngen = len(a.gen_degrees)
    degs = a.gen_degrees
    rep.checked.append("homogeneity")
    for h in range(n):
        for j in range(ngen):
            for i in a.gen_cols[h][j]:
                if degs[i] != degs[j]:
                    rep.fail("homogeneity", [h, j], f"{hopf.labels[h]} sends a degree-{degs[j]} generator outside its degree")
    rep.checked.append("module")
    for j in range(ngen):
        unit_img = {}
        for h, c in hopf.unit.items():
            vaddto(unit_img, a.gen_cols[h][j], c)
        if unit_img != {j: hopf.field.one()}:
            rep.fail("module", [j], "unit of H does not act as identity")
    for h1 in range(n):
        for h2 in range(n):
            lhs = mat_mul(a.gen_cols[h1], a.gen_cols[h2])
            rhs = [dict() for _ in range(ngen)]
            for k, c in hopf.mult[h1][h2].items():
                for j in range(ngen):
                    vaddto(rhs[j], a.gen_cols[k][j], c)
            if lhs != rhs:
                rep.fail("module", [h1, h2], "generator action is not a representation of H")
    if a.group_matrices is not None:
        rep.checked.append("invertibility")
        for gi in a.group_generators or []:
            if matrix_rank(a.group_matrices[gi]) != ngen:
                rep.fail("invertibility", [gi], "group generator matrix is not invertible")
    rep.checked.append("relations")
    for ri, r in enumerate(p.relations):
        d = next(iter(r.degrees(p.gen_degrees)))
        if d > t.max_degree:
            continue
        for h in range(n):
            image = a.act_free(h, r)
            if t.normal_form(image):
                rep.fail("relations", [h, ri], f"{hopf.labels[h]} applied to relation {ri} leaves the ideal")
    return rep


def reynolds_projector(a: ActionData, t: GradedBasisTable, d: int) -> list:
    """Columns of the action of the integral on A_d."""
    hopf = a.hopf
    if hopf.eps(hopf.integral) != hopf.field.one():
        raise ActionError("integral is not normalized; non-semisimple or modular actions are refused")
    mats = extend_action(a, t, d)
    cols = []
    for b in range(t.dim(d)):
        out = {}
        for i, c in hopf.integral.items():
            vaddto(out, mats[i][b], c)
        cols.append(out)
    return cols


def invariant_subspace(a: ActionData, t: GradedBasisTable, d: int) -> list:
    """Reduced echelon basis of (A_d)^H, ordered by leading word."""
    cols = reynolds_projector(a, t, d)
    return Echelon(cols).rref()


def fixed_space_of_generators(a: ActionData, t: GradedBasisTable, d: int) -> list:
    """Simultaneous fixed space of the group generators (group actions only)."""
    from .linalg import kernel

    mats = extend_action(a, t, d)
    dim = t.dim(d)
    gens = a.group_generators
    rows = []
    for b in range(dim):
        v = {}
        for s, gi in enumerate(gens):
            col = dict(mats[gi][b])
            vaddto(col, {b: a.hopf.field.one()}, -1)
            for k, c in col.items():
                v[s * dim + k] = c
        rows.append(v)
    return Echelon(kernel(rows)).rref()
