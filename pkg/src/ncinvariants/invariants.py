"""Invariant subrings: minimal generators, Hilbert ideals, tau, module
generators of A over R and annihilators of Tor^R_i(A, k)."""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import GradedBasisTable
from .graded import ImageModule, Inclusion, SubAlgebra
from .homology import TorOverMap, deg, minimal_generators_of
from .hopf import ActionData, invariant_subspace
from .linalg import Echelon, intersect
from .quantity import INF, NEG_INF, Quantity, certified, observed


class InternalError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


@dataclass
class InvariantRingData:
    table: GradedBasisTable
    N: int
    bases: list
    generators: list = field(default_factory=list)
    closure_dims: list = field(default_factory=list)

    def dims(self) -> list:
        return [len(b) for b in self.bases]

    def new_counts(self) -> list:
        return [len(b) - c for b, c in zip(self.bases, self.closure_dims)]

    def generator_degrees(self) -> list:
        return [d for d, _ in self.generators]

    def subalgebra(self) -> SubAlgebra:
        if not hasattr(self, "_sub"):
            self._sub = SubAlgebra(self.table, self.bases, "R")
        return self._sub

    def format_generators(self) -> list:
        return [self.table.format(v, d) for d, v in self.generators]

    def to_json(self) -> dict:
        return {
            "dims": self.dims(),
            "generators": [
                {"degree": d, "coords": {str(k): str(c) for k, c in sorted(v.items())}, "element": self.table.format(v, d)}
                for d, v in self.generators
            ],
            "new_per_degree": self.new_counts(),
        }


def invariant_bases(a: ActionData, t: GradedBasisTable, N: int | None = None) -> list:
    N = t.max_degree if N is None else N
    return [invariant_subspace(a, t, d) for d in range(N + 1)]


def minimal_generators(inv: list, t: GradedBasisTable, N: int | None = None) -> InvariantRingData:
    """Degree by degree, adjoin a complement of the products of earlier
    generators with the already closed lower degrees."""
    N = len(inv) - 1 if N is None else N
    ir = InvariantRingData(t, N, [list(b) for b in inv[: N + 1]])
    gens = []
    closure = [1]
    for d in range(1, N + 1):
        e = Echelon()
        for gd, g in gens:
            k = d - gd
            if k < 1:
                continue
            for r in ir.bases[k]:
                e.add(t.multiply(g, gd, r, k))
        closure.append(len(e))
        for v in ir.bases[d]:
            r = e.add(v)
            if r is not None:
                gens.append((d, r))
        if len(e) != len(ir.bases[d]):
            raise InternalError(f"invariant products leave the invariant space in degree {d}")
    ir.generators = gens
    ir.closure_dims = closure
    return ir


def beta(ir: InvariantRingData, tau_q: Quantity | None = None, bound: tuple | None = None,
         finite_top: int | None = None) -> Quantity:
    """Largest minimal generator degree.

    Certified when a bound at most N applies: tau (beta <= tau), a theorem
    bound passed as (value, name), or the algebra vanishing above some
    degree <= N.
    """
    degs = ir.generator_degrees()
    val = max(degs) if degs else 0
    N = ir.N
    if finite_top is not None and finite_top <= N:
        return certified(val, "finite-dimensional")
    if tau_q is not None and tau_q.certified and tau_q.value <= N:
        return certified(val, "beta <= tau")
    if bound is not None and bound[0] <= N:
        return certified(val, bound[1])
    return observed(val, N)


# ---------------------------------------------------------------------------
# Hilbert ideals


@dataclass
class HilbertIdealData:
    side: str
    N: int
    echelons: list
    codims: list
    tau: Quantity | None = None

    def deg_quotient(self):
        return deg({d: c for d, c in enumerate(self.codims)})

    def profile(self) -> list:
        """Per degree: 'zero' if J_d = 0, 'full' if J_d = A_d, else 'partial'."""
        out = []
        for d, e in enumerate(self.echelons):
            n = len(e) + self.codims[d]
            out.append("full" if self.codims[d] == 0 else ("zero" if len(e) == 0 and n else "partial"))
        return out

    def to_json(self) -> dict:
        return {"side": self.side, "codims": self.codims, "tau": self.tau.to_json() if self.tau else None}


def hilbert_ideal(side: str, ir: InvariantRingData, t: GradedBasisTable, N: int | None = None) -> HilbertIdealData:
    """J = A * R_{>=1} (left) or R_{>=1} * A (right), spanned degreewise by
    words times minimal generators."""
    if side not in ("left", "right"):
        raise ValueError(side)
    N = ir.N if N is None else N
    echs, codims = [], []
    for d in range(N + 1):
        e = Echelon()
        for gd, g in ir.generators:
            k = d - gd
            if k < 0:
                continue
            for w in range(t.dim(k)):
                if side == "left":
                    e.add(t.multiply({w: 1}, k, g, gd))
                else:
                    e.add(t.multiply(g, gd, {w: 1}, k))
        echs.append(e)
        codims.append(t.dim(d) - len(e))
    return HilbertIdealData(side, N, echs, codims)


def tau(h: HilbertIdealData, gen_degrees) -> Quantity:
    """1 + deg(A/J).

    Certified once (A/J)_d = 0 for max(gen_degrees) consecutive degrees
    d >= 1: every longer word then has a suffix (left ideal) or prefix
    (right ideal) in that window, so A/J vanishes from there on.
    """
    run = max(gen_degrees) if gen_degrees else 1
    zeros = 0
    for d in range(1, h.N + 1):
        zeros = zeros + 1 if h.codims[d] == 0 else 0
        if zeros >= run:
            top = deg({e: c for e, c in enumerate(h.codims[: d + 1])})
            by = "gen-deg-1 stabilization" if run == 1 else f"stabilization over {run} degrees"
            return certified(1 + top if top != NEG_INF else NEG_INF, by)
    if h.codims[h.N]:
        return observed(INF, h.N)
    return observed(1 + h.deg_quotient(), h.N)


# ---------------------------------------------------------------------------
# A as a module over R


def module_generators_over_R(t: GradedBasisTable, ir: InvariantRingData, side: str, N: int | None = None,
                             hideal: HilbertIdealData | None = None):
    """Minimal generators of A_R (side 'right') or _RA (side 'left').

    Returns (generators, t0 quantity).  The per-degree generator counts must
    equal the codimensions of the Hilbert ideal on the opposite side.
    """
    N = ir.N if N is None else N
    M = ImageModule(Inclusion(ir.subalgebra()), side)
    gens = minimal_generators_of(M, N)
    counts = {}
    for d, _ in gens:
        counts[d] = counts.get(d, 0) + 1
    if hideal is None:
        hideal = hilbert_ideal("left" if side == "right" else "right", ir, t, N)
    for d in range(N + 1):
        if counts.get(d, 0) != hideal.codims[d]:
            raise InternalError(f"module generators in degree {d} disagree with the Hilbert ideal codimension")
    t0 = deg(counts)
    tq = hideal.tau
    if tq is not None and tq.certified:
        q = certified(t0, "tau = 1 + t0")
    else:
        q = observed(t0 if not hideal.codims[N] else INF, N)
    return gens, q


# ---------------------------------------------------------------------------
# annihilators of Tor^R_i(A_R, k)


@dataclass
class AnnihilatorData:
    i: object
    N: int
    bases: list

    def codims(self, t: GradedBasisTable) -> list:
        return [t.dim(d) - len(b) for d, b in enumerate(self.bases)]

    def deg_quotient(self, t: GradedBasisTable):
        return deg({d: c for d, c in enumerate(self.codims(t))})


def tor_over_invariants(ir: InvariantRingData, p_max: int) -> TorOverMap:
    return TorOverMap(Inclusion(ir.subalgebra()), p_max, ir.N)


def annihilator_ideal(i: int, tor: TorOverMap) -> AnnihilatorData:
    """J_i = ann of the left A-module Tor_i, degreewise within truncation."""
    bases = [tor.annihilator(i, e) for e in range(tor.N + 1)]
    return AnnihilatorData(i, tor.N, bases)


def annihilator_intersection(anns: list, t: GradedBasisTable) -> AnnihilatorData:
    """J_infinity restricted to the computed indices."""
    N = anns[0].N
    bases = []
    for d in range(N + 1):
        cur = None
        for a in anns:
            b = a.bases[d]
            cur = b if cur is None else intersect(cur, b)
        bases.append(cur)
    return AnnihilatorData("inf", N, bases)
