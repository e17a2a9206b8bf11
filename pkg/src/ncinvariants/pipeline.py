"""Everything computed for one input document, built lazily and shared
between commands."""
from __future__ import annotations

import random
from functools import cached_property

from . import __version__
from .algebra import AlgebraPresentation, build_basis, quotient_truncation
from .bounds import BoundInputs, check_bounds
from .graded import FreeModule, ImageModule, Inclusion, PresentedMap, QuotientModule, TableAlgebra
from .homology import (TorOverMap, betti_table, check_d_squared, check_minimality, cmreg_asregular, deg,
                       minimal_resolution, resolve_trivial, torreg)
from .hopf import validate_action
from .invariants import (InternalError, annihilator_ideal, annihilator_intersection, beta, hilbert_ideal,
                         invariant_bases, minimal_generators, module_generators_over_R, tau)
from .linalg import Echelon, intersect, rank
from .quantity import INF, NEG_INF, Quantity, certified, json_number, observed
from .series import SeriesError, fit_series, guess_series, ratio_at_one

DEFAULT_MAX_DEGREE = 8
DEFAULT_MAX_HOMOLOGICAL = 4

COMMANDS = ["validate", "basis", "invariants", "beta", "tau", "hilbert-ideal", "annihilators", "resolve",
            "betti", "torreg", "cmreg", "series", "check-bounds"]


def _q(q: Quantity | None):
    return q.to_json() if q is not None else None


def _degs_json(dims: dict) -> dict:
    return {str(d): n for d, n in sorted(dims.items())}


def skew_family_size(t) -> int | None:
    """n if the presentation is k_{-1}[x_1..x_n]: degree-one generators whose
    degree-two relations span exactly the anticommutators."""
    p = t.presentation
    n = len(p.generators)
    if not p.generated_in_degree_one() or t.max_degree < 2:
        return None
    if any(p.relation_degree(k) != 2 for k in range(len(p.relations))):
        return None
    if t.dim(2) != n * (n + 1) // 2:
        return None
    for i in range(n):
        for j in range(i + 1, n):
            s = dict(t.nf_word((i, j)))
            for k, c in t.nf_word((j, i)).items():
                s[k] = s.get(k, 0) + c
            if any(s.values()):
                return None
    return n


def is_commutative(t, bases: list, N: int) -> bool:
    """Whether the span of ``bases`` (per degree) commutes within degree N."""
    for d1 in range(1, N + 1):
        for d2 in range(d1, N + 1 - d1):
            for a in bases[d1]:
                for b in bases[d2]:
                    if t.multiply(a, d1, b, d2) != t.multiply(b, d2, a, d1):
                        return False
    return True


def finite_top(t) -> int | None:
    """First degree d with A_d .. A_{d+g-1} all zero (g = max generator degree), so A_{>=d} = 0."""
    run = max(t.gen_degrees)
    zeros = 0
    for d in range(1, t.max_degree + 1):
        zeros = zeros + 1 if t.dim(d) == 0 else 0
        if zeros >= run:
            return d - run + 1
    return None


def _hint(spec):
    if spec is None:
        return None
    if "product" in spec:
        return ("product", list(spec["product"]))
    return list(spec["coefficients"])


def _fit(dims, spec):
    try:
        if spec is None:
            return guess_series(dims)
        return fit_series(dims, _hint(spec))
    except SeriesError:
        return None


class Pipeline:
    def __init__(self, doc, max_degree: int | None = None, max_homological: int | None = None,
                 words_cap: int | None = None, seed: int = 0):
        self.doc = doc
        rp = doc.run_params()
        self.N = max_degree if max_degree is not None else rp.get("max_degree", DEFAULT_MAX_DEGREE)
        self.P = max_homological if max_homological is not None else rp.get("max_homological", DEFAULT_MAX_HOMOLOGICAL)
        self.words_cap = words_cap if words_cap is not None else rp.get("words_cap")
        self.seed = seed
        self.asserts = doc.asserts()

    # ------------------------------------------------------------------
    # the algebra T and the action

    @cached_property
    def presentation(self) -> AlgebraPresentation:
        return self.doc.presentation()

    def _build(self, p, N):
        if self.words_cap is not None:
            return build_basis(p, N, self.words_cap)
        return build_basis(p, N)

    @cached_property
    def table(self):
        return self._build(self.presentation, self.N)

    @cached_property
    def action(self):
        return self.doc.action()

    @cached_property
    def action_report(self):
        return validate_action(self.action, self.presentation, self.table)

    @cached_property
    def dim_h(self) -> int | None:
        return self.action.hopf.dim if self.action is not None else None

    @cached_property
    def skew_n(self):
        return skew_family_size(self.table)

    @cached_property
    def finite_top(self):
        return finite_top(self.table)

    # ------------------------------------------------------------------
    # invariants

    @cached_property
    def inv(self):
        if self.action is None:
            raise InternalError("no action given")
        if not self.action_report.ok:
            raise InternalError("action failed validation")
        return minimal_generators(invariant_bases(self.action, self.table, self.N), self.table, self.N)

    def _hideal(self, side):
        h = hilbert_ideal(side, self.inv, self.table, self.N)
        h.tau = tau(h, self.table.gen_degrees)
        return h

    @cached_property
    def hleft(self):
        return self._hideal("left")

    @cached_property
    def hright(self):
        return self._hideal("right")

    @cached_property
    def tau(self) -> Quantity:
        return self.hleft.tau

    @cached_property
    def tau_op(self) -> Quantity:
        return self.hright.tau

    @cached_property
    def beta(self) -> Quantity:
        taus = sorted((q for q in (self.tau, self.tau_op) if q.certified), key=lambda q: q.value)
        bound = None
        if self.skew_n is not None and self.action.is_group:
            bound = (2 * self.dim_h + self.skew_n, "beta <= 2|G| + n on the (-1)-skew polynomial ring")
        return beta(self.inv, taus[0] if taus else None, bound, self.finite_top)

    @cached_property
    def module_gens_right(self):
        """Generators of A_R; their count per degree matches A/J for the left Hilbert ideal."""
        return module_generators_over_R(self.table, self.inv, "right", self.N, self.hleft)

    @cached_property
    def module_gens_left(self):
        return module_generators_over_R(self.table, self.inv, "left", self.N, self.hright)

    @cached_property
    def R(self):
        return self.inv.subalgebra()

    @cached_property
    def res_R(self):
        return resolve_trivial(self.R, self.P + 1, self.N)

    @cached_property
    def betti_R(self):
        return betti_table(self.res_R)

    def tR_k(self) -> list:
        b = self.betti_R
        out = [certified(0, "generated in degree 0")]
        out.append(self.beta)
        for i in range(2, self.P + 1):
            out.append(observed(b.t(i), self.N))
        return out

    @cached_property
    def tor_R(self):
        return TorOverMap(Inclusion(self.R), self.P, self.N, res_k=self.res_R)

    @cached_property
    def anns_R(self):
        return [annihilator_ideal(i, self.tor_R) for i in range(self.P + 1)]

    @cached_property
    def ann_inf_R(self):
        return annihilator_intersection(self.anns_R, self.table)

    # ------------------------------------------------------------------
    # T: resolution, series, regularity

    @cached_property
    def TA(self):
        return TableAlgebra(self.table, "T")

    @cached_property
    def res_T(self):
        return resolve_trivial(self.TA, self.P + 1, self.N)

    @cached_property
    def betti_T(self):
        return betti_table(self.res_T)

    @cached_property
    def series_T(self):
        return _fit(self.table.dims(), self.doc.data.get("series_hints", {}).get("T"))

    @cached_property
    def series_R(self):
        return _fit(self.inv.dims(), self.doc.data.get("series_hints", {}).get("R"))

    @cached_property
    def gldim_T(self):
        if "gldim" in self.asserts:
            return self.asserts["gldim"], "asserted"
        if self.betti_T.length() is not None:
            return self.betti_T.length(), f"resolution length observed to {self.N}"
        return None, None

    def _as_regular_certifies(self, series, asserted: bool) -> str | None:
        """Minimal resolution of k over an AS regular algebra ends in A(-l) with
        l = -a(A) and all shifts at most l, so degree N >= l sees all of it."""
        if not asserted or series is None:
            return None
        ell = -series.t_degree
        return "AS-Gorenstein symmetry" if ell <= self.N else None

    def tT_k(self) -> list:
        b = self.betti_T
        by = self._as_regular_certifies(self.series_T, self.asserts.get("as_regular", False))
        return [b.t_quantity(i, by) for i in range(len(b.dims))]

    @cached_property
    def cmreg_T(self) -> Quantity | None:
        g, how = self.gldim_T
        if not self.asserts.get("as_regular") or g is None or self.series_T is None:
            return None
        return observed(cmreg_asregular(g, self.series_T), self.N, f"gldim ({how}) + deg_t h")

    # ------------------------------------------------------------------
    # the subring S -> R

    @cached_property
    def sub(self):
        s = self.doc.subring()
        if s is None:
            return None
        ps, imgs = s
        St = self._build(ps, self.N)
        gen_images = []
        degs = ps.gen_degrees
        for g, poly in enumerate(imgs):
            nf = self.table.normal_form(poly)
            gen_images.append(nf.get(degs[g], {}))
        amap = PresentedMap(St, self.table, gen_images, ps.name or "S")
        return ps, St, amap

    @cached_property
    def S_asserts(self) -> dict:
        return dict(self.doc.data.get("subring", {}).get("assert", {}))

    @cached_property
    def S_checks(self) -> dict:
        ps, St, amap = self.sub
        degs = ps.gen_degrees
        into_R = all(self.R.contains(degs[g], v) for g, v in enumerate(amap.gen_images))
        onto = True
        for d in range(self.N + 1):
            imgs = [amap.image(d, i) for i in range(St.dim(d))]
            if rank(imgs) != len(self.inv.bases[d]):
                onto = False
                break
        counts = {}
        for d in degs:
            counts[d] = counts.get(d, 0) + 1
        rcounts = {d: n for d, n in enumerate(self.inv.new_counts()) if n}
        return {
            "relation_defects": amap.relation_defects(),
            "into_R": into_R,
            "onto_R": onto and into_R,
            "same_generator_dims": counts == rcounts,
        }

    @cached_property
    def S_extra_steps(self) -> int:
        g, _ = self.gldim_T
        return (g or 0) + 1

    @cached_property
    def res_S(self):
        ps, St, amap = self.sub
        return resolve_trivial(amap.source, self.P + self.S_extra_steps, self.N)

    @cached_property
    def series_S(self):
        ps, St, amap = self.sub
        return _fit(St.dims(), self.doc.data.get("series_hints", {}).get("S"))

    def tS_k(self) -> list:
        b = betti_table(self.res_S)
        by = self._as_regular_certifies(self.series_S, self.S_asserts.get("as_regular", False))
        return [b.t_quantity(i, by) for i in range(len(b.dims))]

    @cached_property
    def cmreg_S(self) -> Quantity | None:
        if not self.S_asserts.get("as_regular") or self.series_S is None:
            return None
        b = betti_table(self.res_S)
        g = self.S_asserts.get("gldim", b.length())
        if g is None:
            return None
        return observed(cmreg_asregular(g, self.series_S), self.N, "gldim + deg_t h")

    @cached_property
    def tor_S(self):
        ps, St, amap = self.sub
        return TorOverMap(amap, self.P, self.N, res_k=self.res_S)

    @cached_property
    def delta(self):
        if self.cmreg_T is None or self.cmreg_S is None:
            return None
        return self.cmreg_T.value - self.cmreg_S.value

    def _t_over_S(self, dims_list) -> list:
        """Certified when delta + i <= N: t^S_i(T_S) <= delta + i, and R_S is a
        direct summand of T_S (Reynolds operator), so the same bound holds."""
        out = []
        for i, dims in enumerate(dims_list):
            v = deg(dims)
            if self.delta is not None and self.delta + i <= self.N and self.asserts.get("as_regular") and self.S_asserts.get("as_regular"):
                out.append(certified(v, "delta + i bound inside truncation"))
            else:
                out.append(observed(v, self.N))
        return out

    @cached_property
    def tS_T_right(self) -> list:
        return self._t_over_S([self.tor_S.dims(i) for i in range(self.P + 1)])

    def _res_R_over_S(self, side):
        ps, St, amap = self.sub
        return minimal_resolution(ImageModule(amap, side, bases=self.inv.bases), self.P, self.N)

    @cached_property
    def tS_R_right(self) -> list:
        return self._t_over_S(betti_table(self._res_R_over_S("right")).dims)

    @cached_property
    def tS_R_left(self) -> list:
        return self._t_over_S(betti_table(self._res_R_over_S("left")).dims)

    @cached_property
    def anns_S(self):
        return [annihilator_ideal(i, self.tor_S) for i in range(self.P + 1)]

    def deg_TJ_le(self) -> list:
        out, cur = [], None
        for a in self.anns_S:
            cur = a.bases if cur is None else [intersect(x, y) for x, y in zip(cur, a.bases)]
            codims = {d: self.table.dim(d) - len(b) for d, b in enumerate(cur)}
            out.append(observed(deg(codims), self.N))
        return out

    def e514_lhs(self) -> list:
        return [observed(deg(self.tor_S.generator_degrees(i)), self.N) for i in range(self.P + 1)]

    def e513_lhs(self) -> list:
        """deg Tor^T_i(k, T (x)_S k) from a minimal resolution of T/T f(S_+)."""
        ps, St, amap = self.sub
        F = FreeModule(self.TA, [0])
        degs = ps.gen_degrees
        sub = {}
        for d in range(self.N + 1):
            e = Echelon()
            for g, v in enumerate(amap.gen_images):
                k = d - degs[g]
                if k < 0:
                    continue
                for w in range(self.table.dim(k)):
                    e.add(self.table.multiply({w: 1}, k, v, degs[g]))
            sub[d] = e
        res = minimal_resolution(QuotientModule(F, sub), self.P, self.N)
        return [observed(t, self.N) for t in betti_table(res).t_values()]

    # ------------------------------------------------------------------
    # assembled bound inputs

    def bound_inputs(self) -> BoundInputs:
        A = self.asserts
        x = BoundInputs(N=self.N)
        x.dim_h = self.dim_h
        x.is_group = self.action.is_group
        x.T_as_regular = bool(A.get("as_regular"))
        x.T_gldim = self.gldim_T[0]
        x.T_domain = bool(A.get("domain"))
        x.T_noetherian = bool(A.get("noetherian"))
        tT = self.tT_k()
        x.T_koszul = bool(A.get("koszul")) or (
            all(q.certified for q in tT) and all(q.value in (i, NEG_INF) for i, q in enumerate(tT)))
        x.T_generated_deg1 = self.presentation.generated_in_degree_one()
        x.smash_prime = bool(A.get("smash_product_prime"))
        x.invariant_gldim_finite = bool(A.get("invariant_gldim_finite"))
        x.skew_n = self.skew_n
        x.central = A.get("central_subalgebra")
        x.cmreg_T = self.cmreg_T
        x.tT_k = tT
        x.beta_R = self.beta
        x.tR_k = self.tR_k()
        x.beta2_R = x.tR_k[2] if len(x.tR_k) > 2 else None
        x.tau, x.tau_op = self.tau, self.tau_op
        x.R_commutative = is_commutative(self.table, self.inv.bases, self.N)
        x.deg_AJ_R = [observed(a.deg_quotient(self.table), self.N) for a in self.anns_R]
        x.deg_AJinf_R = observed(self.ann_inf_R.deg_quotient(self.table), self.N)
        x.hilbert_ratio = self.hilbert_ratio
        x.R_cm_s = A.get("cohen_macaulay_s")
        if self.series_R is not None:
            x.a_R = observed(self.series_R.t_degree, self.N, "fitted series")
        if self.sub is not None:
            ps, St, amap = self.sub
            chk = self.S_checks
            SA = self.S_asserts
            x.has_S = chk["into_R"] and not chk["relation_defects"]
            x.S_as_regular = bool(SA.get("as_regular"))
            x.S_noetherian = bool(SA.get("noetherian"))
            x.S_commutative = bool(SA.get("commutative")) or is_commutative(St, [[{i: 1} for i in range(St.dim(d))] for d in range(self.N + 1)], self.N)
            x.S_onto_R = chk["onto_R"]
            x.S_same_gen_dims = chk["same_generator_dims"]
            x.modules_rational = bool(SA.get("modules_rational"))
            x.tor_condition = SA.get("tor_condition")
            x.cmreg_S = self.cmreg_S
            x.tS_k = self.tS_k()
            x.tS_T_right = self.tS_T_right
            x.tS_R_left = self.tS_R_left
            x.tS_R_right = self.tS_R_right
            x.deg_T_TSplus = self.tS_T_right[0]
            x.T_finite_over_S = not self.tor_S.dims(0).get(self.N, 0)
            x.deg_TJ_le = self.deg_TJ_le()
            x.deg_TJinf = x.deg_TJ_le[-1]
            x.e513_lhs = self.e513_lhs()
            x.e514_lhs = self.e514_lhs()
        return x

    @cached_property
    def hilbert_ratio(self) -> Quantity | None:
        if self.series_T is None or self.series_R is None:
            return None
        try:
            return observed(ratio_at_one(self.series_T, self.series_R), self.N, "fitted series")
        except SeriesError:
            return None

    @cached_property
    def bounds(self):
        return check_bounds(self.bound_inputs())

    # ------------------------------------------------------------------
    # commands

    def run(self, command: str) -> dict:
        fn = getattr(self, "cmd_" + command.replace("-", "_"), None)
        if fn is None:
            raise ValueError(f"unknown command {command!r}")
        return fn()

    def cmd_validate(self) -> dict:
        f = self.presentation.field
        out = {
            "field": {"label": f.label, "degree": f.degree, "irreducible": f.check_irreducible()},
            "presentation": {
                "generators": len(self.presentation.generators),
                "relations": len(self.presentation.relations),
                "generated_in_degree_one": self.presentation.generated_in_degree_one(),
            },
            "associativity_sample": self.associativity_sample(),
        }
        ok = out["associativity_sample"]["failures"] == 0
        if self.action is not None:
            out["action"] = self.action_report.to_json()
            out["hopf_dim"] = self.dim_h
            out["group"] = self.action.is_group
            ok = ok and self.action_report.ok
        probes = self.probes()
        if probes:
            out["probes"] = probes
        if self.sub is not None:
            chk = dict(self.S_checks)
            out["subring"] = chk
            ok = ok and chk["into_R"] and not chk["relation_defects"]
        out["ok"] = ok
        return out

    def probes(self) -> list:
        """h applied to each probe element, in normal form."""
        from .hopf import act

        out = []
        t = self.table
        for h, poly in self.doc.probes():
            labels = self.action.hopf.labels
            hi = h if isinstance(h, int) else labels.index(h) if h in labels else None
            if hi is None or hi >= len(labels):
                raise ValueError(f"unknown Hopf basis element {h!r}")
            for d, v in sorted(t.normal_form(poly).items()):
                out.append({
                    "hopf": labels[hi],
                    "element": t.format(v, d),
                    "image": t.format(act(self.action, t, {hi: 1}, v, d), d) or "0",
                })
        return out

    def associativity_sample(self, n: int = 100) -> dict:
        t = self.table
        rng = random.Random(self.seed)
        cands = [d for d in range(self.N + 1) if t.dim(d)]
        fails = checked = 0
        for _ in range(n):
            d1, d2 = rng.choice(cands), rng.choice(cands)
            rest = [d for d in cands if d <= self.N - d1 - d2]
            if not rest:
                continue
            d3 = rng.choice(rest)
            a, b, c = ({rng.randrange(t.dim(d)): 1} for d in (d1, d2, d3))
            lhs = t.multiply(t.multiply(a, d1, b, d2), d1 + d2, c, d3)
            rhs = t.multiply(a, d1, t.multiply(b, d2, c, d3), d2 + d3)
            checked += 1
            fails += lhs != rhs
        return {"seed": self.seed, "checked": checked, "failures": fails}

    def cmd_basis(self) -> dict:
        t = self.table
        return {
            "dims": t.dims(),
            "basis": [[t.format_word(w) for w in t.basis[d]] for d in range(self.N + 1)],
        }

    def cmd_invariants(self) -> dict:
        out = self.inv.to_json()
        out["generators"] = [{"degree": g["degree"], "element": g["element"]} for g in out["generators"]]
        out["bases"] = [[self.table.format(v, d) for v in b] for d, b in enumerate(self.inv.bases)]
        if "truncation_chain" in self.doc.data:
            out["truncation_chain"] = self.truncation_chain(self.doc.data["truncation_chain"]["degree"])
        return out

    def truncation_chain(self, d: int) -> dict:
        """Minimal generator degrees of the invariants of A, of A/A_{>=d} and of
        the free algebra on the same generators truncated at d, below degree d.
        The three lists agree; the truncated algebra is finite dimensional, so
        its beta is certified and bounds beta(A^H) from below."""
        N = min(self.N, d + max(self.table.gen_degrees))
        p = self.presentation
        free = AlgebraPresentation(list(p.generators), [], p.field, {}, "free")
        res = {}
        for label, pres in (("quotient", quotient_truncation(p, d)), ("free_quotient", quotient_truncation(free, d))):
            t = self._build(pres, N)
            ir = minimal_generators(invariant_bases(self.action, t, N), t, N)
            res[label] = ir
        below = lambda ir: sorted(g for g in ir.generator_degrees() if g < d)
        lists = {"invariants": below(self.inv), "quotient": below(res["quotient"]),
                 "free_quotient": below(res["free_quotient"])}
        q = res["quotient"]
        bq = beta(q, finite_top=d)
        return {
            "degree": d,
            "generator_degrees_below": lists,
            "agree": lists["invariants"] == lists["quotient"] == lists["free_quotient"],
            "beta_quotient": bq.to_json(),
            "beta_lower_bound": certified(bq.value, "beta(A^H) >= beta of the truncation").to_json()
            if lists["invariants"] == lists["quotient"] else None,
        }

    def cmd_beta(self) -> dict:
        return {
            "beta": self.beta.to_json(),
            "generator_degrees": self.inv.generator_degrees(),
            "beta_2": observed(self.betti_R.t(2), self.N).to_json() if self.P >= 2 else None,
        }

    def cmd_tau(self) -> dict:
        return {"tau": self.tau.to_json(), "tau_op": self.tau_op.to_json(),
                "agree": self.tau.value == self.tau_op.value}

    def cmd_hilbert_ideal(self) -> dict:
        gr, t0r = self.module_gens_right
        gl, t0l = self.module_gens_left
        t = self.table
        ident = (self.tau.value == (1 + t0r.value if t0r.value not in (INF, NEG_INF) else t0r.value)
                 if self.tau.value != INF else t0r.value == INF)
        return {
            "left": {**self.hleft.to_json(), "profile": self.hleft.profile(), "deg_quotient": json_number(self.hleft.deg_quotient())},
            "right": {**self.hright.to_json(), "profile": self.hright.profile(), "deg_quotient": json_number(self.hright.deg_quotient())},
            "module_generators": {
                "right": [t.format(v, d) for d, v in gr],
                "left": [t.format(v, d) for d, v in gl],
                "t0_right": t0r.to_json(),
                "t0_left": t0l.to_json(),
            },
            "tau_equals_1_plus_t0": ident,
        }

    def cmd_annihilators(self) -> dict:
        t = self.table
        tor = self.tor_R
        a0 = self.anns_R[0]
        inside = all(all(self.hleft.echelons[d].contains(v) for v in a0.bases[d]) for d in range(self.N + 1))
        return {
            "tor_dims": [_degs_json(tor.dims(i)) for i in range(self.P + 1)],
            "deg_quotient": [json_number(a.deg_quotient(t)) for a in self.anns_R],
            "deg_quotient_inf": json_number(self.ann_inf_R.deg_quotient(t)),
            "J0_inside_hilbert_ideal": inside,
            "deg_J0_matches_hilbert_ideal": a0.deg_quotient(t) == self.hleft.deg_quotient(),
            "status": f"observed to {self.N}",
        }

    def _res_summary(self, res) -> dict:
        return {
            "shifts": res.shifts,
            "exhausted_at": res.exhausted_at,
            "d_squared_defects": len(check_d_squared(res)),
            "minimality_defects": len(check_minimality(res)),
        }

    def cmd_resolve(self) -> dict:
        out = {"k_over_T": self._res_summary(self.res_T)}
        if self.action is not None:
            out["k_over_R"] = self._res_summary(self.res_R)
        return out

    def cmd_betti(self) -> dict:
        out = {"T": {**self.betti_T.to_json(), "grid": self.betti_T.grid(),
                     "t": [q.to_json() for q in self.tT_k()]}}
        if self.action is not None:
            out["R"] = {**self.betti_R.to_json(), "grid": self.betti_R.grid()}
        return out

    def cmd_torreg(self) -> dict:
        tT = self.tT_k()
        cert = all(q.certified for q in tT)
        out = {"T": (certified(torreg(self.betti_T), "all t_i certified") if cert else observed(torreg(self.betti_T), self.N)).to_json()}
        if self.action is not None:
            out["R"] = observed(torreg(self.betti_R), self.N).to_json()
        return out

    def cmd_cmreg(self) -> dict:
        g, how = self.gldim_T
        out = {"T": {"gldim": g, "gldim_source": how, "cmreg": _q(self.cmreg_T),
                     "a_invariant": self.series_T.t_degree if self.series_T else None}}
        if self.sub is not None:
            out["S"] = {"cmreg": _q(self.cmreg_S)}
            out["delta"] = self.delta
        out["dim_H"] = self.dim_h
        return out

    def cmd_series(self) -> dict:
        out = {"T": self.series_T.to_json() if self.series_T else None}
        if self.action is not None:
            out["R"] = self.series_R.to_json() if self.series_R else None
            out["ratio_at_one"] = _q(self.hilbert_ratio)
            out["dim_H"] = self.dim_h
        if self.sub is not None:
            out["S"] = self.series_S.to_json() if self.series_S else None
        out["status"] = f"fitted, verified to {self.N}"
        return out

    def cmd_check_bounds(self) -> dict:
        rep = self.bounds
        return {**rep.to_json(), "table": rep.render(),
                "violated": len(rep.violated()), "violated_certified": len(rep.violated(True))}


def run_report(doc, commands, **kw) -> dict:
    """Run commands on a document; the result excludes timing."""
    pipe = Pipeline(doc, **kw)
    results = {c: pipe.run(c) for c in commands}
    return {
        "tool": "ncinvariants",
        "version": __version__,
        "input": doc.name,
        "input_hash": doc.digest(),
        "truncation": {"max_degree": pipe.N, "max_homological": pipe.P},
        "results": results,
    }
