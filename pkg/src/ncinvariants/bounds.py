"""Degree-bound checker: evaluates each inequality on computed data.

Inputs are ``Quantity`` values (value plus certification).  A row whose
inputs are missing or whose hypotheses fail is "not-applicable"; otherwise
it "holds" or is "violated".  Hypotheses that cannot be computed are taken
from user assertions and echoed in the row.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .quantity import INF, NEG_INF, Quantity, json_number


def _val(x):
    return x.value if isinstance(x, Quantity) else x


def add(*xs):
    """Sum where any -inf term (a vanishing Tor group) makes the sum -inf."""
    vals = [_val(x) for x in xs]
    if any(v == NEG_INF for v in vals):
        return NEG_INF
    if any(v == INF for v in vals):
        return INF
    return sum(Fraction(v) for v in vals)


def sub(a, b):
    a, b = _val(a), _val(b)
    if a == NEG_INF or b == INF:
        return NEG_INF
    if a == INF or b == NEG_INF:
        return INF
    return Fraction(a) - Fraction(b)


def mul(k, a):
    a = _val(a)
    if a in (INF, NEG_INF):
        return a if k > 0 else (NEG_INF if a == INF else INF) if k < 0 else 0
    return Fraction(k) * Fraction(a)


def div(a, k):
    a = _val(a)
    if a in (INF, NEG_INF):
        return a
    return Fraction(a) / k


def vmax(*xs):
    vals = [_val(x) for x in xs]
    return max(vals) if vals else NEG_INF


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass
class BoundRow:
    id: str
    statement: str
    lhs: object
    rhs: object
    status: str
    relation: str = "<="
    hypotheses: list = field(default_factory=list)
    inputs_certified: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "lhs": json_number(_norm(self.lhs)),
            "rhs": json_number(_norm(self.rhs)),
            "relation": self.relation,
            "status": self.status,
            "hypotheses": self.hypotheses,
            "inputs_certified": self.inputs_certified,
            "note": self.note,
        }


@dataclass
class BoundReport:
    rows: list = field(default_factory=list)
    derived: dict = field(default_factory=dict)

    def violated(self, certified_only: bool = False) -> list:
        return [r for r in self.rows if r.status == "violated" and (r.inputs_certified or not certified_only)]

    def applicable(self) -> list:
        return [r for r in self.rows if r.status != "not-applicable"]

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows], "derived": {k: json_number(_norm(v)) if not isinstance(v, (list, dict)) else v for k, v in self.derived.items()}}

    def render(self) -> str:
        lines = [f"{'inequality':<22} {'lhs':>8} {'rel':^4} {'rhs':>8}  {'status':<15} hypotheses"]
        for r in self.rows:
            lhs = json_number(_norm(r.lhs)) if r.lhs is not None else "-"
            rhs = json_number(_norm(r.rhs)) if r.rhs is not None else "-"
            tag = r.status + ("" if r.inputs_certified or r.status == "not-applicable" else "*")
            lines.append(f"{r.id:<22} {str(lhs):>8} {r.relation:^4} {str(rhs):>8}  {tag:<15} {'; '.join(r.hypotheses)}")
        lines.append("* inputs include values observed to the truncation degree")
        return "\n".join(lines)


@dataclass
class BoundInputs:
    """Everything the checker may use; None means unavailable."""

    N: int = 0
    dim_h: int | None = None
    is_group: bool = False
    semisimple: bool = True
    # T and the action
    T_as_regular: bool = False
    T_gldim: int | None = None
    T_domain: bool = False
    T_noetherian: bool = False
    T_koszul: bool = False
    T_generated_deg1: bool = False
    smash_prime: bool = False
    invariant_gldim_finite: bool = False
    skew_n: int | None = None
    central: dict | None = None
    cmreg_T: Quantity | None = None
    tT_k: list = field(default_factory=list)
    # R = T^H
    beta_R: Quantity | None = None
    beta2_R: Quantity | None = None
    tR_k: list = field(default_factory=list)
    tau: Quantity | None = None
    tau_op: Quantity | None = None
    R_commutative: bool = False
    deg_AJ_R: list = field(default_factory=list)
    deg_AJinf_R: Quantity | None = None
    hilbert_ratio: Quantity | None = None
    # S -> R inside T
    has_S: bool = False
    S_as_regular: bool = False
    S_noetherian: bool = False
    S_commutative: bool = False
    S_onto_R: bool = False
    S_same_gen_dims: bool = False
    T_finite_over_S: bool = False
    cmreg_S: Quantity | None = None
    tS_k: list = field(default_factory=list)
    tS_T_right: list = field(default_factory=list)
    tS_R_left: list = field(default_factory=list)
    tS_R_right: list = field(default_factory=list)
    deg_T_TSplus: Quantity | None = None
    deg_TJ_le: list = field(default_factory=list)
    deg_TJinf: Quantity | None = None
    e513_lhs: list = field(default_factory=list)
    e514_lhs: list = field(default_factory=list)
    R_cm_s: int | None = None
    modules_rational: bool = False
    a_R: Quantity | None = None
    tor_condition: bool | None = None


def _cert(*qs) -> bool:
    return all((q.certified if isinstance(q, Quantity) else True) for q in qs)


def _get(lst, i):
    return lst[i] if 0 <= i < len(lst) else None


class _Builder:
    def __init__(self):
        self.report = BoundReport()

    def row(self, id, statement, lhs, rhs, hyps, inputs, relation="<=", note=""):
        failed = [h for h, ok in hyps if not ok]
        names = [h for h, _ in hyps]
        if failed:
            self.report.rows.append(BoundRow(id, statement, None, None, "not-applicable", relation, names, False, "fails: " + ", ".join(failed)))
            return
        if any(x is None for x in inputs) or lhs is None or rhs is None:
            self.report.rows.append(BoundRow(id, statement, None, None, "not-applicable", relation, names, False, "missing inputs"))
            return
        lv, rv = _val(lhs), _val(rhs)
        ok = lv == rv if relation == "=" else lv <= rv
        self.report.rows.append(BoundRow(id, statement, lv, rv, "holds" if ok else "violated", relation, names, _cert(*inputs), note))


# ---------------------------------------------------------------------------
# transfer quantities D_i and U^i_j


def d_value(deg_BJ, tB, tA, i: int, with_A: bool = True, extra_58: bool = False):
    """D_i as the max-expression itself (A = S, B = T).

    deg_BJ is deg B/J_{<=i}; tB and tA are t^B_j(k), t^A_j(k) indexed by j.
    """
    tB2 = tB[2]
    terms = [add(deg_BJ, tB2)]
    for j in range(1, i):
        terms.append(div(sub(tB[j + 2], tB2), j))
    for j in range(1, i + 1):
        terms.append(div(tB[j], j))
        if with_A:
            terms.append(div(tA[j], j))
    if extra_58:
        for j in range(2, i + 1):
            terms.append(div(add(tA[j], tB2), j))
    return vmax(*terms)


def u_values(D, tB, i: int) -> list:
    """U^i_j for j = 0..i by dynamic programming over compositions of j."""
    tB2 = tB[2]
    w = {p: add(tB[p + 1], D, -_val(tB2)) if tB2 != NEG_INF else NEG_INF for p in range(1, i + 1)}
    best = [Fraction(0)] + [NEG_INF] * i
    for j in range(1, i + 1):
        best[j] = vmax(*[add(best[j - p], w[p]) for p in range(1, j + 1)])
    out = [NEG_INF] + best[1:]
    return out


def check_bounds(x: BoundInputs) -> BoundReport:
    b = _Builder()
    rep = b.report
    sem = ("H semisimple (integral validated)", x.semisimple)

    # invariant-ring bounds --------------------------------------------------
    b.row("Cor3.3", "beta(R) <= tau", x.beta_R, x.tau, [sem], [x.beta_R, x.tau])
    b.row("Cor3.3-op", "beta(R) <= tau^op", x.beta_R, x.tau_op, [sem], [x.beta_R, x.tau_op])
    b.row(
        "Thm3.5(1)", "beta(R) <= dim H", x.beta_R, x.dim_h,
        [sem, ("T noetherian AS regular domain (asserted)", x.T_as_regular and x.T_noetherian and x.T_domain),
         ("T generated in degree 1", x.T_generated_deg1), ("T#H prime (asserted)", x.smash_prime),
         ("R of finite global dimension (asserted)", x.invariant_gldim_finite)],
        [x.beta_R, x.dim_h])
    central = x.central
    central_src = "asserted"
    if central is None and x.skew_n is not None and x.is_group:
        central = {"d": 2, "m": x.skew_n}
        central_src = "k[x_i^2] in the (-1)-skew polynomial ring"
    if central is not None and x.dim_h is not None:
        bound = central["d"] * x.dim_h + central["m"]
        hyps = [sem, ("A domain (asserted)", x.T_domain),
                (f"central subalgebra data d, m ({central_src})", True),
                ("H is a group algebra", x.is_group)]
        b.row("Prop3.11(1)a", "beta(R) <= tau", x.beta_R, x.tau, hyps, [x.beta_R, x.tau])
        b.row("Prop3.11(1)b", "tau <= d dim H + m", x.tau, bound, hyps, [x.tau])
        for i, q in enumerate(x.deg_AJ_R):
            b.row(f"Prop3.11(2)[i={i}]a", "deg A/J_i <= deg A/J_inf", q, x.deg_AJinf_R, hyps, [q, x.deg_AJinf_R])
        b.row("Prop3.11(2)b", "deg A/J_inf <= d dim H + m - 1", x.deg_AJinf_R, bound - 1, hyps, [x.deg_AJinf_R])
    if x.skew_n is not None and x.is_group:
        b.row("Cor3.12", "beta(R) <= 2|G| + n", x.beta_R, 2 * x.dim_h + x.skew_n, [sem, ("T = k_{-1}[x_1..x_n]", True)], [x.beta_R])
    b.row(
        "Prop1.8(1)", "h_T/h_R at t=1 = dim H", x.hilbert_ratio, x.dim_h,
        [sem, ("T noetherian domain (asserted)", x.T_noetherian and x.T_domain), ("T#H prime (asserted)", x.smash_prime)],
        [x.hilbert_ratio, x.dim_h], relation="=")

    # bounds over an AS regular S mapping to R ---------------------------------
    rep.derived["dim_H"] = x.dim_h
    rep.derived["gldim_T"] = x.T_gldim
    rep.derived["CMreg_T"] = _val(x.cmreg_T)
    if x.has_S:
        s_ok = ("S noetherian AS regular (asserted)", x.S_as_regular and x.S_noetherian)
        fin = ("T finite over S (observed: T/TS_+ finite within N)", x.T_finite_over_S)
        tS = x.tS_k
        betaS = _get(tS, 1)
        beta2S = _get(tS, 2)
        t0 = _get(x.tS_R_left, 0)
        t1 = _get(x.tS_R_left, 1)
        b.row("Lem4.2", "beta(R) <= max{beta(S), t^S_0(_S R)}", x.beta_R, vmax(betaS, t0) if betaS and t0 else None,
              [s_ok, fin], [x.beta_R, betaS, t0])
        if t0 is not None and betaS is not None and beta2S is not None and t1 is not None:
            rhs = vmax(mul(2, t0), add(t0, betaS), beta2S, t1)
        else:
            rhs = None
        b.row("Prop4.5", "beta_2(R) <= max{2t0, t0+beta(S), beta_2(S), t1}", x.beta2_R, rhs, [s_ok, fin],
              [x.beta2_R, betaS, beta2S, t0, t1])
        delta = None
        if x.cmreg_T is not None and x.cmreg_S is not None:
            delta = sub(x.cmreg_T, x.cmreg_S)
            rep.derived["delta"] = delta
        dq = [x.cmreg_T, x.cmreg_S]
        t_reg = ("T noetherian AS regular (asserted)", x.T_as_regular and x.T_noetherian)
        if delta is not None:
            b.row("Cor4.6(1)", "beta(R) <= max{beta(S), delta}", x.beta_R, vmax(betaS, delta) if betaS else None,
                  [t_reg, s_ok, fin, ("S maps into R", True)], [x.beta_R, betaS] + dq)
            rhs = vmax(mul(2, delta), add(delta, betaS), beta2S) if betaS and beta2S else None
            b.row("Cor4.6(2)", "beta_2(R) <= max{2 delta, delta+beta(S), beta_2(S)}", x.beta2_R, rhs,
                  [t_reg, s_ok, fin], [x.beta2_R, betaS, beta2S] + dq)
            for i, q in enumerate(x.tS_T_right):
                b.row(f"Lem2.16(1)[i={i}]", "t^S_i(T_S) <= delta + i", q, add(delta, i), [t_reg, s_ok, fin], [q] + dq)
            b.row("Lem2.16(2)", "deg T/TS_+ <= delta", x.deg_T_TSplus, delta, [t_reg, s_ok, fin], [x.deg_T_TSplus] + dq)
            onto = ("image of S is R", x.S_onto_R)
            b.row("Lem2.16(3)", "tau <= delta + 1", x.tau, add(delta, 1), [t_reg, s_ok, fin, onto], [x.tau] + dq)
            b.row("Lem2.16(3)-op", "tau^op <= delta + 1", x.tau_op, add(delta, 1), [t_reg, s_ok, fin, onto], [x.tau_op] + dq)
        # R is n-Cohen-Macaulay over S with n = gldim T
        if x.cmreg_T is not None and x.T_gldim is not None:
            n = x.T_gldim
            for i, q in enumerate(x.tS_R_left):
                tk = _get(tS, i + n)
                b.row(f"Cor4.8[i={i}]", "t^S_i(_S R) <= CMreg(T) - n + t^S_{i+n}(k)", q,
                      add(x.cmreg_T, -n, tk) if tk is not None else None,
                      [t_reg, s_ok, fin, ("image of S is R", x.S_onto_R)], [q, x.cmreg_T, tk])
        if x.R_cm_s is not None and x.a_R is not None:
            s = x.R_cm_s
            for i, q in enumerate(x.tS_R_left):
                tk = _get(tS, i + s)
                b.row(f"Thm4.7(2)[i={i}]", "t^S_i(_S R) <= a(R) + t^S_{i+s}(k)", q,
                      add(x.a_R, tk) if tk is not None else None,
                      [s_ok, (f"R is {s}-Cohen-Macaulay (asserted)", True), ("f.g. S-modules rational over Q (asserted)", x.modules_rational)],
                      [q, x.a_R, tk])
        _transfer_rows(b, x, s_ok, fin)
        # two-sided tau bound on beta_2
        if x.cmreg_T is not None and x.tau is not None and x.tau_op is not None:
            lhs_rhs = add(x.tau, x.tau_op, mul(-1, x.cmreg_T))
            hyps = [sem, ("T AS regular (asserted)", x.T_as_regular), ("T generated in degree 1", x.T_generated_deg1),
                    s_ok, ("S onto R with equal minimal generating dims", x.S_onto_R and x.S_same_gen_dims)]
            ins = [x.tau, x.tau_op, x.cmreg_T]
            b.row("Thm5.11(1)a", "beta_2(R) <= tau + tau^op - CMreg(T)", x.beta2_R, lhs_rhs, hyps, [x.beta2_R] + ins)
            if x.cmreg_S is not None:
                b.row("Thm5.11(1)b", "tau + tau^op - CMreg(T) <= 2 - 2CMreg(S) + CMreg(T)", lhs_rhs,
                      add(2, mul(-2, x.cmreg_S), x.cmreg_T), hyps, ins + [x.cmreg_S])
            cond = x.tor_condition
            if cond is None:
                cond = x.R_commutative and x.S_commutative
            b.row("Thm5.11(2)", "t^S_1(_S R) <= tau + tau^op - CMreg(T)", t1, lhs_rhs,
                  hyps + [("Tor^S_1(k,R) (x)_R k = Tor^S_1(k,R)", bool(cond))], [t1] + ins)

    # the skew-family Tor bounds need no S
    if x.skew_n is not None and x.is_group:
        G, n = x.dim_h, x.skew_n
        hyps = [sem, ("T = k_{-1}[x_1..x_n]", True), ("R commutative", x.R_commutative), ("k infinite", True)]
        for i, q in enumerate(x.tR_k):
            if i == 0:
                b.row("Cor5.10[i=0]", "t^R_0(k) = 0", q, 0, hyps, [q], relation="=")
            elif i == 1:
                b.row("Cor5.10[i=1]", "t^R_1(k) <= 2|G| + n", q, 2 * G + n, hyps, [q])
            else:
                b.row(f"Cor5.10[i={i}]", "t^R_i(k) <= i(2|G|+n+1) - 2", q, i * (2 * G + n + 1) - 2, hyps, [q])
    return rep


def _transfer_rows(b: _Builder, x: BoundInputs, s_ok, fin):
    """Rows comparing Tor over S and over T, with (A, B) = (S, T)."""
    rep = b.report
    tA = [_val(q) for q in x.tS_k]
    tB = [_val(q) for q in x.tT_k]
    tBA = [_val(q) for q in x.tS_T_right]
    P = min(len(tBA), len(x.deg_TJ_le))
    if len(tB) < 3 or not tBA:
        return
    cert_common = list(x.tS_k) + list(x.tT_k)

    def tBk(j):
        return tB[j] if j < len(tB) else None

    def tAk(j):
        return tA[j] if j < len(tA) else None

    for i, lhs in enumerate(x.e513_lhs):
        terms = []
        ok = True
        for j in range(0, i - 1):
            if tBk(j) is None or i - j - 1 >= len(tBA):
                ok = False
                break
            terms.append(add(tB[j], tBA[i - j - 1]))
        if tAk(i) is None:
            ok = False
        rhs = vmax(*terms, tA[i]) if ok else None
        b.row(f"E5.1.3[i={i}]", "deg Tor^T_i(k, T(x)_S k) <= max{t^T_j(k)+t^S_{i-j-1}(T_S), t^S_i(k)}", lhs, rhs,
              [s_ok, fin], [lhs] + cert_common + list(x.tS_T_right))
    for i, lhs in enumerate(x.e514_lhs):
        terms = []
        ok = True
        for j in range(0, i):
            if j >= len(tBA) or tBk(i - j + 1) is None:
                ok = False
                break
            terms.append(add(tBA[j], tB[i - j + 1]))
        if tAk(i) is None:
            ok = False
        rhs = vmax(*terms, tA[i]) if ok else None
        b.row(f"E5.1.4[i={i}]", "deg k(x)_T Tor^S_i(T,k) <= max{t^S_j(T_S)+t^T_{i-j+1}(k), t^S_i(k)}", lhs, rhs,
              [s_ok, fin], [lhs] + cert_common + list(x.tS_T_right))
        if i < len(x.deg_TJ_le):
            b.row(f"E5.1.5[i={i}]", "t^S_i(T_S) <= deg k(x)_T Tor_i + deg T/J_<=i", x.tS_T_right[i],
                  add(lhs, x.deg_TJ_le[i]), [s_ok, fin], [x.tS_T_right[i], lhs, x.deg_TJ_le[i]])

    hyps = [s_ok, fin]
    for i in range(1, P):
        if i + 1 >= len(tB) or i >= len(tA):
            break
        deg_BJ = _val(x.deg_TJ_le[i])
        ins = cert_common + list(x.tS_T_right[: i + 1]) + [x.deg_TJ_le[i]]
        D52 = d_value(deg_BJ, tB, tA, i, with_A=False)
        D55 = d_value(deg_BJ, tB, tA, i, with_A=True)
        rep.derived[f"D_{i}"] = D55
        U = u_values(D52, tB, i)
        rep.derived[f"U^{i}"] = [json_number(_norm(u)) for u in U]
        for j in range(0, i + 1):
            terms = [U[j]] + [add(tA[k], mul(j - k, D52)) for k in range(0, j + 1)]
            rhs = add(vmax(*terms), D52, -tB[2]) if tB[2] != NEG_INF else None
            b.row(f"Prop5.2[i={i},j={j}]", "t^S_j(T_S) <= max{U^i_j, t^S_k(k)+(j-k)D_i} + D_i - t^T_2(k)", tBA[j], rhs, hyps, ins)
            if j >= 1:
                b.row(f"Lem5.3[i={i},j={j}]", "U^i_j <= j D_i", U[j], mul(j, D52), hyps, ins)
                b.row(f"Cor5.5[i={i},j={j}]", "t^S_j(T_S) <= (j+1)D_i - t^T_2(k)", tBA[j], sub(mul(j + 1, D55), tB[2]), hyps, ins)
        # Tor^R(k) via the direct summand R of T, (A, B, C) = (S, T, R)
        D58 = d_value(deg_BJ, tB, tA, i, with_A=True, extra_58=True)
        h58 = hyps + [("T generated in degree 1", x.T_generated_deg1),
                      ("R a direct summand of T over S (Reynolds splitting, S onto R)", x.S_onto_R and x.semisimple)]
        for j, q in enumerate(x.tR_k[: i + 1]):
            if j == 0:
                b.row(f"Prop5.8[i={i},j=0]", "t^R_0(k) = 0", q, 0, h58, [q] + ins, relation="=")
            elif j == 1:
                b.row(f"Prop5.8[i={i},j=1]", "t^R_1(k) <= D_i - t^T_2(k) + 1", q, add(sub(D58, tB[2]), 1), h58, [q] + ins)
            else:
                b.row(f"Prop5.8[i={i},j={j}]", "t^R_j(k) <= j D_i - t^T_2(k)", q, sub(mul(j, D58), tB[2]), h58, [q] + ins)

    # Koszul rows use deg T/J_inf over S
    if x.deg_TJinf is None:
        return
    Dinf = _val(x.deg_TJinf)
    cond56 = all(_val(q) <= mul(j, add(Dinf, 2)) for j, q in enumerate(x.tS_k))
    h56 = hyps + [("T Koszul (asserted)", x.T_koszul), ("S onto R", x.S_onto_R),
                  ("t^S_j(k) <= j(deg T/J_inf + 2) on computed j", cond56)]
    for i, q in enumerate(x.tS_R_right):
        b.row(f"Thm5.6[i={i}]", "t^S_i(R_S) <= i(deg T/J_inf + 2) + deg T/J_inf", q, add(mul(i, add(Dinf, 2)), Dinf),
              h56, [q, x.deg_TJinf] + list(x.tS_k))
    for i in range(2, len(x.tR_k)):
        need = vmax(*[sub(div(add(tA[j], tB[2]), j), 2) for j in range(2, i + 1) if j < len(tA)])
        h59 = h56 + [("deg T/J_inf >= max{(t^S_j(k)+t^T_2(k))/j} - 2", Dinf >= need)]
        ins = [x.deg_TJinf] + list(x.tS_k)
        if i == 2:
            b.row("Thm5.9[j=1]", "t^R_1(k) <= deg T/J_inf + 1", x.tR_k[1], add(Dinf, 1), h59, [x.tR_k[1]] + ins)
        b.row(f"Thm5.9[j={i}]", "t^R_j(k) <= j(deg T/J_inf + 2) - 2", x.tR_k[i], sub(mul(i, add(Dinf, 2)), 2), h59, [x.tR_k[i]] + ins)
