"""Write the built-in fixture documents into src/ncinvariants/fixtures/.

Run from the repository root: python3 tools/make_fixtures.py
"""
import itertools
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
import h8  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "src" / "ncinvariants" / "fixtures"

ALL = ["validate", "basis", "invariants", "beta", "tau", "hilbert-ideal", "annihilators", "resolve",
       "betti", "torreg", "cmreg", "series", "check-bounds"]


def gens(*names, degree=1):
    return [{"name": n, "degree": degree} for n in names]


def poly(*terms):
    """poly((1, "xy"), (-1, "yx")) with single-letter generator names."""
    return [{"coeff": c, "word": list(w)} for c, w in terms]


def commutators(names):
    return [poly((1, a + b), (-1, b + a)) for a, b in itertools.combinations(names, 2)]


def anticommutators(names):
    return [poly((1, a + b), (1, b + a)) for a, b in itertools.combinations(names, 2)]


def diag(*entries):
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]


def root(m):
    """Primitive m-th root of unity as a scalar of the cyclotomic field."""
    return -1 if m == 2 else {"coords": [0, 1]}


def field(m):
    return {"cyclotomic": m} if m > 2 else None


def bracket_word_polys(m):
    """Left-nested brackets [a1,[a2,[...,[a_{m-1},a_m]]]] in k<x,y> for all a_i."""
    out = []
    for letters in itertools.product("xy", repeat=m):
        p = {(letters[-1],): 1}
        for a in reversed(letters[:-1]):
            q = {}
            for w, c in p.items():
                q[(a,) + w] = q.get((a,) + w, 0) + c
                q[w + (a,)] = q.get(w + (a,), 0) - c
            p = {w: c for w, c in q.items() if c}
        if p:
            out.append([{"coeff": c, "word": list(w)} for w, c in sorted(p.items())])
    return out


def free_lie_dims(m):
    """dims of the free Lie algebra on two generators in degrees 1..m-1 (Witt formula)."""
    def mobius(n):
        res, k, x = 1, 2, n
        while k * k <= x:
            if x % k == 0:
                x //= k
                if x % k == 0:
                    return 0
                res = -res
            k += 1
        return -res if x > 1 else res

    return [sum(mobius(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0) // n for n in range(1, m)]


def write(fid, doc):
    doc = {"name": fid, **doc}
    (OUT / f"{fid}.json").write_text(json.dumps(doc, indent=1) + "\n")


DOMAIN2 = {"as_regular": True, "gldim": 2, "domain": True, "noetherian": True, "koszul": True}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for p in OUT.glob("*.json"):
        p.unlink()

    write("ex3.4", {
        "description": "down-up algebra A(0,1) with x -> -x, y -> y",
        "generators": gens("x", "y"),
        "relations": [poly((1, "xxy"), (-1, "yxx")), poly((1, "xyy"), (-1, "yyx"))],
        "assert": {"as_regular": True, "gldim": 3, "domain": True, "noetherian": True},
        "action": {"group": {"generators": [diag(-1, 1)]}},
        "series_hints": {"T": {"product": [1, 1, 2]}, "R": {"product": [1, 2, 4]}},
        "run": {"max_degree": 10, "max_homological": 3},
        "commands": ALL,
    })

    write("ex1.2.3", {
        "description": "(-1)-skew polynomial ring k_{-1}[x,y] with the swap x <-> y",
        "generators": gens("x", "y"),
        "relations": anticommutators("xy"),
        "assert": DOMAIN2,
        "action": {"group": {"generators": [[[0, 1], [1, 0]]]}},
        "series_hints": {"T": {"product": [1, 1]}, "R": {"product": [1, 4]}},
        "run": {"max_degree": 8, "max_homological": 3},
        "commands": ALL,
    })

    for m in range(2, 6):
        doc = {
            "description": f"Veronese action x, y -> w x, w y (w a primitive {m}-th root of 1) on k_q[x,y], q = 2",
            "generators": gens("x", "y"),
            "relations": [poly((1, "yx"), (-2, "xy"))],
            "assert": {**DOMAIN2, "smash_product_prime": True},
            "action": {"group": {"generators": [diag(root(m), root(m))]}},
            "series_hints": {"T": {"product": [1, 1]}, "R": {"product": [m, m]}},
            "run": {"max_degree": max(8, 2 * m + 3), "max_homological": 2},
            "commands": ["validate", "invariants", "beta", "tau", "hilbert-ideal", "series", "check-bounds"],
        }
        if field(m):
            doc["field"] = field(m)
        write(f"ex1.2.1-m{m}", doc)

    write("ex1.3", {
        "description": "free algebra k<x,y> with x -> -x, y -> y",
        "generators": gens("x", "y"),
        "relations": [],
        "assert": {"domain": True},
        "action": {"group": {"generators": [diag(-1, 1)]}},
        "run": {"max_degree": 7, "max_homological": 2},
        "commands": ["validate", "basis", "invariants", "beta", "tau", "hilbert-ideal"],
    })

    for m in range(3, 7):
        g = sum(free_lie_dims(m))
        write(f"ex3.6-m{m}", {
            "description": f"U(g_{m}) for the free Lie algebra on x, y modulo degree >= {m}, with x -> -x",
            "generators": gens("x", "y"),
            "relations": bracket_word_polys(m),
            "assert": {"as_regular": True, "gldim": g, "domain": True, "noetherian": True},
            "action": {"group": {"generators": [diag(-1, 1)]}},
            "truncation_chain": {"degree": m},
            "run": {"max_degree": m + 1, "max_homological": 2},
            "commands": ["validate", "basis", "invariants", "beta"],
        })

    t = h8.tables()

    def sc(c):
        return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def sparse(v):
        return [[k, sc(c)] for k, c in sorted(v.items())]

    write("ex3.7", {
        "description": "Kac-Paljutkin Hopf algebra H8 acting on k<u,v>/(u^2 - v^2)",
        "generators": gens("u", "v"),
        "relations": [poly((1, "uu"), (-1, "vv"))],
        "assert": DOMAIN2,
        "action": {"hopf": {
            "dim": t["dim"],
            "labels": t["labels"],
            "mult": [[sparse(e) for e in row] for row in t["mult"]],
            "coproduct": [[[j, k, sc(c)] for (j, k), c in sorted(row.items())] for row in t["coproduct"]],
            "counit": [sc(c) for c in t["counit"]],
            "antipode": [sparse(e) for e in t["antipode"]],
            "unit": sparse(t["unit"]),
            "integral": sparse(t["integral"]),
            "generator_action": [[[sc(c) for c in row] for row in mat] for mat in h8.generator_matrices()],
        }},
        "probes": [
            {"hopf": "z", "element": poly((1, "uv"))},
            {"hopf": "z", "element": poly((1, "vu"))},
            {"hopf": "z", "element": poly((1, "uv"), (1, "vu"))},
            {"hopf": "z", "element": poly((1, "uu"))},
            {"hopf": "x", "element": poly((1, "uv"))},
        ],
        "series_hints": {"T": {"product": [1, 1]}, "R": {"product": [2, 4]}},
        "run": {"max_degree": 10, "max_homological": 3},
        "commands": ["validate", "basis", "invariants", "beta", "tau", "hilbert-ideal", "series", "check-bounds"],
    })

    write("kx-sign", {
        "description": "k[x] with x -> -x, over the image of k[u] -> k[x], u -> x^2",
        "generators": gens("x"),
        "assert": {"as_regular": True, "gldim": 1, "domain": True, "noetherian": True, "koszul": True,
                   "smash_product_prime": True, "invariant_gldim_finite": True, "cohen_macaulay_s": 1},
        "action": {"group": {"generators": [[[-1]]]}},
        "subring": {"name": "S", "generators": gens("u", degree=2), "images": [poly((1, "xx"))],
                    "assert": {"as_regular": True, "gldim": 1, "noetherian": True, "commutative": True,
                               "modules_rational": True}},
        "series_hints": {"T": {"product": [1]}, "R": {"product": [2]}, "S": {"product": [2]}},
        "run": {"max_degree": 8, "max_homological": 3},
        "commands": ALL,
    })

    write("qr-m3", {
        "description": "quasi-reflection x -> w x, y -> y (w a primitive cube root of 1) on k_q[x,y], q = 2",
        "field": {"cyclotomic": 3},
        "generators": gens("x", "y"),
        "relations": [poly((1, "yx"), (-2, "xy"))],
        "assert": {**DOMAIN2, "smash_product_prime": True, "invariant_gldim_finite": True},
        "action": {"group": {"generators": [diag(root(3), 1)]}},
        "subring": {"name": "S", "generators": [{"name": "a", "degree": 3}, {"name": "b", "degree": 1}],
                    "relations": [poly((1, "ba"), (-8, "ab"))],
                    "images": [poly((1, "xxx")), poly((1, "y"))],
                    "assert": {"as_regular": True, "gldim": 2, "noetherian": True}},
        "series_hints": {"T": {"product": [1, 1]}, "R": {"product": [1, 3]}, "S": {"product": [1, 3]}},
        "run": {"max_degree": 8, "max_homological": 3},
        "commands": ALL,
    })

    write("skew2-neg", {
        "description": "k_{-1}[x,y] with x, y -> -x, -y, over k[a,b,c] -> x^2, xy, y^2",
        "generators": gens("x", "y"),
        "relations": anticommutators("xy"),
        "assert": {**DOMAIN2, "cohen_macaulay_s": 2},
        "action": {"group": {"generators": [diag(-1, -1)]}},
        "subring": {"name": "S", "generators": gens("a", "b", "c", degree=2), "relations": commutators("abc"),
                    "images": [poly((1, "xx")), poly((1, "xy")), poly((1, "yy"))],
                    "assert": {"as_regular": True, "gldim": 3, "noetherian": True, "commutative": True,
                               "modules_rational": True}},
        "series_hints": {"T": {"product": [1, 1]}, "R": {"product": [2, 2]}, "S": {"product": [2, 2, 2]}},
        "run": {"max_degree": 10, "max_homological": 3},
        "commands": ALL,
    })

    write("skew3-cyclic", {
        "description": "k_{-1}[x,y,z] with the cyclic permutation x -> y -> z -> x",
        "generators": gens("x", "y", "z"),
        "relations": anticommutators("xyz"),
        "assert": {"as_regular": True, "gldim": 3, "domain": True, "noetherian": True, "koszul": True},
        "action": {"group": {"generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]]]}},
        "series_hints": {"T": {"product": [1, 1, 1]}},
        "run": {"max_degree": 8, "max_homological": 3},
        "commands": ["validate", "invariants", "beta", "tau", "hilbert-ideal", "series", "check-bounds"],
    })

    write("trivial", {
        "description": "k_{-1}[x,y] with the trivial action",
        "generators": gens("x", "y"),
        "relations": anticommutators("xy"),
        "assert": {**DOMAIN2, "smash_product_prime": True, "invariant_gldim_finite": True},
        "action": {"group": {"generators": [diag(1, 1)]}},
        "series_hints": {"T": {"product": [1, 1]}, "R": {"product": [1, 1]}},
        "run": {"max_degree": 6, "max_homological": 3},
        "commands": ALL,
    })


if __name__ == "__main__":
    main()
