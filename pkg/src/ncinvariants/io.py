"""Input documents: JSON schema validation, semantic checks, conversion to
presentations and actions, and canonical serialization."""
from __future__ import annotations

import copy
import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .algebra import AlgebraPresentation, Generator, NcPolynomial
from .exactfield import QQ, FieldSpec, cyclotomic_field, rational
from .hopf import ActionData, HopfData, validate_hopf
from .linalg import vaddto


class DocumentError(ValueError):
    """Schema or consistency failure; ``errors`` holds {pointer, message} dicts."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(f"{e['pointer'] or '/'}: {e['message']}" for e in self.errors))


@lru_cache(maxsize=1)
def schema() -> dict:
    text = resources.files("ncinvariants").joinpath("schema/input.schema.json").read_text()
    return json.loads(text)


def _pointer(path) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def schema_errors(data) -> list:
    v = jsonschema.Draft202012Validator(schema())
    errs = sorted(v.iter_errors(data), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    return [{"pointer": _pointer(e.absolute_path), "message": e.message} for e in errs]


# ---------------------------------------------------------------------------
# scalars


def parse_rational(x):
    if isinstance(x, list):
        return rational(x[0], x[1])
    return rational(x)


def rational_json(q):
    q = Fraction(int(q.numerator), int(q.denominator))
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_scalar(x, field: FieldSpec):
    if isinstance(x, dict):
        coords = [parse_rational(c) for c in x["coords"]]
        if len(coords) > field.degree:
            raise ValueError(f"{len(coords)} coordinates for a field of degree {field.degree}")
        return field.from_coords(coords)
    return field.coerce(parse_rational(x))


def scalar_json(c, field: FieldSpec):
    coords = field.coords(c)
    if all(not x for x in coords[1:]):
        return rational_json(coords[0])
    while coords and not coords[-1]:
        coords.pop()
    return {"coords": [rational_json(x) for x in coords]}


def parse_field(spec) -> FieldSpec:
    if spec is None:
        return QQ
    if "cyclotomic" in spec:
        return cyclotomic_field(spec["cyclotomic"])
    return FieldSpec([parse_rational(c) for c in spec["minpoly"]], spec.get("label"))


# ---------------------------------------------------------------------------
# document


@dataclass(frozen=True)
class InputDocument:
    """A validated input document; ``data`` is its canonical JSON form."""

    data_json: str

    @property
    def data(self) -> dict:
        return json.loads(self.data_json)

    @property
    def name(self) -> str:
        return self.data.get("name", "")

    def digest(self) -> str:
        return hashlib.sha256(self.data_json.encode()).hexdigest()

    # object views -------------------------------------------------------
    def field(self) -> FieldSpec:
        return parse_field(self.data.get("field"))

    def presentation(self) -> AlgebraPresentation:
        d = self.data
        return _presentation(d["generators"], d.get("relations", []), self.field(), d.get("assert", {}), d.get("name", "T"))

    def action(self, cap: int | None = None) -> ActionData | None:
        d = self.data
        act = d.get("action")
        if act is None:
            return None
        f = self.field()
        degs = [g["degree"] for g in d["generators"]]
        if "group" in act:
            mats = [[[parse_scalar(c, f) for c in row] for row in m] for m in act["group"]["generators"]]
            kw = {}
            cap = act["group"].get("cap", cap)
            if cap is not None:
                kw["cap"] = cap
            return ActionData.from_group(mats, degs, f, **kw)
        h = hopf_from_json(act["hopf"], f)
        mats = [[[parse_scalar(c, f) for c in row] for row in m] for m in act["hopf"]["generator_action"]]
        return ActionData.from_matrices(h, mats, degs)

    def subring(self):
        """(presentation of S, list of image polynomials in T) or None."""
        d = self.data
        s = d.get("subring")
        if s is None:
            return None
        f = self.field()
        ps = _presentation(s["generators"], s.get("relations", []), f, s.get("assert", {}), s.get("name", "S"))
        names = {g["name"]: i for i, g in enumerate(d["generators"])}
        imgs = [_poly(p, names, f) for p in s["images"]]
        return ps, imgs

    def asserts(self) -> dict:
        return dict(self.data.get("assert", {}))

    def run_params(self) -> dict:
        return dict(self.data.get("run", {}))

    def probes(self) -> list:
        """(hopf label or index, polynomial) pairs to apply and report."""
        d = self.data
        names = {g["name"]: i for i, g in enumerate(d["generators"])}
        f = self.field()
        return [(pr["hopf"], _poly(pr["element"], names, f)) for pr in d.get("probes", [])]

    def commands(self) -> list:
        return list(self.data.get("commands", []))


def _poly(terms, names: dict, f: FieldSpec) -> NcPolynomial:
    out = {}
    for t in terms:
        vaddto(out, {tuple(names[a] for a in t["word"]): parse_scalar(t["coeff"], f)})
    return NcPolynomial(out)


def _presentation(gens, rels, f, meta, name) -> AlgebraPresentation:
    names = {g["name"]: i for i, g in enumerate(gens)}
    return AlgebraPresentation(
        [Generator(g["name"], g["degree"]) for g in gens],
        [_poly(r, names, f) for r in rels],
        f,
        dict(meta),
        name,
    )


def hopf_from_json(h: dict, f: FieldSpec) -> HopfData:
    def sparse(lst):
        out = {}
        for k, c in lst:
            vaddto(out, {k: parse_scalar(c, f)})
        return out

    n = h["dim"]
    mult = [[sparse(e) for e in row] for row in h["mult"]]
    cop = []
    for row in h["coproduct"]:
        out = {}
        for j, k, c in row:
            vaddto(out, {(j, k): parse_scalar(c, f)})
        cop.append(out)
    return HopfData(
        dim=n,
        labels=list(h.get("labels", [str(i) for i in range(n)])),
        mult=mult,
        coproduct=cop,
        counit=[parse_scalar(c, f) for c in h["counit"]],
        antipode=[sparse(e) for e in h["antipode"]],
        unit=sparse(h["unit"]),
        integral=sparse(h["integral"]),
        field=f,
    )


def hopf_to_json(h: HopfData, matrices) -> dict:
    f = h.field

    def sparse(v):
        return [[k, scalar_json(c, f)] for k, c in sorted(v.items())]

    return {
        "dim": h.dim,
        "labels": list(h.labels),
        "mult": [[sparse(e) for e in row] for row in h.mult],
        "coproduct": [[[j, k, scalar_json(c, f)] for (j, k), c in sorted(row.items())] for row in h.coproduct],
        "counit": [scalar_json(c, f) for c in h.counit],
        "antipode": [sparse(e) for e in h.antipode],
        "unit": sparse(h.unit),
        "integral": sparse(h.integral),
        "generator_action": [[[scalar_json(c, f) for c in row] for row in m] for m in matrices],
    }


# ---------------------------------------------------------------------------
# canonical form and semantic checks


def _canon_poly(p, f):
    return [{"coeff": scalar_json(parse_scalar(t["coeff"], f), f), "word": list(t["word"])} for t in p]


def canonicalize(data: dict) -> dict:
    """Normalize every scalar to its canonical JSON form (schema-valid input)."""
    d = copy.deepcopy(data)
    f = parse_field(d.get("field"))
    if "field" in d and "minpoly" in d["field"]:
        d["field"]["minpoly"] = [rational_json(parse_rational(c)) for c in d["field"]["minpoly"]]
    if "relations" in d:
        d["relations"] = [_canon_poly(r, f) for r in d["relations"]]
    act = d.get("action", {})
    if "group" in act:
        act["group"]["generators"] = [[[scalar_json(parse_scalar(c, f), f) for c in row] for row in m] for m in act["group"]["generators"]]
    if "hopf" in act:
        h = act["hopf"]
        act["hopf"] = hopf_to_json(hopf_from_json(h, f), [[[parse_scalar(c, f) for c in row] for row in m] for m in h["generator_action"]])
        if "labels" not in h:
            act["hopf"]["labels"] = [str(i) for i in range(h["dim"])]
    if "probes" in d:
        for pr in d["probes"]:
            pr["element"] = _canon_poly(pr["element"], f)
    s = d.get("subring")
    if s is not None:
        if "relations" in s:
            s["relations"] = [_canon_poly(r, f) for r in s["relations"]]
        s["images"] = [_canon_poly(p, f) for p in s["images"]]
    return d


def _check_generators(gens, where) -> list:
    errs = []
    seen = set()
    for i, g in enumerate(gens):
        if g["name"] in seen:
            errs.append({"pointer": f"{where}/{i}/name", "message": f"duplicate generator name {g['name']!r}"})
        seen.add(g["name"])
    return errs


def _check_polys(polys, gens, where, label, target_degree=None) -> list:
    errs = []
    degs = {g["name"]: g["degree"] for g in gens}
    for i, p in enumerate(polys):
        ds = set()
        bad = False
        for k, t in enumerate(p):
            for a in t["word"]:
                if a not in degs:
                    errs.append({"pointer": f"{where}/{i}/{k}/word", "message": f"unknown generator {a!r}"})
                    bad = True
            if not bad:
                ds.add(sum(degs[a] for a in t["word"]))
        if bad:
            continue
        if len(ds) > 1:
            errs.append({"pointer": f"{where}/{i}", "message": f"{label} {i} not homogeneous"})
        elif target_degree is not None and ds and ds != {target_degree[i]}:
            errs.append({"pointer": f"{where}/{i}", "message": f"{label} {i} has degree {ds.pop()}, expected {target_degree[i]}"})
        elif target_degree is None and 0 in ds:
            errs.append({"pointer": f"{where}/{i}", "message": f"{label} {i} has a constant term"})
    return errs


def _check_matrix(m, gens, where) -> list:
    n = len(gens)
    if len(m) != n or any(len(row) != n for row in m):
        return [{"pointer": where, "message": f"matrix must be {n}x{n} to act on the generators"}]
    errs = []
    for i in range(n):
        for j in range(n):
            c = m[i][j]
            if gens[i]["degree"] != gens[j]["degree"] and c not in (0, "0", [0, 1]):
                errs.append({"pointer": f"{where}/{i}/{j}", "message": "entry mixes generators of different degrees"})
    return errs


def semantic_errors(data: dict) -> list:
    errs = []
    try:
        f = parse_field(data.get("field"))
    except (ValueError, ZeroDivisionError) as exc:
        return [{"pointer": "/field", "message": str(exc)}]
    if f.check_irreducible() is False:
        errs.append({"pointer": "/field/minpoly", "message": "minimal polynomial is reducible"})
    gens = data["generators"]
    errs += _check_generators(gens, "/generators")
    errs += _check_polys(data.get("relations", []), gens, "/relations", "relation")
    act = data.get("action", {})
    if "group" in act:
        for i, m in enumerate(act["group"]["generators"]):
            errs += _check_matrix(m, gens, f"/action/group/generators/{i}")
    if "hopf" in act:
        h = act["hopf"]
        n = h["dim"]
        for key in ("mult", "coproduct", "counit", "antipode", "generator_action"):
            if len(h[key]) != n:
                errs.append({"pointer": f"/action/hopf/{key}", "message": f"expected {n} entries, got {len(h[key])}"})
        if any(len(row) != n for row in h["mult"]):
            errs.append({"pointer": "/action/hopf/mult", "message": f"multiplication table must be {n}x{n}"})
        for i, m in enumerate(h["generator_action"]):
            errs += _check_matrix(m, gens, f"/action/hopf/generator_action/{i}")
        if not errs:
            try:
                rep = validate_hopf(hopf_from_json(h, f))
            except (IndexError, ValueError, KeyError) as exc:
                errs.append({"pointer": "/action/hopf", "message": f"inconsistent Hopf tables: {exc}"})
            else:
                for fl in rep.failures:
                    errs.append({"pointer": "/action/hopf", "message": f"{fl['axiom']}: {fl['message']} at {fl['witness']}"})
    errs += _check_polys([pr["element"] for pr in data.get("probes", [])], gens, "/probes", "probe element")
    s = data.get("subring")
    if s is not None:
        errs += _check_generators(s["generators"], "/subring/generators")
        errs += _check_polys(s.get("relations", []), s["generators"], "/subring/relations", "relation")
        if len(s["images"]) != len(s["generators"]):
            errs.append({"pointer": "/subring/images", "message": "need one image per subring generator"})
        else:
            errs += _check_polys(s["images"], gens, "/subring/images", "image",
                                 target_degree=[g["degree"] for g in s["generators"]])
    return errs


def parse_data(data) -> InputDocument:
    errs = schema_errors(data)
    if errs:
        raise DocumentError(errs)
    errs = semantic_errors(data)
    if errs:
        raise DocumentError(errs)
    try:
        canon = canonicalize(data)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError([{"pointer": "", "message": str(exc)}]) from None
    return InputDocument(json.dumps(canon, sort_keys=True, separators=(",", ":")))


def parse_input(path) -> InputDocument:
    p = Path(path)
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError([{"pointer": "", "message": f"invalid JSON: {exc}"}]) from None
    return parse_data(data)


def serialize(doc: InputDocument) -> dict:
    return doc.data


def dumps(obj) -> str:
    """Deterministic JSON text for reports and golden files."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"

