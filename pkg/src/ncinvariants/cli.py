"""Command-line front end.

    ncinv <command> <input.json> [--max-degree N] [--max-homological P] [--output json|text]
    ncinv reproduce <fixture-id|all> [--m M] [--write-golden]

Exit codes: 0 ok, 1 golden mismatch, 2 schema error, 3 computation cap
exceeded, 4 violated bound with certified inputs.
"""
from __future__ import annotations

import argparse
import difflib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from .algebra import CapExceeded
from .hopf import ActionError
from .io import DocumentError, dumps, parse_data, parse_input
from .pipeline import COMMANDS, run_report

EXIT_OK, EXIT_GOLDEN, EXIT_SCHEMA, EXIT_CAP, EXIT_BOUND = 0, 1, 2, 3, 4


# ---------------------------------------------------------------------------
# built-in fixtures


def fixture_dir():
    return resources.files("ncinvariants").joinpath("fixtures")


def golden_dir():
    return resources.files("ncinvariants").joinpath("golden")


def fixture_ids() -> list:
    return sorted(p.name[:-5] for p in fixture_dir().iterdir() if p.name.endswith(".json"))


def resolve_fixture(name: str, m: int | None = None) -> list:
    """Fixture ids matching a name: exact, or a family 'name-m<k>'."""
    ids = fixture_ids()
    if name == "all":
        return ids
    if m is not None:
        fid = f"{name}-m{m}"
        if fid not in ids:
            raise KeyError(f"no fixture {fid!r}")
        return [fid]
    if name in ids:
        return [name]
    family = [i for i in ids if i.startswith(name + "-m")]
    if not family:
        raise KeyError(f"no fixture {name!r}; known: {', '.join(ids)}")
    return sorted(family, key=lambda i: int(i.rsplit("-m", 1)[1]))


def load_fixture(fid: str):
    return parse_data(json.loads(fixture_dir().joinpath(fid + ".json").read_text()))


def golden_text(fid: str) -> str | None:
    p = golden_dir().joinpath(fid + ".json")
    return p.read_text() if p.is_file() else None


def reproduce_one(fid: str) -> dict:
    """Run a fixture's commands; returns the report without timing."""
    doc = load_fixture(fid)
    return run_report(doc, doc.commands() or COMMANDS)


def _reproduce_task(fid):
    t0 = time.perf_counter()
    try:
        rep = reproduce_one(fid)
        err = None
    except CapExceeded as exc:
        rep, err = None, ("cap", str(exc))
    return fid, rep, err, time.perf_counter() - t0


# ---------------------------------------------------------------------------
# text rendering


def render_text(report: dict) -> str:
    lines = [f"{report['tool']} {report['version']}  input: {report['input']}  "
             f"N={report['truncation']['max_degree']} P={report['truncation']['max_homological']}"]
    for cmd, res in report["results"].items():
        lines.append(f"== {cmd}")
        lines.extend(_render(res, ""))
    return "\n".join(lines) + "\n"


def _scalar(v):
    if isinstance(v, dict) and set(v) >= {"value", "status"}:
        by = f" by {v['by']}" if v.get("by") else ""
        return f"{v['value']} ({v['status']}{by})"
    return None


def _render(obj, indent):
    out = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            s = _scalar(v)
            if s is not None:
                out.append(f"{indent}{k}: {s}")
            elif k in ("grid", "table") and isinstance(v, str):
                out.append(f"{indent}{k}:")
                out.extend(indent + "  " + ln for ln in v.splitlines())
            elif isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                if k == "rows":
                    continue
                out.append(f"{indent}{k}:")
                out.extend(_render(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {json.dumps(v) if not isinstance(v, str) else v}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            s = _scalar(v)
            if s is not None:
                out.append(f"{indent}[{i}] {s}")
            elif isinstance(v, (dict, list)):
                out.append(f"{indent}[{i}]")
                out.extend(_render(v, indent + "  "))
            else:
                out.append(f"{indent}[{i}] {v}")
    return out


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncinv", description="Degree data for invariants of Hopf actions on graded algebras.")
    ap.add_argument("command", choices=COMMANDS + ["reproduce"])
    ap.add_argument("target", help="input JSON path, or a fixture id for reproduce ('all' for every fixture)")
    ap.add_argument("--max-degree", type=int, default=None, help="truncation degree N (default: document or 8)")
    ap.add_argument("--max-homological", type=int, default=None, help="homological bound P (default: document or 4)")
    ap.add_argument("--output", choices=["json", "text"], default="json")
    ap.add_argument("--seed", type=int, default=0, help="seed for sampled spot checks")
    ap.add_argument("--out", default=None, help="write the report here instead of stdout")
    ap.add_argument("--m", type=int, default=None, help="family parameter for reproduce")
    ap.add_argument("--write-golden", action="store_true", help="reproduce: overwrite golden files")
    ap.add_argument("--workers", type=int, default=None, help="reproduce: worker processes for batches")
    return ap


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _format(report: dict, fmt: str) -> str:
    return dumps(report) if fmt == "json" else render_text(report)


def _bound_exit(report: dict) -> int:
    cb = report["results"].get("check-bounds")
    return EXIT_BOUND if cb and cb["violated_certified"] else EXIT_OK


def cmd_reproduce(args) -> int:
    try:
        ids = resolve_fixture(args.target, args.m)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_SCHEMA
    if len(ids) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as ex:
            results = list(ex.map(_reproduce_task, ids))
    else:
        results = [_reproduce_task(ids[0])]
    code = EXIT_OK
    texts = []
    for fid, rep, err, secs in results:
        if err is not None:
            print(f"{fid}: computation cap exceeded: {err[1]}", file=sys.stderr)
            code = max(code, EXIT_CAP)
            continue
        text = dumps(rep)
        if args.write_golden:
            Path(str(golden_dir().joinpath(fid + ".json"))).write_text(text)
            status = "golden written"
        else:
            gold = golden_text(fid)
            if gold is None:
                status = "no golden file"
            elif gold == text:
                status = "matches golden"
            else:
                status = "GOLDEN MISMATCH"
                sys.stderr.writelines(difflib.unified_diff(gold.splitlines(True), text.splitlines(True), f"golden/{fid}.json", "current"))
                code = max(code, EXIT_GOLDEN)
        if _bound_exit(rep):
            status += "; violated certified bound"
            code = EXIT_BOUND
        print(f"{fid}: {status} ({secs:.2f}s)", file=sys.stderr)
        texts.append(_format(rep, args.output))
    _emit("".join(texts), args.out)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "reproduce":
        try:
            return cmd_reproduce(args)
        except DocumentError as exc:
            print(f"fixture invalid: {exc}", file=sys.stderr)
            return EXIT_SCHEMA
    try:
        doc = parse_input(args.target)
    except DocumentError as exc:
        json.dump({"errors": exc.errors}, sys.stderr, indent=2)
        sys.stderr.write("\n")
        return EXIT_SCHEMA
    except OSError as exc:
        print(f"cannot read {args.target}: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    t0 = time.perf_counter()
    try:
        report = run_report(doc, [args.command], max_degree=args.max_degree,
                            max_homological=args.max_homological, seed=args.seed)
    except CapExceeded as exc:
        print(f"computation cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ActionError as exc:
        print(f"invalid action: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    _emit(_format(report, args.output), args.out)
    return _bound_exit(report)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
