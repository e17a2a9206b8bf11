import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from ncinvariants.algebra import AlgebraPresentation, Generator, build_basis  # noqa: E402
from ncinvariants.cli import fixture_ids, load_fixture  # noqa: E402
from ncinvariants.exactfield import QQ  # noqa: E402
from ncinvariants.pipeline import Pipeline  # noqa: E402

SEED = 20240611


def presentation(names, relations, field=QQ, degrees=None, meta=None):
    """relations: lists of (coeff, "word") with single-letter generator names."""
    degrees = degrees or [1] * len(names)
    p = AlgebraPresentation([Generator(n, d) for n, d in zip(names, degrees)], [], field, meta or {})
    p.relations = [p.poly(r) for r in relations]
    return AlgebraPresentation(p.generators, p.relations, field, meta or {})


def skew(names):
    return presentation(names, [[(1, a + b), (1, b + a)] for i, a in enumerate(names) for b in names[i + 1:]])


def polynomial(names):
    return presentation(names, [[(1, a + b), (-1, b + a)] for i, a in enumerate(names) for b in names[i + 1:]])


def down_up():
    return presentation("xy", [[(1, "xxy"), (-1, "yxx")], [(1, "xyy"), (-1, "yyx")]])


def free(names):
    return presentation(names, [])


# oracle relation format: {word tuple: coeff}
def oracle_rels(p):
    return [{w: c for w, c in r.terms.items()} for r in p.relations]


@functools.lru_cache(maxsize=None)
def table(kind, N):
    return build_basis({"skew2": lambda: skew("xy"), "skew3": lambda: skew("xyz"), "downup": down_up,
                        "free2": lambda: free("xy"), "poly2": lambda: polynomial("xy"),
                        "kx": lambda: free("x")}[kind](), N)


@functools.lru_cache(maxsize=None)
def pipeline(fid, **kw):
    return Pipeline(load_fixture(fid), **kw)


@pytest.fixture(scope="session")
def all_fixture_ids():
    return fixture_ids()


# ---------------------------------------------------------------------------
# acceptance summary: one line per criterion

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "setup" and not rep.passed:
        _CRITERIA[n] = (title, "FAIL", 0.0)
    elif rep.when == "call":
        _CRITERIA[n] = (title, "PASS" if rep.passed else "FAIL", rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, status, secs = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title} ({secs:.2f}s)")
