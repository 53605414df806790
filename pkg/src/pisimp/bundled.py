"""The example monads and probe categories shipped with the package.

Every bundled monad is either built from a closure operator, is an identity
monad, or was found by :func:`pisimp.fincat.enumerate_monads` on one of two
small non-thin categories.  :func:`discover` rebuilds all of them from
scratch; the JSON files under ``fixtures/`` are its frozen output and the
test suite checks that the two agree.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import fincat as fc
from .fincat import FinCat

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"

__all__ = [
    "poset",
    "split_idempotent",
    "z2_arrow",
    "discover",
    "fixture_path",
    "monad_names",
    "load",
    "load_all",
    "default_probes",
    "write_fixtures",
]


def poset(elements, leq, name) -> FinCat:
    """A thin category with string ids: objects ``"a"``, arrows ``"a<=b"``."""
    elements = [str(e) for e in elements]
    arrows = [(a, b) for a in elements for b in elements if leq(a, b)]
    morphisms = {f"{a}<={b}": (a, b) for a, b in arrows}
    compose = {}
    for b, c in arrows:
        for a, b2 in arrows:
            if b2 == b:
                compose[(f"{b}<={c}", f"{a}<={b}")] = f"{a}<={c}"
    return FinCat(elements, morphisms, {a: f"{a}<={a}" for a in elements}, compose, name=name)


def chain(n: int) -> FinCat:
    return poset(range(n), lambda a, b: int(a) <= int(b), f"chain-{n}")


def diamond() -> FinCat:
    below = {("0", "1"), ("0", "2"), ("1", "3"), ("2", "3"), ("0", "3")}
    return poset(range(4), lambda a, b: a == b or (a, b) in below, "diamond")


def split_idempotent() -> FinCat:
    """``r: b -> a`` retracts ``i: a -> b``; the idempotent ``e = i r`` lives on ``b``."""
    morphisms = {"1a": ("a", "a"), "1b": ("b", "b"), "i": ("a", "b"), "r": ("b", "a"), "e": ("b", "b")}
    compose = {("r", "i"): "1a", ("i", "r"): "e", ("e", "e"): "e", ("e", "i"): "i", ("r", "e"): "r"}
    return FinCat(["a", "b"], morphisms, {"a": "1a", "b": "1b"}, compose, name="split-idempotent")


def z2_arrow() -> FinCat:
    """An involution ``s`` on ``a`` and an arrow ``f: a -> b`` with ``f s = f``."""
    morphisms = {"1a": ("a", "a"), "s": ("a", "a"), "1b": ("b", "b"), "f": ("a", "b")}
    compose = {("s", "s"): "1a", ("f", "s"): "f"}
    return FinCat(["a", "b"], morphisms, {"a": "1a", "b": "1b"}, compose, name="z2-arrow")


def discover() -> dict:
    """Rebuild every bundled monad, keyed by fixture name (sorted)."""
    out = {}
    c3 = chain(3)
    out["closure_chain3"] = fc.closure_monad(c3, {"0": "1", "1": "1", "2": "2"})
    out["closure_chain2"] = fc.closure_monad(chain(2), {"0": "1", "1": "1"})
    d = diamond()
    out["closure_diamond"] = fc.closure_monad(d, {"0": "1", "1": "1", "2": "3", "3": "3"})
    out["identity_diamond"] = fc.identity_monad(d)
    for C, stem in ((split_idempotent(), "split_idempotent"), (z2_arrow(), "z2_arrow")):
        for k, M in enumerate(fc.enumerate_monads(C)):
            out[f"{stem}_m{k}"] = M
    for name, M in out.items():
        M.name = name
    return dict(sorted(out.items()))


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.json"


def monad_names() -> list:
    """Names of the shipped monad fixtures, sorted."""
    return sorted(p.stem for p in FIXTURE_DIR.glob("*.json"))


def load(name: str) -> fc.Monad:
    return fc.load_monad(fixture_path(name))


def load_all() -> dict:
    return {name: load(name) for name in monad_names()}


def default_probes() -> list:
    """Empty, terminal, chain-2, and the non-thin ``z2_arrow``, in that order."""
    return [fc.empty(), poset(["0"], lambda a, b: True, "terminal"), chain(2), z2_arrow()]


def write_fixtures(directory=None) -> list:
    directory = Path(directory or FIXTURE_DIR)
    written = []
    for name, M in discover().items():
        path = directory / f"{name}.json"
        path.write_text(json.dumps(fc.monad_to_dict(M), indent=1) + "\n", encoding="utf-8")
        written.append(path)
    return written
