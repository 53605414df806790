"""Finite ordinals and partial monotone maps between them.

An ordinal ``n`` is the linear order ``{0, ..., n-1}``.  A :class:`PMap` is a
partial, weakly monotone map ``n -> m`` stored as its full table, with
``None`` marking undefined positions.  Total maps are the morphisms of the
simplicial category; partial ones live in the partial simplicial category.
"""

from __future__ import annotations

import enum
import re
from functools import lru_cache
from operator import itemgetter
from math import comb
from typing import Iterator, Optional, Sequence

from .errors import (
    IndexOutOfRange,
    LengthMismatch,
    NonMonotone,
    SizeLimitExceeded,
    TypeMismatch,
    ValueOutOfRange,
    WordSyntaxError,
)

MAX_SIZE = 2**16

__all__ = [
    "Flavor",
    "PMap",
    "make_pmap",
    "identity",
    "compose",
    "sigma",
    "delta",
    "tau",
    "ordinal_sum",
    "in_flavor",
    "enumerate_hom",
    "count_hom",
    "parse_pmap",
]


class Flavor(enum.Enum):
    """Which wide subcategory of partial maps a hom-set is drawn from."""

    DELTA = "delta"
    PI = "pi"
    PIL = "pil"
    PIR = "pir"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown flavor {text!r} (expected one of {names})") from None


class PMap(tuple):
    """A partial monotone map ``dom -> cod``.

    Immutable and hashable.  Build instances with :func:`make_pmap`
    (validating) or the generator constructors; the bare constructor trusts
    its input.
    """

    __slots__ = ()

    def __new__(cls, dom: int, cod: int, table: tuple):
        return tuple.__new__(cls, (dom, cod, table))

    dom = property(itemgetter(0))
    cod = property(itemgetter(1))
    table = property(itemgetter(2))

    # A plain tuple with the same fields is not a map.
    def __eq__(self, other):
        if not isinstance(other, PMap):
            return False if isinstance(other, tuple) else NotImplemented
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        if not isinstance(other, PMap):
            return True if isinstance(other, tuple) else NotImplemented
        return tuple.__ne__(self, other)

    __hash__ = tuple.__hash__

    def __getnewargs__(self):
        return tuple(self)

    def __call__(self, i: int) -> Optional[int]:
        return self[2][i]

    def __repr__(self):
        return f"PMap({self})"

    def __str__(self):
        body = ",".join("_" if v is None else str(v) for v in self[2])
        return f"{self[0]}->{self[1]}:[{body}]"

    @property
    def is_total(self) -> bool:
        return None not in self.table

    def defined_positions(self) -> list:
        return [i for i, v in enumerate(self.table) if v is not None]

    def undefined_positions(self) -> list:
        return [i for i, v in enumerate(self.table) if v is None]


def _check_size(n, what):
    if not isinstance(n, int) or n < 0:
        raise ValueOutOfRange(f"{what} must be a natural number, got {n!r}")
    if n > MAX_SIZE:
        raise SizeLimitExceeded(f"{what}={n} exceeds the limit {MAX_SIZE}")


def make_pmap(dom: int, cod: int, table: Sequence[Optional[int]]) -> PMap:
    """Validate ``table`` and return the corresponding :class:`PMap`."""
    _check_size(dom, "dom")
    _check_size(cod, "cod")
    table = tuple(table)
    if len(table) != dom:
        raise LengthMismatch(f"table has length {len(table)}, expected dom={dom}")
    defined = [(pos, v) for pos, v in enumerate(table) if v is not None]
    for pos, v in defined:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueOutOfRange(f"entry {pos} = {v!r} is not in range(0, {cod})")
    # Monotonicity is reported before range, so [1,0] into 1 is NonMonotone.
    for (p, a), (q, b) in zip(defined, defined[1:]):
        if b < a:
            raise NonMonotone(f"f({p}) = {a} > f({q}) = {b}")
    for pos, v in defined:
        if v >= cod:
            raise ValueOutOfRange(f"entry {pos} = {v!r} is not in range(0, {cod})")
    return PMap(dom, cod, table)


def identity(n: int) -> PMap:
    _check_size(n, "n")
    return PMap(n, n, tuple(range(n)))


def compose(g: PMap, f: PMap) -> PMap:
    """Return ``g o f`` (apply ``f`` first); defined where both steps are."""
    if f.cod != g.dom:
        raise TypeMismatch(f"cannot compose {g} after {f}: {f.cod} != {g.dom}")
    gt = g.table
    return PMap(f.dom, g.cod, tuple(None if v is None else gt[v] for v in f.table))


def sigma(n: int, i: int) -> PMap:
    """The surjection ``n+1 -> n`` hitting ``i`` twice."""
    if n < 1 or not 0 <= i < n:
        raise IndexOutOfRange(f"sigma^{n}_{i} needs n >= 1 and 0 <= i < n")
    return PMap(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 1)))


def delta(n: int, i: int) -> PMap:
    """The injection ``n -> n+1`` missing ``i``."""
    if n < 0 or not 0 <= i <= n:
        raise IndexOutOfRange(f"delta^{n}_{i} needs 0 <= i <= n")
    return PMap(n, n + 1, tuple(k if k < i else k + 1 for k in range(n)))


def tau(n: int, i: int) -> PMap:
    """The partial surjection ``n+1 -> n`` undefined exactly at ``i``."""
    if n < 0 or not 0 <= i <= n:
        raise IndexOutOfRange(f"tau^{n}_{i} needs 0 <= i <= n")
    return PMap(
        n + 1, n, tuple(None if k == i else (k if k < i else k - 1) for k in range(n + 1))
    )


def ordinal_sum(f: PMap, g: PMap) -> PMap:
    """Place ``g`` after ``f``: ``f + g : f.dom + g.dom -> f.cod + g.cod``."""
    shift = f.cod
    return PMap(
        f.dom + g.dom,
        f.cod + g.cod,
        f.table + tuple(None if v is None else v + shift for v in g.table),
    )


def in_flavor(f: PMap, flavor: Flavor) -> bool:
    flavor = Flavor.parse(flavor)
    if flavor is Flavor.PI:
        return True
    if flavor is Flavor.DELTA:
        return f.is_total
    defined = [v is not None for v in f.table]
    if flavor is Flavor.PIL:
        # defined set is an initial segment
        return all(defined[i] or not defined[i + 1] for i in range(len(defined) - 1))
    return all(defined[i + 1] or not defined[i] for i in range(len(defined) - 1))


def _tables(n, m, flavor, lo=0, pos=0, seen_defined=False, seen_undefined=False):
    # Yields suffix tables in lexicographic order with None < 0.
    if pos == n:
        yield ()
        return
    if flavor is Flavor.DELTA:
        allow_none = False
    elif flavor is Flavor.PIR:
        allow_none = not seen_defined
    else:
        allow_none = True
    allow_value = not (flavor is Flavor.PIL and seen_undefined)
    if allow_none:
        for rest in _tables(n, m, flavor, lo, pos + 1, seen_defined, True):
            yield (None,) + rest
    if allow_value:
        for v in range(lo, m):
            for rest in _tables(n, m, flavor, v, pos + 1, True, seen_undefined):
                yield (v,) + rest


def enumerate_hom(n: int, m: int, flavor=Flavor.PI) -> list:
    """All maps ``n -> m`` of ``flavor``, lexicographic with undefined first."""
    flavor = Flavor.parse(flavor)
    return [PMap(n, m, t) for t in _tables(n, m, flavor)]


def _count_delta(n, m):
    if n == 0:
        return 1
    return comb(n + m - 1, n)


@lru_cache(maxsize=None)
def count_hom(n: int, m: int, flavor=Flavor.PI) -> int:
    """Closed-form size of a hom-set; independent of :func:`enumerate_hom`."""
    flavor = Flavor.parse(flavor)
    if flavor is Flavor.DELTA:
        return _count_delta(n, m)
    if flavor is Flavor.PI:
        return sum(comb(n, k) * _count_delta(k, m) for k in range(n + 1))
    # the defined set is a prefix (PIL) or a suffix (PIR) of each length k
    return sum(_count_delta(k, m) for k in range(n + 1))


_PMAP_RE = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*:\s*\[(.*)\]\s*$")


def parse_pmap(text: str) -> PMap:
    """Parse the literal ``n->m:[v0,v1,...]`` with ``_`` for undefined."""
    match = _PMAP_RE.match(text)
    if not match:
        raise WordSyntaxError(f"not a map literal: {text!r}")
    dom, cod, body = int(match.group(1)), int(match.group(2)), match.group(3).strip()
    entries = [] if not body else [e.strip() for e in body.split(",")]
    table = []
    for e in entries:
        if e == "_":
            table.append(None)
        elif e.isdigit():
            table.append(int(e))
        else:
            raise WordSyntaxError(f"bad entry {e!r} in {text!r}")
    return make_pmap(dom, cod, table)
