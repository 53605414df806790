"""The left and right weights: the simplicial category acting on Pi_l and Pi_r.

The left weight tensors a partial map on the left by a total map
(``f + g``); the right weight tensors on the right (``g + f``).  Only the
actions themselves are exposed; the one-object 2-category they come from is
left implicit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import ordinal_maps as om
from .errors import NotTotal, WrongFlavor
from .ordinal_maps import Flavor, PMap


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def flavor(self):
        return Flavor.PIL if self is Side.LEFT else Flavor.PIR


def act(side: Side, f: PMap, g: PMap) -> PMap:
    """Act on ``g`` (in Pi_l or Pi_r) by the total map ``f``."""
    if not f.is_total:
        raise NotTotal(f"{f} is not a total map")
    if not om.in_flavor(g, side.flavor):
        raise WrongFlavor(f"{g} is not in {side.flavor.value}")
    return om.ordinal_sum(f, g) if side is Side.LEFT else om.ordinal_sum(g, f)


def top_tau(side: Side, n: int) -> PMap:
    """``id_n`` acting on the partial map ``1 -> 0``."""
    return act(side, om.identity(n), om.tau(0, 0))


@dataclass
class ActionReport:
    side: Side
    bound: int
    counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.counterexamples

    @property
    def total(self):
        return sum(self.counts.values())

    def _fail(self, law, *maps):
        self.counterexamples.append({"law": law, "maps": [str(m) for m in maps]})

    def to_dict(self):
        return {
            "side": self.side.value,
            "bound": self.bound,
            "counts": dict(self.counts),
            "ok": self.ok,
            "counterexamples": self.counterexamples[:10],
        }


def _homs(bound, flavor):
    return {
        (a, b): om.enumerate_hom(a, b, flavor)
        for a in range(bound + 1)
        for b in range(bound + 1)
    }


def _check_side(side, bound):
    rep = ActionReport(side, bound)
    counts = rep.counts
    for law in ("unit", "identities", "closure", "associativity", "interchange"):
        counts[law] = 0
    total = _homs(bound, Flavor.DELTA)
    partial = _homs(bound, side.flavor)
    id0 = om.identity(0)

    for (p, q), gs in partial.items():
        for g in gs:
            counts["unit"] += 1
            if act(side, id0, g) != g:
                rep._fail("unit", g)

    for n in range(bound + 1):
        for m in range(bound + 1):
            counts["identities"] += 1
            if act(side, om.identity(n), om.identity(m)) != om.identity(n + m):
                rep._fail("identities", om.identity(n), om.identity(m))

    for fs in total.values():
        for f in fs:
            for gs in partial.values():
                for g in gs:
                    counts["closure"] += 1
                    if not om.in_flavor(act(side, f, g), side.flavor):
                        rep._fail("closure", f, g)
                    # acting twice equals acting once by the sum
                    for f2 in (f, om.identity(1)):
                        counts["associativity"] += 1
                        twice = act(side, f2, act(side, f, g))
                        summed = om.ordinal_sum(f2, f) if side is Side.LEFT else om.ordinal_sum(f, f2)
                        if twice != act(side, summed, g):
                            rep._fail("associativity", f2, f, g)

    # (f' o f) acting on (g' o g) equals the composite of the two actions;
    # flavors were already checked above, so the raw tensor is used here
    if side is Side.LEFT:
        raw = om.ordinal_sum
    else:
        def raw(f, g):
            return om.ordinal_sum(g, f)
    memo = {}

    def tensor(f, g):
        key = (f, g)
        out = memo.get(key)
        if out is None:
            out = memo[key] = raw(f, g)
        return out

    compose = om.compose
    for (a, b), fs in total.items():
        for c in range(bound + 1):
            fs2 = total[(b, c)]
            composites = [(f, f2, compose(f2, f)) for f in fs for f2 in fs2]
            for (p, q), gs in partial.items():
                for r in range(bound + 1):
                    gs2 = partial[(q, r)]
                    gpairs = [(g, g2, compose(g2, g)) for g in gs for g2 in gs2]
                    for f, f2, ff in composites:
                        for g, g2, gg in gpairs:
                            counts["interchange"] += 1
                            if tensor(ff, gg) != compose(tensor(f2, g2), tensor(f, g)):
                                rep._fail("interchange", f, f2, g, g2)
    return rep


def check_action_laws(bound: int = 3) -> dict:
    """Exhaustively check both actions on all maps with sizes ``<= bound``.

    Returns ``{Side.LEFT: ActionReport, Side.RIGHT: ActionReport}``.
    """
    return {side: _check_side(side, bound) for side in Side}
