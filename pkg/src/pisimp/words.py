"""Words in the face, degeneracy and partial generators.

A word such as ``d1.s0.t0 @3`` is read as function composition: the
rightmost factor acts first on the annotated domain ``3``.  Superscripts are
never written; they are inferred by scanning the word from the right.

The identity families below are the single source of rewrite rules.  Each is
checked against concrete composition by :func:`verify_identities`, and the
normalizer orients exactly the families that pass.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

from . import ordinal_maps as om
from .errors import IllTyped, NonTermination, WordSyntaxError
from .ordinal_maps import PMap

DELTA, SIGMA, TAU = "d", "s", "t"

DEFAULT_BUDGET = 10_000


class Generator(NamedTuple):
    kind: str
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class GenWord:
    """A generator word; ``factors[-1]`` is applied first."""

    domain: int
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(Generator(*g) for g in self.factors))
        self.sizes  # raises IllTyped

    @property
    def sizes(self) -> tuple:
        """Ordinal sizes seen while applying the word, starting at the domain."""
        sizes = [self.domain]
        s = self.domain
        n = len(self.factors)
        for pos in range(n - 1, -1, -1):
            kind, i = self.factors[pos]
            if kind == DELTA:
                if not 0 <= i <= s:
                    raise IllTyped(f"d{i} at position {pos} needs index <= {s}", pos, s)
                s += 1
            elif kind == SIGMA:
                if s < 2 or not 0 <= i < s - 1:
                    raise IllTyped(
                        f"s{i} at position {pos} applied to ordinal {s}"
                        f" (needs size >= 2 and index < {s - 1})", pos, s)
                s -= 1
            elif kind == TAU:
                if s < 1 or not 0 <= i <= s - 1:
                    raise IllTyped(
                        f"t{i} at position {pos} applied to ordinal {s}"
                        f" (needs size >= 1 and index <= {s - 1})", pos, s)
                s -= 1
            else:
                raise WordSyntaxError(f"unknown generator kind {kind!r}")
            sizes.append(s)
        return tuple(sizes)

    @property
    def codomain(self) -> int:
        return self.sizes[-1]

    def typed_factors(self) -> list:
        """``(generator, superscript)`` pairs in written order."""
        sizes = self.sizes
        n = len(self.factors)
        out = []
        for pos, g in enumerate(self.factors):
            before = sizes[n - pos - 1]
            out.append((g, before if g.kind == DELTA else before - 1))
        return out

    def then(self, other: "GenWord") -> "GenWord":
        """``other`` after ``self``."""
        if other.domain != self.codomain:
            raise IllTyped(f"cannot follow {self} by {other}")
        return GenWord(self.domain, other.factors + self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return render_word(self)


@dataclass(frozen=True)
class CanonicalWord:
    """A word ``d_{i_r}..d_{i_1} s_{j_1}..s_{j_s} t_{k_1}..t_{k_t}``."""

    word: GenWord
    i_list: tuple
    j_list: tuple
    k_list: tuple

    @property
    def r(self):
        return len(self.i_list)

    @property
    def s(self):
        return len(self.j_list)

    @property
    def t(self):
        return len(self.k_list)

    def __str__(self):
        return str(self.word)


_WORD_RE = re.compile(r"^\s*(?P<body>[dst]\d+(?:\s*\.\s*[dst]\d+)*)?\s*@\s*(?P<dom>\d+)\s*$")


def parse_word(text: str) -> GenWord:
    match = _WORD_RE.match(text)
    if not match:
        raise WordSyntaxError(f"cannot parse word {text!r}")
    body = match.group("body")
    factors = []
    if body:
        for tok in body.split("."):
            tok = tok.strip()
            factors.append(Generator(tok[0], int(tok[1:])))
    return GenWord(int(match.group("dom")), tuple(factors))


def render_word(w: GenWord) -> str:
    if not w.factors:
        return f"@{w.domain}"
    return ".".join(map(str, w.factors)) + f" @{w.domain}"


def generator_map(kind: str, index: int, sup: int) -> PMap:
    if kind == DELTA:
        return om.delta(sup, index)
    if kind == SIGMA:
        return om.sigma(sup, index)
    return om.tau(sup, index)


def eval_word(w: GenWord) -> PMap:
    result = om.identity(w.domain)
    for g, sup in reversed(w.typed_factors()):
        result = om.compose(generator_map(g.kind, g.index, sup), result)
    return result


def _canonical(dom, i_list, j_list, k_list):
    factors = (
        [Generator(DELTA, i) for i in reversed(i_list)]
        + [Generator(SIGMA, j) for j in j_list]
        + [Generator(TAU, k) for k in k_list]
    )
    return CanonicalWord(GenWord(dom, tuple(factors)), tuple(i_list), tuple(j_list), tuple(k_list))


def canonical_form(f: PMap) -> CanonicalWord:
    k_list = f.undefined_positions()
    g = [v for v in f.table if v is not None]
    j_list = [p for p in range(len(g) - 1) if g[p] == g[p + 1]]
    image = set(g)
    i_list = [v for v in range(f.cod) if v not in image]
    return _canonical(f.dom, i_list, j_list, k_list)


# -- identity families ---------------------------------------------------------


@dataclass(frozen=True)
class IdentityFamily:
    """``lhs(i, j) = rhs(i, j)`` whenever ``cond(i, j)``.

    ``left_is_i`` records which index sits on the left generator of the
    two-letter left-hand side, so a word pair can be matched back to (i, j).
    """

    name: str
    schema: str
    kinds: tuple
    left_is_i: bool
    cond: Callable
    rhs: Callable
    printed_variant_of: Optional[str] = None

    def lhs(self, i, j):
        a, b = (i, j) if self.left_is_i else (j, i)
        return (Generator(self.kinds[0], a), Generator(self.kinds[1], b))

    def match(self, left: Generator, right: Generator):
        """Return ``(i, j)`` if the pair is an instance of the left-hand side."""
        if (left.kind, right.kind) != self.kinds:
            return None
        i, j = (left.index, right.index) if self.left_is_i else (right.index, left.index)
        return (i, j) if self.cond(i, j) else None


def _w(*spec):
    return tuple(Generator(k, i) for k, i in spec)


FAMILIES = (
    IdentityFamily("dd", "d_i d_j = d_{j+1} d_i  (i <= j)", (DELTA, DELTA), True,
                   lambda i, j: i <= j, lambda i, j: _w((DELTA, j + 1), (DELTA, i))),
    IdentityFamily("ss", "s_j s_i = s_i s_{j+1}  (i <= j)", (SIGMA, SIGMA), False,
                   lambda i, j: i <= j, lambda i, j: _w((SIGMA, i), (SIGMA, j + 1))),
    IdentityFamily("sd<", "s_j d_i = d_i s_{j-1}  (i < j)", (SIGMA, DELTA), False,
                   lambda i, j: i < j, lambda i, j: _w((DELTA, i), (SIGMA, j - 1))),
    IdentityFamily("sd=", "s_j d_i = 1  (i = j, j+1)", (SIGMA, DELTA), False,
                   lambda i, j: i in (j, j + 1), lambda i, j: ()),
    IdentityFamily("sd>", "s_j d_i = d_{i-1} s_j  (i > j+1)", (SIGMA, DELTA), False,
                   lambda i, j: i > j + 1, lambda i, j: _w((DELTA, i - 1), (SIGMA, j))),
    IdentityFamily("tt", "t_j t_i = t_i t_{j+1}  (i <= j)", (TAU, TAU), False,
                   lambda i, j: i <= j, lambda i, j: _w((TAU, i), (TAU, j + 1))),
    IdentityFamily("ts<", "t_j s_i = s_i t_{j+1}  (i < j)", (TAU, SIGMA), False,
                   lambda i, j: i < j, lambda i, j: _w((SIGMA, i), (TAU, j + 1))),
    IdentityFamily("ts=", "t_j s_i = t_j t_{j+1}  (i = j)", (TAU, SIGMA), False,
                   lambda i, j: i == j, lambda i, j: _w((TAU, j), (TAU, j + 1))),
    IdentityFamily("ts>", "t_j s_i = s_{i-1} t_j  (i > j)", (TAU, SIGMA), False,
                   lambda i, j: i > j, lambda i, j: _w((SIGMA, i - 1), (TAU, j))),
    IdentityFamily("td<", "t_j d_i = d_i t_{j-1}  (i < j)", (TAU, DELTA), False,
                   lambda i, j: i < j, lambda i, j: _w((DELTA, i), (TAU, j - 1))),
    IdentityFamily("td=", "t_j d_i = 1  (i = j)", (TAU, DELTA), False,
                   lambda i, j: i == j, lambda i, j: ()),
    IdentityFamily("td>", "t_j d_i = d_{i-1} t_j  (i > j)", (TAU, DELTA), False,
                   lambda i, j: i > j, lambda i, j: _w((DELTA, i - 1), (TAU, j))),
)

# The two schemas in their commonly printed form; both
# are refuted by verify_identities and kept only so the report can say so.
PRINTED_ERRATA = (
    IdentityFamily("ts>:printed", "t_j s_i = s_{i+1} t_j  (i > j)", (TAU, SIGMA), False,
                   lambda i, j: i > j, lambda i, j: _w((SIGMA, i + 1), (TAU, j)),
                   printed_variant_of="ts>"),
    IdentityFamily("td<:printed", "t_j d_i = d_i t_{j+1}  (i < j)", (TAU, DELTA), False,
                   lambda i, j: i < j, lambda i, j: _w((DELTA, i), (TAU, j + 1)),
                   printed_variant_of="td<"),
)

FAMILY_BY_NAME = {f.name: f for f in FAMILIES + PRINTED_ERRATA}


class IdentityInstance(NamedTuple):
    family: str
    i: int
    j: int
    lhs: GenWord
    rhs: Optional[GenWord]


def family_instances(family: IdentityFamily, max_size: int):
    """Every well-typed left-hand side whose ordinals all stay ``<= max_size``.

    The right-hand side is ``None`` when it fails to typecheck.
    """
    for dom in range(max_size + 1):
        for i in range(max_size + 2):
            for j in range(max_size + 2):
                if not family.cond(i, j):
                    continue
                try:
                    lhs = GenWord(dom, family.lhs(i, j))
                except IllTyped:
                    continue
                if max(lhs.sizes) > max_size:
                    continue
                try:
                    rhs = GenWord(dom, family.rhs(i, j))
                except IllTyped:
                    rhs = None
                yield IdentityInstance(family.name, i, j, lhs, rhs)


@dataclass
class FamilyResult:
    name: str
    schema: str
    instances: int = 0
    counterexamples: list = field(default_factory=list)
    printed_variant_of: Optional[str] = None

    @property
    def holds(self):
        return not self.counterexamples


@dataclass
class IdentityReport:
    max_size: int
    families: list
    errata: list

    @property
    def total_instances(self):
        return sum(f.instances for f in self.families)

    @property
    def ok(self):
        return all(f.holds for f in self.families)

    def family(self, name):
        for f in self.families + self.errata:
            if f.name == name:
                return f
        raise KeyError(name)

    def erratum_summary(self):
        """For each refuted printed schema: the form that actually holds."""
        out = []
        for e in self.errata:
            corrected = self.family(e.printed_variant_of)
            out.append({
                "printed": e.schema,
                "printed_holds": e.holds,
                "corrected": corrected.schema,
                "corrected_holds": corrected.holds,
                "counterexample": e.counterexamples[0] if e.counterexamples else None,
                "value_counterexample": next(
                    (c for c in e.counterexamples if c["rhs"] is not None), None),
            })
        return out

    def to_dict(self):
        def fam(f):
            return {
                "name": f.name,
                "schema": f.schema,
                "instances": f.instances,
                "holds": f.holds,
                "counterexamples": f.counterexamples[:5],
                "counterexample_count": len(f.counterexamples),
            }
        return {
            "max_size": self.max_size,
            "total_instances": self.total_instances,
            "ok": self.ok,
            "families": [fam(f) for f in self.families],
            "errata": [fam(f) for f in self.errata],
            "errata_summary": self.erratum_summary(),
        }

    def to_text(self):
        lines = [f"partial simplicial identities, ambient ordinals <= {self.max_size}"]
        for f in self.families + self.errata:
            status = "ok" if f.holds else f"FAILS ({len(f.counterexamples)} counterexamples)"
            lines.append(f"  {f.name:<12} {f.schema:<36} {f.instances:>5} instances  {status}")
        lines.append(f"  total instances (corrected families): {self.total_instances}")
        for e in self.erratum_summary():
            cx = e["counterexample"]
            lines.append(f"  printed {e['printed']} is refuted, e.g. {cx['lhs']} (i={cx['i']}, j={cx['j']}): {cx['reason']}")
            vx = e["value_counterexample"]
            if vx:
                lines.append(f"    well-typed failure: {vx['lhs']} vs {vx['rhs']}: {vx['reason']}")
            lines.append(f"    holds instead: {e['corrected']}")
        return "\n".join(lines)


def _check_family(family, max_size):
    result = FamilyResult(family.name, family.schema, printed_variant_of=family.printed_variant_of)
    for inst in family_instances(family, max_size):
        result.instances += 1
        lhs_map = eval_word(inst.lhs)
        reason = None
        if inst.rhs is None:
            reason = "right-hand side is ill-typed"
        else:
            rhs_map = eval_word(inst.rhs)
            if rhs_map != lhs_map:
                reason = f"{lhs_map} != {rhs_map}"
        if reason:
            result.counterexamples.append({
                "i": inst.i, "j": inst.j, "ambient": max(inst.lhs.sizes),
                "lhs": str(inst.lhs), "rhs": None if inst.rhs is None else str(inst.rhs),
                "reason": reason,
            })
    return result


def verify_identities(max_size: int = 8) -> IdentityReport:
    return IdentityReport(
        max_size,
        [_check_family(f, max_size) for f in FAMILIES],
        [_check_family(f, max_size) for f in PRINTED_ERRATA],
    )


# -- rewriting -----------------------------------------------------------------


def _rewrite_once(factors):
    for pos in range(len(factors) - 1):
        left, right = factors[pos], factors[pos + 1]
        for fam in FAMILIES:
            ij = fam.match(left, right)
            if ij is not None:
                new = factors[:pos] + fam.rhs(*ij) + factors[pos + 2:]
                return new, (pos, fam.name, ij)
    return None, None


def normalize(w: GenWord, budget: int = DEFAULT_BUDGET, trace: Optional[list] = None) -> CanonicalWord:
    """Rewrite ``w`` with the oriented identity families until irreducible.

    If ``trace`` is a list, one ``(position, family, (i, j), word)`` tuple is
    appended per rewrite step.
    """
    factors = w.factors
    steps = 0
    while True:
        new, step = _rewrite_once(factors)
        if new is None:
            break
        steps += 1
        if steps > budget:
            raise NonTermination(f"normalizing {w} exceeded {budget} rewrite steps")
        factors = new
        if trace is not None:
            trace.append(step + (render_word(GenWord(w.domain, factors)),))
    i_rev = [g.index for g in factors if g.kind == DELTA]
    j_list = [g.index for g in factors if g.kind == SIGMA]
    k_list = [g.index for g in factors if g.kind == TAU]
    return _canonical(w.domain, i_rev[::-1], j_list, k_list)


def random_word(rng: random.Random, max_len: int = 10, max_size: int = 6) -> GenWord:
    """A uniformly grown well-typed word with every ordinal ``<= max_size``."""
    dom = rng.randint(0, max_size)
    length = rng.randint(0, max_len)
    s = dom
    factors = []
    for _ in range(length):
        options = []
        if s + 1 <= max_size:
            options += [Generator(DELTA, i) for i in range(s + 1)]
        if s >= 2:
            options += [Generator(SIGMA, i) for i in range(s - 1)]
        if s >= 1:
            options += [Generator(TAU, i) for i in range(s)]
        if not options:
            break
        g = rng.choice(options)
        s = s + 1 if g.kind == DELTA else s - 1
        factors.append(g)
    return GenWord(dom, tuple(reversed(factors)))


def check_rewriting(samples: int = 10_000, seed: int = 0, max_len: int = 10, max_size: int = 6,
                    budget: int = DEFAULT_BUDGET) -> dict:
    """Normalize seeded random words and compare with the canonical form of their value."""
    rng = random.Random(seed)
    mismatches, exhausted, longest = [], [], 0
    for _ in range(samples):
        w = random_word(rng, max_len, max_size)
        trace = []
        try:
            got = normalize(w, budget, trace)
        except NonTermination:
            exhausted.append(str(w))
            continue
        longest = max(longest, len(trace))
        want = canonical_form(eval_word(w))
        if got.word != want.word:
            mismatches.append({"word": str(w), "normalized": str(got), "canonical": str(want)})
    return {
        "samples": samples,
        "seed": seed,
        "mismatches": mismatches,
        "exhausted": exhausted,
        "max_steps": longest,
        "ok": not mismatches and not exhausted,
    }
