"""Eilenberg-Moore and Kleisli objects of finite monads, certified as weighted (co)limits.

For a monad ``M = (C, T, eta, mu)`` and a probe category ``X`` this module
builds, by exhaustive search,

* ``em_category(M)`` and ``kleisli_category(M)``;
* ``subeq_category(M, X)``: pairs ``(U: X -> C, xi: TU => U)`` with
  ``xi . eta_U = 1`` and ``xi . T(xi) = xi . mu_U``, and the 2-cells between
  them compatible with ``xi``;
* ``coeq_category(M, X)``: the dual pairs ``(F: C -> X, zeta: FT => F)``;
* truncated cones over the left weight (and cocones over the right weight)
  carried by such pairs, with a checker for the identities they must respect;
* comparison reports exhibiting ``Cat(X, EM) ~ Subeq(X)`` and
  ``Cat(Kl, X) ~ Coeq(X)`` as explicit isomorphisms of finite categories,
  natural in ``X``.

Cones use the ordering in which position 0 of an ordinal is the outermost
copy of ``T`` (``generator_image(..., mirrored=True)``); that is the
convention under which the left action ``f + g`` becomes ``T(f) * lambda(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from . import fincat as fc
from . import ordinal_maps as om
from . import words as wd
from .errors import InvalidStructure, ShapeMismatch
from .fincat import FinCat, FinFunctor, Monad, NatTrans
from .weights import Side

SCHEMA = "pisimp.comparison/1"
DEFAULT_DEPTH = 4

__all__ = [
    "Algebra",
    "AlgebraHom",
    "KlArrow",
    "SubeqObject",
    "SubeqMorphism",
    "CoeqObject",
    "CoeqMorphism",
    "algebras",
    "em_category",
    "kleisli_category",
    "hom_category",
    "subeq_problems",
    "coeq_problems",
    "subeq_category",
    "coeq_category",
    "TruncatedCone",
    "CheckReport",
    "cone_from_subeq",
    "cocone_from_coeq",
    "subeq_from_cone",
    "coeq_from_cocone",
    "cone_check",
    "cone_correspondence",
    "modification_correspondence",
    "ComparisonReport",
    "em_comparison",
    "kleisli_comparison",
    "duality_check",
    "render",
]


# -- Eilenberg-Moore and Kleisli categories ---------------------------------------


class Algebra(NamedTuple):
    carrier: object
    structure: object  # a morphism T(carrier) -> carrier


class AlgebraHom(NamedTuple):
    source: Algebra
    target: Algebra
    map: object


class KlArrow(NamedTuple):
    """A Kleisli arrow ``source -> target``, i.e. a morphism ``source -> T(target)``."""

    source: object
    target: object
    map: object


def algebras(M: Monad) -> list:
    """Every algebra ``(c, alpha)``, by object order then morphism order."""
    C, T, eta, mu = M.C, M.T, M.eta, M.mu
    out = []
    for c in C.objects:
        for a in C.hom(T.ob[c], c):
            if C.comp(a, eta[c]) == C.id(c) and C.comp(a, T.mor[a]) == C.comp(a, mu[c]):
                out.append(Algebra(c, a))
    return out


def _checked(D: FinCat) -> FinCat:
    problems = fc.validate_category(D)
    if problems:
        raise InvalidStructure(f"category {D.name or ''}".strip(), problems)
    return D


def _composition(morphisms, make):
    # all composable pairs; make(g, f) returns the composite id
    by_src = {}
    for m, (a, _) in morphisms.items():
        by_src.setdefault(a, []).append(m)
    table = {}
    for f, (_, b) in morphisms.items():
        for g in by_src.get(b, ()):
            table[(g, f)] = make(g, f)
    return table


def em_category(M: Monad):
    """``(EM, forget)``: the category of algebras and its forgetful functor to ``C``."""
    C, T = M.C, M.T
    algs = algebras(M)
    morphisms = {}
    for A in algs:
        for B in algs:
            for h in C.hom(A.carrier, B.carrier):
                if C.comp(h, A.structure) == C.comp(B.structure, T.mor[h]):
                    morphisms[AlgebraHom(A, B, h)] = (A, B)
    identities = {A: AlgebraHom(A, A, C.id(A.carrier)) for A in algs}
    table = _composition(morphisms, lambda g, f: AlgebraHom(f.source, g.target, C.comp(g.map, f.map)))
    EM = _checked(FinCat(algs, morphisms, identities, table, name=f"EM({M.name or 'T'})"))
    forget = FinFunctor(EM, C, {A: A.carrier for A in algs}, {m: m.map for m in morphisms})
    return EM, forget


def kleisli_category(M: Monad):
    """``(Kl, incl)`` with ``incl: C -> Kl`` the identity-on-objects free functor."""
    C, T, eta, mu = M.C, M.T, M.eta, M.mu
    morphisms = {}
    for a in C.objects:
        for b in C.objects:
            for f in C.hom(a, T.ob[b]):
                morphisms[KlArrow(a, b, f)] = (a, b)
    identities = {a: KlArrow(a, a, eta[a]) for a in C.objects}

    def kcomp(g, f):
        return KlArrow(f.source, g.target, C.comp(mu[g.target], C.comp(T.mor[g.map], f.map)))

    Kl = _checked(FinCat(C.objects, morphisms, identities, _composition(morphisms, kcomp),
                         name=f"Kl({M.name or 'T'})"))
    incl = FinFunctor(
        C, Kl, {a: a for a in C.objects},
        {m: KlArrow(a, b, C.comp(eta[b], m)) for m, (a, b) in C.morphisms.items()},
    )
    return Kl, incl


def hom_category(X: FinCat, Y: FinCat, budget: Optional[int] = None) -> FinCat:
    """The functor category ``[X, Y]``: functors and natural transformations."""
    functors = fc.enumerate_functors(X, Y, budget)
    morphisms = {}
    for F in functors:
        for G in functors:
            for alpha in fc.enumerate_nats(F, G, budget):
                morphisms[alpha] = (F, G)
    identities = {F: fc.identity_nat(F) for F in functors}
    table = _composition(morphisms, fc.vertical_comp)
    return FinCat(functors, morphisms, identities, table, name=f"[{X.name}, {Y.name}]")


# -- subequalizing and coequalizing pairs ----------------------------------------------


class SubeqObject(NamedTuple):
    U: FinFunctor
    xi: NatTrans


class SubeqMorphism(NamedTuple):
    source: SubeqObject
    target: SubeqObject
    nu0: NatTrans


class CoeqObject(NamedTuple):
    F: FinFunctor
    zeta: NatTrans


class CoeqMorphism(NamedTuple):
    source: CoeqObject
    target: CoeqObject
    nu0: NatTrans


class _Cat:
    """Whiskering in Cat, written so the same code also runs in Cat^op."""

    def cells(self, X, C, budget):
        return fc.enumerate_functors(X, C, budget)

    def after(self, T, U):  # T after U
        return fc.compose_functors(T, U)

    def left(self, T, alpha):  # T alpha
        return fc.whisker(T, alpha)

    def right(self, alpha, U):  # alpha U
        return fc.whisker(alpha, U)


class _CatOp(_Cat):
    """Cat with 1-cells reversed: a 1-cell ``X -> C`` is a functor ``C -> X``."""

    def cells(self, X, C, budget):
        return fc.enumerate_functors(C, X, budget)

    def after(self, T, U):
        return fc.compose_functors(U, T)

    def left(self, T, alpha):
        return fc.whisker(alpha, T)

    def right(self, alpha, U):
        return fc.whisker(U, alpha)


def _ambient(dual):
    return _CatOp() if dual else _Cat()


def subeq_problems(M: Monad, s, dual: bool = False) -> list:
    """Which of the two defining equations ``(U, xi)`` violates (empty if none)."""
    amb = _ambient(dual)
    U, xi = s
    problems = []
    if fc.vertical_comp(xi, amb.right(M.eta, U)) != fc.identity_nat(U):
        problems.append("unit equation xi.eta_U = 1 fails")
    if fc.vertical_comp(xi, amb.left(M.T, xi)) != fc.vertical_comp(xi, amb.right(M.mu, U)):
        problems.append("multiplication equation xi.T(xi) = xi.mu_U fails")
    return problems


def coeq_problems(M: Monad, c) -> list:
    C, T, eta, mu = M.C, M.T, M.eta, M.mu
    F, zeta = c
    X = F.target
    problems = []
    if any(X.comp(zeta[x], F.mor[eta[x]]) != X.id(F.ob[x]) for x in C.objects):
        problems.append("unit equation zeta.F(eta) = 1 fails")
    if any(X.comp(zeta[x], F.mor[mu[x]]) != X.comp(zeta[x], zeta[T.ob[x]]) for x in C.objects):
        problems.append("multiplication equation zeta.F(mu) = zeta.zeta_T fails")
    return problems


def subeq_category(M: Monad, X: FinCat, dual: bool = False, budget: Optional[int] = None) -> FinCat:
    """All subequalizing pairs for ``M`` with domain ``X`` and the 2-cells between them.

    With ``dual=True`` the same definition is read in Cat^op, where it
    describes pairs ``(U: C -> X, xi: U T => U)``; see :func:`duality_check`.
    """
    amb = _ambient(dual)
    objects = []
    for U in amb.cells(X, M.C, budget):
        TU = amb.after(M.T, U)
        for xi in fc.enumerate_nats(TU, U, budget):
            s = SubeqObject(U, xi)
            if not subeq_problems(M, s, dual):
                objects.append(s)
    morphisms = {}
    for s in objects:
        for s2 in objects:
            for nu in fc.enumerate_nats(s.U, s2.U, budget):
                if fc.vertical_comp(s2.xi, amb.left(M.T, nu)) == fc.vertical_comp(nu, s.xi):
                    morphisms[SubeqMorphism(s, s2, nu)] = (s, s2)
    identities = {s: SubeqMorphism(s, s, fc.identity_nat(s.U)) for s in objects}
    table = _composition(
        morphisms, lambda g, f: SubeqMorphism(f.source, g.target, fc.vertical_comp(g.nu0, f.nu0))
    )
    label = "Subeq^op" if dual else "Subeq"
    return FinCat(objects, morphisms, identities, table, name=f"{label}({M.name or 'T'}, {X.name})")


def coeq_category(M: Monad, X: FinCat, budget: Optional[int] = None) -> FinCat:
    """All pairs ``(F: C -> X, zeta: FT => F)`` coequalizing ``M``, with their 2-cells."""
    C, T = M.C, M.T
    objects = []
    for F in fc.enumerate_functors(C, X, budget):
        for zeta in fc.enumerate_nats(fc.compose_functors(F, T), F, budget):
            c = CoeqObject(F, zeta)
            if not coeq_problems(M, c):
                objects.append(c)
    morphisms = {}
    for c in objects:
        for c2 in objects:
            for nu in fc.enumerate_nats(c.F, c2.F, budget):
                if all(X.comp(c2.zeta[x], nu[T.ob[x]]) == X.comp(nu[x], c.zeta[x]) for x in C.objects):
                    morphisms[CoeqMorphism(c, c2, nu)] = (c, c2)
    identities = {c: CoeqMorphism(c, c, fc.identity_nat(c.F)) for c in objects}
    table = _composition(
        morphisms, lambda g, f: CoeqMorphism(f.source, g.target, fc.vertical_comp(g.nu0, f.nu0))
    )
    return FinCat(objects, morphisms, identities, table, name=f"Coeq({M.name or 'T'}, {X.name})")


# -- truncated cones -------------------------------------------------------------------


def _in_side(side: Side, g: wd.Generator, sup: int) -> bool:
    if g.kind != wd.TAU:
        return True
    return g.index == (sup if side is Side.LEFT else 0)


def _word_in_side(side: Side, w: wd.GenWord) -> bool:
    return all(_in_side(side, g, sup) for g, sup in w.typed_factors())


def side_word(side: Side, f: om.PMap) -> wd.GenWord:
    """A word for ``f`` (in Pi_l or Pi_r) using only generators of that subcategory.

    For the left side this is the canonical form; for the right side the
    partial part is rewritten as ``t0 ... t0``.
    """
    canon = wd.canonical_form(f)
    w = canon.word
    if side is Side.RIGHT and canon.t:
        head = w.factors[: len(w.factors) - canon.t]
        w = wd.GenWord(w.domain, head + (wd.Generator(wd.TAU, 0),) * canon.t)
    if not _word_in_side(side, w) or wd.eval_word(w) != f:
        raise ShapeMismatch(f"{f} is not in {side.flavor.value}")
    return w


@dataclass
class TruncatedCone:
    """A (co)cone given on the levels ``0..depth`` and on generators between them.

    ``side`` is LEFT for a cone over the left weight (built from a
    subequalizing pair) and RIGHT for a cocone over the right weight.
    """

    side: Side
    monad: Monad
    apex: tuple
    depth: int
    levels: dict
    generators: dict = field(repr=False)

    def generator(self, g: wd.Generator, sup: int) -> NatTrans:
        return self.generators[(g.kind, g.index, sup)]

    def image(self, w: wd.GenWord) -> NatTrans:
        """The vertical composite of the generator images along ``w``."""
        result = fc.identity_nat(self.levels[w.domain])
        for g, sup in reversed(w.typed_factors()):
            result = fc.vertical_comp(self.generator(g, sup), result)
        return result

    def image_of_map(self, f: om.PMap) -> NatTrans:
        return self.image(side_word(self.side, f))


def _generator_keys(side: Side, depth: int):
    for n in range(depth):
        for i in range(n + 1):
            yield (wd.DELTA, i, n)
        if n >= 1:
            for i in range(n):
                yield (wd.SIGMA, i, n)
        yield (wd.TAU, n if side is Side.LEFT else 0, n)


def cone_from_subeq(M: Monad, s: SubeqObject, depth: int = DEFAULT_DEPTH) -> TruncatedCone:
    """``lambda(n) = T^n U``, ``lambda(f) = T(f) U`` on total maps, ``lambda(t^n_n) = T^n xi``."""
    U, xi = s
    levels = {n: fc.compose_functors(M.power(n), U) for n in range(depth + 1)}
    gens = {}
    for kind, i, n in _generator_keys(Side.LEFT, depth):
        if kind == wd.TAU:
            gens[(kind, i, n)] = fc.whisker(M.power(n), xi)
        else:
            gens[(kind, i, n)] = fc.whisker(fc.generator_image(M, kind, i, n, mirrored=True), U)
    return TruncatedCone(Side.LEFT, M, s, depth, levels, gens)


def cocone_from_coeq(M: Monad, c: CoeqObject, depth: int = DEFAULT_DEPTH) -> TruncatedCone:
    """``lambda(n) = F T^n``, ``lambda(f) = F T(f)`` on total maps, ``lambda(t^n_0) = zeta T^n``."""
    F, zeta = c
    levels = {n: fc.compose_functors(F, M.power(n)) for n in range(depth + 1)}
    gens = {}
    for kind, i, n in _generator_keys(Side.RIGHT, depth):
        if kind == wd.TAU:
            gens[(kind, i, n)] = fc.whisker(zeta, M.power(n))
        else:
            gens[(kind, i, n)] = fc.whisker(F, fc.generator_image(M, kind, i, n, mirrored=True))
    return TruncatedCone(Side.RIGHT, M, c, depth, levels, gens)


def subeq_from_cone(cone: TruncatedCone) -> SubeqObject:
    """Read ``(U, xi)`` off ``lambda(0)`` and ``lambda(t^0_0)``."""
    return SubeqObject(cone.levels[0], cone.generators[(wd.TAU, 0, 0)])


def coeq_from_cocone(cone: TruncatedCone) -> CoeqObject:
    return CoeqObject(cone.levels[0], cone.generators[(wd.TAU, 0, 0)])


# Instances that pin down the two defining equations of the apex.
KEY_INSTANCES = {
    Side.LEFT: (
        ("td= (i=0, j=0)", "t0.d0 @0", "@0"),
        ("ts= (i=0, j=0)", "t0.s0 @2", "t0.t1 @2"),
    ),
    Side.RIGHT: (
        ("td= (i=0, j=0)", "t0.d0 @0", "@0"),
        ("tt/ts= (i=0, j=0)", "t0.t0 @2", "t0.s0 @2"),
    ),
}


@dataclass
class CheckReport:
    side: Side
    depth: int
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def cited(self) -> list:
        return [f["instance"] for f in self.failures]

    def to_dict(self):
        return {"side": self.side.value, "depth": self.depth, "ok": self.ok,
                "counts": dict(self.counts), "failures": self.failures[:20]}


def _mismatch(a: NatTrans, b: NatTrans):
    for x in a.domain_category.objects:
        if a[x] != b[x]:
            return f"components differ at {x!r}: {a[x]!r} vs {b[x]!r}"
    return "transformations differ"


def _all_generators(side, depth):
    for kind, i, n in _generator_keys(side, depth):
        yield wd.Generator(kind, i), n


def cone_check(cone: TruncatedCone) -> CheckReport:
    """Check a truncated (co)cone against every identity it must respect.

    * the two key instances fixing the apex equations;
    * every instance of the partial simplicial identities whose two sides are
      words in the side's subcategory and stay within the depth;
    * every composite of two generators against the normal word of the
      composite map (functoriality);
    * 2-naturality: the action of each Delta generator and of ``id_1`` on
      each generator and identity.
    """
    side, depth, M = cone.side, cone.depth, cone.monad
    rep = CheckReport(side, depth)
    counts = rep.counts

    def compare(check, instance, lhs, rhs):
        counts[check] = counts.get(check, 0) + 1
        if lhs != rhs:
            rep.failures.append({"check": check, "instance": instance, "detail": _mismatch(lhs, rhs)})

    for label, lhs, rhs in KEY_INSTANCES[side]:
        lw, rw = wd.parse_word(lhs), wd.parse_word(rhs)
        if max(lw.sizes + rw.sizes) <= depth:
            compare("key", f"{label}: {lhs} = {rhs}", cone.image(lw), cone.image(rw))

    for family in wd.FAMILIES:
        for inst in wd.family_instances(family, depth):
            if inst.rhs is None or max(inst.rhs.sizes, default=0) > depth:
                continue
            if _word_in_side(side, inst.lhs) and _word_in_side(side, inst.rhs):
                compare(
                    "identity",
                    f"{inst.family} (i={inst.i}, j={inst.j}): {inst.lhs} = {inst.rhs}",
                    cone.image(inst.lhs), cone.image(inst.rhs),
                )

    gens = list(_all_generators(side, depth))
    for g1, n1 in gens:
        start, mid = _ends(g1, n1)
        for g2, n2 in gens:
            if _ends(g2, n2)[0] != mid:
                continue
            w = wd.GenWord(start, (g2, g1))
            normal = side_word(side, wd.eval_word(w))
            compare("composite", f"{w} = {normal}", cone.image(w), cone.image(normal))

    acting = [(g, n) for g, n in gens if g.kind != wd.TAU] + [(None, 1)]
    targets = [(g, n) for g, n in gens] + [(None, n) for n in range(depth + 1)]
    for f, a in acting:
        fmap = om.identity(1) if f is None else wd.generator_map(f.kind, f.index, a)
        tf = fc.identity_nat(M.power(1)) if f is None else fc.generator_image(M, f.kind, f.index, a, mirrored=True)
        for g, n in targets:
            gmap = om.identity(n) if g is None else wd.generator_map(g.kind, g.index, n)
            if max(fmap.dom + gmap.dom, fmap.cod + gmap.cod) > depth:
                continue
            lg = fc.identity_nat(cone.levels[n]) if g is None else cone.generator(g, n)
            if side is Side.LEFT:
                summed, acted = om.ordinal_sum(fmap, gmap), fc.horizontal_comp(tf, lg)
            else:
                summed, acted = om.ordinal_sum(gmap, fmap), fc.horizontal_comp(lg, tf)
            fname = "id1" if f is None else f"{f}^{a}"
            gname = f"id{n}" if g is None else f"{g}^{n}"
            compare("2-naturality", f"{fname} acting on {gname}", cone.image_of_map(summed), acted)
    return rep


def _ends(g: wd.Generator, sup: int) -> tuple:
    """Domain and codomain of the generator ``g`` with superscript ``sup``."""
    return (sup, sup + 1) if g.kind == wd.DELTA else (sup + 1, sup)


def cone_correspondence(M: Monad, X: FinCat, depth: int = DEFAULT_DEPTH, side: Side = Side.LEFT,
                        budget: Optional[int] = None) -> dict:
    """Both directions of the cone/pair correspondence, over every candidate pair.

    Candidates are all ``(U, xi)`` with ``xi: TU => U`` (or ``(F, zeta)``
    with ``zeta: FT => F``), whether or not they satisfy the equations.
    """
    if side is Side.LEFT:
        cells = fc.enumerate_functors(X, M.C, budget)
        build, read, problems = cone_from_subeq, subeq_from_cone, subeq_problems
        pairs = ((U, xi) for U in cells
                 for xi in fc.enumerate_nats(fc.compose_functors(M.T, U), U, budget))
        make = SubeqObject
    else:
        cells = fc.enumerate_functors(M.C, X, budget)
        build, read, problems = cocone_from_coeq, coeq_from_cocone, coeq_problems
        pairs = ((F, z) for F in cells
                 for z in fc.enumerate_nats(fc.compose_functors(F, M.T), F, budget))
        make = CoeqObject
    out = {"candidates": 0, "pairs": 0, "cones": 0, "mismatches": []}
    for a, b in pairs:
        p = make(a, b)
        out["candidates"] += 1
        is_pair = not problems(M, p)
        cone = build(M, p, depth)
        passes = cone_check(cone).ok
        out["pairs"] += is_pair
        out["cones"] += passes
        if is_pair != passes or (passes and problems(M, read(cone))):
            out["mismatches"].append(render(p))
    out["ok"] = not out["mismatches"]
    return out


def modification_correspondence(M: Monad, s, s2, depth: int = DEFAULT_DEPTH,
                                side: Side = Side.LEFT, budget: Optional[int] = None) -> dict:
    """Compare 2-cells ``s -> s2`` with truncated modifications ``nu_n = T^n(nu_0)``.

    Every ``nu_0: U => U'`` is tried; it is counted as a modification when
    the family ``nu_n`` commutes with the two cones on every generator.
    """
    if side is Side.LEFT:
        c1, c2 = cone_from_subeq(M, s, depth), cone_from_subeq(M, s2, depth)
        U1, U2 = s.U, s2.U

        def level(nu, n):
            return fc.whisker(M.power(n), nu)

        def is_cell(nu):
            return fc.vertical_comp(s2.xi, fc.whisker(M.T, nu)) == fc.vertical_comp(nu, s.xi)
    else:
        c1, c2 = cocone_from_coeq(M, s, depth), cocone_from_coeq(M, s2, depth)
        U1, U2 = s.F, s2.F

        def level(nu, n):
            return fc.whisker(nu, M.power(n))

        def is_cell(nu):
            return fc.vertical_comp(s2.zeta, fc.whisker(nu, M.T)) == fc.vertical_comp(nu, s.zeta)

    gens = list(_all_generators(side, depth))
    cells, modifications = set(), set()
    for nu in fc.enumerate_nats(U1, U2, budget):
        if is_cell(nu):
            cells.add(nu)
        levels = [level(nu, n) for n in range(depth + 1)]
        if all(
            fc.vertical_comp(c2.generator(g, n), levels[n])
            == fc.vertical_comp(levels[_ends(g, n)[1]], c1.generator(g, n))
            for g, n in gens
        ):
            modifications.add(nu)
    return {"cells": len(cells), "modifications": len(modifications), "ok": cells == modifications}


# -- rendering ---------------------------------------------------------------------


def render(x) -> str:
    """A deterministic, readable string for any id used in this module."""
    if isinstance(x, Algebra):
        return f"({render(x.carrier)},{render(x.structure)})"
    if isinstance(x, (AlgebraHom, SubeqMorphism, CoeqMorphism)):
        last = x.map if isinstance(x, AlgebraHom) else x.nu0
        return f"{render(last)}: {render(x.source)} -> {render(x.target)}"
    if isinstance(x, KlArrow):
        return f"{render(x.map)}: {render(x.source)} ~> {render(x.target)}"
    if isinstance(x, (SubeqObject, CoeqObject)):
        return f"({render(x[0])}, {render(x[1])})"
    if isinstance(x, FinFunctor):
        X = x.source
        ids = set(X.identities.values())
        obs = " ".join(f"{render(a)}->{render(x.ob[a])}" for a in X.objects)
        mors = " ".join(f"{render(m)}->{render(x.mor[m])}" for m in X.morphisms if m not in ids)
        return "[" + obs + (" | " + mors if mors else "") + "]"
    if isinstance(x, NatTrans):
        return "{" + " ".join(f"{render(a)}:{render(x[a])}" for a in x.domain_category.objects) + "}"
    return str(x)


# -- comparisons ----------------------------------------------------------------------


@dataclass
class ProbeResult:
    probe: str
    left_size: tuple
    right_size: tuple
    object_map: list = field(default_factory=list)
    morphism_map: list = field(default_factory=list)
    cone_checks: int = 0
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems

    def to_dict(self):
        return {
            "probe": self.probe,
            "left_size": list(self.left_size),
            "right_size": list(self.right_size),
            "isomorphism": self.ok,
            "cone_checks": self.cone_checks,
            "object_map": self.object_map,
            "morphism_map": self.morphism_map,
            "problems": self.problems,
        }


@dataclass
class NaturalityResult:
    source: str
    target: str
    functors: int
    squares: int = 0
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems

    def to_dict(self):
        return {"source": self.source, "target": self.target, "functors": self.functors,
                "squares": self.squares, "ok": self.ok, "problems": self.problems[:10]}


@dataclass
class ComparisonReport:
    """Outcome of :func:`em_comparison` or :func:`kleisli_comparison`.

    ``left`` names the hom-category side, ``right`` the pair side.
    """

    kind: str
    monad: str
    depth: int
    left: str
    right: str
    probes: list = field(default_factory=list)
    naturality: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self):
        return all(p.ok for p in self.probes) and all(n.ok for n in self.naturality)

    def first_problem(self):
        for item in self.probes + self.naturality:
            if item.problems:
                return item.problems[0]
        return None

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "kind": self.kind,
            "monad": self.monad,
            "depth": self.depth,
            "left": self.left,
            "right": self.right,
            "ok": self.ok,
            "warnings": self.warnings,
            "probes": [p.to_dict() for p in self.probes],
            "naturality": [n.to_dict() for n in self.naturality],
        }

    def to_text(self):
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{self.kind} comparison for {self.monad}: {status} (depth {self.depth})"]
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        for p in self.probes:
            (lo, lm), (ro, rm) = p.left_size, p.right_size
            mark = "ok" if p.ok else "FAIL"
            lines.append(
                f"  probe {p.probe}: {self.left} {lo} objects / {lm} morphisms, "
                f"{self.right} {ro} objects / {rm} morphisms, "
                f"{p.cone_checks} cone checks: {mark}"
            )
            lines.extend(f"    {msg}" for msg in p.problems[:5])
        for n in self.naturality:
            mark = "ok" if n.ok else "FAIL"
            lines.append(f"  naturality {n.source} -> {n.target}: {n.functors} functors, "
                         f"{n.squares} squares: {mark}")
            lines.extend(f"    {msg}" for msg in n.problems[:5])
        return "\n".join(lines)


def _check_iso(result: ProbeResult, H: FinCat, S: FinCat, phi_ob, phi_mor):
    """Check that ``phi`` is an isomorphism of categories ``H -> S`` and record it."""
    problems = result.problems
    ob = {V: phi_ob(V) for V in H.objects}
    mor = {m: phi_mor(m) for m in H.morphisms}
    result.object_map = [[render(a), render(b)] for a, b in ob.items()]
    result.morphism_map = [[render(a), render(b)] for a, b in mor.items()]
    targets = set(S.objects)
    if any(v not in targets for v in ob.values()):
        problems.append("object map leaves the pair category")
    if len(set(ob.values())) != len(ob) or len(ob) != len(targets):
        problems.append(f"object map is not a bijection ({len(ob)} vs {len(targets)})")
    if any(v not in S.morphisms for v in mor.values()):
        problems.append("morphism map leaves the pair category")
    if len(set(mor.values())) != len(mor) or len(mor) != len(S.morphisms):
        problems.append(f"morphism map is not a bijection ({len(mor)} vs {len(S.morphisms)})")
    if problems:
        return
    for m, (a, b) in H.morphisms.items():
        if S.morphisms[mor[m]] != (ob[a], ob[b]):
            problems.append(f"morphism {render(m)} is sent to the wrong hom-set")
    for V in H.objects:
        if mor[H.id(V)] != S.id(ob[V]):
            problems.append(f"identity of {render(V)} is not preserved")
    for g, f in H.composable_pairs():
        if mor[H.comp(g, f)] != S.comp(mor[g], mor[f]):
            problems.append(f"composition not preserved at ({render(g)}, {render(f)})")
    # the inverse maps are functors too
    inv_ob = {v: k for k, v in ob.items()}
    inv_mor = {v: k for k, v in mor.items()}
    for g, f in S.composable_pairs():
        if inv_mor[S.comp(g, f)] != H.comp(inv_mor[g], inv_mor[f]):
            problems.append(f"inverse does not preserve composition at ({render(g)}, {render(f)})")
    if any(inv_mor[S.id(s)] != H.id(inv_ob[s]) for s in S.objects):
        problems.append("inverse does not preserve identities")


def _probe_functors(probes, probe_functors, budget):
    if probe_functors is not None:
        return list(probe_functors)
    out = []
    for X, Y in zip(probes, probes[1:]):
        out.extend(fc.enumerate_functors(X, Y, budget))
        out.extend(fc.enumerate_functors(Y, X, budget))
    return out


def _index_of(probes, X):
    for k, P in enumerate(probes):
        if P is X or P.same_as(X):
            return k
    raise ShapeMismatch(f"probe functor endpoint {X.name} is not among the probes")


def _default_probes(probes):
    if probes is None:
        from .bundled import default_probes
        return default_probes()
    return list(probes)


def em_comparison(M: Monad, probes=None, probe_functors=None, depth: int = DEFAULT_DEPTH,
                  budget: Optional[int] = None) -> ComparisonReport:
    """Certify ``Cat(X, EM(M)) ~ Subeq(M, X)`` for each probe ``X``, naturally in ``X``.

    ``probe_functors`` defaults to every functor between consecutive probes,
    in both directions.  Every pair found is also turned into a truncated
    cone and checked at ``depth``.
    """
    M.checked()
    probes = _default_probes(probes)
    EM, forget = em_category(M)
    T = M.T
    report = ComparisonReport("EM", M.name or "T", depth, "Cat(X, EM)", "Subeq(X)")
    if not probes:
        report.warnings.append("no probes given; the comparison is vacuous")

    def phi_ob(V):
        U = fc.compose_functors(forget, V)
        xi = NatTrans(fc.compose_functors(T, U), U, {x: V.ob[x].structure for x in V.source.objects})
        return SubeqObject(U, xi)

    def phi_mor(nu):
        s, s2 = phi_ob(nu.source), phi_ob(nu.target)
        return SubeqMorphism(s, s2, NatTrans(s.U, s2.U, {x: nu[x].map for x in nu.domain_category.objects}))

    homs, pairs = [], []
    for X in probes:
        H = hom_category(X, EM, budget)
        S = subeq_category(M, X, budget=budget)
        homs.append(H)
        pairs.append(S)
        res = ProbeResult(X.name or "X", H.size, S.size)
        _check_iso(res, H, S, phi_ob, phi_mor)
        for s in S.objects:
            chk = cone_check(cone_from_subeq(M, s, depth))
            res.cone_checks += 1
            if not chk.ok:
                res.problems.append(f"cone of {render(s)} fails: {chk.failures[0]['instance']}")
        report.probes.append(res)

    for G in _probe_functors(probes, probe_functors, budget):
        i, j = _index_of(probes, G.source), _index_of(probes, G.target)
        nat = _naturality_entry(report, probes[i], probes[j])
        nat.functors += 1
        # precomposition with G: Cat(X_j, EM) -> Cat(X_i, EM) and Subeq(X_j) -> Subeq(X_i)
        for V in homs[j].objects:
            nat.squares += 1
            lhs = phi_ob(fc.compose_functors(V, G))
            s = phi_ob(V)
            rhs = SubeqObject(fc.compose_functors(s.U, G), fc.whisker(s.xi, G))
            if lhs != rhs:
                nat.problems.append(f"object square fails for {render(G)} at {render(V)}")
        for nu in homs[j].morphisms:
            nat.squares += 1
            lhs = phi_mor(fc.whisker(nu, G))
            m = phi_mor(nu)
            rhs = SubeqMorphism(
                SubeqObject(fc.compose_functors(m.source.U, G), fc.whisker(m.source.xi, G)),
                SubeqObject(fc.compose_functors(m.target.U, G), fc.whisker(m.target.xi, G)),
                fc.whisker(m.nu0, G),
            )
            if lhs != rhs:
                nat.problems.append(f"morphism square fails for {render(G)} at {render(nu)}")
    return report


def _naturality_entry(report, X, Y):
    for n in report.naturality:
        if n.source == (X.name or "X") and n.target == (Y.name or "Y"):
            return n
    n = NaturalityResult(X.name or "X", Y.name or "Y", 0)
    report.naturality.append(n)
    return n


def kleisli_comparison(M: Monad, probes=None, probe_functors=None, depth: int = DEFAULT_DEPTH,
                       budget: Optional[int] = None) -> ComparisonReport:
    """Certify ``Cat(Kl(M), X) ~ Coeq(M, X)`` for each probe ``X``, naturally in ``X``."""
    M.checked()
    probes = _default_probes(probes)
    Kl, incl = kleisli_category(M)
    C, T = M.C, M.T
    report = ComparisonReport("Kleisli", M.name or "T", depth, "Cat(Kl, X)", "Coeq(X)")
    if not probes:
        report.warnings.append("no probes given; the comparison is vacuous")
    counit = {c: KlArrow(T.ob[c], c, C.id(T.ob[c])) for c in C.objects}

    def psi_ob(Hf):
        F = fc.compose_functors(Hf, incl)
        zeta = NatTrans(fc.compose_functors(F, T), F, {c: Hf.mor[counit[c]] for c in C.objects})
        return CoeqObject(F, zeta)

    def psi_mor(theta):
        c, c2 = psi_ob(theta.source), psi_ob(theta.target)
        return CoeqMorphism(c, c2, NatTrans(c.F, c2.F, {x: theta[x] for x in C.objects}))

    homs = []
    for X in probes:
        H = hom_category(Kl, X, budget)
        S = coeq_category(M, X, budget=budget)
        homs.append(H)
        res = ProbeResult(X.name or "X", H.size, S.size)
        _check_iso(res, H, S, psi_ob, psi_mor)
        for c in S.objects:
            chk = cone_check(cocone_from_coeq(M, c, depth))
            res.cone_checks += 1
            if not chk.ok:
                res.problems.append(f"cocone of {render(c)} fails: {chk.failures[0]['instance']}")
        report.probes.append(res)

    for G in _probe_functors(probes, probe_functors, budget):
        i, j = _index_of(probes, G.source), _index_of(probes, G.target)
        nat = _naturality_entry(report, probes[i], probes[j])
        nat.functors += 1
        # postcomposition with G: Cat(Kl, X_i) -> Cat(Kl, X_j) and Coeq(X_i) -> Coeq(X_j)
        for Hf in homs[i].objects:
            nat.squares += 1
            lhs = psi_ob(fc.compose_functors(G, Hf))
            c = psi_ob(Hf)
            rhs = CoeqObject(fc.compose_functors(G, c.F), fc.whisker(G, c.zeta))
            if lhs != rhs:
                nat.problems.append(f"object square fails for {render(G)} at {render(Hf)}")
        for theta in homs[i].morphisms:
            nat.squares += 1
            lhs = psi_mor(fc.whisker(G, theta))
            m = psi_mor(theta)
            rhs = CoeqMorphism(
                CoeqObject(fc.compose_functors(G, m.source.F), fc.whisker(G, m.source.zeta)),
                CoeqObject(fc.compose_functors(G, m.target.F), fc.whisker(G, m.target.zeta)),
                fc.whisker(G, m.nu0),
            )
            if lhs != rhs:
                nat.problems.append(f"morphism square fails for {render(G)} at {render(theta)}")
    return report


def duality_check(M: Monad, probes=None, budget: Optional[int] = None) -> list:
    """Compare ``coeq_category`` with ``subeq_category`` read in Cat^op, probe by probe.

    In Cat^op the Eilenberg-Moore object of a monad is its Kleisli object in
    Cat, and the subequalizing pairs there are exactly coequalizing pairs in
    Cat.  The two are computed by unrelated code paths and must agree on
    objects, morphisms and composition.
    """
    out = []
    for X in _default_probes(probes):
        co = coeq_category(M, X, budget)
        sub = subeq_category(M, X, dual=True, budget=budget)
        ob = {CoeqObject(*s): s for s in sub.objects}
        mor = {CoeqMorphism(CoeqObject(*m.source), CoeqObject(*m.target), m.nu0): m for m in sub.morphisms}
        agree = (
            set(ob) == set(co.objects)
            and set(mor) == set(co.morphisms)
            and all(mor[co.comp(g, f)] == sub.comp(mor[g], mor[f]) for g, f in co.composable_pairs())
        )
        out.append({"probe": X.name, "coeq_size": list(co.size), "subeq_op_size": list(sub.size),
                    "agree": agree})
    return out
