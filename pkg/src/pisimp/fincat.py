"""Finite categories, functors, natural transformations and monads.

Everything is explicit: a :class:`FinCat` carries its full composition table,
functors carry object and morphism maps, transformations carry components.
Morphism and object ids can be any hashable value; fixture files use strings.

Validators return a list of problems (empty means valid) instead of raising.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Iterable, Optional

from . import words as wd
from .errors import (
    FixtureError,
    InvalidStructure,
    NotDeltaWord,
    SearchSpaceTooLarge,
    ShapeMismatch,
)

DEFAULT_BUDGET = 10**7


def search_budget(budget: Optional[int] = None) -> int:
    """The enumeration budget: explicit value, else ``$PISIMP_BUDGET``, else 10**7."""
    if budget is not None:
        return budget
    env = os.environ.get("PISIMP_BUDGET")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise FixtureError(f"PISIMP_BUDGET must be an integer, got {env!r}") from None
        if value <= 0:
            raise FixtureError("PISIMP_BUDGET must be positive")
        return value
    return DEFAULT_BUDGET


class FinCat:
    """A finite category given by its composition table.

    ``morphisms`` maps each morphism id to ``(src, tgt)``; ``compose`` maps
    ``(g, f)`` to ``g o f`` for composable pairs.  Pairs involving an identity
    may be omitted and are filled in.  Construction does not validate; call
    :func:`validate_category` or :meth:`checked`.
    """

    def __init__(self, objects, morphisms, identities, compose, name=None):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        self.name = name
        table = dict(compose)
        for m, (a, b) in self.morphisms.items():
            ia, ib = self.identities.get(a), self.identities.get(b)
            if ia is not None:
                table.setdefault((m, ia), m)
            if ib is not None:
                table.setdefault((ib, m), m)
        self.table = table
        self._hom = {}
        for m, (a, b) in self.morphisms.items():
            self._hom.setdefault((a, b), []).append(m)

    def checked(self):
        problems = validate_category(self)
        if problems:
            raise InvalidStructure("category", problems)
        return self

    def src(self, m):
        return self.morphisms[m][0]

    def tgt(self, m):
        return self.morphisms[m][1]

    def id(self, x):
        return self.identities[x]

    def hom(self, a, b) -> list:
        return self._hom.get((a, b), [])

    def comp(self, g, f):
        """``g o f``."""
        return self.table[(g, f)]

    def composable_pairs(self):
        for f, (a, b) in self.morphisms.items():
            for c in self.objects:
                for g in self.hom(b, c):
                    yield g, f

    @property
    def size(self):
        return len(self.objects), len(self.morphisms)

    def is_thin(self):
        return all(len(ms) <= 1 for ms in self._hom.values())

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<FinCat {label}{len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def same_as(self, other: "FinCat") -> bool:
        """Literal equality of all tables (not isomorphism)."""
        return (
            self is other
            or (self.objects == other.objects
                and self.morphisms == other.morphisms
                and self.identities == other.identities
                and self.table == other.table)
        )


def validate_category(C: FinCat) -> list:
    problems = []
    objs = set(C.objects)
    if len(objs) != len(C.objects):
        problems.append("duplicate object ids")
    for m, (a, b) in C.morphisms.items():
        if a not in objs or b not in objs:
            problems.append(f"morphism {m!r}: endpoints {a!r}->{b!r} are not objects")
    for x in C.objects:
        i = C.identities.get(x)
        if i is None:
            problems.append(f"object {x!r} has no identity")
        elif C.morphisms.get(i) != (x, x):
            problems.append(f"identity {i!r} of {x!r} is not an endomorphism of {x!r}")
    if problems:
        return problems
    for (g, f), h in C.table.items():
        if g not in C.morphisms or f not in C.morphisms:
            problems.append(f"composite ({g!r}, {f!r}) mentions an unknown morphism")
        elif C.tgt(f) != C.src(g):
            problems.append(f"composite ({g!r}, {f!r}) given for a non-composable pair")
        elif C.morphisms.get(h) != (C.src(f), C.tgt(g)):
            problems.append(f"composite {g!r} o {f!r} = {h!r} has the wrong type")
    if problems:
        return problems
    for g, f in C.composable_pairs():
        if (g, f) not in C.table:
            problems.append(f"composite {g!r} o {f!r} is missing")
    if problems:
        return problems
    for m, (a, b) in C.morphisms.items():
        if C.comp(m, C.id(a)) != m or C.comp(C.id(b), m) != m:
            problems.append(f"identity law fails at {m!r}")
    for g, f in C.composable_pairs():
        gf = C.comp(g, f)
        for h in C.morphisms:
            if C.src(h) == C.tgt(g) and C.comp(C.comp(h, g), f) != C.comp(h, gf):
                problems.append(f"associativity fails at ({h!r}, {g!r}, {f!r})")
    return problems


# -- small categories -----------------------------------------------------------


def poset_category(elements, leq, name=None) -> FinCat:
    """The thin category of a finite poset; the arrow ``a <= b`` is ``(a, b)``."""
    elements = list(elements)
    morphisms = {(a, b): (a, b) for a in elements for b in elements if leq(a, b)}
    identities = {a: (a, a) for a in elements}
    compose = {}
    for (b, c) in morphisms:
        for (a, b2) in morphisms:
            if b2 == b:
                compose[((b, c), (a, b))] = (a, c)
    return FinCat(elements, morphisms, identities, compose, name=name)


def chain(n: int) -> FinCat:
    return poset_category(range(n), lambda a, b: a <= b, name=f"chain-{n}")


def diamond() -> FinCat:
    """The poset ``0 < 1, 2 < 3`` with 1 and 2 incomparable."""
    below = {(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)}
    return poset_category(range(4), lambda a, b: a == b or (a, b) in below, name="diamond")


def terminal() -> FinCat:
    return chain(1)


def empty() -> FinCat:
    return FinCat((), {}, {}, {}, name="empty")


def monoid_category(elements, mult, unit, name=None, obj="*") -> FinCat:
    """One-object category; ``mult(g, f)`` is ``g o f``."""
    elements = list(elements)
    morphisms = {e: (obj, obj) for e in elements}
    compose = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCat([obj], morphisms, {obj: unit}, compose, name=name)


def opposite(C: FinCat) -> FinCat:
    morphisms = {m: (b, a) for m, (a, b) in C.morphisms.items()}
    compose = {(f, g): h for (g, f), h in C.table.items()}
    name = f"{C.name}^op" if C.name else None
    return FinCat(C.objects, morphisms, C.identities, compose, name=name)


# -- functors and transformations ----------------------------------------------


class FinFunctor:
    """A functor between finite categories.

    Equality and hashing use the object and morphism maps only (listed in the
    source category's order), not the identity of the categories.
    """

    __slots__ = ("source", "target", "ob", "mor", "key", "_hash")

    def __init__(self, source: FinCat, target: FinCat, ob: dict, mor: dict):
        self.source = source
        self.target = target
        self.ob = dict(ob)
        self.mor = dict(mor)
        self.key = (
            tuple(self.ob.get(x) for x in source.objects),
            tuple(self.mor.get(m) for m in source.morphisms),
        )
        self._hash = hash(self.key)

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinFunctor({self.ob!r})"

    def __call__(self, m):
        return self.mor[m]

    def checked(self):
        problems = validate_functor(self)
        if problems:
            raise InvalidStructure("functor", problems)
        return self


class NatTrans:
    """A natural transformation ``source => target`` given by its components."""

    __slots__ = ("source", "target", "components", "key", "_hash")

    def __init__(self, source: FinFunctor, target: FinFunctor, components: dict):
        self.source = source
        self.target = target
        self.components = dict(components)
        self.key = (
            source.key,
            target.key,
            tuple(self.components.get(x) for x in source.source.objects),
        )
        self._hash = hash(self.key)

    @property
    def domain_category(self):
        return self.source.source

    @property
    def codomain_category(self):
        return self.source.target

    def __getitem__(self, x):
        return self.components[x]

    def __eq__(self, other):
        if not isinstance(other, NatTrans):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"NatTrans({self.components!r})"

    def checked(self):
        problems = validate_nat(self)
        if problems:
            raise InvalidStructure("natural transformation", problems)
        return self


def validate_functor(F: FinFunctor) -> list:
    X, C = F.source, F.target
    problems = []
    for x in X.objects:
        if F.ob.get(x) not in C.identities:
            problems.append(f"object {x!r} is sent to {F.ob.get(x)!r}, not an object")
    for m in X.morphisms:
        if F.mor.get(m) not in C.morphisms:
            problems.append(f"morphism {m!r} is sent to {F.mor.get(m)!r}, not a morphism")
    if problems:
        return problems
    for m, (a, b) in X.morphisms.items():
        if C.morphisms[F.mor[m]] != (F.ob[a], F.ob[b]):
            problems.append(f"morphism {m!r} is not sent to an arrow {F.ob[a]!r}->{F.ob[b]!r}")
    for x in X.objects:
        if F.mor[X.id(x)] != C.id(F.ob[x]):
            problems.append(f"identity of {x!r} is not preserved")
    if problems:
        return problems
    for g, f in X.composable_pairs():
        if F.mor[X.comp(g, f)] != C.comp(F.mor[g], F.mor[f]):
            problems.append(f"composition not preserved at ({g!r}, {f!r})")
    return problems


def validate_nat(alpha: NatTrans) -> list:
    F, G = alpha.source, alpha.target
    X, C = F.source, F.target
    problems = []
    if G.source is not X and not G.source.same_as(X):
        problems.append("source and target functors have different domains")
    if G.target is not C and not G.target.same_as(C):
        problems.append("source and target functors have different codomains")
    if problems:
        return problems
    for x in X.objects:
        c = alpha.components.get(x)
        if C.morphisms.get(c) != (F.ob[x], G.ob[x]):
            problems.append(f"component at {x!r} is {c!r}, not an arrow {F.ob[x]!r}->{G.ob[x]!r}")
    if problems:
        return problems
    for m, (a, b) in X.morphisms.items():
        if C.comp(G.mor[m], alpha[a]) != C.comp(alpha[b], F.mor[m]):
            problems.append(f"naturality square fails at {m!r}")
    return problems


def identity_functor(C: FinCat) -> FinFunctor:
    return FinFunctor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms})


def compose_functors(G: FinFunctor, F: FinFunctor) -> FinFunctor:
    """``G o F``."""
    return FinFunctor(
        F.source,
        G.target,
        {x: G.ob[F.ob[x]] for x in F.source.objects},
        {m: G.mor[F.mor[m]] for m in F.source.morphisms},
    )


def identity_nat(F: FinFunctor) -> NatTrans:
    C = F.target
    return NatTrans(F, F, {x: C.id(F.ob[x]) for x in F.source.objects})


def vertical_comp(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """``beta . alpha`` where ``alpha: F => G`` and ``beta: G => H``."""
    if beta.source != alpha.target:
        raise ShapeMismatch("vertical composite: target of alpha is not source of beta")
    C = alpha.codomain_category
    return NatTrans(
        alpha.source,
        beta.target,
        {x: C.comp(beta[x], alpha[x]) for x in alpha.domain_category.objects},
    )


def whisker(a, b) -> NatTrans:
    """``whisker(H, alpha)`` is ``H alpha``; ``whisker(alpha, F)`` is ``alpha F``."""
    if isinstance(a, FinFunctor) and isinstance(b, NatTrans):
        H, alpha = a, b
        return NatTrans(
            compose_functors(H, alpha.source),
            compose_functors(H, alpha.target),
            {x: H.mor[c] for x, c in alpha.components.items()},
        )
    if isinstance(a, NatTrans) and isinstance(b, FinFunctor):
        alpha, F = a, b
        return NatTrans(
            compose_functors(alpha.source, F),
            compose_functors(alpha.target, F),
            {x: alpha[F.ob[x]] for x in F.source.objects},
        )
    raise ShapeMismatch("whisker takes a functor and a transformation")


def horizontal_comp(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """``beta * alpha : H F => K G`` for ``alpha: F => G`` and ``beta: H => K``."""
    H, K = beta.source, beta.target
    G = alpha.target
    E = beta.codomain_category
    return NatTrans(
        compose_functors(H, alpha.source),
        compose_functors(K, G),
        {x: E.comp(beta[G.ob[x]], H.mor[alpha[x]]) for x in alpha.domain_category.objects},
    )


def opposite_functor(F: FinFunctor, source_op=None, target_op=None) -> FinFunctor:
    return FinFunctor(
        source_op or opposite(F.source), target_op or opposite(F.target), F.ob, F.mor
    )


def opposite_nat(alpha: NatTrans, source_op=None, target_op=None) -> NatTrans:
    """``alpha: F => G`` becomes ``G^op => F^op`` with the same components."""
    Xo = source_op or opposite(alpha.domain_category)
    Co = target_op or opposite(alpha.codomain_category)
    return NatTrans(
        opposite_functor(alpha.target, Xo, Co),
        opposite_functor(alpha.source, Xo, Co),
        alpha.components,
    )


# -- monads --------------------------------------------------------------------


@dataclass(eq=False)
class Monad:
    C: FinCat
    T: FinFunctor
    eta: NatTrans
    mu: NatTrans
    name: Optional[str] = None
    _powers: dict = field(default_factory=dict, repr=False)

    def checked(self):
        problems = validate_monad(self)
        if problems:
            raise InvalidStructure(f"monad {self.name or ''}".strip(), problems)
        return self

    def power(self, n: int) -> FinFunctor:
        return power_functor(self, n)

    def __repr__(self):
        return f"<Monad {self.name or ''} on {self.C!r}>"


def validate_monad(M: Monad) -> list:
    problems = [f"category: {p}" for p in validate_category(M.C)]
    if problems:
        return problems
    problems += [f"T: {p}" for p in validate_functor(M.T)]
    if M.T.source is not M.C and not M.T.source.same_as(M.C):
        problems.append("T: source is not the monad's category")
    if problems:
        return problems
    Id = identity_functor(M.C)
    TT = compose_functors(M.T, M.T)
    if M.eta.source != Id or M.eta.target != M.T:
        problems.append("eta: not a transformation Id => T")
    if M.mu.source != TT or M.mu.target != M.T:
        problems.append("mu: not a transformation TT => T")
    if problems:
        return problems
    problems += [f"eta: {p}" for p in validate_nat(M.eta)]
    problems += [f"mu: {p}" for p in validate_nat(M.mu)]
    if problems:
        return problems
    C, T, eta, mu = M.C, M.T, M.eta, M.mu
    for x in C.objects:
        Tx = T.ob[x]
        if C.comp(mu[x], T.mor[mu[x]]) != C.comp(mu[x], mu[Tx]):
            problems.append(f"associativity law mu.Tmu = mu.muT fails at {x!r}")
        if C.comp(mu[x], T.mor[eta[x]]) != C.id(Tx):
            problems.append(f"left unit law mu.Teta = 1 fails at {x!r}")
        if C.comp(mu[x], eta[Tx]) != C.id(Tx):
            problems.append(f"right unit law mu.etaT = 1 fails at {x!r}")
    return problems


def identity_monad(C: FinCat, name=None) -> Monad:
    Id = identity_functor(C)
    one = identity_nat(Id)
    return Monad(C, Id, one, one, name=name or f"identity on {C.name or 'C'}")


def closure_monad(C: FinCat, cl: dict, name=None) -> Monad:
    """The monad of a closure operator ``cl`` on a thin (poset) category."""
    leq = {C.morphisms[m] for m in C.morphisms}

    def arrow(a, b):
        if (a, b) not in leq:
            raise InvalidStructure("closure operator", [f"{a!r} <= {b!r} does not hold"])
        return C.hom(a, b)[0]

    T = FinFunctor(
        C, C, {x: cl[x] for x in C.objects},
        {m: arrow(cl[a], cl[b]) for m, (a, b) in C.morphisms.items()},
    )
    Id = identity_functor(C)
    eta = NatTrans(Id, T, {x: arrow(x, cl[x]) for x in C.objects})
    mu = NatTrans(compose_functors(T, T), T, {x: arrow(cl[cl[x]], cl[x]) for x in C.objects})
    return Monad(C, T, eta, mu, name=name)


def power_functor(M: Monad, n: int) -> FinFunctor:
    """``T^n``; ``T^0`` is the identity functor."""
    if n < 0:
        raise ValueError("power must be >= 0")
    cache = M._powers
    if n not in cache:
        cache[n] = identity_functor(M.C) if n == 0 else compose_functors(M.T, power_functor(M, n - 1))
    return cache[n]


def generator_image(M: Monad, kind: str, index: int, sup: int, mirrored: bool = False) -> NatTrans:
    """Image of ``delta^sup_index`` or ``sigma^sup_index`` under the monad's 2-functor.

    The default follows ``delta^n_i -> T^{n-i} eta T^i`` and
    ``sigma^n_i -> T^{n-i-1} mu T^i``, so position 0 of the ordinal is the
    innermost copy of ``T``.  ``mirrored=True`` swaps the roles of the two
    ends (``T^i eta T^{n-i}``), which is the convention under which ordinal
    sum ``f + g`` goes to ``T(f) * T(g)``.
    """
    cache = M._powers.setdefault(("gen", mirrored), {})
    key = (kind, index, sup)
    if key in cache:
        return cache[key]
    if kind == wd.DELTA:
        cell, width = M.eta, sup
    elif kind == wd.SIGMA:
        cell, width = M.mu, sup - 1
    else:
        raise NotDeltaWord(f"{kind}{index} is not a generator of the simplicial category")
    outer, inner = (index, width - index) if mirrored else (width - index, index)
    out = whisker(power_functor(M, outer), whisker(cell, power_functor(M, inner)))
    cache[key] = out
    return out


def monad_image(M: Monad, w, mirrored: bool = False) -> NatTrans:
    """The transformation ``T^dom => T^cod`` assigned to a total word."""
    if isinstance(w, str):
        w = wd.parse_word(w)
    if not wd.eval_word(w).is_total:
        raise NotDeltaWord(f"{w} evaluates to a properly partial map")
    result = identity_nat(power_functor(M, w.domain))
    for g, sup in reversed(w.typed_factors()):
        result = vertical_comp(generator_image(M, g.kind, g.index, sup, mirrored), result)
    return result


def round_trip(M: Monad) -> list:
    """Recover ``(T, eta, mu)`` from the images of ``1``, ``d0 @0`` and ``s0 @2``."""
    problems = []
    if power_functor(M, 1) != M.T:
        problems.append("T^1 is not T")
    if monad_image(M, "d0 @0") != M.eta:
        problems.append("image of d0 @0 is not eta")
    if monad_image(M, "s0 @2") != M.mu:
        problems.append("image of s0 @2 is not mu")
    return problems


def delta_words(max_len: int, max_size: int):
    """Every total generator word of length ``<= max_len`` with all sizes ``<= max_size``.

    Yields ``(word, last_generator, superscript, shorter_word)`` so callers can
    build images incrementally; ``last_generator`` is ``None`` for the empty words.
    """
    frontier = []
    for n in range(max_size + 1):
        w = wd.GenWord(n, ())
        yield w, None, None, None
        frontier.append((w, n))
    for _ in range(max_len):
        nxt = []
        for w, n in frontier:
            steps = []
            if n + 1 <= max_size:
                steps += [(wd.Generator(wd.DELTA, i), n) for i in range(n + 1)]
            if n >= 2:
                steps += [(wd.Generator(wd.SIGMA, i), n - 1) for i in range(n - 1)]
            for g, sup in steps:
                w2 = wd.GenWord(w.domain, (g,) + w.factors)
                yield w2, g, sup, w
                nxt.append((w2, n + 1 if g.kind == wd.DELTA else n - 1))
        frontier = nxt


def check_word_independence(M: Monad, max_len: int = 6, max_size: int = 4, mirrored: bool = False) -> dict:
    """Check that words with the same value have the same image under ``monad_image``.

    Images are built one generator at a time, so this costs one vertical
    composite per word.
    """
    images, seen, words = {}, {}, 0
    conflicts = []
    for w, g, sup, shorter in delta_words(max_len, max_size):
        if g is None:
            img = identity_nat(power_functor(M, w.domain))
        else:
            img = vertical_comp(generator_image(M, g.kind, g.index, sup, mirrored), images[shorter])
        images[w] = img
        words += 1
        value = wd.eval_word(w)
        first = seen.setdefault(value, (w, img))
        if first[1] != img:
            conflicts.append((str(first[0]), str(w)))
    return {"words": words, "maps": len(seen), "conflicts": conflicts, "ok": not conflicts}


# -- exhaustive enumeration -----------------------------------------------------


def _guard(space, budget, what):
    limit = search_budget(budget)
    if space > limit:
        raise SearchSpaceTooLarge(f"{what}: search space {space} exceeds budget {limit}")


def enumerate_functors(X: FinCat, C: FinCat, budget: Optional[int] = None) -> list:
    """Every functor ``X -> C``, in a fixed order (objects then morphisms, by id order)."""
    ids = set(X.identities.values())
    non_id = [m for m in X.morphisms if m not in ids]
    # exact size of the unpruned product: sum over object maps of hom-size products
    _guard(len(C.objects) ** len(X.objects), budget, "functor enumeration")
    space = 0
    for images in itertools.product(C.objects, repeat=len(X.objects)):
        ob = dict(zip(X.objects, images))
        term = 1
        for m in non_id:
            a, b = X.morphisms[m]
            term *= len(C.hom(ob[a], ob[b]))
        space += term
    _guard(space, budget, "functor enumeration")
    order = {m: k for k, m in enumerate(non_id)}
    # constraint (g, f, gf) is checkable once its last non-identity member is assigned
    pending = [[] for _ in non_id]
    for g, f in X.composable_pairs():
        h = X.comp(g, f)
        idx = [order[m] for m in (g, f, h) if m in order]
        if idx:
            pending[max(idx)].append((g, f, h))

    out = []
    for images in itertools.product(C.objects, repeat=len(X.objects)):
        ob = dict(zip(X.objects, images))
        mor = {X.id(x): C.id(ob[x]) for x in X.objects}

        def extend(k):
            if k == len(non_id):
                out.append(FinFunctor(X, C, ob, mor))
                return
            m = non_id[k]
            a, b = X.morphisms[m]
            for cand in C.hom(ob[a], ob[b]):
                mor[m] = cand
                if all(C.comp(mor[g], mor[f]) == mor[h] for g, f, h in pending[k]):
                    extend(k + 1)
            mor.pop(m, None)

        extend(0)
    return out


def enumerate_nats(F: FinFunctor, G: FinFunctor, budget: Optional[int] = None) -> list:
    """Every natural transformation ``F => G``."""
    X, C = F.source, F.target
    choices = [C.hom(F.ob[x], G.ob[x]) for x in X.objects]
    space = 1
    for c in choices:
        space *= len(c)
    _guard(space, budget, "transformation enumeration")
    pos = {x: k for k, x in enumerate(X.objects)}
    checks = [[] for _ in X.objects]
    for m, (a, b) in X.morphisms.items():
        checks[max(pos[a], pos[b])].append((m, a, b))
    out = []
    comps = {}

    def extend(k):
        if k == len(X.objects):
            out.append(NatTrans(F, G, comps))
            return
        x = X.objects[k]
        for c in choices[k]:
            comps[x] = c
            if all(C.comp(G.mor[m], comps[a]) == C.comp(comps[b], F.mor[m]) for m, a, b in checks[k]):
                extend(k + 1)
        comps.pop(x, None)

    extend(0)
    return out


def enumerate_monads(C: FinCat, budget: Optional[int] = None) -> list:
    """Every monad structure on ``C``, ordered by (T, eta, mu) enumeration order."""
    Id = identity_functor(C)
    out = []
    for T in enumerate_functors(C, C, budget):
        TT = compose_functors(T, T)
        etas = enumerate_nats(Id, T, budget)
        if not etas:
            continue
        mus = enumerate_nats(TT, T, budget)
        for eta in etas:
            for mu in mus:
                M = Monad(C, T, eta, mu)
                if not validate_monad(M):
                    out.append(M)
    return out


# -- JSON fixtures ---------------------------------------------------------------

_CATEGORY_KEYS = {"objects", "morphisms", "compose", "identities"}
_FUNCTOR_KEYS = {"ob", "mor"}
_MONAD_KEYS = {"category", "T", "eta", "mu"}


def _reject_unknown(data, allowed, what):
    if not isinstance(data, dict):
        raise FixtureError(f"{what} must be a JSON object")
    extra = set(data) - allowed
    if extra:
        raise FixtureError(f"{what}: unknown field(s) {sorted(extra)}")
    missing = allowed - set(data)
    if missing:
        raise FixtureError(f"{what}: missing field(s) {sorted(missing)}")


def category_from_dict(data, name=None) -> FinCat:
    _reject_unknown(data, _CATEGORY_KEYS, "category")
    morphisms = {}
    for entry in data["morphisms"]:
        if not isinstance(entry, dict) or set(entry) != {"id", "src", "tgt"}:
            raise FixtureError(f"morphism entries need exactly id, src, tgt: {entry!r}")
        if entry["id"] in morphisms:
            raise FixtureError(f"duplicate morphism id {entry['id']!r}")
        morphisms[entry["id"]] = (entry["src"], entry["tgt"])
    compose = {}
    for triple in data["compose"]:
        if not isinstance(triple, list) or len(triple) != 3:
            raise FixtureError(f"compose entries are [g, f, gf] triples: {triple!r}")
        g, f, h = triple
        compose[(g, f)] = h
    return FinCat(data["objects"], morphisms, data["identities"], compose, name=name)


def category_to_dict(C: FinCat) -> dict:
    ids = set(C.identities.values())
    return {
        "objects": [str(x) for x in C.objects],
        "morphisms": [{"id": str(m), "src": str(a), "tgt": str(b)} for m, (a, b) in C.morphisms.items()],
        "compose": [
            [str(g), str(f), str(h)] for (g, f), h in C.table.items() if g not in ids and f not in ids
        ],
        "identities": {str(x): str(m) for x, m in C.identities.items()},
    }


def relabel(C: FinCat) -> FinCat:
    """A copy of ``C`` with every id replaced by its ``str``."""
    return category_from_dict(category_to_dict(C), name=C.name)


def functor_from_dict(data, X: FinCat, C: FinCat) -> FinFunctor:
    _reject_unknown(data, _FUNCTOR_KEYS, "functor")
    mor = dict(data["mor"])
    for x in X.objects:
        i = X.identities.get(x)
        if i is not None and i not in mor and data["ob"].get(x) in C.identities:
            mor[i] = C.id(data["ob"][x])
    return FinFunctor(X, C, data["ob"], mor)


def functor_to_dict(F: FinFunctor) -> dict:
    return {"ob": {str(k): str(v) for k, v in F.ob.items()},
            "mor": {str(k): str(v) for k, v in F.mor.items()}}


def monad_from_dict(data, name=None) -> Monad:
    """Build a monad from fixture data without validating it."""
    _reject_unknown(data, _MONAD_KEYS, "monad")
    C = category_from_dict(data["category"])
    T = functor_from_dict(data["T"], C, C)
    problems = validate_category(C) or validate_functor(T)
    if problems:
        raise InvalidStructure(f"monad {name or ''}".strip(), problems)
    Id = identity_functor(C)
    for key in ("eta", "mu"):
        if not isinstance(data[key], dict):
            raise FixtureError(f"{key} must map objects to morphisms")
    eta = NatTrans(Id, T, data["eta"])
    mu = NatTrans(compose_functors(T, T), T, data["mu"])
    return Monad(C, T, eta, mu, name=name)


def monad_to_dict(M: Monad) -> dict:
    return {
        "category": category_to_dict(M.C),
        "T": functor_to_dict(M.T),
        "eta": {str(k): str(v) for k, v in M.eta.components.items()},
        "mu": {str(k): str(v) for k, v in M.mu.components.items()},
    }


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise FixtureError(f"{path}: {exc.strerror}") from None


def load_monad(path, check=True) -> Monad:
    """Load a monad fixture; with ``check`` the monad laws are validated."""
    M = monad_from_dict(load_json(path), name=Path(path).stem)
    return M.checked() if check else M


def load_category(path, check=True) -> FinCat:
    C = category_from_dict(load_json(path), name=Path(path).stem)
    return C.checked() if check else C
