"""Command-line front end: ``python -m pisimp <subcommand> ...``.

Exit status is 0 when every requested check passes, 1 when a check fails
(including a fixture whose monad laws fail), and 2 for usage, parse and
typing errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import bundled
from . import fincat as fc
from . import monad_bridge as mb
from . import ordinal_maps as om
from . import words as wd
from .errors import InvalidStructure, PisimpError
from .weights import Side, check_action_laws, top_tau

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CheckFailed(Exception):
    pass


def _emit(args, text, data):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


# -- argument resolution --------------------------------------------------------------


def _load_monad(ref):
    """A fixture path, or the name of a bundled fixture."""
    path = Path(ref)
    if not path.exists() and bundled.fixture_path(ref).exists():
        path = bundled.fixture_path(ref)
    return fc.load_monad(path)


_CHAIN = re.compile(r"^chain-(\d+)$")


def _probe(ref):
    named = {
        "empty": fc.empty,
        "terminal": lambda: bundled.poset(["0"], lambda a, b: True, "terminal"),
        "diamond": bundled.diamond,
        "z2-arrow": bundled.z2_arrow,
        "split-idempotent": bundled.split_idempotent,
    }
    if ref in named:
        return named[ref]()
    match = _CHAIN.match(ref)
    if match:
        return bundled.chain(int(match.group(1)))
    return fc.load_category(ref)


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


# -- subcommands ----------------------------------------------------------------------


def cmd_normalize(args):
    w = wd.parse_word(args.word)
    trace = [] if args.trace else None
    result = wd.normalize(w, args.steps, trace)
    lines = [f"{s[3]}    [{s[1]} i={s[2][0]} j={s[2][1]} at {s[0]}]" for s in trace or []]
    lines.append(str(result))
    data = {"input": str(w), "normal_form": str(result),
            "i": list(result.i_list), "j": list(result.j_list), "k": list(result.k_list)}
    if trace is not None:
        data["trace"] = [{"position": s[0], "family": s[1], "i": s[2][0], "j": s[2][1], "word": s[3]}
                         for s in trace]
    _emit(args, "\n".join(lines), data)


def cmd_compose(args):
    # first argument after the second, as in g o f
    g, f = wd.parse_word(args.outer), wd.parse_word(args.inner)
    w = f.then(g)
    value = wd.eval_word(w)
    canon = wd.canonical_form(value)
    _emit(args, f"{w}\n{value}\n{canon}",
          {"word": str(w), "value": str(value), "canonical": str(canon)})


def cmd_eval(args):
    w = wd.parse_word(args.word)
    value = wd.eval_word(w)
    _emit(args, str(value), {"word": str(w), "value": str(value), "total": value.is_total})


def cmd_canon(args):
    f = om.parse_pmap(args.pmap)
    c = wd.canonical_form(f)
    _emit(args, str(c), {"map": str(f), "canonical": str(c), "i": list(c.i_list),
                         "j": list(c.j_list), "k": list(c.k_list), "r": c.r, "s": c.s, "t": c.t})


def cmd_hom(args):
    maps = om.enumerate_hom(args.n, args.m, args.flavor)
    data = {"n": args.n, "m": args.m, "flavor": args.flavor, "count": len(maps),
            "closed_form": om.count_hom(args.n, args.m, args.flavor)}
    if args.count:
        _emit(args, str(len(maps)), data)
    else:
        data["maps"] = [str(f) for f in maps]
        _emit(args, "\n".join(data["maps"]), data)


def cmd_check_identities(args):
    rep = wd.verify_identities(args.max_size)
    _emit(args, rep.to_text(), rep.to_dict())
    if not rep.ok:
        raise CheckFailed("an identity family fails")


def cmd_check_actions(args):
    reports = check_action_laws(args.bound)
    lines = []
    for side, rep in reports.items():
        status = "ok" if rep.ok else "FAIL"
        counts = ", ".join(f"{k} {v}" for k, v in rep.counts.items())
        lines.append(f"{side.value} action, maps of size <= {args.bound}: {counts}: {status}")
        for cx in rep.counterexamples[:5]:
            lines.append(f"  {cx['law']}: {' '.join(cx['maps'])}")
    # the top and bottom partial maps are the unit partial map tensored with identities
    tops = []
    for n in range(args.bound + 1):
        tops.append(top_tau(Side.LEFT, n) == om.tau(n, n) and top_tau(Side.RIGHT, n) == om.tau(n, 0))
    lines.append(f"t^n_n = id_n + t^0_0 and t^n_0 = t^0_0 + id_n for n <= {args.bound}: "
                 + ("ok" if all(tops) else "FAIL"))
    _emit(args, "\n".join(lines),
          {"bound": args.bound, "sides": [r.to_dict() for r in reports.values()], "tau_sums": all(tops)})
    if not all(r.ok for r in reports.values()) or not all(tops):
        raise CheckFailed("an action law fails")


def cmd_check_rewriting(args):
    rep = wd.check_rewriting(args.samples, args.seed, args.max_len, args.max_size, args.steps)
    status = "ok" if rep["ok"] else "FAIL"
    text = (f"{rep['samples']} random words (seed {rep['seed']}): "
            f"{len(rep['mismatches'])} mismatches, {len(rep['exhausted'])} budget exhaustions, "
            f"longest normalization {rep['max_steps']} steps: {status}")
    _emit(args, text, rep)
    if not rep["ok"]:
        raise CheckFailed("rewriting disagrees with the canonical form")


def _category_listing(D, title):
    lines = [f"{title}: {len(D.objects)} objects, {len(D.morphisms)} morphisms"]
    lines += [f"  object {mb.render(x)}" for x in D.objects]
    lines += [f"  arrow  {mb.render(m)}" for m in D.morphisms]
    data = {"objects": [mb.render(x) for x in D.objects],
            "morphisms": [mb.render(m) for m in D.morphisms]}
    return "\n".join(lines), data


def cmd_em(args):
    M = _load_monad(args.fixture)
    EM, _ = mb.em_category(M)
    text, data = _category_listing(EM, f"Eilenberg-Moore category of {M.name}")
    _emit(args, text, {"schema": mb.SCHEMA, "kind": "em", "monad": M.name, **data})


def cmd_kleisli(args):
    M = _load_monad(args.fixture)
    Kl, _ = mb.kleisli_category(M)
    text, data = _category_listing(Kl, f"Kleisli category of {M.name}")
    _emit(args, text, {"schema": mb.SCHEMA, "kind": "kleisli", "monad": M.name, **data})


def cmd_subeq(args):
    M = _load_monad(args.fixture)
    X = _probe(args.probe)
    S = mb.subeq_category(M, X, budget=args.budget)
    text, data = _category_listing(S, f"subequalizing pairs for {M.name} over {X.name}")
    _emit(args, text, {"schema": mb.SCHEMA, "kind": "subeq", "monad": M.name, "probe": X.name, **data})


def cmd_certify(args):
    M = _load_monad(args.fixture)
    probes = [_probe(p) for p in args.probes] if args.probes is not None else None
    em = mb.em_comparison(M, probes, depth=args.depth, budget=args.budget)
    kl = mb.kleisli_comparison(M, probes, depth=args.depth, budget=args.budget)
    dual = mb.duality_check(M, probes, budget=args.budget)
    trip = fc.round_trip(M)
    ok = em.ok and kl.ok and all(d["agree"] for d in dual) and not trip
    lines = [em.to_text(), kl.to_text()]
    for d in dual:
        lines.append(f"duality over {d['probe']}: Coeq {tuple(d['coeq_size'])}, "
                     f"Subeq in Cat^op {tuple(d['subeq_op_size'])}: {'ok' if d['agree'] else 'FAIL'}")
    lines.append("round trip (T, eta, mu): " + ("ok" if not trip else "; ".join(trip)))
    lines.append("PASS" if ok else "FAIL")
    _emit(args, "\n".join(lines), {
        "schema": mb.SCHEMA, "monad": M.name, "ok": ok, "em": em.to_dict(),
        "kleisli": kl.to_dict(), "duality": dual, "round_trip": trip,
    })
    if not ok:
        raise CheckFailed(em.first_problem() or kl.first_problem() or "certification failed")


# -- parser ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="pisimp", description="Partial simplicial maps and finite monads.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=_positive, default=None,
                   help="enumeration budget (default: $PISIMP_BUDGET or 10**7)")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("normalize", cmd_normalize, "rewrite a generator word to canonical form")
    sp.add_argument("word")
    sp.add_argument("--steps", type=_positive, default=wd.DEFAULT_BUDGET, help="rewrite step budget")
    sp.add_argument("--trace", action="store_true")
    sp = add("compose", cmd_compose, "the composite WORD1 o WORD2 (WORD2 applied first)")
    sp.add_argument("outer")
    sp.add_argument("inner")
    sp = add("eval", cmd_eval, "evaluate a word to a partial map")
    sp.add_argument("word")
    sp = add("canon", cmd_canon, "canonical word of a map literal such as 3->2:[_,0,0]")
    sp.add_argument("pmap")
    sp = add("hom", cmd_hom, "list or count the maps n -> m of a flavor")
    sp.add_argument("n", type=_natural)
    sp.add_argument("m", type=_natural)
    sp.add_argument("--flavor", choices=[f.value for f in om.Flavor], default="pi")
    sp.add_argument("--count", action="store_true")
    sp = add("check-identities", cmd_check_identities, "verify the identity families")
    sp.add_argument("--max-size", type=_natural, default=8)
    sp = add("check-actions", cmd_check_actions, "verify the left and right action laws")
    sp.add_argument("--bound", type=_natural, default=3)
    sp = add("check-rewriting", cmd_check_rewriting, "normalize seeded random words")
    sp.add_argument("--samples", type=_natural, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-len", type=_natural, default=10)
    sp.add_argument("--max-size", type=_natural, default=6)
    sp.add_argument("--steps", type=_positive, default=wd.DEFAULT_BUDGET)
    sp = add("em", cmd_em, "list the Eilenberg-Moore category of a monad fixture")
    sp.add_argument("fixture")
    sp = add("kleisli", cmd_kleisli, "list the Kleisli category of a monad fixture")
    sp.add_argument("fixture")
    sp = add("subeq", cmd_subeq, "list the subequalizing pairs over a probe category")
    sp.add_argument("fixture")
    sp.add_argument("probe", help="empty, terminal, chain-N, diamond, z2-arrow, "
                                  "split-idempotent, or a category JSON file")
    sp = add("certify", cmd_certify, "run the EM and Kleisli comparisons on a monad fixture")
    sp.add_argument("fixture")
    sp.add_argument("--probes", nargs="*", default=None,
                    help="probe categories (default: empty terminal chain-2 z2-arrow)")
    sp.add_argument("--depth", type=_natural, default=mb.DEFAULT_DEPTH)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        args.func(args)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InvalidStructure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except PisimpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        sys.stdout.flush()
    return EXIT_OK


def main():
    sys.exit(run())
