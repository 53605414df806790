"""The nine acceptance criteria, each at its stated bound and time limit.

Run with ``pytest tests/test_acceptance.py -v``; a summary section lists one
PASS/FAIL line per criterion.
"""

import math
import subprocess
import sys
import time
from pathlib import Path

import pytest

from pisimp import bundled
from pisimp import fincat as fc
from pisimp import monad_bridge as mb
from pisimp import ordinal_maps as om
from pisimp import words as wd
from pisimp.ordinal_maps import Flavor
from pisimp.weights import Side, check_action_laws, top_tau

BROKEN = Path(__file__).parent / "data" / "broken_mu.json"


@pytest.fixture(scope="module")
def monads():
    return bundled.load_all()


def within(seconds, start):
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f} s, limit {seconds} s"


def test_criterion_1_identities(verdict):
    with verdict(1, "partial simplicial identities at ambient size <= 8"):
        start = time.perf_counter()
        rep = wd.verify_identities(8)
        within(10, start)
        assert rep.ok, [f.name for f in rep.families if not f.holds]
        summary = {e["printed"]: e for e in rep.erratum_summary()}
        assert len(summary) == 2
        for e in summary.values():
            assert not e["printed_holds"] and e["corrected_holds"]
            assert e["counterexample"] is not None
        ts = rep.family("ts>:printed").counterexamples[0]
        assert (ts["i"], ts["j"], ts["ambient"]) == (1, 0, 3)
        assert rep.family("ts>").schema.startswith("t_j s_i = s_{i-1} t_j")
        assert rep.family("td<").schema.startswith("t_j d_i = d_i t_{j-1}")
        total = rep.total_instances
        assert total > 1000, f"{total} instances over the corrected families"


def test_criterion_2_normal_forms(verdict):
    with verdict(2, "canonical forms on all of Pi(n, m), n, m <= 6"):
        start = time.perf_counter()
        maps = 0
        for n in range(7):
            for m in range(7):
                seen = set()
                for f in om.enumerate_hom(n, m):
                    maps += 1
                    c = wd.canonical_form(f)
                    assert wd.eval_word(c.word) == f
                    assert c.word not in seen
                    seen.add(c.word)
                    assert m - n == c.r - c.s - c.t
                    ks = c.k_list
                    run = all(b == a + 1 for a, b in zip(ks, ks[1:]))
                    assert om.in_flavor(f, Flavor.PIL) == (not ks or (run and ks[-1] == n - 1))
                    assert om.in_flavor(f, Flavor.PIR) == (not ks or (run and ks[0] == 0))
        assert maps > 1000
        within(30, start)


def test_criterion_3_rewriting(verdict):
    with verdict(3, "10,000 seeded random words normalize to their canonical form"):
        start = time.perf_counter()
        rep = wd.check_rewriting(samples=10_000, seed=0, max_len=10, max_size=6)
        assert rep["samples"] == 10_000
        assert rep["exhausted"] == []
        assert rep["mismatches"] == []
        within(60, start)


def test_criterion_4_counting(verdict):
    with verdict(4, "closed-form counts agree with enumeration"):
        for n in range(7):
            for m in range(7):
                for fl in Flavor:
                    assert om.count_hom(n, m, fl) == len(om.enumerate_hom(n, m, fl))
                if n + m > 0:
                    assert om.count_hom(n, m, Flavor.DELTA) == math.comb(n + m - 1, n)


def test_criterion_5_actions(verdict):
    with verdict(5, "action laws at bound 3 and the top-tau equations for n <= 8"):
        reports = check_action_laws(3)
        for rep in reports.values():
            assert rep.ok and rep.counterexamples == []
        for n in range(9):
            assert top_tau(Side.LEFT, n) == om.tau(n, n) == om.ordinal_sum(om.identity(n), om.tau(0, 0))
            assert top_tau(Side.RIGHT, n) == om.tau(n, 0) == om.ordinal_sum(om.tau(0, 0), om.identity(n))


def test_criterion_6_dictionary(verdict, monads):
    with verdict(6, "monad_image is word-independent and round-trips, every bundled monad"):
        for M in monads.values():
            start = time.perf_counter()
            rep = fc.check_word_independence(M, max_len=6, max_size=4)
            assert rep["ok"], (M.name, rep["conflicts"][:3])
            assert fc.round_trip(M) == []
            within(60, start)


def test_criterion_7_em_comparison(verdict, monads):
    with verdict(7, "Cat(X, EM) ~ Subeq(X) with naturality and depth-4 cones"):
        for M in monads.values():
            rep = mb.em_comparison(M, depth=4)
            assert rep.ok, (M.name, rep.first_problem())
            assert [p.probe for p in rep.probes] == ["empty", "terminal", "chain-2", "z2-arrow"]
            assert all(p.cone_checks == p.right_size[0] for p in rep.probes)
            assert rep.naturality and all(n.functors > 0 for n in rep.naturality)
        cl3 = monads["closure_chain3"]
        fixed = [c for c in cl3.C.objects if cl3.T.ob[c] == c]
        EM, _ = mb.em_category(cl3)
        assert len(EM.objects) == len(fixed) == 2
        terminal = bundled.default_probes()[1]
        assert mb.hom_category(terminal, EM).size == mb.subeq_category(cl3, terminal).size


def test_criterion_8_kleisli_comparison(verdict, monads):
    with verdict(8, "Cat(Kl, X) ~ Coeq(X), Kleisli hom counts, duality"):
        for M in monads.values():
            rep = mb.kleisli_comparison(M, depth=4)
            assert rep.ok, (M.name, rep.first_problem())
            Kl, _ = mb.kleisli_category(M)
            for a in M.C.objects:
                for b in M.C.objects:
                    direct = sum(1 for m, ends in M.C.morphisms.items() if ends == (a, M.T.ob[b]))
                    assert len(Kl.hom(a, b)) == direct
            for row in mb.duality_check(M):
                assert row["agree"], (M.name, row)


def _certify(target):
    return subprocess.run([sys.executable, "-m", "pisimp", "certify", str(target)],
                          capture_output=True, timeout=600)


def test_criterion_9_cli(verdict):
    with verdict(9, "certify is byte-identical across runs; broken mu exits nonzero"):
        for name in bundled.monad_names():
            first, second = _certify(name), _certify(name)
            assert first.returncode == 0, (name, first.stderr.decode())
            assert first.stdout == second.stdout and first.stderr == second.stderr
            assert b"PASS" in first.stdout
        broken = _certify(BROKEN)
        assert broken.returncode != 0
        assert b"unit law" in broken.stderr
