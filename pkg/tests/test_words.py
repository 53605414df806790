import itertools
import random

import pytest
from hypothesis import given

from pisimp import ordinal_maps as om
from pisimp import words as wd
from pisimp.errors import IllTyped, NonTermination, WordSyntaxError
from pisimp.ordinal_maps import Flavor, make_pmap
from pisimp.words import GenWord, canonical_form, eval_word, normalize, parse_word

from strategies import pmaps, words

U = None


def all_maps(bound, flavor=Flavor.PI):
    for n in range(bound + 1):
        for m in range(bound + 1):
            yield from om.enumerate_hom(n, m, flavor)


def canonical_words(n, m):
    """Every word d_{i_r}..d_{i_1} s_{j_1}..s_{j_s} t_{k_1}..t_{k_t} from n to m,
    generated by choosing strictly increasing index lists."""
    for t in range(n + 1):
        for ks in itertools.combinations(range(n), t):
            p = n - t
            for s in range(max(p, 1)):
                for js in itertools.combinations(range(max(p - 1, 0)), s):
                    r = m - p + s
                    if r < 0:
                        continue
                    for is_ in itertools.combinations(range(m), r):
                        factors = ([("d", i) for i in reversed(is_)] + [("s", j) for j in js]
                                   + [("t", k) for k in ks])
                        yield GenWord(n, tuple(factors))


class TestParse:
    def test_typing(self):
        w = parse_word("d1.s0.t0 @3")
        assert (w.domain, w.codomain) == (3, 2)
        assert w.sizes == (3, 2, 1, 2)
        assert [sup for _, sup in w.typed_factors()] == [1, 1, 2]

    def test_empty_word(self):
        w = parse_word("@3")
        assert w.factors == () and eval_word(w) == om.identity(3)

    def test_ill_typed_reports_position_and_size(self):
        with pytest.raises(IllTyped) as info:
            parse_word("s0 @1")
        assert info.value.position == 0 and info.value.size == 1

    def test_ill_typed_inner_factor(self):
        with pytest.raises(IllTyped) as info:
            parse_word("d0.t3 @2")
        assert info.value.position == 1

    @pytest.mark.parametrize("text", ["", "d0", "x0 @1", "d0..t0 @1", "@", "d @1", "d0 @-1"])
    def test_syntax(self, text):
        with pytest.raises(WordSyntaxError):
            parse_word(text)

    def test_whitespace_tolerated_and_rendering_canonical(self):
        assert str(parse_word(" d1 . s0 .t0@ 3 ")) == "d1.s0.t0 @3"

    @given(words())
    def test_round_trip(self, w):
        assert parse_word(wd.render_word(w)) == w

    def test_then_is_function_order(self):
        a, b = parse_word("t0 @2"), parse_word("d0 @1")
        assert str(a.then(b)) == "d0.t0 @2"
        with pytest.raises(IllTyped):
            b.then(b.then(b)).then(a)


class TestEval:
    def test_examples(self):
        assert eval_word(parse_word("d1.s0.t0 @3")) == make_pmap(3, 2, [U, 0, 0])
        assert eval_word(parse_word("d0.t1 @2")) == make_pmap(2, 2, [1, U])

    @given(words())
    def test_eval_is_factorwise_composition(self, w):
        f = om.identity(w.domain)
        for g, sup in reversed(w.typed_factors()):
            f = om.compose(wd.generator_map(g.kind, g.index, sup), f)
        assert eval_word(w) == f
        assert (f.dom, f.cod) == (w.domain, w.codomain)

    @given(words(), words())
    def test_eval_respects_concatenation(self, w, v):
        if v.domain != w.codomain:
            v = GenWord(w.codomain, ())
        assert eval_word(w.then(v)) == om.compose(eval_word(v), eval_word(w))


class TestCanonicalForm:
    def test_examples(self):
        c = canonical_form(make_pmap(3, 2, [U, 0, 0]))
        assert str(c) == "d1.s0.t0 @3" and (c.r, c.s, c.t) == (1, 1, 1)
        assert str(canonical_form(make_pmap(1, 1, [U]))) == "d0.t0 @1"
        c = canonical_form(make_pmap(2, 2, [1, U]))
        assert str(c) == "d0.t1 @2" and c.k_list[-1] == 1
        for n in range(4):
            assert str(canonical_form(om.identity(n))) == f"@{n}"

    def test_sound_and_well_formed_exhaustive(self):
        for f in all_maps(6):
            c = canonical_form(f)
            assert eval_word(c.word) == f
            for lst in (c.i_list, c.j_list, c.k_list):
                assert list(lst) == sorted(set(lst))
            kinds = "".join(g.kind for g in c.word.factors)
            assert kinds == "d" * c.r + "s" * c.s + "t" * c.t
            assert [g.index for g in c.word.factors] == list(c.i_list[::-1] + c.j_list + c.k_list)
            assert f.cod - f.dom == c.r - c.s - c.t

    def test_injective_on_hom_sets(self):
        for n in range(7):
            for m in range(7):
                forms = [str(canonical_form(f)) for f in om.enumerate_hom(n, m)]
                assert len(set(forms)) == len(forms)

    def test_canonical_words_biject_with_hom_sets(self):
        for n in range(7):
            for m in range(7):
                values = [eval_word(w) for w in canonical_words(n, m)]
                assert len(values) == len(set(values)) == om.count_hom(n, m)
                assert set(values) == set(om.enumerate_hom(n, m))
                for w in canonical_words(n, m):
                    assert canonical_form(eval_word(w)).word == w

    @pytest.mark.parametrize("flavor", [Flavor.PIL, Flavor.PIR])
    def test_flavor_refinement(self, flavor):
        for f in all_maps(6):
            ks = canonical_form(f).k_list
            consecutive = all(b == a + 1 for a, b in zip(ks, ks[1:]))
            if flavor is Flavor.PIL:
                shape = not ks or (consecutive and ks[-1] == f.dom - 1)
            else:
                shape = not ks or (consecutive and ks[0] == 0)
            assert om.in_flavor(f, flavor) == shape


class TestNormalize:
    @pytest.mark.parametrize("text,want", [
        ("t1.t0 @3", "t0.t2 @3"),
        ("s0.d0 @1", "@1"),
        ("t0.s0 @2", "t0.t1 @2"),
        ("t0.d0 @0", "@0"),
        ("d0.d0 @0", "d1.d0 @0"),
    ])
    def test_examples(self, text, want):
        assert str(normalize(parse_word(text))) == want

    def test_ttau_example_values(self):
        assert eval_word(parse_word("t1.t0 @3")) == make_pmap(3, 1, [U, 0, U])

    def test_trace_is_single_steps(self):
        w = parse_word("t0.s1.d0.d2 @2")
        trace = []
        result = normalize(w, trace=trace)
        assert trace and trace[-1][3] == str(result)
        prev = w
        for pos, family, (i, j), text in trace:
            cur = parse_word(text)
            assert eval_word(cur) == eval_word(prev)
            fam = wd.FAMILY_BY_NAME[family]
            assert fam.match(*prev.factors[pos:pos + 2]) == (i, j)
            prev = cur

    def test_budget(self):
        with pytest.raises(NonTermination):
            normalize(parse_word("t1.t0 @3"), budget=0)

    @given(words())
    def test_agrees_with_canonical_form(self, w):
        assert normalize(w).word == canonical_form(eval_word(w)).word

    def test_seeded_sample(self):
        rep = wd.check_rewriting(samples=2000, seed=7)
        assert rep["ok"] and not rep["mismatches"] and not rep["exhausted"]
        assert rep["max_steps"] < wd.DEFAULT_BUDGET


@pytest.fixture(scope="module")
def report():
    return wd.verify_identities(8)


class TestIdentities:
    def test_corrected_families_hold(self, report):
        assert report.ok
        assert [f.name for f in report.families] == [f.name for f in wd.FAMILIES]
        assert all(f.instances > 0 for f in report.families)

    def test_smallest_tt(self):
        rep = wd.verify_identities(2)
        assert rep.family("tt").instances == 1 and rep.family("tt").holds

    def test_printed_ts_erratum(self, report):
        e = report.family("ts>:printed")
        assert not e.holds
        first = e.counterexamples[0]
        assert (first["i"], first["j"], first["ambient"]) == (1, 0, 3)

    def test_printed_td_erratum(self, report):
        e = report.family("td<:printed")
        assert not e.holds
        assert any(c["rhs"] is not None for c in e.counterexamples)

    def test_erratum_witnesses_by_direct_composition(self):
        # t0 s1 on 3 -> 1 equals s0 t0, and t1 d0 on 2 -> 2 equals d0 t0
        lhs = om.compose(om.tau(1, 0), om.sigma(2, 1))
        assert lhs == om.compose(om.sigma(1, 0), om.tau(2, 0)) == make_pmap(3, 1, [U, 0, 0])
        lhs = om.compose(om.tau(2, 1), om.delta(2, 0))
        assert lhs == om.compose(om.delta(1, 0), om.tau(1, 0)) == make_pmap(2, 2, [U, 1])

    def test_summary_names_the_form_that_holds(self, report):
        for e in report.erratum_summary():
            assert not e["printed_holds"] and e["corrected_holds"]

    def test_instances_typecheck_and_stay_in_bound(self):
        for fam in wd.FAMILIES:
            for inst in wd.family_instances(fam, 5):
                assert max(inst.lhs.sizes) <= 5 and inst.rhs is not None

    def test_to_dict_and_text(self, report):
        d = report.to_dict()
        assert d["total_instances"] == report.total_instances and d["ok"]
        assert "holds instead" in report.to_text()


def test_random_word_respects_bounds():
    rng = random.Random(3)
    for _ in range(500):
        w = wd.random_word(rng, 10, 6)
        assert len(w) <= 10 and max(w.sizes) <= 6
