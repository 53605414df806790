import itertools

import pytest
from hypothesis import given, strategies as st

from pisimp import ordinal_maps as om
from pisimp.errors import (
    IndexOutOfRange,
    LengthMismatch,
    NonMonotone,
    SizeLimitExceeded,
    TypeMismatch,
    ValueOutOfRange,
    WordSyntaxError,
)
from pisimp.ordinal_maps import Flavor, PMap, make_pmap

from strategies import composable_pair, pmaps

U = None


def brute_force_hom(n, m):
    """Every table in (None, 0..m-1)^n that is monotone on its defined entries."""
    out = []
    for table in itertools.product([None] + list(range(m)), repeat=n):
        vals = [v for v in table if v is not None]
        if all(a <= b for a, b in zip(vals, vals[1:])):
            out.append(table)
    return out


def brute_force_member(table, flavor):
    defined = {i for i, v in enumerate(table) if v is not None}
    n = len(table)
    if flavor is Flavor.DELTA:
        return len(defined) == n
    if flavor is Flavor.PIL:
        return defined == set(range(len(defined)))
    if flavor is Flavor.PIR:
        return defined == set(range(n - len(defined), n))
    return True


class TestMakePmap:
    def test_sigma_table(self):
        assert make_pmap(2, 1, [0, 0]) == om.sigma(1, 0)

    def test_tau_table(self):
        assert make_pmap(2, 1, [0, U]) == om.tau(1, 1)

    def test_non_monotone(self):
        with pytest.raises(NonMonotone):
            make_pmap(2, 1, [1, 0])

    def test_value_out_of_range(self):
        with pytest.raises(ValueOutOfRange):
            make_pmap(1, 1, [1])

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            make_pmap(2, 1, [0])

    def test_negative_and_huge_sizes(self):
        with pytest.raises(ValueOutOfRange):
            make_pmap(-1, 0, [])
        with pytest.raises(SizeLimitExceeded):
            make_pmap(0, om.MAX_SIZE + 1, [])

    def test_undefined_everywhere_is_legal_even_into_zero(self):
        f = make_pmap(3, 0, [U, U, U])
        assert not f.is_total and f.undefined_positions() == [0, 1, 2]

    def test_monotonicity_skips_undefined(self):
        assert make_pmap(3, 2, [1, U, 1]).defined_positions() == [0, 2]


class TestPMapValue:
    def test_equality_is_entrywise(self):
        assert make_pmap(2, 2, [0, 1]) == om.identity(2)
        assert make_pmap(2, 3, [0, 1]) != om.identity(2)

    def test_not_equal_to_plain_tuple(self):
        assert om.identity(1) != (1, 1, (0,))

    def test_hashable(self):
        assert len({om.identity(2), make_pmap(2, 2, [0, 1])}) == 1

    def test_call_and_str(self):
        f = make_pmap(3, 2, [U, 0, 1])
        assert f(1) == 0 and f(0) is None
        assert str(f) == "3->2:[_,0,1]"

    def test_pickle_round_trip(self):
        import pickle
        f = om.tau(2, 1)
        assert pickle.loads(pickle.dumps(f)) == f


class TestGenerators:
    def test_identity(self):
        assert om.identity(0) == PMap(0, 0, ())
        assert om.identity(2).table == (0, 1)

    def test_delta(self):
        assert om.delta(1, 0) == make_pmap(1, 2, [1])

    def test_tau(self):
        assert om.tau(1, 0) == make_pmap(2, 1, [U, 0])

    def test_sigma(self):
        assert om.sigma(2, 1) == make_pmap(3, 2, [0, 1, 1])

    @pytest.mark.parametrize("ctor,n,i", [
        (om.sigma, 0, 0), (om.sigma, 2, 2), (om.delta, 1, 2), (om.tau, 1, 2), (om.tau, -1, 0),
    ])
    def test_index_out_of_range(self, ctor, n, i):
        with pytest.raises(IndexOutOfRange):
            ctor(n, i)

    @pytest.mark.parametrize("n", range(6))
    def test_generator_shapes(self, n):
        for i in range(n + 1):
            d = om.delta(n, i)
            assert i not in d.table and len(set(d.table)) == n
            t = om.tau(n, i)
            assert t.undefined_positions() == [i]
            assert [v for v in t.table if v is not None] == list(range(n))
        for i in range(n):
            s = om.sigma(n, i)
            assert s.table.count(i) == 2 and set(s.table) == set(range(n))


class TestCompose:
    def test_sigma_after_delta(self):
        assert om.compose(om.sigma(1, 0), om.delta(1, 0)) == om.identity(1)

    def test_tau_after_delta(self):
        assert om.compose(om.tau(0, 0), om.delta(0, 0)) == om.identity(0)

    def test_two_ways_to_the_empty_map(self):
        empty = make_pmap(2, 0, [U, U])
        assert om.compose(om.tau(0, 0), om.tau(1, 1)) == empty
        assert om.compose(om.tau(0, 0), om.sigma(1, 0)) == empty

    def test_identity_law_example(self):
        assert om.compose(om.identity(0), om.tau(0, 0)) == om.tau(0, 0) == om.compose(om.tau(0, 0), om.identity(1))

    def test_type_mismatch(self):
        with pytest.raises(TypeMismatch):
            om.compose(om.identity(2), om.identity(1))

    @given(composable_pair())
    def test_matches_partial_function_composition(self, gf):
        g, f = gf
        h = om.compose(g, f)
        for k in range(f.dom):
            fk = f(k)
            assert h(k) == (None if fk is None else g(fk))
        assert make_pmap(h.dom, h.cod, h.table) == h

    def test_associative_and_unital_exhaustive(self):
        homs = {(a, b): om.enumerate_hom(a, b) for a in range(3) for b in range(3)}
        for (a, b), fs in homs.items():
            for f in fs:
                assert om.compose(om.identity(b), f) == f == om.compose(f, om.identity(a))
                for c in range(3):
                    for g in homs[(b, c)]:
                        gf = om.compose(g, f)
                        for d in range(3):
                            for h in homs[(c, d)]:
                                assert om.compose(h, gf) == om.compose(om.compose(h, g), f)

    @pytest.mark.parametrize("flavor", list(Flavor))
    def test_flavors_closed_under_composition(self, flavor):
        homs = {(a, b): om.enumerate_hom(a, b, flavor) for a in range(4) for b in range(4)}
        for n in range(4):
            assert om.in_flavor(om.identity(n), flavor)
        for (a, b), fs in homs.items():
            for c in range(4):
                for f in fs:
                    for g in homs[(b, c)]:
                        assert om.in_flavor(om.compose(g, f), flavor)


class TestOrdinalSum:
    def test_identities(self):
        assert om.ordinal_sum(om.identity(2), om.identity(3)) == om.identity(5)

    def test_top_and_bottom_tau(self):
        assert om.ordinal_sum(om.identity(1), om.tau(0, 0)) == om.tau(1, 1) == make_pmap(2, 1, [0, U])
        assert om.ordinal_sum(om.tau(0, 0), om.identity(1)) == om.tau(1, 0) == make_pmap(2, 1, [U, 0])

    @given(pmaps(3), pmaps(3), pmaps(3))
    def test_strictly_associative_with_unit(self, f, g, h):
        s = om.ordinal_sum
        assert s(s(f, g), h) == s(f, s(g, h))
        assert s(om.identity(0), f) == f == s(f, om.identity(0))

    @given(composable_pair(3), composable_pair(3))
    def test_interchange(self, gf, gf2):
        (g, f), (g2, f2) = gf, gf2
        s = om.ordinal_sum
        assert s(om.compose(g, f), om.compose(g2, f2)) == om.compose(s(g, g2), s(f, f2))

    @given(pmaps(4, flavor=Flavor.DELTA), pmaps(4, flavor=Flavor.PIL), pmaps(4, flavor=Flavor.PIR))
    def test_flavor_preservation(self, f, gl, gr):
        assert om.ordinal_sum(f, f).is_total
        assert om.in_flavor(om.ordinal_sum(f, gl), Flavor.PIL)
        assert om.in_flavor(om.ordinal_sum(gr, f), Flavor.PIR)


class TestFlavors:
    def test_examples(self):
        f = make_pmap(2, 2, [1, U])
        assert om.in_flavor(f, Flavor.PIL) and not om.in_flavor(f, Flavor.PIR)
        assert om.in_flavor(make_pmap(3, 2, [U, 0, 0]), "pir")

    @given(pmaps(5, flavor=Flavor.DELTA))
    def test_total_maps_are_in_every_flavor(self, f):
        assert all(om.in_flavor(f, fl) for fl in Flavor)

    def test_membership_matches_brute_force(self):
        for n in range(5):
            for m in range(4):
                for table in brute_force_hom(n, m):
                    f = PMap(n, m, table)
                    for fl in Flavor:
                        assert om.in_flavor(f, fl) == brute_force_member(table, fl)

    def test_parse(self):
        assert Flavor.parse("PiL") is Flavor.PIL
        with pytest.raises(ValueError):
            Flavor.parse("sigma")


class TestEnumeration:
    def test_examples(self):
        assert om.enumerate_hom(1, 1, Flavor.PI) == [make_pmap(1, 1, [U]), make_pmap(1, 1, [0])]
        assert [f.table for f in om.enumerate_hom(2, 2, Flavor.DELTA)] == [(0, 0), (0, 1), (1, 1)]
        for fl in Flavor:
            assert om.enumerate_hom(0, 3, fl) == [PMap(0, 3, ())]

    def test_counts(self):
        assert om.count_hom(2, 1, Flavor.PI) == 4
        assert om.count_hom(2, 1, Flavor.PIL) == 3

    @pytest.mark.parametrize("flavor", list(Flavor))
    def test_enumeration_equals_brute_force_in_order(self, flavor):
        def key(table):
            return tuple(-1 if v is None else v for v in table)

        for n in range(5):
            for m in range(5):
                want = sorted((t for t in brute_force_hom(n, m) if brute_force_member(t, flavor)), key=key)
                got = [f.table for f in om.enumerate_hom(n, m, flavor)]
                assert got == want
                assert om.count_hom(n, m, flavor) == len(want)


class TestParse:
    def test_round_trip(self):
        for text in ["3->2:[_,0,0]", "0->0:[]", "2->5:[1,4]"]:
            assert str(om.parse_pmap(text)) == text

    @given(pmaps(5))
    def test_round_trip_property(self, f):
        assert om.parse_pmap(str(f)) == f

    @pytest.mark.parametrize("text", ["3->2", "2->1:[0;0]", "2->1:[x,0]", "a->1:[]"])
    def test_syntax_errors(self, text):
        with pytest.raises(WordSyntaxError):
            om.parse_pmap(text)

    def test_semantic_errors_surface(self):
        with pytest.raises(NonMonotone):
            om.parse_pmap("2->2:[1,0]")
