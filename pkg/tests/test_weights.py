import pytest
from hypothesis import given

from pisimp import ordinal_maps as om
from pisimp import words as wd
from pisimp.errors import NotTotal, WrongFlavor
from pisimp.ordinal_maps import Flavor, make_pmap
from pisimp.weights import Side, act, check_action_laws, top_tau

from strategies import pmaps

U = None


class TestAct:
    def test_left_identity_shifts(self):
        assert act(Side.LEFT, om.identity(1), om.tau(0, 0)) == om.tau(1, 1)
        assert act(Side.LEFT, om.identity(2), make_pmap(2, 1, [0, U])) == make_pmap(4, 3, [0, 1, 2, U])

    def test_unit(self):
        g = make_pmap(3, 2, [0, 1, U])
        assert act(Side.LEFT, om.identity(0), g) == g
        assert act(Side.LEFT, om.identity(0), om.tau(0, 0)) == om.tau(0, 0)

    def test_right_puts_f_after(self):
        assert act(Side.RIGHT, om.delta(0, 0), om.identity(1)) == make_pmap(1, 2, [0])
        assert act(Side.RIGHT, om.identity(1), om.tau(0, 0)) == om.tau(1, 0)

    def test_errors(self):
        with pytest.raises(NotTotal):
            act(Side.LEFT, om.tau(0, 0), om.identity(0))
        with pytest.raises(WrongFlavor):
            act(Side.LEFT, om.identity(1), om.tau(1, 0))
        with pytest.raises(WrongFlavor):
            act(Side.RIGHT, om.identity(1), om.tau(1, 1))

    @pytest.mark.parametrize("n", range(9))
    def test_top_taus(self, n):
        assert top_tau(Side.LEFT, n) == om.tau(n, n)
        assert top_tau(Side.RIGHT, n) == om.tau(n, 0)

    @given(pmaps(4, flavor=Flavor.DELTA), pmaps(4, flavor=Flavor.PIL))
    def test_left_closure(self, f, g):
        h = act(Side.LEFT, f, g)
        assert om.in_flavor(h, Flavor.PIL) and h.table[:f.dom] == f.table

    @given(pmaps(4, flavor=Flavor.DELTA), pmaps(4, flavor=Flavor.PIR))
    def test_right_closure(self, f, g):
        h = act(Side.RIGHT, f, g)
        assert om.in_flavor(h, Flavor.PIR) and h.table[:g.dom] == g.table


@pytest.fixture(scope="module")
def reports():
    return check_action_laws(3)


class TestLaws:
    def test_pass(self, reports):
        for side, rep in reports.items():
            assert rep.ok, rep.counterexamples[:3]
            assert all(v > 0 for v in rep.counts.values())
            assert rep.to_dict()["side"] == side.value

    def test_interchange_instance(self):
        f, f2 = om.delta(1, 0), om.sigma(1, 0)
        g, g2 = om.tau(0, 0), om.identity(0)
        lhs = act(Side.LEFT, om.compose(f2, f), om.compose(g2, g))
        rhs = om.compose(act(Side.LEFT, f2, g2), act(Side.LEFT, f, g))
        assert lhs == rhs == make_pmap(2, 1, [0, U])


def _tau_part_from_tops(side, p, t):
    """Compose ``t`` top taus starting at ordinal ``p``."""
    f = om.identity(p)
    for n in range(p - 1, p - t - 1, -1):
        f = om.compose(top_tau(side, n), f)
    return f


@pytest.mark.parametrize("side", list(Side))
def test_flavored_maps_factor_through_top_taus(side):
    for p in range(6):
        for q in range(6):
            for g in om.enumerate_hom(p, q, side.flavor):
                c = wd.canonical_form(g)
                head = wd.GenWord(p - c.t, c.word.factors[: c.r + c.s])
                assert all(x.kind != wd.TAU for x in head.factors)
                rebuilt = om.compose(wd.eval_word(head), _tau_part_from_tops(side, p, c.t))
                assert rebuilt == g
