import pytest

from mecard import groups
from mecard.errors import BudgetExceeded
from mecard.kernels import BACKEND, BACKENDS

backends = pytest.mark.parametrize("impl", sorted(BACKENDS), ids=lambda b: b)


def test_compiled_backend_selected_when_built():
    assert BACKEND in BACKENDS
    if "cython" in BACKENDS:
        assert BACKEND == "cython"


@backends
def test_commuting_orbits(impl):
    G = groups.dihedral(4)
    elems = groups.p_power_order_elements(G, 2)
    k = BACKENDS[impl]
    got = [k.commuting_orbits(G.conj_table, G.commute_matrix, elems, n, 10**7) for n in range(5)]
    assert got == [1, 5, 22, 92, 376]


@backends
def test_commuting_orbits_budget(impl):
    G = groups.quaternion()
    elems = groups.p_power_order_elements(G, 2)
    with pytest.raises(BudgetExceeded):
        BACKENDS[impl].commuting_orbits(G.conj_table, G.commute_matrix, elems, 6, 50)


@backends
def test_skew_rank_histogram(impl):
    hist = list(BACKENDS[impl].skew_rank_histogram(4, 3, 10**7))
    assert sum(hist) == 3**6
    assert hist[0] == 1 and hist[2] == 260 and hist[4] == 468


@backends
def test_wedge_zero_count(impl):
    k = BACKENDS[impl]
    assert k.wedge_zero_count(2, 2, 4, 3, 10**7) == 261
    # omega^1 = 0 only for omega = 0
    assert k.wedge_zero_count(2, 1, 4, 3, 10**7) == 1
    # in dimension 3 every 2-form squares to zero
    assert k.wedge_zero_count(2, 2, 3, 5, 10**7) == 5**3


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("compiled extension not built")
    c, p = BACKENDS["cython"], BACKENDS["python"]
    G = groups.heisenberg(3)
    elems = groups.p_power_order_elements(G, 3)
    for n in range(4):
        args = (G.conj_table, G.commute_matrix, elems, n, 10**7)
        assert c.commuting_orbits(*args) == p.commuting_orbits(*args)
    assert list(c.skew_rank_histogram(4, 5, 10**7)) == list(p.skew_rank_histogram(4, 5, 10**7))
    for d, m, n in ((2, 2, 5), (2, 3, 5), (3, 2, 5)):
        assert c.wedge_zero_count(d, m, n, 3, 10**7) == p.wedge_zero_count(d, m, n, 3, 10**7)
