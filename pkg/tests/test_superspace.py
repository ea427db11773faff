import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import even_supernumbers, supernumbers
from oracles import sympy_annihilator_dim
from supersmooth.gindex import DomainError, GIndex
from supersmooth.supernumber import Supernumber, sigma
from supersmooth.superspace import (
    CoordIndex,
    Superdomain,
    SuperPoint,
    annihilator_solve,
    basis_direction,
    coord_get,
    coord_set,
    coordinates,
    dist_mn,
    pairing,
    top_blade,
)


def test_basis_direction_examples():
    E = basis_direction(CoordIndex(1, ()), 2, 1, 3)
    assert E.even[0] == 1 and E.even[1].is_zero() and E.odd[0].is_zero()
    E = basis_direction(CoordIndex(3, (1,)), 2, 1, 3)
    assert E.odd[0] == sigma(1, 3)
    with pytest.raises(DomainError):
        basis_direction(CoordIndex(1, (1,)), 2, 1, 3)


def test_coordinates():
    X = SuperPoint([2 + Supernumber({(1, 2): 1}, 4)], [], 4)
    assert coord_get(X, CoordIndex(1, (1, 2))) == 1
    assert coord_get(X, CoordIndex(1, (3, 4))) == 0
    Y = coord_set(X, CoordIndex(1, (3, 4)), 7)
    assert coord_get(Y, CoordIndex(1, (3, 4))) == 7
    assert coord_get(Y, CoordIndex(1, ())) == 2


def test_coordinate_count():
    assert len(coordinates(2, 1, 4)) == 2 ** 3 * 3


def test_slot_validation():
    with pytest.raises(DomainError):
        SuperPoint([sigma(1, 2)], [])
    with pytest.raises(DomainError):
        SuperPoint([], [Supernumber({(1, 2): 1}, 2)])


def test_pairing_examples():
    zero = SuperPoint.zero(1, 1, 3)
    assert pairing(zero, zero).is_zero()
    Y = SuperPoint([], [sigma(1, 2)])
    X = SuperPoint([], [sigma(2, 2)])
    assert pairing(Y, X) == Supernumber({(1, 2): 1}, 2)
    # the top blade is odd when L is odd and is killed by every odd multiplier
    top = SuperPoint([], [top_blade(3)])
    for w in (sigma(1, 3), sigma(2, 3) + Supernumber({(1, 2, 3): 5}, 3)):
        assert pairing(SuperPoint([], [w]), top).is_zero()


@pytest.mark.parametrize("m, n, L, dim", [(1, 0, 2, 0), (0, 2, 3, 2), (0, 1, 3, 1), (0, 1, 2, 0)])
def test_annihilator_examples(m, n, L, dim):
    assert len(annihilator_solve(m, n, L)) == dim


@pytest.mark.parametrize("m, n, L", [(1, 1, 2), (0, 2, 3), (2, 1, 3), (1, 2, 4)])
def test_annihilator_matches_sympy(m, n, L):
    assert len(annihilator_solve(m, n, L)) == sympy_annihilator_dim(m, n, L)


@pytest.mark.parametrize("m, n, L", [(1, 1, 3), (0, 2, 5), (2, 2, 4)])
def test_annihilator_exhaustive_pairing(m, n, L):
    basis = annihilator_solve(m, n, L)
    for X in basis:
        for c in coordinates(m, n, L):
            assert pairing(basis_direction(c, m, n, L), X).is_zero()


@given(st.data())
def test_pairing_bilinear(data):
    L = data.draw(st.integers(1, 5))
    pts = []
    for _ in range(3):
        ev = [data.draw(supernumbers(L, parity=0))]
        od = [data.draw(supernumbers(L, parity=1))]
        pts.append(SuperPoint(ev, od, L))
    X, Y, Z = pts
    lam = data.draw(supernumbers(L, parity=0))
    assert pairing(Y + Z, X) == pairing(Y, X) + pairing(Z, X)
    assert pairing(Y, X + Z) == pairing(Y, X) + pairing(Y, Z)
    assert pairing(Y.scale(lam), X) == lam * pairing(Y, X)


@given(st.data())
def test_superdomain_depends_only_on_body(data):
    L = data.draw(st.integers(2, 5))
    x = data.draw(even_supernumbers(L))
    U = Superdomain([[(-1, 1)]], n=0)
    X = SuperPoint([x], [])
    bump = data.draw(supernumbers(L, parity=0)).soul
    assert U.contains(X) == U.contains(SuperPoint([x + bump], []))
    assert U.contains(X) == (-1 < x.body < 1)


def test_dist_mn():
    X = SuperPoint([3 + Supernumber({(1, 2): 1}, 2)], [sigma(1, 2)])
    Y = SuperPoint([Supernumber.scalar(1, 2)], [sigma(2, 2)])
    assert dist_mn(X, X) == 0
    assert dist_mn(X, Y) == dist_mn(Y, X)
    single = SuperPoint([3 + Supernumber({(1, 2): 1}, 2)], [])
    assert dist_mn(single) == single.even[0].dist()
