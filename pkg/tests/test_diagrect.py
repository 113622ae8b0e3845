import pytest

from rectperm.diagrect import (
    DiagRect,
    Rect,
    Staircase,
    check_diagonal,
    check_tiling,
    compatible_orders,
    crosses,
    fiber_rho,
    is_compatible,
    is_generic_tiling,
    rho,
    walls,
)
from rectperm.enumeration import baxter_closed_form
from rectperm.errors import NotATiling, SizeGuardExceeded, SizeMismatch
from rectperm.perm import Permutation, all_permutations, is_baxter

P = Permutation.parse
WINDOW = [Rect(1, 0, 1, 1, 2), Rect(2, 1, 1, 2, 2), Rect(3, 0, 0, 1, 1), Rect(4, 1, 0, 2, 1)]


def test_rho_strips():
    assert rho(P("123")).rects == (Rect(1, 0, 0, 1, 3), Rect(2, 1, 0, 2, 3), Rect(3, 2, 0, 3, 3))
    assert rho(P("321")).rects == (Rect(1, 0, 2, 3, 3), Rect(2, 0, 1, 3, 2), Rect(3, 0, 0, 3, 1))


def test_identity_walls():
    ws = walls(rho(P("123")))
    assert [(w.orientation, w.coord) for w in ws] == [("v", 1), ("v", 2)]


def test_example_side_lists(example_perm):
    ws = walls(rho(example_perm))
    assert sum(w.orientation == "v" for w in ws) == 8
    assert sum(w.orientation == "h" for w in ws) == 6
    assert any(w.side_a == (8, 7, 6) and w.side_b == (13, 11, 9) for w in ws)


@pytest.mark.parametrize("n", range(1, 7))
def test_rho_images(n):
    images = {}
    for x in all_permutations(n):
        r = rho(x)
        check_diagonal(r)
        assert is_generic_tiling(r.rects)
        assert is_compatible(x, r)
        assert len(r.walls) == n - 1
        for w in r.walls:
            # diagonal numbering: ids fall going up, rise going right
            if w.orientation == "v":
                assert list(w.side_a) == sorted(w.side_a, reverse=True)
                assert list(w.side_b) == sorted(w.side_b, reverse=True)
            else:
                assert list(w.side_a) == sorted(w.side_a)
                assert list(w.side_b) == sorted(w.side_b)
        images.setdefault(r, set()).add(x)
    assert len(images) == baxter_closed_form(n)
    assert sum(len(f) for f in images.values()) == len(list(all_permutations(n)))
    for r, members in images.items():
        assert fiber_rho(r) == members
        assert sum(map(is_baxter, members)) == 1


def test_compatibility_examples():
    assert not is_compatible(P("123"), rho(P("321")))
    assert is_compatible(Permutation.identity(4), rho(Permutation.identity(4)))
    with pytest.raises(SizeMismatch):
        is_compatible(P("12"), rho(P("123")))
    assert fiber_rho(rho(P("123"))) == {(1, 2, 3)}
    assert set(compatible_orders(rho(P("321")))) == {(3, 2, 1)}


def test_fiber_guard():
    with pytest.raises(SizeGuardExceeded):
        fiber_rho(rho(Permutation.identity(11)))


def test_tilings():
    assert not is_generic_tiling(WINDOW)
    assert crosses(WINDOW) == [(1, 1)]
    assert is_generic_tiling([Rect(1, 0, 0, 1, 1)])
    check_tiling(WINDOW)
    with pytest.raises(NotATiling):
        check_tiling(WINDOW[:3])
    with pytest.raises(NotATiling):
        check_tiling(WINDOW + [Rect(5, 0, 0, 1, 1)])


def test_check_diagonal_rejects_bad_input():
    with pytest.raises(NotATiling):
        check_diagonal(DiagRect(2, tuple(WINDOW[:2])))
    # a tiling whose numbering runs against the diagonal
    flipped = DiagRect(2, (Rect(1, 1, 0, 2, 2), Rect(2, 0, 0, 1, 2)))
    with pytest.raises(ValueError):
        check_diagonal(flipped)


def test_staircase():
    s = Staircase(3)
    assert s.vertices() == [(0, 3), (0, 0), (3, 0)]
    r = rho(P("123")).rect(1)
    assert s.drawable(r)
    s.add(r)
    assert s.vertices() == [(0, 3), (1, 3), (1, 0), (3, 0)]
    assert s.height_at(0.5) == 3
    assert s.contains(0.5, 2.5)
    assert not s.contains(1.5, 0.5)
    s.remove(r)
    assert not s.contains(0.5, 0.5)
