import random

import pytest

from btamari.alignment import find_231_pattern, find_312_pattern, find_all_231_patterns
from btamari.parabolic import (
    Composition,
    enumerate_quotient,
    longest_element,
)
from btamari.projection import (
    eliminate_pattern,
    iota,
    project_down,
    project_onto_312,
    project_up,
    theta_classes,
)
from btamari.signed_perm import SignedPermutation

from conftest import perm

A021 = Composition.parse("0,2,1")


class TestProjectDown:
    def test_examples(self):
        e = SignedPermutation.identity(3)
        assert project_down(A021, e) == e
        omega = longest_element(A021)
        assert project_down(A021, omega) == omega
        assert project_down(A021, perm("-3,1,-2")) == perm("-3,2,1")

    def test_fixpoint_iff_avoiding(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                for pi in enumerate_quotient(alpha):
                    fixed = project_down(alpha, pi) == pi
                    assert fixed == (find_231_pattern(alpha, pi) is None)

    def test_result_is_maximal_avoider_below(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                avoiders = [p for p in members if find_231_pattern(alpha, p) is None]
                for pi in members:
                    down = project_down(alpha, pi)
                    below = [s for s in avoiders if s.weak_leq(pi)]
                    assert down in below
                    assert all(s.weak_leq(down) for s in below)

    def test_non_member_rejected(self):
        with pytest.raises(ValueError):
            project_down(A021, perm("2,1,3"))


class TestConfluence:
    def test_randomized_elimination_orders(self, all_small_compositions):
        rng = random.Random(991)
        for alpha in all_small_compositions[3]:
            members = enumerate_quotient(alpha)
            expected = {pi.right: project_down(alpha, pi).right for pi in members}
            witness_cache: dict = {}

            def witnesses(pi):
                ws = witness_cache.get(pi.right)
                if ws is None:
                    ws = find_all_231_patterns(alpha, pi)
                    witness_cache[pi.right] = ws
                return ws

            for pi in members:
                for _ in range(50):
                    cur = pi
                    while True:
                        ws = witnesses(cur)
                        if not ws:
                            break
                        cur = eliminate_pattern(cur, rng.choice(ws))
                    assert cur.right == expected[pi.right]


class TestIota:
    def test_endpoints(self):
        omega = longest_element(A021)
        assert iota(A021, SignedPermutation.identity(3)) == omega
        assert iota(A021, omega) == SignedPermutation.identity(3)

    def test_recipe_example(self):
        assert iota(A021, perm("-3,2,1")) == perm("-2,3,-1")

    def test_matches_algebraic_product(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                omega = longest_element(alpha)
                for pi in enumerate_quotient(alpha):
                    assert iota(alpha, pi) == pi.compose(omega)

    def test_involution_and_order_reversal(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                for pi in members:
                    assert iota(alpha, iota(alpha, pi)) == pi
                for u in members:
                    for v in members:
                        assert u.weak_leq(v) == iota(alpha, v).weak_leq(iota(alpha, u))

    def test_inversion_complementation(self, all_small_compositions):
        # inversions of pi and of iota(pi) partition the longest element's inversions
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                top = longest_element(alpha).inversion_set()
                for pi in enumerate_quotient(alpha):
                    image = iota(alpha, pi)
                    assert len(pi.inversion_set()) + len(image.inversion_set()) == len(top)


class TestProjectUp:
    def test_fixpoints(self):
        omega = longest_element(A021)
        assert project_up(A021, omega) == omega
        # sigma_1 is the maximum of its own fiber, hence fixed
        assert project_up(A021, perm("-3,1,-2")) == perm("-3,1,-2")

    def test_up_is_class_maximum(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                fibers: dict = {}
                for pi in members:
                    fibers.setdefault(project_down(alpha, pi).right, []).append(pi)
                for group in fibers.values():
                    tops = [p for p in group if all(q.weak_leq(p) for q in group)]
                    assert len(tops) == 1
                    for pi in group:
                        assert project_up(alpha, pi) == tops[0]

    def test_312_projection_fixpoints(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                for pi in enumerate_quotient(alpha):
                    fixed = project_onto_312(alpha, pi) == pi
                    assert fixed == (find_312_pattern(alpha, pi) is None)

    def test_312_count_matches_231_count(self, all_small_compositions):
        for n in (1, 2, 3, 4):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                n231 = sum(find_231_pattern(alpha, p) is None for p in members)
                n312 = sum(find_312_pattern(alpha, p) is None for p in members)
                assert n231 == n312

    def test_iota_sends_312_avoiders_to_fiber_tops(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                tops = {project_up(alpha, pi).right for pi in members}
                avoiders = {
                    iota(alpha, p).right
                    for p in members
                    if find_312_pattern(alpha, p) is None
                }
                assert avoiders == tops


class TestThetaClasses:
    def test_tiny(self):
        classes = theta_classes(Composition((1,), split=True))
        assert len(classes) == 2
        assert all(len(c.members) == 1 for c in classes)

    def test_staircase_three(self):
        classes = theta_classes(Composition((1, 1, 1), split=True))
        assert len(classes) == 20
        assert sum(len(c.members) for c in classes) == 48

    def test_021_classes(self):
        classes = theta_classes(A021)
        assert len(classes) == 16
        assert sum(len(c.members) for c in classes) == 24
        sizes = sorted(len(c.members) for c in classes)
        assert sizes == [1] * 12 + [2, 3, 3, 4]

    def test_classes_are_intervals(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                classes = theta_classes(alpha)
                assert sum(len(c.members) for c in classes) == len(members)
                for cls in classes:
                    assert find_231_pattern(alpha, cls.bottom) is None
                    interval = [
                        pi
                        for pi in members
                        if cls.bottom.weak_leq(pi) and pi.weak_leq(cls.top)
                    ]
                    assert sorted(p.right for p in interval) == [
                        p.right for p in cls.members
                    ]

    def test_projection_order_preserving_on_covers(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                for u in members:
                    for v in members:
                        if u.weak_leq(v):
                            assert project_down(alpha, u).weak_leq(project_down(alpha, v))
                            assert project_up(alpha, u).weak_leq(project_up(alpha, v))

    def test_two_ends_meet(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                down = {p.right: project_down(alpha, p).right for p in members}
                up = {p.right: project_up(alpha, p).right for p in members}
                for u in members:
                    for v in members:
                        assert (down[u.right] == down[v.right]) == (
                            up[u.right] == up[v.right]
                        )

    def test_order_convexity(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                down = {p.right: project_down(alpha, p).right for p in members}
                for u in members:
                    for w in members:
                        if down[u.right] != down[w.right] or not u.weak_leq(w):
                            continue
                        for v in members:
                            if u.weak_leq(v) and v.weak_leq(w):
                                assert down[v.right] == down[u.right]

    def test_cover_trichotomy(self, all_small_compositions):
        for n in (1, 2, 3):
            for alpha in all_small_compositions[n]:
                members = enumerate_quotient(alpha)
                down = {p.right: project_down(alpha, p).right for p in members}
                up = {p.right: project_up(alpha, p).right for p in members}
                for pi in members:
                    for t in pi.cover_inversions():
                        sigma = pi.mul_reflection_right(t)
                        # the new cover inversion violates forcing iff the
                        # projections of the two cover endpoints agree
                        collapsed = down[pi.right] == down[sigma.right]
                        assert collapsed == (up[pi.right] == up[sigma.right])
                        violates = _cover_violates_forcing(alpha, pi, t)
                        assert collapsed == violates


def _cover_violates_forcing(alpha, pi, t):
    """Forcing conditions restricted to the single cover inversion t."""
    from btamari.signed_perm import POS, SIGN, Reflection

    inv = pi.inversion_set()
    region = alpha.region_of
    a1 = alpha.first_part
    required = []
    if t.kind == SIGN:
        i = t.i
        for j in range(1, i):
            if alpha.join and j <= a1:
                continue
            if region(j) < region(i):
                required.append(Reflection.sign(j))
    elif t.kind == POS:
        i, k = t.i, t.j
        for j in range(i + 1, k):
            if region(i) < region(j) < region(k):
                required.append(Reflection.transposition(i, j))
    elif alpha.split:
        i, k = t.i, t.j
        required.append(Reflection.sign(i))
        for j in range(1, k):
            if j != i and region(j) < region(k):
                required.append(Reflection.mixed(i, j))
        for j in range(1, i):
            if region(j) < region(i):
                required.append(Reflection.mixed(j, k))
    else:
        i, k = t.i, t.j
        if i > a1:
            required.append(Reflection.sign(i))
        for j in range(1, k):
            if j == i or region(j) == region(k):
                continue
            if j <= a1:
                if i > a1:
                    required.append(Reflection.transposition(j, k))
            else:
                required.append(Reflection.mixed(i, j))
        for j in range(1, i):
            if region(j) == region(i):
                continue
            if j <= a1:
                required.append(Reflection.transposition(j, i))
            else:
                required.append(Reflection.mixed(j, k))
    return any(r not in inv for r in required)
