"""Assembly and verification of the type-B parabolic Tamari lattices.

Tam_B(alpha) is the weak order on the 231-avoiding quotient members.  It can
be built directly as a subposet, or as the quotient of the weak order on the
whole parabolic quotient by the projection fibers; the two agree.  The module
also builds each join-irreducible element directly from the inversion it
covers, and bundles every structural claim into a verification report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import lattice as lat
from .alignment import enumerate_aligned
from .parabolic import (
    Composition,
    InversionTableau,
    enumerate_quotient,
    longest_element,
    parabolic_length,
)
from .projection import theta_classes
from .signed_perm import POS, SIGN, Reflection, SignedPermutation

SUBPOSET, QUOTIENT = "subposet", "quotient"


@dataclass(frozen=True)
class TamariLattice:
    alpha: Composition
    lattice: lat.FiniteLattice
    provenance: str


def _weak_leq_matrix(members: list[SignedPermutation]) -> np.ndarray:
    """Containment matrix of inversion sets, chunked to keep temporaries small."""
    universe = {t: idx for idx, t in enumerate(sorted(
        set().union(*(pi.inversion_set() for pi in members))
    ))}
    m, width = len(members), max(len(universe), 1)
    table = np.zeros((m, width), dtype=bool)
    for row, pi in enumerate(members):
        for t in pi.inversion_set():
            table[row, universe[t]] = True
    leq = np.empty((m, m), dtype=bool)
    step = max(1, 2**22 // (m * width + 1))
    for lo in range(0, m, step):
        block = table[lo:lo + step]
        leq[lo:lo + step] = ~(block[:, None, :] & ~table[None, :, :]).any(axis=2)
    return leq


def weak_order_lattice(alpha: Composition, cap: int | None = None) -> lat.FiniteLattice:
    """The weak order on the full parabolic quotient, as a lattice."""
    members = enumerate_quotient(alpha, cap)
    poset = lat.FinitePoset(members, _weak_leq_matrix(members))
    return lat.try_lattice(poset)


def build_tamari(
    alpha: Composition, route: str = SUBPOSET, cap: int | None = None
) -> TamariLattice:
    if route == SUBPOSET:
        aligned = enumerate_aligned(alpha, cap)
        poset = lat.FinitePoset(aligned, _weak_leq_matrix(aligned))
        return TamariLattice(alpha, lat.try_lattice(poset), SUBPOSET)
    if route == QUOTIENT:
        weak = weak_order_lattice(alpha, cap)
        theta = _theta_partition(alpha, weak, cap)
        return TamariLattice(alpha, lat.quotient_lattice(weak, theta), QUOTIENT)
    raise ValueError(f"unknown construction route {route!r}")


def _theta_partition(alpha, weak, cap) -> lat.Partition:
    index = {pi.right: idx for idx, pi in enumerate(weak.labels)}
    blocks = [
        [index[m.right] for m in cls.members] for cls in theta_classes(alpha, cap)
    ]
    return lat.Partition.from_blocks(blocks, weak.n)


# -- join-irreducible constructor ---------------------------------------------


def _pair_to_reflection(pair: tuple[int, int]) -> Reflection:
    x, y = pair
    if x == 0 or y == 0 or abs(x) == abs(y) and x != -y:
        raise ValueError(f"bad inversion pair {pair}")
    if x == -y:
        return Reflection.sign(abs(y))
    if x > 0 and y > 0:
        return Reflection.transposition(x, y)
    if x < 0 < y:
        return Reflection.mixed(-x, y)
    if y < 0 < x:
        return Reflection.mixed(x, -y)
    return Reflection.transposition(-x, -y)


def join_irreducible_for(
    alpha: Composition, pair: tuple[int, int]
) -> SignedPermutation:
    """The unique join-irreducible aligned element whose cover inversion is ``pair``.

    The pair names an inversion of the quotient's longest element by the two
    positions it exchanges; either mirror realization is accepted.
    """
    t = _pair_to_reflection(pair)
    omega = longest_element(alpha)
    if t not in omega.inversion_set():
        raise ValueError(f"{t} is not an inversion of the longest element of {alpha}")
    n = alpha.n
    a1 = alpha.first_part
    if t.kind == POS:
        return _irreducible_two_positive(alpha, t.i, t.j)
    if t.kind == SIGN:
        j = t.i
        if alpha.split:
            spots = list(range(-j, 0)) + list(range(j + 1, n + 1))
        else:
            spots = (
                list(range(-j, -a1)) + list(range(1, a1 + 1)) + list(range(j + 1, n + 1))
            )
        return _fill_positions(n, spots)
    a, b = t.i, t.j
    if alpha.split:
        k = b - a
        right = (
            tuple(range(-b, -b + a))
            + tuple(range(1, k + 1))
            + tuple(range(b + 1, n + 1))
        )
    elif a > a1:
        k, ell = b - a, b - a1
        right = (
            tuple(range(ell + 1, ell + a1 + 1))
            + tuple(range(-ell, -k))
            + tuple(range(1, k + 1))
            + tuple(range(ell + a1 + 1, n + 1))
        )
    else:
        k, ell = a, a + b - a1
        right = (
            tuple(range(1, k + 1))
            + tuple(range(ell + 1, ell + a1 - a + 1))
            + tuple(range(-ell, -k))
            + tuple(range(ell + a1 - a + 1, n + 1))
        )
    return SignedPermutation(right)


def _irreducible_two_positive(alpha, i, j) -> SignedPermutation:
    """Fill 1, 2, ... left to right skipping i and the rest of its block, stop at j."""
    n = alpha.n
    block_end = alpha.prefix[alpha.region_of(i)]
    skipped = set(range(i, block_end + 1))
    filled = [a for a in range(1, j + 1) if a not in skipped]
    right = [0] * n
    for value, a in enumerate(filled, start=1):
        right[a - 1] = value
    rest = [a for a in range(1, n + 1) if right[a - 1] == 0]
    for value, a in enumerate(rest, start=len(filled) + 1):
        right[a - 1] = value
    return SignedPermutation(tuple(right))


def _fill_positions(n: int, spots: list[int]) -> SignedPermutation:
    right = [0] * n
    for value, a in enumerate(spots, start=1):
        if a > 0:
            right[a - 1] = value
        else:
            right[-a - 1] = -value
    return SignedPermutation(tuple(right))


def irreducible_pairs(alpha: Composition) -> list[tuple[int, int]]:
    """One position pair per tableau cell, in the convention of the constructor.

    The pair lists the inversion's two positions with the smaller absolute
    value first; its sign pattern encodes which construction case applies.
    """
    pairs = []
    for cell in InversionTableau(alpha).cells():
        t = cell.reflection
        if t.kind == POS:
            pairs.append((t.i, t.j))
        elif t.kind == SIGN:
            pairs.append((-t.i, t.i))
        elif alpha.join and t.i <= alpha.first_part:
            pairs.append((t.i, -t.j))
        else:
            pairs.append((-t.i, t.j))
    return pairs


# -- structural verification -----------------------------------------------------


def not_sublattice_witness(alpha: Composition, cap: int | None = None):
    """Aligned pair whose weak-order meet differs from the Tamari meet, if any."""
    weak = weak_order_lattice(alpha, cap)
    index = {pi.right: idx for idx, pi in enumerate(weak.labels)}
    tam = build_tamari(alpha, SUBPOSET, cap).lattice
    t_index = {pi.right: idx for idx, pi in enumerate(tam.labels)}
    for a, pa in enumerate(tam.labels):
        for b in range(a + 1, tam.n):
            pb = tam.labels[b]
            weak_meet = weak.labels[weak.meet(index[pa.right], index[pb.right])]
            tam_meet = tam.labels[tam.meet(a, b)]
            if weak_meet.right != tam_meet.right:
                return pb, pa, weak_meet, tam_meet
    return None


@dataclass
class VerificationReport:
    alpha: Composition
    checks: dict[str, bool]
    stats: dict[str, int]
    witness: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        data = {
            "alpha": self.alpha.format(),
            "checks": dict(self.checks),
            "stats": dict(self.stats),
        }
        if self.witness is not None:
            data["not_a_sublattice_witness"] = [p.format() for p in self.witness]
        return data

    def summary(self) -> str:
        lines = [f"alpha = {self.alpha.format()}"]
        for name, value in self.checks.items():
            lines.append(f"  {'PASS' if value else 'FAIL'}  {name}")
        lines.append(
            "  stats: "
            + ", ".join(f"{k}={v}" for k, v in self.stats.items())
        )
        if self.witness is not None:
            pa, pb, wm, tm = self.witness
            lines.append(
                f"  not a sublattice: meet({pa}, {pb}) is {wm} in the weak order"
                f" but {tm} in the Tamari lattice"
            )
        return "\n".join(lines)


def verify_theorems(
    alpha: Composition, cap: int | None = None, verify_chain: bool = False
) -> VerificationReport:
    """Run every structural check for one composition and collect the outcome."""
    checks: dict[str, bool] = {}
    weak = weak_order_lattice(alpha, cap)
    theta = _theta_partition(alpha, weak, cap)
    ok, _why = lat.check_congruence(weak, theta)
    checks["congruence_valid"] = ok

    sub = build_tamari(alpha, SUBPOSET, cap)
    checks["lattice_subposet"] = True  # build_tamari would have raised otherwise
    quot = build_tamari(alpha, QUOTIENT, cap)
    checks["lattice_quotient"] = True
    checks["quotient_isomorphic_subposet"] = _isomorphic(sub.lattice, quot.lattice)

    L = sub.lattice
    checks["congruence_uniform"] = lat.is_congruence_uniform(L)
    checks["semidistributive"] = lat.is_semidistributive(L)
    checks["extremal"] = lat.is_extremal(L)
    checks["trim"] = lat.is_trim(L, verify_chain=verify_chain)

    expected_length = parabolic_length(alpha)
    ln = L.poset.length()
    checks["length_formula"] = ln == expected_length
    n_join = len(lat.join_irreducibles(L))
    n_meet = len(lat.meet_irreducibles(L))
    checks["irreducible_counts"] = n_join == n_meet == ln
    checks["irreducible_constructor"] = _constructor_matches(alpha, L)

    stats = {
        "size": L.n,
        "length": ln,
        "join_irreducibles": n_join,
    }
    witness = not_sublattice_witness(alpha, cap)
    return VerificationReport(alpha, checks, stats, witness)


def _isomorphic(a: lat.FiniteLattice, b: lat.FiniteLattice) -> bool:
    """Label-preserving isomorphism between two lattices on signed permutations."""
    rights_a = [pi.right for pi in a.labels]
    rights_b = [pi.right for pi in b.labels]
    if sorted(rights_a) != sorted(rights_b):
        return False
    order = [rights_b.index(r) for r in rights_a]
    return bool(np.array_equal(a.leq, b.leq[np.ix_(order, order)]))


def _constructor_matches(alpha: Composition, L: lat.FiniteLattice) -> bool:
    built = {}
    for pair in irreducible_pairs(alpha):
        pi = join_irreducible_for(alpha, pair)
        covers = pi.cover_inversions()
        if len(covers) != 1 or next(iter(covers)) != _pair_to_reflection(pair):
            return False
        if pi.right in built:
            return False
        built[pi.right] = pair
    brute = {L.labels[j].right for j in lat.join_irreducibles(L)}
    return set(built) == brute
