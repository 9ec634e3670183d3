"""Stanley depth by exact search over interval partitions of finite posets.

A module I/J of monomial ideals is encoded by the multidegrees below a cap g
that lie in I but not in J.  Interval partitions of that point set certify
Stanley decompositions; the depth of a partition is the minimum over its
intervals of the number of coordinates of the top that sit at the cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from . import monomials
from .groebner import InitialModule
from .monomials import Mono, MonomialIdeal


class Interval(NamedTuple):
    bottom: Mono
    top: Mono


@dataclass(frozen=True)
class CharPoset:
    n: int
    cap: Mono
    points: frozenset

    @property
    def size(self) -> int:
        return len(self.points)


def char_poset(I: MonomialIdeal, J: Optional[MonomialIdeal] = None,
               g: Optional[Mono] = None) -> CharPoset:
    """Characteristic poset of I/J below the cap g.

    The default cap is the componentwise maximum of all generator exponents,
    which is the smallest valid choice.
    """
    n = I.n
    if J is not None:
        if J.n != n:
            raise ValueError("I and J live in different rings")
        for u in J.gens:
            if not I.contains(u):
                raise ValueError(f"J is not contained in I: generator {u}")
    if g is None:
        g = I.lcm_exponent()
        if J is not None:
            g = monomials.lcm(g, J.lcm_exponent())
    else:
        g = tuple(g)
        for u in I.gens + (J.gens if J is not None else ()):
            if monomials.divide(g, u) is None:
                raise ValueError(f"cap {g} does not dominate generator {u}")
    points = []
    for a in itertools.product(*(range(e + 1) for e in g)):
        if I.contains(a) and (J is None or not J.contains(a)):
            points.append(a)
    return CharPoset(n, g, frozenset(points))


def interval_value(iv: Interval, g: Mono) -> int:
    """Number of coordinates of the top that sit at the cap."""
    return sum(1 for b, cap in zip(iv.top, g) if b == cap)


def interval_points(iv: Interval):
    return itertools.product(*(range(a, b + 1) for a, b in zip(iv.bottom, iv.top)))


def validate_partition(P: CharPoset, intervals: Sequence[Interval]) -> None:
    """Raise unless the intervals partition the poset's point set."""
    seen = set()
    for iv in intervals:
        if monomials.divide(iv.top, iv.bottom) is None:
            raise ValueError(f"interval {iv} has top below bottom")
        if monomials.divide(P.cap, iv.top) is None:
            raise ValueError(f"interval {iv} exceeds the cap {P.cap}")
        for pt in interval_points(iv):
            if pt not in P.points:
                raise ValueError(f"interval {iv} contains {pt}, which is outside "
                                 "the module")
            if pt in seen:
                raise ValueError(f"point {pt} is covered twice")
            seen.add(pt)
    if seen != P.points:
        missing = next(iter(P.points - seen))
        raise ValueError(f"point {missing} is not covered")


class SdepthResult(NamedTuple):
    value: int
    partition: tuple  # tuple of Interval


def exact_sdepth(P: CharPoset, max_points: int = 512) -> SdepthResult:
    """Maximum over interval partitions of the minimum interval value.

    Decision search for descending target values: branch on the
    lexicographically smallest uncovered point, try tops by decreasing value.
    Failure states are memoized on the covered set.
    """
    if P.size > max_points:
        raise ValueError(f"poset has {P.size} points, above the limit "
                         f"{max_points}; use the filtration or squarefree "
                         "lower bounds instead")
    if not P.points:
        return SdepthResult(P.n, ())
    points_sorted = sorted(P.points)
    for d in range(P.n, -1, -1):
        partition = _feasible_partition(P, points_sorted, d)
        if partition is not None:
            validate_partition(P, partition)
            return SdepthResult(d, tuple(partition))
    raise AssertionError("unreachable: singleton partitions always succeed")


def _candidate_tops(P: CharPoset, a: Mono, d: int):
    tops = []
    for b in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(a, P.cap))):
        iv = Interval(a, b)
        value = interval_value(iv, P.cap)
        if value >= d:
            tops.append((value, b))
    tops.sort(key=lambda vb: (-vb[0], vb[1]))
    return [b for _, b in tops]


def _feasible_partition(P: CharPoset, points_sorted, d: int):
    failed = set()
    candidates = {}

    def search(covered):
        uncovered_first = None
        for pt in points_sorted:
            if pt not in covered:
                uncovered_first = pt
                break
        if uncovered_first is None:
            return []
        if covered in failed:
            return None
        a = uncovered_first
        if a not in candidates:
            candidates[a] = _candidate_tops(P, a, d)
        for b in candidates[a]:
            pts = []
            ok = True
            for pt in interval_points(Interval(a, b)):
                if pt not in P.points or pt in covered:
                    ok = False
                    break
                pts.append(pt)
            if not ok:
                continue
            rest = search(covered | frozenset(pts))
            if rest is not None:
                return [Interval(a, b)] + rest
        failed.add(covered)
        return None

    return search(frozenset())


# ---------------------------------------------------------------------------
# Stanley depth of monomial ideals, with a cache shared across calls

_SDEPTH_CACHE: dict = {}


def ideal_sdepth(I: MonomialIdeal, max_points: int = 512) -> int:
    """Stanley depth of a monomial ideal over its full ring.

    Variables absent from every generator contribute cap 0 in the poset, so
    they are counted automatically; principal ideals short-circuit to n.
    """
    if I.is_zero():
        raise ValueError("the zero ideal has no Stanley depth here")
    if len(I.gens) == 1:
        return I.n
    key = (I.n, I.gens)
    if key not in _SDEPTH_CACHE:
        _SDEPTH_CACHE[key] = exact_sdepth(char_poset(I), max_points).value
    return _SDEPTH_CACHE[key]


class FiltrationBound(NamedTuple):
    value: int
    free: bool  # all components were zero


def filtration_lower_bound(initial: InitialModule, max_points: int = 512) -> FiltrationBound:
    """min over nonzero components I_j of sdepth(I_j).

    This bounds the Stanley depth of any module whose initial module is the
    given one, through the position filtration.  When every component is
    zero the module is zero (or free for syzygies) and n is returned with a
    flag.
    """
    n = initial.basis.n
    nonzero = initial.nonzero_components()
    if not nonzero:
        return FiltrationBound(n, True)
    value = min(ideal_sdepth(ideal, max_points) for _, ideal in nonzero)
    return FiltrationBound(value, False)


# ---------------------------------------------------------------------------
# Stanley decompositions


def partition_to_decomposition(P: CharPoset, intervals: Sequence[Interval]):
    """Translate an interval partition into Stanley summands (monomial, vars).

    An interval [a, b] contributes x^e K[Z] with Z = {j : b_j = g_j} for every
    anchor e in [a, b] that agrees with a on Z; for squarefree caps this is
    the single summand x^a K[Z].
    """
    out = []
    for iv in intervals:
        Z = frozenset(j for j in range(P.n) if iv.top[j] == P.cap[j])
        ranges = [range(iv.bottom[j], iv.top[j] + 1) if j not in Z
                  else range(iv.bottom[j], iv.bottom[j] + 1) for j in range(P.n)]
        for e in itertools.product(*ranges):
            out.append((e, Z))
    return out


def verify_decomposition(decomposition, I: MonomialIdeal,
                         J: Optional[MonomialIdeal] = None,
                         box: Optional[Mono] = None):
    """Each degree of the box must be covered exactly once iff it lies in I/J.

    Returns (ok, first bad degree)."""
    if box is None:
        g = I.lcm_exponent()
        if J is not None:
            g = monomials.lcm(g, J.lcm_exponent())
        box = tuple(e + 1 for e in g)
    for a in itertools.product(*(range(b + 1) for b in box)):
        expected = 1 if I.contains(a) and (J is None or not J.contains(a)) else 0
        covering = 0
        for e, Z in decomposition:
            if monomials.divide(a, e) is not None and all(
                    a[j] == e[j] for j in range(len(a)) if j not in Z):
                covering += 1
        if covering != expected:
            return False, a
    return True, None


def decomposition_depth(decomposition) -> int:
    return min((len(Z) for _, Z in decomposition), default=0)
