"""Exponent-vector arithmetic and monomial orders.

Monomials and multidegrees are plain tuples of ints of a fixed length n.
Variable priority is fixed at x1 > x2 > ... > xn; all orders here respect it.
"""

from __future__ import annotations

from typing import Iterable, Optional

Mono = tuple  # length-n tuple of ints, componentwise >= 0 for monomials

# Exponents stay far below this at desk scale; anything larger is a bug,
# never silent wraparound (Python ints cannot wrap, so this is a sanity cap).
EXPONENT_CAP = 2**31


def unit(n: int) -> Mono:
    return (0,) * n


def variable(i: int, n: int) -> Mono:
    """The monomial x_{i+1}, i.e. the i-th canonical exponent vector (0-based i)."""
    if not 0 <= i < n:
        raise ValueError(f"variable index {i} out of range for n={n}")
    return tuple(1 if j == i else 0 for j in range(n))


def _check_pair(u: Mono, v: Mono) -> None:
    if len(u) != len(v):
        raise ValueError(f"mismatched variable counts: {len(u)} vs {len(v)}")


def check_monomial(u: Mono) -> Mono:
    if any(e < 0 for e in u):
        raise ValueError(f"negative exponent in monomial {u}")
    if any(e >= EXPONENT_CAP for e in u):
        raise ValueError(f"exponent overflow in {u}")
    return u


def mul(u: Mono, v: Mono) -> Mono:
    _check_pair(u, v)
    return tuple(a + b for a, b in zip(u, v))


def lcm(u: Mono, v: Mono) -> Mono:
    _check_pair(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Mono, v: Mono) -> Mono:
    _check_pair(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def divides(v: Mono, u: Mono) -> bool:
    """True when v divides u componentwise."""
    _check_pair(u, v)
    return all(b <= a for a, b in zip(u, v))


def divide(u: Mono, v: Mono) -> Optional[Mono]:
    """u/v when v divides u, else None."""
    _check_pair(u, v)
    if any(b > a for a, b in zip(u, v)):
        return None
    return tuple(a - b for a, b in zip(u, v))


def total_degree(u: Mono) -> int:
    return sum(u)


def support(u: Mono) -> frozenset:
    """Indices (0-based) of variables with positive exponent."""
    return frozenset(i for i, e in enumerate(u) if e > 0)


def is_squarefree(u: Mono) -> bool:
    return all(e <= 1 for e in u)


def lex_compare(a: Mono, b: Mono) -> int:
    """-1, 0 or 1; first differing coordinate decides, x1 weighs most."""
    _check_pair(a, b)
    if a == b:
        return 0
    return 1 if a > b else -1


def lex_key(u: Mono):
    return u


def degrevlex_key(u: Mono):
    # Larger key = larger monomial: total degree first, then the last
    # differing variable with the smaller exponent wins.
    return (sum(u), tuple(-e for e in reversed(u)))


ORDER_KEYS = {"lex": lex_key, "degrevlex": degrevlex_key}


def order_key(kind: str):
    try:
        return ORDER_KEYS[kind]
    except KeyError:
        raise ValueError(f"unknown monomial order {kind!r}") from None


def minimalize(gens: Iterable[Mono]) -> tuple:
    """Unique minimal generating set of the monomial ideal generated by gens."""
    gens = sorted(set(gens), key=lambda u: (sum(u), u))
    out = []
    for u in gens:
        if not any(divides(v, u) for v in out):
            out.append(u)
    return tuple(out)


def minimalize_ordered(gens: Iterable[Mono]) -> tuple:
    """Minimal generators in first-occurrence order of the given sequence."""
    gens = list(gens)
    out = []
    for i, u in enumerate(gens):
        if u in out:
            continue
        if any(divides(v, u) and v != u for v in gens):
            continue
        out.append(u)
    return tuple(out)


class MonomialIdeal:
    """A monomial ideal, stored through its unique minimal generating set."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, generators: Iterable[Mono]):
        self.n = n
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator {g} does not have length {n}")
            check_monomial(g)
        self.gens = minimalize(gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens={list(self.gens)})"

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def contains(self, u: Mono) -> bool:
        return any(divides(g, u) for g in self.gens)

    def colon(self, v: Mono) -> "MonomialIdeal":
        """The colon ideal (self : v), via u/gcd(u, v) over the generators."""
        quotients = [divide(lcm(g, v), v) for g in self.gens]
        return MonomialIdeal(self.n, quotients)

    def lcm_exponent(self) -> Mono:
        """Componentwise max of the generator exponents (zero vector if none)."""
        g = [0] * self.n
        for u in self.gens:
            for i, e in enumerate(u):
                if e > g[i]:
                    g[i] = e
        return tuple(g)

    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def restrict(self, variables: tuple) -> "MonomialIdeal":
        """Project generators onto the given variable indices (they must carry
        all nonzero exponents)."""
        vset = set(variables)
        for g in self.gens:
            if any(e > 0 and i not in vset for i, e in enumerate(g)):
                raise ValueError(f"generator {g} uses a variable outside {variables}")
        return MonomialIdeal(len(variables), [tuple(g[i] for i in variables) for g in self.gens])
