"""Words over a solution's generators and their actions on X.

A Word is a tuple of (generator, exponent) letters with exponent +1 or -1.
Words act on X on the right through the tau-maps and on the left through the
sigma-maps; the guitar map J rewrites a word letterwise by letting each
letter absorb the right action of its suffix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import perm
from .core import Solution, invert_solution, is_biquandle, t_map_of
from .errors import BoundExceeded, SignedWordOnNonBiquandle

Word = tuple[tuple[int, int], ...]


def word_of(*gens: int) -> Word:
    """A positive word from a sequence of generator indices."""
    return tuple((g, 1) for g in gens)


def free_reduce(w: Word) -> Word:
    out: list[tuple[int, int]] = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@lru_cache(maxsize=None)
def _tau_inv(s: Solution) -> tuple[perm.Perm, ...]:
    return tuple(perm.inverse(s.tau[y]) for y in range(s.n))


@lru_cache(maxsize=None)
def _sigma_inv(s: Solution) -> tuple[perm.Perm, ...]:
    return tuple(perm.inverse(s.sigma[x]) for x in range(s.n))


@lru_cache(maxsize=None)
def _inverse_solution(s: Solution) -> Solution:
    return invert_solution(s)


def act_right(s: Solution, x: int, w: Word) -> int:
    """x^w, folding leftmost letter first: x^(uv) = (x^u)^v."""
    tau_inv = _tau_inv(s)
    for g, e in w:
        x = s.tau[g][x] if e > 0 else tau_inv[g][x]
    return x


def act_left(s: Solution, w: Word, x: int) -> int:
    """w acting on x from the left, folding rightmost letter first."""
    sigma_inv = _sigma_inv(s)
    for g, e in reversed(w):
        x = s.sigma[g][x] if e > 0 else sigma_inv[g][x]
    return x


def _require_positive_or_biquandle(s: Solution, w: Word) -> None:
    if any(e < 0 for _, e in w) and not is_biquandle(s):
        raise SignedWordOnNonBiquandle(
            "signed words need the t-map; pass to the induced biquandle first"
        )


def guitar(s: Solution, w: Word) -> Word:
    """The guitar rewriting J.

    Each letter is replaced by its image under the right action of the suffix
    that follows it; the last letter is left unchanged.  Negative letters are
    first rewritten through the t-map (x^-1 maps to t(x)^-1), which requires
    a biquandle.  J satisfies the cocycle identity J(uv) = J(u)^v J(v).
    """
    _require_positive_or_biquandle(s, w)
    t = t_map_of(s)
    out = []
    for i, (g, e) in enumerate(w):
        base = g if e > 0 else t[g]
        out.append((act_right(s, base, w[i + 1:]), e))
    return tuple(out)


def guitar_inverse(s: Solution, w: Word) -> Word:
    """The inverse of guitar on words of the same length."""
    _require_positive_or_biquandle(s, w)
    t_inv = perm.inverse(t_map_of(s))
    tau_inv = _tau_inv(s)
    m = len(w)
    out: list[tuple[int, int]] = [(0, 0)] * m
    for i in range(m - 1, -1, -1):
        g, e = w[i]
        # undo the right action of the already recovered suffix
        x = g
        for h, eh in reversed(out[i + 1:]):
            x = tau_inv[h][x] if eh > 0 else s.tau[h][x]
        out[i] = (x, 1) if e > 0 else (t_inv[x], -1)
    return tuple(out)


@lru_cache(maxsize=None)
def structure_rho(s: Solution) -> tuple[perm.Perm, ...]:
    """Right translations of the structure rack: rho_y = tau_y o tau^_y^{-1}."""
    inv = _inverse_solution(s)
    return tuple(
        perm.compose(s.tau[y], perm.inverse(inv.tau[y])) for y in range(s.n)
    )


def rho_of_word(s: Solution, w: Word) -> perm.Perm:
    """The composite rho_{w_m} o ... o rho_{w_1} for a positive word."""
    if any(e < 0 for _, e in w):
        raise ValueError("rho_of_word expects a positive word")
    rho = structure_rho(s)
    result = perm.identity(s.n)
    for g, _ in w:
        result = perm.compose(rho[g], result)
    return result


def twisted_power(s: Solution, y: int, d: int) -> Word:
    """The word T^{d-1}(y) ... T(y) y, the preimage of y^d under guitar."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    t = t_map_of(s)
    letters = []
    x = y
    for _ in range(d):
        letters.append((x, 1))
        x = t[x]
    return tuple(reversed(letters))


@dataclass(frozen=True)
class DegreeTable:
    d: tuple[int, ...]
    D: tuple[int, ...]
    twisted_powers: tuple[Word, ...]


def _rack_degree(rho_y: perm.Perm) -> int:
    """Minimal D >= 2 with rho_y^D = identity."""
    o = perm.order(rho_y)
    return o if o >= 2 else 2


@lru_cache(maxsize=None)
def degrees(s: Solution) -> DegreeTable:
    """Element degrees d_y and rack degrees D_y.

    d_y is the minimal d such that (1) d is even whenever rho_y is the
    identity, (2) rho_y^d is the identity, and (3) the twisted power y^[d]
    acts trivially on X from both sides.  The search is capped by the
    provable bound lcm(2, ord(rho_y), p * lcm(q, q')) where p is the order
    of T and q, q' the orders of the two actions of y^[p].
    """
    n = s.n
    ident = perm.identity(n)
    rho = structure_rho(s)
    t = t_map_of(s)
    p = perm.order(t)
    d_list, tp_list = [], []
    for y in range(n):
        rho_y = rho[y]
        o = perm.order(rho_y)
        w_p = twisted_power(s, y, p)
        q = perm.order(tuple(act_right(s, x, w_p) for x in range(n)))
        q2 = perm.order(tuple(act_left(s, w_p, x) for x in range(n)))
        bound = math.lcm(2, o, p * math.lcm(q, q2))
        for d in range(1, bound + 1):
            if rho_y == ident and d % 2 == 1:
                continue
            if d % o != 0:
                continue
            w = twisted_power(s, y, d)
            if all(act_right(s, x, w) == x and act_left(s, w, x) == x for x in range(n)):
                d_list.append(d)
                tp_list.append(w)
                break
        else:
            raise BoundExceeded(f"no degree found for element {y} up to {bound}")
    D_list = tuple(_rack_degree(rho[y]) for y in range(n))
    return DegreeTable(tuple(d_list), D_list, tuple(tp_list))
