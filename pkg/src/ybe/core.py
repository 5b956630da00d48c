"""Core finite objects: Yang-Baxter solutions and racks.

A solution is a pair of n x n tables (sigma, tau) encoding the braiding
r(x, y) = (sigma_x(y), tau_y(x)) with sigma[x][y] = sigma_x(y) and
tau[y][x] = tau_y(x).  A rack is a single table op[x][y] = x > y whose right
translations are bijections and which is right self-distributive.
Elements are always 0-based integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import perm
from .errors import (
    DegenerateRow,
    NonBijectiveTranslation,
    NotInvertible,
    SelfDistributivityFailure,
    YBEFailure,
)

Table = tuple[tuple[int, ...], ...]


def _freeze(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


@dataclass(frozen=True)
class Solution:
    """A finite invertible non-degenerate set-theoretic YBE solution."""

    n: int
    sigma: Table  # sigma[x][y] = sigma_x(y)
    tau: Table    # tau[y][x] = tau_y(x)

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self.sigma[x][y], self.tau[y][x]

    @property
    def size(self) -> int:
        return self.n


@dataclass(frozen=True)
class Rack:
    """A finite rack, op[x][y] = x > y."""

    n: int
    op: Table

    def rho(self, y: int) -> perm.Perm:
        """The right translation by y as a permutation."""
        return tuple(self.op[x][y] for x in range(self.n))

    @property
    def is_quandle(self) -> bool:
        return all(self.op[x][x] == x for x in range(self.n))


@dataclass(frozen=True)
class SolutionClass:
    involutive: bool
    biquandle: bool
    self_distributive_right: bool
    self_distributive_left: bool
    decomposable: bool
    t_map: Optional[perm.Perm]


@dataclass(frozen=True)
class ChainReport:
    period_pattern: tuple[int, ...]  # sorted multiset of chain periods
    orbit_count: int


def verify_solution(sigma: Sequence[Sequence[int]], tau: Sequence[Sequence[int]]) -> Solution:
    """Validate the two tables and return a Solution.

    Checks non-degeneracy row by row, bijectivity of the pair map, and the
    Yang-Baxter equation on all n^3 triples.
    """
    sigma = _freeze(sigma)
    tau = _freeze(tau)
    n = len(sigma)
    if n == 0 or len(tau) != n or any(len(row) != n for row in sigma + tau):
        raise ValueError("sigma and tau must be non-empty n x n tables of equal size")
    for x in range(n):
        if not perm.is_perm(sigma[x], n):
            raise DegenerateRow("sigma", x)
    for y in range(n):
        if not perm.is_perm(tau[y], n):
            raise DegenerateRow("tau", y)
    pairs = {(sigma[x][y], tau[y][x]) for x in range(n) for y in range(n)}
    if len(pairs) != n * n:
        raise NotInvertible("the pair map (x,y) -> (sigma_x(y), tau_y(x)) is not bijective")

    def r(x: int, y: int) -> tuple[int, int]:
        return sigma[x][y], tau[y][x]

    for x in range(n):
        for y in range(n):
            for z in range(n):
                # r1 r2 r1 applied to (x, y, z)
                a, b = r(x, y)
                b2, c = r(b, z)
                a2, b3 = r(a, b2)
                lhs = (a2, b3, c)
                # r2 r1 r2
                b4, c2 = r(y, z)
                a3, b5 = r(x, b4)
                b6, c3 = r(b5, c2)
                rhs = (a3, b6, c3)
                if lhs != rhs:
                    raise YBEFailure((x, y, z))
    return Solution(n, sigma, tau)


def invert_solution(s: Solution) -> Solution:
    """The inverse braiding r^{-1}(x,y) = (sigma^_x(y), tau^_y(x))."""
    n = s.n
    sigma_hat = [[0] * n for _ in range(n)]
    tau_hat = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            u, v = s.r(x, y)
            # r^{-1}(u, v) = (x, y)
            sigma_hat[u][v] = x
            tau_hat[v][u] = y
    return verify_solution(sigma_hat, tau_hat)


def verify_rack(op: Sequence[Sequence[int]]) -> Rack:
    """Validate a rack table and return a Rack."""
    op = _freeze(op)
    n = len(op)
    if n == 0 or any(len(row) != n for row in op):
        raise ValueError("op must be a non-empty n x n table")
    for y in range(n):
        if not perm.is_perm(tuple(op[x][y] for x in range(n)), n):
            raise NonBijectiveTranslation(y)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if op[op[x][y]][z] != op[op[x][z]][op[y][z]]:
                    raise SelfDistributivityFailure((x, y, z))
    return Rack(n, op)


def sd_solutions(rk: Rack) -> tuple[Solution, Solution]:
    """The two self-distributive solutions of a rack.

    Returns (r_op, r'_op) with r_op(x,y) = (y, x > y) and
    r'_op(x,y) = (y > x, x).
    """
    n = rk.n
    ident = list(range(n))
    # r_op: sigma_x = id, tau_y = rho_y
    first = verify_solution([ident] * n, [list(rk.rho(y)) for y in range(n)])
    # r'_op: sigma_x = rho_x, tau_y = id
    second = verify_solution([list(rk.rho(x)) for x in range(n)], [ident] * n)
    return first, second


def _partition_from_perms(n: int, perms: list[perm.Perm]) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in perms:
        for x in range(n):
            ra, rb = find(x), find(p[x])
            if ra != rb:
                parent[ra] = rb
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return tuple(tuple(sorted(b)) for b in sorted(blocks.values()))


def rack_orbits(rk: Rack) -> tuple[tuple[int, ...], ...]:
    """Partition of X under all right translations; block count is K."""
    return _partition_from_perms(rk.n, [rk.rho(y) for y in range(rk.n)])


def solution_orbits(s: Solution) -> tuple[tuple[int, ...], ...]:
    """Partition of X under all sigma_z and tau_z; block count is k_r."""
    perms = [s.sigma[z] for z in range(s.n)] + [s.tau[z] for z in range(s.n)]
    return _partition_from_perms(s.n, list(perms))


def chain_periods(rk: Rack) -> ChainReport:
    """Minimal periods of all chains, via cycles of (x,y) -> (y, x > y) on X^2."""
    n = rk.n
    pair_map = {}
    for x in range(n):
        for y in range(n):
            pair_map[(x, y)] = (y, rk.op[x][y])
    seen: set[tuple[int, int]] = set()
    periods = []
    for start in sorted(pair_map):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = pair_map[start]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = pair_map[cur]
        periods.append(len(cyc))
    assert sum(periods) == n * n
    return ChainReport(tuple(sorted(periods)), len(rack_orbits(rk)))


def t_map_of(s: Solution) -> perm.Perm:
    """The map T(y) = tau_y^{-1}(y); always a bijection for valid solutions."""
    return tuple(perm.inverse(s.tau[y])[y] for y in range(s.n))


def is_biquandle(s: Solution) -> bool:
    """A solution is a biquandle iff r(T(x), x) = (T(x), x) for all x."""
    t = t_map_of(s)
    return all(s.r(t[x], x) == (t[x], x) for x in range(s.n))


def _is_decomposable(s: Solution) -> bool:
    """Test whether X splits as Y | Z with r restricting to Y x Y and Z x Z.

    Exhaustive over all bipartitions for small n; for larger sets only the
    splits coarsening the orbit partition are tried (sufficient whenever a
    decomposition exists along invariant subsets).
    """
    n = s.n

    def closed(block: set[int]) -> bool:
        for x in block:
            for y in block:
                u, v = s.r(x, y)
                if u not in block or v not in block:
                    return False
        return True

    if n <= 16:
        # enumerate subsets containing element 0 by masking the other n-1 bits
        for mask in range(1 << (n - 1)):
            y_set = {0} | {i + 1 for i in range(n - 1) if (mask >> i) & 1}
            if len(y_set) == n:
                continue
            z_set = set(range(n)) - y_set
            if closed(y_set) and closed(z_set):
                return True
        return False
    orbits = solution_orbits(s)
    k = len(orbits)
    for mask in range(1, (1 << k) - 1):
        y_set = {x for i in range(k) if (mask >> i) & 1 for x in orbits[i]}
        z_set = set(range(n)) - y_set
        if closed(y_set) and closed(z_set):
            return True
    return False


def classify(s: Solution) -> SolutionClass:
    n = s.n
    ident = perm.identity(n)
    involutive = all(s.r(*s.r(x, y)) == (x, y) for x in range(n) for y in range(n))
    bq = is_biquandle(s)
    sd_right = all(s.sigma[x] == ident for x in range(n))
    sd_left = all(s.tau[y] == ident for y in range(n))
    return SolutionClass(
        involutive=involutive,
        biquandle=bq,
        self_distributive_right=sd_right,
        self_distributive_left=sd_left,
        decomposable=_is_decomposable(s),
        t_map=t_map_of(s) if bq else None,
    )


@lru_cache(maxsize=None)
def _classify_cached(s: Solution) -> SolutionClass:
    return classify(s)
