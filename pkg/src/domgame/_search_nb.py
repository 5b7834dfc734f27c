"""Numba-compiled search kernel; logic mirrors ``_search_py`` exactly.

Masks are int64, so the engine caps boards at 60 vertices.  The memo is a
``numba.typed.Dict`` keyed by ``(claims-and-turn, bob-mask)`` tuples.
"""

import numpy as np
from numba import int64, njit
from numba.core import types
from numba.typed import Dict

KEY_TYPE = types.UniTuple(types.int64, 2)


def make_memo():
    return Dict.empty(KEY_TYPE, types.int64)


@njit(cache=True)
def solve_kernel(a, b, cov_a, cov_b, turn, nbh, n, full, flags, cap, memo, stats):
    if cov_a == full:
        return int64(2 << 8)
    if cov_b == full:
        return int64(0)
    occupied = a | b
    if occupied == full:
        return int64(1 << 8)
    key = (a * 2 + turn, b)
    if key in memo:
        stats[1] += 1
        return memo[key]
    stats[0] += 1

    one = int64(1)
    restrict = -1
    if flags & 6:  # FLAG_FORCED_TRAP | FLAG_DOUBLE_TRAP
        trap_min = -1
        trap_second = False
        for w in range(n):
            s = nbh[w] & ~b
            if s != 0 and (s & (s - 1)) == 0 and (s & a) == 0:
                v = 0
                t = s
                while t > 1:
                    t >>= 1
                    v += 1
                if trap_min < 0:
                    trap_min = v
                elif v != trap_min:
                    trap_second = True
                    if v < trap_min:
                        trap_min = v
        if (flags & 4) and trap_second:
            result = int64(1 << 8)
            if len(memo) >= cap:
                return int64(-1)
            memo[key] = result
            return result
        if (flags & 2) and trap_min >= 0:
            restrict = trap_min

    pruned = int64(0)
    if (flags & 1) and restrict < 0:
        for x in range(n):
            xbit = one << x
            if occupied & xbit:
                continue
            pxa = nbh[x] & ~cov_a
            pxb = nbh[x] & ~cov_b
            for y in range(n):
                if y == x:
                    continue
                ybit = one << y
                if occupied & ybit:
                    continue
                pya = nbh[y] & ~cov_a
                pyb = nbh[y] & ~cov_b
                if (pxa & ~pya) == 0 and (pxb & ~pyb) == 0:
                    strict = (pya & ~pxa) != 0 or (pyb & ~pxb) != 0
                    if strict or y < x:
                        pruned |= xbit
                        break
        if pruned == (full & ~occupied):
            pruned = int64(0)

    best_rank = -1
    best_val = 1
    best_plies = 0
    for v in range(n):
        bit = one << v
        if occupied & bit:
            continue
        if restrict >= 0 and v != restrict:
            continue
        if pruned & bit:
            continue
        if turn == 0:
            res = solve_kernel(a | bit, b, cov_a | nbh[v], cov_b, int64(1), nbh, n, full, flags, cap, memo, stats)
        else:
            res = solve_kernel(a, b | bit, cov_a, cov_b | nbh[v], int64(0), nbh, n, full, flags, cap, memo, stats)
        if res < 0:
            return res
        val = res >> 8
        plies = (res & 255) + 1
        rank = val if turn == 0 else 2 - val
        take = False
        if rank > best_rank:
            take = True
        elif rank == best_rank:
            if rank == 2:
                take = plies < best_plies
            else:
                take = plies > best_plies
        if take:
            best_rank = rank
            best_val = val
            best_plies = plies
        if best_rank == 2:
            break

    result = int64((best_val << 8) | best_plies)
    if len(memo) >= cap:
        return int64(-1)
    memo[key] = result
    return result


def warmup():
    """Trigger JIT compilation on a single-vertex board."""
    nbh = np.ones(1, dtype=np.int64)
    solve_kernel(
        int64(0), int64(0), int64(0), int64(0), int64(0),
        nbh, int64(1), int64(1), int64(0), int64(1 << 20),
        make_memo(), np.zeros(2, dtype=np.int64),
    )
