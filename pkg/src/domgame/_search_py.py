"""Pure-Python search kernel: the fallback twin of the numba kernel.

Positions are bitmasks over vertex ids; `nbh[v]` is the closed
neighborhood mask of v.  Results are packed as ``value << 8 | plies``
with value in {0: BobWin, 1: Draw, 2: AliceWin}; a negative result
signals memo-capacity exhaustion.  Keep this logic line-for-line in sync
with ``_search_nb``.
"""

FLAG_PRUNE_DOMINATED = 1
FLAG_FORCED_TRAP = 2
FLAG_DOUBLE_TRAP = 4

CAPACITY_EXCEEDED = -1


def solve_kernel(a, b, cov_a, cov_b, turn, nbh, n, full, flags, cap, memo, stats):
    if cov_a == full:
        return 2 << 8
    if cov_b == full:
        return 0 << 8
    occupied = a | b
    if occupied == full:
        return 1 << 8
    key = (a * 2 + turn, b)
    if key in memo:
        stats[1] += 1
        return memo[key]
    stats[0] += 1

    restrict = -1
    if flags & (FLAG_FORCED_TRAP | FLAG_DOUBLE_TRAP):
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
        if (flags & FLAG_DOUBLE_TRAP) and trap_second:
            result = 1 << 8
            if len(memo) >= cap:
                return CAPACITY_EXCEEDED
            memo[key] = result
            return result
        if (flags & FLAG_FORCED_TRAP) and trap_min >= 0:
            restrict = trap_min

    pruned = 0
    if (flags & FLAG_PRUNE_DOMINATED) and restrict < 0:
        for x in range(n):
            xbit = 1 << x
            if occupied & xbit:
                continue
            pxa = nbh[x] & ~cov_a
            pxb = nbh[x] & ~cov_b
            for y in range(n):
                if y == x:
                    continue
                ybit = 1 << y
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
            pruned = 0

    best_rank = -1
    best_val = 1
    best_plies = 0
    for v in range(n):
        bit = 1 << v
        if occupied & bit:
            continue
        if restrict >= 0 and v != restrict:
            continue
        if pruned & bit:
            continue
        if turn == 0:
            res = solve_kernel(a | bit, b, cov_a | nbh[v], cov_b, 1, nbh, n, full, flags, cap, memo, stats)
        else:
            res = solve_kernel(a, b | bit, cov_a, cov_b | nbh[v], 0, nbh, n, full, flags, cap, memo, stats)
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

    result = (best_val << 8) | best_plies
    if len(memo) >= cap:
        return CAPACITY_EXCEEDED
    memo[key] = result
    return result
