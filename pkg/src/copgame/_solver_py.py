"""Pure-Python capture-time kernel.

Reference implementation of the backward-induction sweep; the optional C
twin in ``_solver_cy`` computes bit-identical output. The kernel works on a
flat CSR adjacency (``off``/``nbr``) so both backends share one calling
convention and neither depends on the Graph type.

State space: cop positions are sorted k-multisets over {0..n-1}, ranked in
``itertools.combinations_with_replacement`` order. For multiset rank ``ci``
and robber vertex ``r``, the output array holds at ``ci*n + r`` the minimum
number of cop moves needed to force capture from the cop-to-move state, with
0 exactly when the robber already shares a vertex with a cop and -1 when the
cops cannot force capture at all.

The sweep runs retrograde over levels: robber-to-move states count their
non-suicide options (moving onto a cop is immediate capture, so those
options never help the robber and are excluded); a robber state finalises at
level v when its last counted option finalises at v, and then every cop
predecessor still unlabelled finalises at v+1. Processing levels in
increasing order realises the min over cop moves and the max over robber
replies simultaneously, and makes the result independent of the order states
are drained within a level.
"""

from __future__ import annotations

from array import array
from itertools import combinations_with_replacement, product

from .errors import BudgetError


def capture_times(n: int, k: int, off, nbr, max_transitions: int) -> array:
    closed: list[list[int]] = []
    closed_mask = [0] * n
    for v in range(n):
        row = sorted(set(nbr[off[v]:off[v + 1]]) | {v})
        closed.append(row)
        m = 0
        for w in row:
            m |= 1 << w
        closed_mask[v] = m

    msets = list(combinations_with_replacement(range(n), k))
    m_count = len(msets)
    rank = {ms: i for i, ms in enumerate(msets)}
    member = [0] * m_count
    for i, ms in enumerate(msets):
        mm = 0
        for c in ms:
            mm |= 1 << c
        member[i] = mm

    # Cop successor lists. The multiset relation is symmetric (reverse each
    # per-cop step), so succ doubles as the predecessor relation below.
    succ: list[list[int]] = []
    total = 0
    for ms in msets:
        opts = [closed[c] for c in ms]
        raw = 1
        for o in opts:
            raw *= len(o)
        total += raw
        if total > max_transitions:
            raise BudgetError(
                f"cop transition count exceeds budget ({total} > {max_transitions})"
            )
        seen = {tuple(sorted(combo)) for combo in product(*opts)}
        succ.append(sorted(rank[t] for t in seen))

    nn = m_count * n
    t_val = array('i', [-1]) * nn
    rv_val = array('i', [-1]) * nn
    cnt = array('i', [0]) * nn

    # Seeds: robber on a cop. Both turn variants are 0; only the
    # robber-to-move side propagates (a cop predecessor captures in 1 move).
    rv_queues: list[list[int]] = [[]]
    t_queues: list[list[int]] = [[]]
    for i in range(m_count):
        cm = member[i]
        base = i * n
        for r in range(n):
            if (cm >> r) & 1:
                t_val[base + r] = 0
                rv_val[base + r] = 0
                rv_queues[0].append(base + r)
            else:
                cnt[base + r] = len(closed[r]) - (closed_mask[r] & cm).bit_count()

    level = 0
    while level < len(t_queues) or level < len(rv_queues):
        if level < len(t_queues):
            for s in t_queues[level]:
                i, r = divmod(s, n)
                cm = member[i]
                base = i * n
                for rp in closed[r]:
                    if (cm >> rp) & 1:
                        continue
                    left = cnt[base + rp] - 1
                    cnt[base + rp] = left
                    if left == 0:
                        rv_val[base + rp] = level
                        while len(rv_queues) <= level:
                            rv_queues.append([])
                        rv_queues[level].append(base + rp)
        if level < len(rv_queues):
            for s in rv_queues[level]:
                i, r = divmod(s, n)
                for j in succ[i]:
                    t = j * n + r
                    if t_val[t] == -1:
                        t_val[t] = level + 1
                        while len(t_queues) <= level + 1:
                            t_queues.append([])
                        t_queues[level + 1].append(t)
        level += 1

    return t_val
