"""Exhaustive search for sign maps passing the degree-k axioms.

The search assigns +1/-1 to the lex-ordered (k+2)-tuples, keeps every
(k+3)-window sign sequence unimodal through arc-consistency propagation,
and batch-filters complete assignments through the exchange condition.
The lex-first tuple is pinned to +1, so exactly one representative of
each {chi, -chi} pair is produced, in lex order of the sign strings.
"""

from __future__ import annotations

import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .chirotope import Chirotope
from .combinat import exchange_table, window_index
from .errors import InputError

_PLUS = ord("+")
_MINUS = ord("-")


def propagate_window(values):
    """Arc-consistency on one window's sign sequence (0 = undecided).

    Returns None when no completion with at most one sign change exists,
    else the sequence with every forced entry filled in: with both signs
    present, undecided cells before the last leading-sign cell take the
    leading sign and cells after the first opposite cell take the
    opposite; with one sign present, cells strictly inside its span take
    it.
    """
    vals = list(values)
    s = 0
    p_first = p_last = q_first = -1
    for i, v in enumerate(vals):
        if v == 0:
            continue
        if s == 0:
            s = v
            p_first = p_last = i
        elif v == s:
            if q_first >= 0:
                return None
            p_last = i
        elif q_first < 0:
            q_first = i
    if s == 0:
        return vals
    if q_first >= 0:
        for i in range(p_last):
            if vals[i] == 0:
                vals[i] = s
        for i in range(q_first + 1, len(vals)):
            if vals[i] == 0:
                vals[i] = -s
    else:
        for i in range(p_first + 1, p_last):
            if vals[i] == 0:
                vals[i] = s
    return vals


def _search_leaves(n, k, prefix_depth=None, shard=None, of_shards=None):
    """Depth-first search over unimodal-consistent assignments.

    Returns (chars, count): a bytearray of '+'/'-' rows in emission
    order, which is lex order of the sign strings, and the row count.
    With shard arguments, only leaves whose branch-decision prefix hashes
    into the shard are emitted; shallow leaves hash their full decision
    string.
    """
    wi = window_index(n, k)
    windows = wi.windows
    var_windows = wi.var_windows
    T = len(wi.tuples)
    sharded = of_shards is not None and of_shards > 1
    crc = zlib.crc32

    x = [0] * T
    xb = bytearray(T)
    trail = []

    def propagate(v0):
        queue = [v0]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in var_windows[v]:
                win = windows[w]
                s = 0
                p_first = p_last = q_first = -1
                for i, u in enumerate(win):
                    val = x[u]
                    if val == 0:
                        continue
                    if s == 0:
                        s = val
                        p_first = p_last = i
                    elif val == s:
                        if q_first >= 0:
                            return False
                        p_last = i
                    elif q_first < 0:
                        q_first = i
                if s == 0:
                    continue
                if q_first >= 0:
                    for i in range(p_last):
                        u = win[i]
                        if x[u] == 0:
                            x[u] = s
                            xb[u] = _PLUS if s > 0 else _MINUS
                            trail.append(u)
                            queue.append(u)
                    for i in range(q_first + 1, len(win)):
                        u = win[i]
                        if x[u] == 0:
                            x[u] = -s
                            xb[u] = _MINUS if s > 0 else _PLUS
                            trail.append(u)
                            queue.append(u)
                else:
                    for i in range(p_first + 1, p_last):
                        u = win[i]
                        if x[u] == 0:
                            x[u] = s
                            xb[u] = _PLUS if s > 0 else _MINUS
                            trail.append(u)
                            queue.append(u)
        return True

    def next_var(start):
        for v in range(start, T):
            if x[v] == 0:
                return v
        return -1

    buf = bytearray()
    count = 0

    # canonical pair representative: lex-first tuple positive
    x[0] = 1
    xb[0] = _PLUS
    trail.append(0)
    if not propagate(0):
        return buf, 0

    # depth-0 prefix: the whole tree is one hash class
    if sharded and prefix_depth == 0 and crc(b"") % of_shards != shard:
        return buf, 0

    decisions = bytearray(T)

    v0 = next_var(1)
    if v0 < 0:
        if not sharded or crc(b"") % of_shards == shard:
            buf += xb
            count = 1
        return buf, count

    stack = [[v0, 0, len(trail)]]
    while stack:
        frame = stack[-1]
        var, phase, mark = frame
        while len(trail) > mark:
            x[trail.pop()] = 0
        if phase == 2:
            stack.pop()
            continue
        frame[1] += 1
        sign = 1 if phase == 0 else -1
        depth = len(stack) - 1
        decisions[depth] = _PLUS if sign > 0 else _MINUS
        if (
            sharded
            and depth + 1 == prefix_depth
            and crc(bytes(decisions[:prefix_depth])) % of_shards != shard
        ):
            continue
        x[var] = sign
        xb[var] = decisions[depth]
        trail.append(var)
        if not propagate(var):
            continue
        nv = next_var(var + 1)
        if nv < 0:
            if (
                sharded
                and depth + 1 < prefix_depth
                and crc(bytes(decisions[: depth + 1])) % of_shards != shard
            ):
                continue
            buf += xb
            count += 1
            continue
        stack.append([nv, 0, len(trail)])
    return buf, count


def _chars_to_signs(chars):
    """'+'/'-'/'0' codes to -1/0/+1 int8."""
    out = np.zeros(chars.shape, np.int8)
    out[chars == _PLUS] = 1
    out[chars == _MINUS] = -1
    return out


def exchange_filter_mask(chars, n, k):
    """Which rows of a nowhere-zero sign matrix pass the exchange test.

    Rows are '+'/'-' char codes over the lex tuple order.  Uses the
    pruned pair table: pairs whose pivot lies in mu hold automatically
    for nowhere-zero maps.
    """
    tab = exchange_table(n, k, True)
    m = len(chars)
    if m == 0 or len(tab.coeff) == 0:
        return np.ones(m, bool)
    per_row = tab.coeff.size
    chunk = max(16, int(24_000_000 / max(per_row, 1)))
    mask = np.empty(m, bool)
    for lo in range(0, m, chunk):
        X = _chars_to_signs(chars[lo : lo + chunk])
        P = tab.coeff[None, :, :] * X[:, tab.left] * X[:, tab.right]
        mask[lo : lo + chunk] = ((P == 1).any(2) & (P == -1).any(2)).all(1)
    return mask


@dataclass(frozen=True)
class EnumerationResult:
    """Search output: every surviving sign string plus both tallies.

    chars holds one '+'/'-' row per object, rows in lex order of the
    strings.  unimodal_count tallies complete unimodal-consistent
    assignments before the exchange filter; count is after.
    """

    n: int
    k: int
    unimodal_count: int
    count: int
    chars: np.ndarray

    def strings(self):
        return [row.tobytes().decode("ascii") for row in self.chars]

    def sign_rows(self):
        return _chars_to_signs(self.chars)

    def chirotopes(self):
        for row in self.sign_rows():
            yield Chirotope(self.n, self.k, row)

    def summary(self):
        return f"unimodal={self.unimodal_count} degree_k={self.count}"


def _finish(n, k, buf, unimodal_count):
    T = len(window_index(n, k).tuples)
    chars = np.frombuffer(bytes(buf), np.uint8).reshape(-1, T)
    mask = exchange_filter_mask(chars, n, k)
    kept = chars[mask].copy()
    kept.setflags(write=False)
    return EnumerationResult(
        n=n, k=k, unimodal_count=unimodal_count, count=len(kept), chars=kept
    )


def enumerate_chirotopes(n, k):
    """All degree-k chirotopes on [n] up to global sign, lex order."""
    if k < 1:
        raise InputError(f"degree must be at least 1, got {k}")
    if n < k + 2:
        raise InputError(f"need n >= k+2, got n={n} k={k}")
    buf, cnt = _search_leaves(n, k)
    return _finish(n, k, buf, cnt)


def default_prefix_depth(n, k):
    """Branch depth whose decision prefix routes work to shards."""
    T = len(window_index(n, k).tuples)
    return max(0, min(12, T - 1))


def partition_search(n, k, prefix_depth, shard, of_shards):
    """One shard of the search space; the union over shards is exact.

    A subtree at the prefix depth belongs to the shard its decision
    prefix hashes to (crc32 mod of_shards); leaves above that depth hash
    their full decision string.
    """
    if of_shards < 1:
        raise InputError(f"of_shards must be positive, got {of_shards}")
    if not 0 <= shard < of_shards:
        raise InputError(f"shard {shard} outside [0, {of_shards})")
    if prefix_depth is None:
        prefix_depth = default_prefix_depth(n, k)
    if prefix_depth < 0:
        raise InputError(f"prefix depth must be nonnegative, got {prefix_depth}")
    if k < 1 or n < k + 2:
        raise InputError(f"need n >= k+2 and k >= 1, got n={n} k={k}")
    buf, cnt = _search_leaves(n, k, prefix_depth, shard, of_shards)
    return _finish(n, k, buf, cnt)


def merge_results(results):
    """Combine shard results into one lex-ordered result."""
    results = list(results)
    if not results:
        raise InputError("nothing to merge")
    n, k = results[0].n, results[0].k
    for res in results:
        if (res.n, res.k) != (n, k):
            raise InputError("cannot merge results for different (n, k)")
    chars = np.vstack([res.chars for res in results])
    if len(chars):
        order = np.argsort(chars.view(f"V{chars.shape[1]}").ravel(), kind="stable")
        chars = chars[order]
    chars = chars.copy()
    chars.setflags(write=False)
    return EnumerationResult(
        n=n,
        k=k,
        unimodal_count=sum(r.unimodal_count for r in results),
        count=sum(r.count for r in results),
        chars=chars,
    )


def _shard_task(args):
    n, k, prefix_depth, shard, of_shards = args
    res = partition_search(n, k, prefix_depth, shard, of_shards)
    return res.unimodal_count, res.count, res.chars.tobytes()


def enumerate_sharded(n, k, of_shards, jobs=1, prefix_depth=None):
    """Run every shard, optionally on a process pool, and merge."""
    if prefix_depth is None:
        prefix_depth = default_prefix_depth(n, k)
    tasks = [(n, k, prefix_depth, s, of_shards) for s in range(of_shards)]
    T = len(window_index(n, k).tuples)
    parts = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outs = list(pool.map(_shard_task, tasks))
    else:
        outs = [_shard_task(t) for t in tasks]
    for (ucnt, cnt, raw) in outs:
        chars = np.frombuffer(raw, np.uint8).reshape(-1, T)
        parts.append(
            EnumerationResult(n=n, k=k, unimodal_count=ucnt, count=cnt, chars=chars)
        )
    return merge_results(parts)


def brute_force_strings(n, k, degree_check):
    """Filter every nowhere-zero canonical assignment through a checker.

    Materializes all 2^(T-1) sign arrays with leading +1 (T tuples), so
    only sensible for T <= 20 or so.  degree_check maps a Chirotope to a
    truthy verdict.  Returns the surviving sign strings, sorted.
    """
    T = len(window_index(n, k).tuples)
    if T > 24:
        raise InputError(f"brute force over 2^{T - 1} assignments refused")
    out = []
    total = 1 << (T - 1)
    chunk = 1 << 14
    wi = window_index(n, k)
    W = np.array(wi.windows, np.int64) if wi.windows else None
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        X = np.ones((len(idx), T), np.int8)
        if T > 1:
            bits = (idx[:, None] >> np.arange(T - 1, dtype=np.int64)[None, :]) & 1
            X[:, 1:] = 1 - 2 * bits.astype(np.int8)
        cand = np.ones(len(idx), bool)
        if W is not None:
            S = X[:, W]
            cand = ((S[:, :, 1:] != S[:, :, :-1]).sum(2) <= 1).all(1)
        for row in X[cand]:
            if degree_check(Chirotope(n, k, row)):
                out.append("".join("+" if v > 0 else "-" for v in row))
    return sorted(out)
