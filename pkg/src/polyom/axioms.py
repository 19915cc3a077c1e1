"""Axiom checkers for degree-k sign maps and their cocircuit vectors.

Every check returns an AxiomReport.  Failures carry the lexicographically
first witness: checks scan pairs and windows in lex order, so reruns
produce identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .chirotope import Chirotope, cocircuit_vectors, window_signs
from .combinat import exchange_table, window_index
from .errors import InputError


def _jsonable(obj):
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    return obj


@dataclass(frozen=True)
class AxiomReport:
    """Verdict of one check, with the first offending witness on failure."""

    passed: bool
    axiom: str = ""
    witness: tuple = ()
    note: str = ""

    def __bool__(self):
        return self.passed

    def text(self):
        if self.passed:
            return "PASS" + (f" ({self.note})" if self.note else "")
        parts = [f"FAIL {self.axiom}"]
        if self.witness:
            parts.append(f"witness={_jsonable(self.witness)}")
        if self.note:
            parts.append(f"({self.note})")
        return " ".join(parts)

    def to_json(self):
        return json.dumps(
            {
                "passed": self.passed,
                "axiom": self.axiom,
                "witness": _jsonable(self.witness),
                "note": self.note,
            },
            sort_keys=True,
        )


_PASS = AxiomReport(True)


def check_B1(chi):
    """Some tuple must carry a nonzero sign."""
    if (chi.signs != 0).any():
        return _PASS
    return AxiomReport(False, "B1", (), "sign map is identically zero")


def check_B3(chi):
    """Grassmann-Pluecker sign condition over all sorted pairs.

    For each ordered pair (lam, mu) with pivot lam_1, the multiset
    { -chi(lam)chi(mu) } + { exchange terms } must contain both signs or
    vanish entirely.  Realized sign maps satisfy this because the
    corresponding determinant products sum to zero.
    """
    tab = exchange_table(chi.n, chi.k, False)
    if len(tab.coeff) == 0:
        return _PASS
    x = chi.signs
    terms = tab.coeff * x[tab.left] * x[tab.right]
    ok = ((terms == 1).any(1) & (terms == -1).any(1)) | (terms == 0).all(1)
    if ok.all():
        return _PASS
    row = int(np.argmax(~ok))
    wi = window_index(chi.n, chi.k)
    lam = wi.tuples[int(tab.pair_lam[row])]
    mu = wi.tuples[int(tab.pair_mu[row])]
    return AxiomReport(
        False,
        "B3",
        (lam, mu, tuple(int(v) for v in terms[row])),
        "exchange terms all of one sign",
    )


def _zero_pattern_ok(seq, length):
    """One window in the non-uniform case: s^a 0^b (-s)^c with b in {0, 1, all}."""
    zeros = [i for i, v in enumerate(seq) if v == 0]
    b = len(zeros)
    if b == length:
        return True
    if b > 1:
        return False
    if b == 1:
        z = zeros[0]
        head = seq[:z]
        tail = seq[z + 1:]
        if head and any(v != head[0] for v in head):
            return False
        if tail and any(v != tail[0] for v in tail):
            return False
        if head and tail and head[0] != -tail[0]:
            return False
        return True
    changes = sum(1 for a, c in zip(seq, seq[1:]) if a != c)
    return changes <= 1


def check_unimodal(chi):
    """Deletion signs of every (k+3)-window change at most once.

    The window sequence lists the (k+2)-subtuples in lex order (largest
    element deleted first).  Uniform maps need at most one sign change;
    with zeros, the only admissible shapes are s..s 0 -s..-s, a single
    run with one zero at either end, or an all-zero window.
    """
    S = window_signs(chi)
    if S.shape[0] == 0:
        return _PASS
    if chi.is_uniform():
        changes = (S[:, 1:] != S[:, :-1]).sum(1)
        ok = changes <= 1
    else:
        ok = np.fromiter(
            (_zero_pattern_ok([int(v) for v in row], S.shape[1]) for row in S),
            dtype=bool,
            count=S.shape[0],
        )
    if ok.all():
        return _PASS
    w = int(np.argmax(~ok))
    wi = window_index(chi.n, chi.k)
    return AxiomReport(
        False,
        "unimodal",
        (wi.window_tuples[w], tuple(int(v) for v in S[w])),
        "window sign sequence changes more than once",
    )


def check_transitivity(chi):
    """Equal outer deletion signs force a constant window.

    In each (k+3)-window, the lex-first subtuple drops the largest
    element and the lex-last drops the smallest; when those two signs
    agree, every subtuple of the window must carry that sign.
    """
    S = window_signs(chi)
    if S.shape[0] == 0:
        return _PASS
    bad = (S[:, 0] == S[:, -1]) & ~(S == S[:, :1]).all(1)
    if not bad.any():
        return _PASS
    w = int(np.argmax(bad))
    wi = window_index(chi.n, chi.k)
    return AxiomReport(
        False,
        "transitivity",
        (wi.window_tuples[w], tuple(int(v) for v in S[w])),
        "outer deletions agree but the window is not constant",
    )


def check_degree_k(chi):
    """B1, alternation, the exchange condition and window unimodality.

    Alternation is structural here: values on unsorted tuples are defined
    through the stored sorted representatives.  Uniformity is not part of
    the verdict; it rides along in the note.
    """
    for check in (check_B1, check_B3, check_unimodal):
        report = check(chi)
        if not report:
            return report
    note = "uniform" if chi.is_uniform() else "not uniform"
    return AxiomReport(True, note=note)


def _as_matrix(vectors, n=None):
    M = np.asarray(vectors, np.int8)
    if M.size == 0:
        M = M.reshape(0, n if n else 0)
    if M.ndim != 2:
        raise InputError("expected a list of equal-length sign vectors")
    return M


def _c3_uniform_batch(M):
    """Vectorized elimination check for pairs with |X^0 \\ Y^0| = 1.

    Uses that distinct vectors sharing a zero set come in a single +-
    pair; falls back to the scanning route when that fails to hold.
    """
    m, n = M.shape
    zb = M == 0
    zmask = zb.astype(np.int64) @ (np.int64(1) << np.arange(n, dtype=np.int64))
    _, counts = np.unique(zmask, return_counts=True)
    if counts.max(initial=0) > 2:
        return None
    zint = zb.astype(np.int32)
    q = (zint @ (1 - zint).T) == 1
    prod = M[:, None, :] * M[None, :, :]
    trips = np.argwhere(q[:, :, None] & (prod == -1))
    if len(trips) == 0:
        return _PASS
    I, J, E = trips[:, 0], trips[:, 1], trips[:, 2]
    want = (zmask[I] & zmask[J]) | (np.int64(1) << E)
    order = np.argsort(zmask, kind="stable")
    zs = zmask[order]
    pos = np.searchsorted(zs, want, side="left")
    agree = (M[I] == M[J]) & (M[I] != 0)

    def fits(p):
        valid = (p < m) & (zs[np.minimum(p, m - 1)] == want)
        rows = M[order[np.minimum(p, m - 1)]]
        return valid & ~((agree & (rows != M[I])).any(1))

    ok = fits(pos) | fits(pos + 1)
    if ok.all():
        return _PASS
    t = int(np.argmax(~ok))
    return AxiomReport(
        False,
        "C3",
        (int(I[t]), int(J[t]), int(E[t]) + 1),
        "no eliminating vector for this pair",
    )


def _c3_near(M):
    """Elimination over pairs with |X^0 \\ Y^0| = 1, pairs X = -Y exempt.

    The eliminating vector must vanish exactly on (X^0 cap Y^0) + {e}
    and keep every sign X and Y share; for such pairs that vector exists
    in any valid set, and for uniform sets these pairs carry the whole
    axiom.
    """
    m, n = M.shape
    by_zero = {}
    row_zm = []
    for i in range(m):
        zm = 0
        for e in range(n):
            if M[i, e] == 0:
                zm |= 1 << e
        by_zero.setdefault(zm, []).append(i)
        row_zm.append(zm)
    for i in range(m):
        for j in range(m):
            if np.array_equal(M[j], -M[i]):
                continue
            zi, zj = row_zm[i], row_zm[j]
            if bin(zi & ~zj).count("1") != 1:
                continue
            for e in range(n):
                if int(M[i, e]) * int(M[j, e]) != -1:
                    continue
                want = (zi & zj) | (1 << e)
                found = False
                for c in by_zero.get(want, ()):
                    z = M[c]
                    good = True
                    for f in range(n):
                        if M[i, f] != 0 and M[i, f] == M[j, f] and z[f] != M[i, f]:
                            good = False
                            break
                    if good:
                        found = True
                        break
                if not found:
                    return AxiomReport(
                        False,
                        "C3",
                        (i, j, e + 1),
                        "no eliminating vector for this pair",
                    )
    return _PASS


def _c3_general(M):
    """Weak elimination over all pairs, pairs X = -Y exempt.

    Where X and Y disagree, some vector of the set must vanish there
    while drawing every one of its signs from X or Y.  No constraint is
    put on the rest of its zero set: demanding one (as the exact
    near-pair form does) is unsatisfiable for pairs whose zero sets
    share too little.
    """
    m, n = M.shape
    pos = M == 1
    neg = M == -1
    zero = M == 0
    for i in range(m):
        for j in range(m):
            if np.array_equal(M[j], -M[i]):
                continue
            seps = (pos[i] & neg[j]) | (neg[i] & pos[j])
            if not seps.any():
                continue
            allowed_p = pos[i] | pos[j]
            allowed_n = neg[i] | neg[j]
            ok = ~((pos & ~allowed_p) | (neg & ~allowed_n)).any(1)
            covered = zero[ok].any(0)
            missing = seps & ~covered
            if missing.any():
                e = int(np.argmax(missing))
                return AxiomReport(
                    False,
                    "C3",
                    (i, j, e + 1),
                    "no eliminating vector for this pair",
                )
    return _PASS


def check_cocircuit_axioms(vectors, uniform=False):
    """C0 through C3 for a finite set of sign vectors.

    C0: the zero vector is absent.  C1: closed under negation.  C2: a
    support contained in another forces equality up to sign.  C3:
    elimination; with uniform set, only pairs whose zero sets differ by
    one element are examined (the pairs that carry the axiom for uniform
    sets) through a vectorized lookup, else weak elimination over all
    pairs.  Witnesses index rows of the input.
    """
    M = _as_matrix(vectors)
    m, n = M.shape
    if m == 0:
        return _PASS
    zero_rows = np.nonzero(~(M != 0).any(1))[0]
    if len(zero_rows):
        return AxiomReport(False, "C0", (int(zero_rows[0]),), "zero vector present")
    present = {M[i].tobytes(): i for i in range(m)}
    for i in range(m):
        if (-M[i]).tobytes() not in present:
            return AxiomReport(False, "C1", (i,), "negative not in the set")
    support = M != 0
    outside = support.astype(np.int32) @ (1 - support.astype(np.int32)).T
    eq = (M[:, None, :] == M[None, :, :]).all(2)
    neq = (M[:, None, :] == -M[None, :, :]).all(2)
    bad = (outside == 0) & ~(eq | neq)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return AxiomReport(False, "C2", (int(i), int(j)), "nested supports, not a sign pair")
    if uniform:
        report = _c3_uniform_batch(M)
        if report is None:
            report = _c3_near(M)
    else:
        report = _c3_general(M)
    return report


def _vectors_of(obj):
    if isinstance(obj, Chirotope):
        return cocircuit_vectors(obj)
    return _as_matrix(obj)


def is_acyclic(obj):
    """Every element sits strictly inside some nonnegative cocircuit.

    Accepts a Chirotope (cocircuits are computed) or a vector matrix.
    """
    M = _vectors_of(obj)
    if M.shape[0] == 0:
        return False
    nonneg = ~(M == -1).any(1)
    return bool((M[nonneg] == 1).any(0).all())


def extreme_points(chi):
    """Elements lying on a nonnegative cocircuit's zero set.

    Defined for acyclic chirotopes only; raises InputError otherwise.
    """
    M = cocircuit_vectors(chi)
    nonneg = ~(M == -1).any(1)
    if not bool((M[nonneg] == 1).any(0).all()):
        raise InputError("extreme points need an acyclic chirotope")
    zero_hit = (M[nonneg] == 0).any(0)
    return tuple(int(e + 1) for e in np.nonzero(zero_hit)[0])


@dataclass(frozen=True)
class ScanReport:
    """Extreme-point census over all reorientations of one chirotope."""

    n: int
    k: int
    total: int
    acyclic: int
    histogram: dict = field(default_factory=dict)
    found: bool = False
    best_set: tuple = ()
    best_count: int = -1

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "total": self.total,
                "acyclic": self.acyclic,
                "histogram": {str(c): v for c, v in sorted(self.histogram.items())},
                "found": self.found,
                "best_set": list(self.best_set),
                "best_count": self.best_count,
            },
            sort_keys=True,
        )


def las_vergnas_scan(chi, chunk=1024):
    """Count extreme points in every reorientation of a chirotope.

    Reorientation by A flips the cocircuit columns in A.  The report
    histograms extreme-point counts over the acyclic reorientations and
    records whether any reaches exactly k+2, the minimum a realized
    configuration exhibits.  best_set is the first reorientation (by
    subset bitmask) with count k+2, else the first with count closest to
    it.  Subsets enumerate as bitmasks, element e <-> bit e-1.
    """
    M = cocircuit_vectors(chi)
    m, n = M.shape
    r = chi.r
    Z = M == 0
    hist = {}
    acyclic_total = 0
    best_mask = -1
    best_count = -1
    found = False
    powers = np.arange(n)
    for start in range(0, 1 << n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << n))
        flips = 1 - 2 * ((masks[:, None] >> powers[None, :]) & 1)
        MA = M[None, :, :] * flips[:, None, :].astype(np.int8)
        nonneg = ~(MA == -1).any(2)
        pos_cover = ((MA == 1) & nonneg[:, :, None]).any(1)
        acyclic = pos_cover.all(1)
        ext = (nonneg[:, :, None] & Z[None, :, :]).any(1)
        counts = ext.sum(1)
        for mask, ok, cnt in zip(masks, acyclic, counts):
            if not ok:
                continue
            cnt = int(cnt)
            acyclic_total += 1
            hist[cnt] = hist.get(cnt, 0) + 1
            if best_mask < 0 or abs(cnt - r) < abs(best_count - r):
                best_mask = int(mask)
                best_count = cnt
            if cnt == r and not found:
                found = True
                best_mask = int(mask)
                best_count = cnt
    best_set = tuple(e + 1 for e in range(n) if best_mask >= 0 and (best_mask >> e) & 1)
    return ScanReport(
        n=n,
        k=chi.k,
        total=1 << n,
        acyclic=acyclic_total,
        histogram=hist,
        found=found,
        best_set=best_set,
        best_count=best_count,
    )
