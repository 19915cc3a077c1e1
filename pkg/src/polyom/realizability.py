"""Random realizability search over a catalog.

Trials draw integer configurations across a sweep of coordinate ranges:
small ranges surface flat, nearly-degenerate examples, large ones the
skewed ones.  Every drawn chirotope must already be a catalog record
(the enumeration is complete), so a miss is a soundness failure worth
raising loudly, not skipping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Catalog
from .errors import DegenerateConfigError, SoundnessError
from .points import chirotope_of, random_config

DEFAULT_RANGES = (8, 32, 128, 1024, 32768, 10**6)

# Reference counts of realizable objects for small cases; the (8, 2)
# entry is a (lower, upper) bound pair, the classification there being
# incomplete.
REFERENCE_REALIZABLE = {
    (4, 2): 1,
    (5, 2): 5,
    (6, 2): 74,
    (7, 2): 3843,
    (8, 2): (830850, 838204),
    (5, 3): 1,
    (6, 3): 6,
    (7, 3): 169,
    (8, 3): 39016,
    (6, 4): 1,
    (7, 4): 7,
    (8, 4): 376,
    (7, 5): 1,
    (8, 5): 8,
    (9, 5): 823,
}


def trial_seed(seed, trial):
    """Per-trial RNG seed; trial t is identical across different totals."""
    return (seed << 32) ^ trial


@dataclass(frozen=True)
class RealizeStats:
    n: int
    k: int
    trials: int
    seed: int
    degenerate: int
    new_witnesses: int
    realizable: int
    unknown: int

    def summary(self):
        return (
            f"realizable={self.realizable} unknown={self.unknown} "
            f"trials={self.trials} seed={self.seed}"
        )


def realize_random(catalog, trials, seed, ranges=DEFAULT_RANGES, max_tries=200):
    """Tag catalog records with witnesses found by random search.

    Returns (tagged catalog, stats).  Trial t uses ranges[t mod len] and
    a seed derived from (seed, t), so results for a prefix of trials do
    not depend on the total and coverage is monotone in trials.  Raises
    SoundnessError when a drawn configuration's canonical chirotope is
    not a catalog record.
    """
    witnesses = list(catalog.witnesses) if catalog.tagged else [None] * len(catalog)
    index = catalog.index_of()
    degenerate = 0
    new = 0
    for t in range(trials):
        rng_range = ranges[t % len(ranges)]
        try:
            config = random_config(
                catalog.n, catalog.k, trial_seed(seed, t), rng_range, max_tries
            )
        except DegenerateConfigError:
            degenerate += 1
            continue
        rec = chirotope_of(config, catalog.k).canonicalize().sign_string()
        pos = index.get(rec)
        if pos is None:
            raise SoundnessError(
                f"trial {t} (seed {seed}, range {rng_range}) produced a sign map "
                f"outside the catalog: {rec} from {config!r}"
            )
        if witnesses[pos] is None:
            witnesses[pos] = config
            new += 1
    tagged = catalog.with_witnesses(witnesses)
    realizable = tagged.realizable_count()
    stats = RealizeStats(
        n=catalog.n,
        k=catalog.k,
        trials=trials,
        seed=seed,
        degenerate=degenerate,
        new_witnesses=new,
        realizable=realizable,
        unknown=len(catalog) - realizable,
    )
    return tagged, stats


def verify_witness(record, config, k):
    """Does the configuration's canonical degree-k chirotope match?"""
    if len(record) == 0:
        return False
    chi = chirotope_of(config, k)
    return chi.canonicalize().sign_string() == record


def verify_catalog_witnesses(catalog):
    """Indices of tagged records whose stored witness fails to verify."""
    if not catalog.tagged:
        return ()
    bad = []
    for i, (rec, wit) in enumerate(zip(catalog.records, catalog.witnesses)):
        if wit is None:
            continue
        if len(wit) != catalog.n or not verify_witness(rec, wit, catalog.k):
            bad.append(i)
    return tuple(bad)


@dataclass(frozen=True)
class CoverageReport:
    n: int
    k: int
    total: int
    realizable: int
    unknown: int
    reference: object = None

    def summary(self):
        line = f"realizable={self.realizable} unknown={self.unknown} total={self.total}"
        if isinstance(self.reference, tuple):
            line += f" reference_low={self.reference[0]} reference_high={self.reference[1]}"
        elif self.reference is not None:
            line += f" reference={self.reference}"
        return line


def coverage_report(catalog):
    """How much of the catalog carries witnesses, against reference counts."""
    realizable = catalog.realizable_count()
    return CoverageReport(
        n=catalog.n,
        k=catalog.k,
        total=len(catalog),
        realizable=realizable,
        unknown=len(catalog) - realizable,
        reference=REFERENCE_REALIZABLE.get((catalog.n, catalog.k)),
    )
