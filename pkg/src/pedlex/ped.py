"""Phonetic edit distance.

The classic edit-distance recurrence with insertion/deletion at cost 1 and
substitution priced by the articulatory distance of the two phones (0 when
the labels are equal). Computed bottom-up with two rolling rows, so memory
is linear in the shorter word.

The all-pairs callers can pass a normalized best-so-far ``bound``: the DP is
abandoned as soon as the minimum of the current row, divided by the longer
length, exceeds it. Row minima are lower bounds on the final distance and
division by a positive constant preserves order, so abandonment never
discards a candidate that could still win or tie; results with pruning are
bit-identical to results without.
"""

from __future__ import annotations

from dataclasses import dataclass

from .defaults import default_manner_table
from .distance import DistanceConfig, MannerDistanceTable, SubstitutionCosts
from .tokenizer import PhoneticString


class DpStats:
    """Counters for DP work done (cells actually evaluated)."""

    __slots__ = ("cells", "dps", "abandoned", "prefiltered")

    def __init__(self):
        self.cells = 0
        self.dps = 0
        self.abandoned = 0
        self.prefiltered = 0


@dataclass(frozen=True)
class EditOp:
    op: str  # match | substitute | insert | delete
    source: str | None
    target: str | None
    cost: float


@dataclass(frozen=True)
class PedResult:
    distance: float
    normalized: float
    ops_trace: tuple[EditOp, ...] | None = None


def dp_labels(a, b, rows, bound=None, stats=None):
    """Edit distance over two label tuples given dense cost rows.

    ``rows`` must cover both orientations (rows[x][y] for any labels x, y of
    either word). Returns the distance, or None if ``bound`` (a normalized
    distance) was proved unbeatable.
    """
    if len(a) < len(b):
        a, b = b, a
    m, n = len(a), len(b)
    if stats is not None:
        stats.dps += 1
    if n == 0:
        return float(m)
    maxlen = float(m)
    prev = [float(j) for j in range(n + 1)]
    for i, la in enumerate(a, 1):
        row = rows[la]
        left = float(i)
        cur = [left]
        append = cur.append
        row_min = left
        prev_diag = prev[0]
        for j, lb in enumerate(b, 1):
            up = prev[j]
            best = prev_diag + row[lb]
            alt = up + 1.0
            if alt < best:
                best = alt
            alt = left + 1.0
            if alt < best:
                best = alt
            append(best)
            left = best
            if best < row_min:
                row_min = best
            prev_diag = up
        if stats is not None:
            stats.cells += n
        if bound is not None and row_min / maxlen > bound:
            if stats is not None:
                stats.abandoned += 1
            return None
        prev = cur
    return prev[n]


def _trace_dp(source: PhoneticString, target: PhoneticString, costs: SubstitutionCosts):
    """Full-matrix DP plus backtrack; returns (distance, ops)."""
    src, tgt = source.phones, target.phones
    m, n = len(src), len(tgt)
    dist = [[0.0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        dist[i][0] = float(i)
    for j in range(1, n + 1):
        dist[0][j] = float(j)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            best = dist[i - 1][j - 1] + costs.pair(src[i - 1], tgt[j - 1])
            alt = dist[i - 1][j] + 1.0
            if alt < best:
                best = alt
            alt = dist[i][j - 1] + 1.0
            if alt < best:
                best = alt
            dist[i][j] = best
    ops: list[EditOp] = []
    i, j = m, n
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            cost = costs.pair(src[i - 1], tgt[j - 1])
            if dist[i][j] == dist[i - 1][j - 1] + cost:
                op = "match" if src[i - 1].label == tgt[j - 1].label else "substitute"
                ops.append(EditOp(op, src[i - 1].label, tgt[j - 1].label, cost))
                i -= 1
                j -= 1
                continue
        if i > 0 and dist[i][j] == dist[i - 1][j] + 1.0:
            ops.append(EditOp("delete", src[i - 1].label, None, 1.0))
            i -= 1
            continue
        ops.append(EditOp("insert", None, tgt[j - 1].label, 1.0))
        j -= 1
    ops.reverse()
    return dist[m][n], tuple(ops)


def _resolve(cfg, xi, costs):
    if costs is not None:
        return costs
    if cfg is None:
        cfg = DistanceConfig()
    if xi is None:
        xi = default_manner_table()
    return SubstitutionCosts(cfg, xi)


def ped(
    source: PhoneticString,
    target: PhoneticString,
    cfg: DistanceConfig | None = None,
    xi: MannerDistanceTable | None = None,
    *,
    costs: SubstitutionCosts | None = None,
    bound: float | None = None,
    trace: bool = False,
    stats: DpStats | None = None,
) -> PedResult | None:
    """Phonetic edit distance between two tokenized words.

    Pass either cfg/xi (defaults used when omitted) or a prebuilt ``costs``.
    With ``bound`` set, returns None when the normalized distance provably
    exceeds it. ``trace=True`` additionally returns the aligned edit script.
    """
    costs = _resolve(cfg, xi, costs)
    maxlen = max(len(source), len(target))
    if trace:
        distance, ops = _trace_dp(source, target, costs)
        normalized = distance / maxlen if maxlen else 0.0
        return PedResult(distance=distance, normalized=normalized, ops_trace=ops)
    rows = costs.rows_for(source.phones + target.phones, source.phones + target.phones)
    distance = dp_labels(source.labels, target.labels, rows, bound=bound, stats=stats)
    if distance is None:
        return None
    normalized = distance / maxlen if maxlen else 0.0
    return PedResult(distance=distance, normalized=normalized)


def normalized_ped(
    source: PhoneticString,
    target: PhoneticString,
    cfg: DistanceConfig | None = None,
    xi: MannerDistanceTable | None = None,
    *,
    costs: SubstitutionCosts | None = None,
) -> float:
    """ped / max token length; 0 when both words are empty."""
    result = ped(source, target, cfg, xi, costs=costs)
    return result.normalized
