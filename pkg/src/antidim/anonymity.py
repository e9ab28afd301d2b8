"""Privacy evaluation: the smallest k whose k-metric antidimension fits an
attacker budget.

An adversary controlling at most ell vertices cannot re-identify anyone with
probability above 1/k once no k'-antiresolving set of size <= ell exists for
any k' < k.  The evaluator scans k upward, using either the exact oracle or
the closure search, and reports how trustworthy the answer is: search-mode
verdicts can be Unknown, in which case the result is only an upper bound on
the true anonymity level.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .closure import Verdict, find_antiresolving_basis, find_antiresolving_set
from .graph import Graph, GraphError, all_pairs_distances, bfs_distances
from .oracle import brute_adim

__all__ = [
    "Confidence",
    "AnonymityResult",
    "evaluate",
    "single_vertex_scan",
]


class Confidence(enum.Enum):
    EXACT = "exact"  # oracle-verified: no smaller k qualifies
    CERTIFIED = "certified"  # every smaller k excluded by a certified verdict
    UPPER_BOUND_ONLY = "upper_bound_only"  # a smaller k may qualify unnoticed
    INCONCLUSIVE = "inconclusive"  # no qualifying k established at all


@dataclass(frozen=True)
class AnonymityResult:
    """Smallest k established with adim_k <= ell, or None."""

    k: int | None
    ell: int
    confidence: Confidence
    witness: tuple[int, ...] | None
    probe_log: tuple[tuple[int, str], ...]

    @property
    def reidentification_bound(self) -> Fraction | None:
        """Upper bound 1/k on the adversary's re-identification probability."""
        return None if self.k is None else Fraction(1, self.k)


def _check_ell(g: Graph, ell: int) -> None:
    if not 1 <= ell < g.n:
        raise GraphError(f"ell must satisfy 1 <= ell < n, got {ell}")


def evaluate(g: Graph, ell: int, mode: str = "oracle", m: int = 2) -> AnonymityResult:
    """Ascending scan for the smallest k with adim_k <= ell.

    ``mode="oracle"`` brute-forces each adim_k exactly (small graphs only);
    ``mode="search"`` uses the closure search with ``m`` join levels.  The
    scan is capped at the maximum degree, beyond which no k-antiresolving set
    exists.  Any Unknown verdict below the answer degrades the confidence; if
    no k qualifies, the result is Inconclusive with k = None.
    """
    _check_ell(g, ell)
    if mode not in ("oracle", "search"):
        raise ValueError(f"mode must be 'oracle' or 'search', got {mode!r}")
    dm = all_pairs_distances(g)
    log: list[tuple[int, str]] = []
    uncertain_below = False
    for k in range(1, g.max_degree + 1):
        if mode == "oracle":
            hit = brute_adim(g, k)
            if hit is None:
                log.append((k, "excluded: no k-antiresolving set"))
                continue
            adim, basis = hit
            if adim <= ell:
                log.append((k, f"qualifies: adim={adim}"))
                return AnonymityResult(k, ell, Confidence.EXACT, basis, tuple(log))
            log.append((k, f"excluded: adim={adim} > ell"))
            continue
        basis = find_antiresolving_basis(g, k, m, dm=dm)
        if basis.found:
            assert basis.witness is not None
            if len(basis.witness) <= ell:
                log.append((k, f"qualifies: adim={len(basis.witness)} (basis)"))
                conf = Confidence.UPPER_BOUND_ONLY if uncertain_below else Confidence.CERTIFIED
                return AnonymityResult(k, ell, conf, basis.witness, tuple(log))
            log.append((k, f"excluded: adim={len(basis.witness)} > ell (basis)"))
            continue
        if basis.verdict is Verdict.ABSENT:
            log.append((k, "excluded: no k-antiresolving set (certified)"))
            continue
        # basis search inconclusive: a plain set of size <= ell still settles
        # adim_k <= ell even without minimality
        outcome = find_antiresolving_set(g, k, m, dm=dm)
        if outcome.found and outcome.witness is not None and len(outcome.witness) <= ell:
            log.append((k, f"qualifies: set of size {len(outcome.witness)} <= ell"))
            conf = Confidence.UPPER_BOUND_ONLY if uncertain_below else Confidence.CERTIFIED
            return AnonymityResult(k, ell, conf, outcome.witness, tuple(log))
        if outcome.verdict is Verdict.ABSENT:
            log.append((k, "excluded: no k-antiresolving set (certified)"))
            continue
        uncertain_below = True
        log.append((k, "uncertain: search verdict unknown"))
    return AnonymityResult(None, ell, Confidence.INCONCLUSIVE, None, tuple(log))


def single_vertex_scan(g: Graph) -> int | None:
    """Lowest-indexed vertex whose singleton is a 1-antiresolving set, or None.

    A vertex qualifies when some distance shell around it has exactly one
    member.  One BFS per vertex; no distance matrix is materialised, so this
    scales to graphs far beyond the oracle's reach.
    """
    for v in range(g.n):
        dist = bfs_distances(g, v)
        shells: dict[int, int] = {}
        for u, d in enumerate(dist):
            if u != v:
                if d < 0:
                    raise GraphError("graph not connected")
                shells[d] = shells.get(d, 0) + 1
        if shells and min(shells.values()) == 1:
            return v
    return None
