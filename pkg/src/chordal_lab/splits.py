"""Approximate counting and sampling of labeled chordal graphs via split graphs.

Almost every large labeled chordal graph is a split graph, so counting split
graphs well enough approximates counting chordal graphs.  Split graphs are
organized by their questioning set Q (the vertices that can sit on either side
of a split partition): the |Q| >= 2 stratum has a closed-form exact count, the
|Q| in {0, 1} strata have two-sided sums that are themselves sharp
approximations, and each sum concentrates on a narrow window of terms around
its peak, which is all the fast path evaluates.

Every quantity here is exact integer or rational arithmetic; accuracy targets
(epsilon) enter only through exactly-computed integer truncation bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb

from .graphs import LabeledGraph, complement, complete_graph
from .sampling import RandomStream, categorical, sample_subset

# The |Q| in {0,1} stratum sums and the window-truncation bound are proven for
# all sufficiently large n; these floors are where the proofs are known to
# hold.  The dispatch floor (n3) covers the "almost every chordal graph is
# split" tail bound.  All three are engineering defaults and configurable.
@dataclass(frozen=True)
class SplitThresholds:
    n1: int = 65
    n2: int = 65
    n3: int = 65


DEFAULT_THRESHOLDS = SplitThresholds()

REJECTION_CAP_FACTOR = 64


class RejectionCapError(RuntimeError):
    """The rejection loop ran far past its expected iteration count."""


def as_epsilon(value) -> Fraction:
    """Exact rational epsilon in (0, 1) from a decimal string or Fraction.

    Floats are rejected: binary floats silently misrepresent decimal inputs,
    and every bound here is computed exactly.
    """
    if isinstance(value, float):
        raise TypeError("epsilon must be a decimal string or Fraction, not float")
    eps = value if isinstance(value, Fraction) else Fraction(str(value))
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie strictly between 0 and 1, got {eps}")
    return eps


def _ceil_log(base: Fraction, value: Fraction) -> int:
    """Smallest integer m >= 0 with base**m >= value, exactly."""
    m = 0
    p = Fraction(1)
    while p < value:
        p *= base
        m += 1
    return m


def ceil_log2_inverse(eps: Fraction) -> int:
    """ceil(log2(1/eps)) via exact powering."""
    return _ceil_log(Fraction(2), 1 / eps)


def threshold_f(eps, thresholds: SplitThresholds = DEFAULT_THRESHOLDS) -> int:
    """Smallest n for which the truncated split count carries its guarantee."""
    eps = as_epsilon(eps)
    log_term = _ceil_log(Fraction(3, 2), (1 / eps) ** 3)  # ceil(3*log_{3/2}(1/eps))
    return max(thresholds.n1, thresholds.n2, log_term)


def threshold_g(eps, thresholds: SplitThresholds = DEFAULT_THRESHOLDS) -> int:
    """Smallest n for which split counting stands in for chordal counting."""
    eps = as_epsilon(eps)
    two = 2 / eps
    return max(
        thresholds.n1,
        thresholds.n2,
        thresholds.n3,
        _ceil_log(Fraction(10, 9), two),
        _ceil_log(Fraction(3, 2), two ** 3),
    )


# ---------------------------------------------------------------------------
# Exact and full sums
# ---------------------------------------------------------------------------

def _q_mid_term(n: int, q: int, c: int) -> int:
    # 0**0 == 1 covers the q = n, c = 0 corner.
    return comb(n, q) * comb(n - q, c) * (2 ** (n - c - q) - 1) ** c


def _q_mid_sum(n: int, cells) -> int:
    """Sum of the |Q| >= 2 stratum terms over the given (q, c) cells.

    Cells sharing the same exponent base 2**(n-q-c) - 1 lie on one diagonal;
    walking each diagonal in increasing c lets every power be one cheap
    multiply away from its neighbor instead of a fresh exponentiation.
    """
    by_base: dict[int, list[tuple[int, int]]] = {}
    for q, c in cells:
        by_base.setdefault(n - q - c, []).append((c, q))
    total = 0
    for d, group in sorted(by_base.items()):
        group.sort()
        if d == 0:
            total += sum(comb(n, q) for c, q in group if c == 0)
            continue
        base = (1 << d) - 1
        power = None
        prev_c = 0
        for c, q in group:
            if power is None:
                power = pow(base, c)
            else:
                for _ in range(c - prev_c):
                    power *= base
            prev_c = c
            total += comb(n, q) * comb(n - q, c) * power
    return total


def split_count_q_ge2_exact(n: int) -> int:
    """Exact number of n-vertex labeled split graphs with |Q| >= 2.

    Counts the Q-is-a-clique family cell by cell and doubles it; taking
    complements swaps the two Q shapes one-for-one.
    """
    return 2 * _q_mid_sum(
        n, ((q, c) for q in range(2, n + 1) for c in range(n - q + 1)))


def split_count_q_mid_full(n: int) -> int:
    """Exact number of split graphs with 2 <= |Q| < n (all window terms)."""
    return 2 * _q_mid_sum(
        n, ((q, c) for q in range(2, n) for c in range(n - q + 1)))


def split_count_q0_full(n: int) -> int:
    """Two-sided sum for the Q-empty stratum, untruncated.

    For n past the proof floor this overshoots the true |Q| = 0 count by at
    most a factor 1 + (2/3)**(n/3)-ish; the truncated variant keeps a
    (1 - eps) fraction of it.
    """
    total = 0
    for c in range(2, n // 2 + 1):
        total += comb(n, c) * (2 ** c - 1) ** (n - c)
    for c in range(n // 2 + 1, n - 1):
        total += comb(n, c) * (2 ** (n - c) - 1) ** c
    return total


def split_count_q1_full(n: int) -> int:
    """Two-sided sum for the |Q| = 1 stratum, untruncated."""
    total = 0
    half = (n - 1) // 2
    for c in range(2, half + 1):
        total += n * comb(n - 1, c) * (2 ** c - 1) ** (n - c - 1)
    for c in range(half + 1, n - 1):
        total += n * comb(n - 1, c) * (2 ** (n - c - 1) - 1) ** c
    return total


# ---------------------------------------------------------------------------
# Truncated sums
# ---------------------------------------------------------------------------

def _q_window(eps: Fraction) -> int:
    """Upper bound for q in the |Q| >= 2 stratum: ceil(10*log2(1/eps)) + 47."""
    return _ceil_log(Fraction(2), (1 / eps) ** 10) + 47


def _q_mid_window_cells(n: int, eps: Fraction):
    s = _q_window(eps)
    pad = ceil_log2_inverse(eps) + 3
    for q in range(2, min(s, n - 1) + 1):
        lo = max(0, (n - q) // 2 - pad)
        hi = min((n - q + 1) // 2 + pad, n - q)
        for c in range(lo, hi + 1):
            yield q, c


def split_count_q_ge2_truncated(n: int, eps) -> int:
    """Window sum for 2 <= |Q| < n; at least (1-eps) of the full sum."""
    eps = as_epsilon(eps)
    return 2 * _q_mid_sum(n, _q_mid_window_cells(n, eps))


def split_count_q0_truncated(n: int, eps) -> int:
    eps = as_epsilon(eps)
    pad = ceil_log2_inverse(eps) + 2
    lo = max(2, n // 2 - pad)
    hi = min((n + 1) // 2 + pad, n - 2)
    total = 0
    for c in range(lo, n // 2 + 1):
        total += comb(n, c) * (2 ** c - 1) ** (n - c)
    for c in range(n // 2 + 1, hi + 1):
        total += comb(n, c) * (2 ** (n - c) - 1) ** c
    return total


def split_count_q1_truncated(n: int, eps) -> int:
    eps = as_epsilon(eps)
    pad = ceil_log2_inverse(eps) + 2
    lo = max(2, n // 2 - pad)
    hi = min((n + 1) // 2 + pad, n - 2)
    half = (n - 1) // 2
    total = 0
    for c in range(lo, half + 1):
        total += n * comb(n - 1, c) * (2 ** c - 1) ** (n - c - 1)
    for c in range(half + 1, hi + 1):
        total += n * comb(n - 1, c) * (2 ** (n - c - 1) - 1) ** c
    return total


def approx_count_split(n: int, eps, thresholds: SplitThresholds = DEFAULT_THRESHOLDS) -> int:
    """(1 +- eps)-approximation of the number of n-vertex labeled split graphs.

    Sum of the three window sums plus the two |Q| = n graphs (complete and
    edgeless).  Requires n at or past the guarantee floor.
    """
    eps = as_epsilon(eps)
    floor = threshold_f(eps, thresholds)
    if n < floor:
        raise ValueError(f"approx split counting needs n >= {floor} at this epsilon")
    return (split_count_q_ge2_truncated(n, eps)
            + split_count_q0_truncated(n, eps)
            + split_count_q1_truncated(n, eps)
            + 2)


def approx_count_chordal(n: int, eps, thresholds: SplitThresholds = DEFAULT_THRESHOLDS) -> int:
    """(1 +- eps)-approximation of the number of n-vertex labeled chordal graphs.

    Below the dispatch floor the answer is computed exactly (unconditionally
    correct); above it, split graphs stand in for chordal graphs.
    """
    eps = as_epsilon(eps)
    if n < threshold_g(eps, thresholds):
        if n == 0:
            return 1
        from .counting import get_context

        return get_context(n, n).count_all(n)
    return approx_count_split(n, eps / 2, thresholds)


# ---------------------------------------------------------------------------
# Approximate sampling
# ---------------------------------------------------------------------------

@dataclass
class SplitDraw:
    """One accepted draw of the split sampler, with its construction colors.

    ``cyan`` is the constructed clique side, ``indigo`` the independent side,
    ``swing`` the questioning/witness set of the branch, all describing
    ``graph`` as returned.
    """

    graph: LabeledGraph
    branch: str  # "q0" | "q1" | "q_mid" | "q_full"
    q: int
    c: int
    iterations: int
    cyan: frozenset[int]
    indigo: frozenset[int]
    swing: frozenset[int]


def _subset_from_mask(pool: list[int], mask: int) -> list[int]:
    return [e for i, e in enumerate(pool) if mask >> i & 1]


def _build_q_mid(n: int, q: int, c: int, rng: RandomStream) -> SplitDraw:
    # Q-is-a-clique shape: clique on Q u C, each C vertex wired to a nonempty
    # subset of I; flipping a fair coin to complement covers the mirror shape.
    labels = list(range(1, n + 1))
    q_labels = sample_subset(labels, q, rng)
    rest = [v for v in labels if v not in set(q_labels)]
    c_labels = sample_subset(rest, c, rng)
    i_labels = [v for v in rest if v not in set(c_labels)]
    edges = []
    hub = sorted(q_labels + c_labels)
    for i, u in enumerate(hub):
        for v in hub[i + 1:]:
            edges.append((u, v))
    if c_labels:
        m = len(i_labels)
        for v in c_labels:
            mask = 1 + rng.uniform_below(2 ** m - 1)
            edges.extend((v, u) for u in _subset_from_mask(i_labels, mask))
    g = LabeledGraph(labels, edges)
    cyan, indigo = frozenset(c_labels), frozenset(i_labels)
    if rng.bits(1):
        g = complement(g)
        cyan, indigo = indigo, cyan
    return SplitDraw(graph=g, branch="q_mid", q=q, c=c, iterations=0,
                     cyan=cyan, indigo=indigo, swing=frozenset(q_labels))


def _build_low_q(n: int, c: int, with_witness: bool, rng: RandomStream) -> SplitDraw | None:
    """One attempt at a |Q| = 0 or |Q| = 1 draw; None if the cover check fails."""
    labels = list(range(1, n + 1))
    if with_witness:
        white = sample_subset(labels, 1, rng)
        pool = [v for v in labels if v != white[0]]
        half = (n - 1) // 2
    else:
        white = []
        pool = labels
        half = n // 2
    cyan = sample_subset(pool, c, rng)
    indigo = [v for v in pool if v not in set(cyan)]
    edges = []
    for i, u in enumerate(cyan):
        edges.extend((u, v) for v in cyan[i + 1:])
    if white:
        edges.extend((white[0], v) for v in cyan)
    if c <= half:
        # Indigo vertices reach proper subsets of cyan; accept only if every
        # cyan vertex still got an indigo neighbor.
        cyan_hit = set()
        for u in indigo:
            mask = rng.uniform_below(2 ** c - 1)  # all-ones excluded
            nbrs = _subset_from_mask(cyan, mask)
            cyan_hit.update(nbrs)
            edges.extend((u, v) for v in nbrs)
        ok = len(cyan_hit) == c
    else:
        # Cyan vertices reach nonempty subsets of indigo; accept only if no
        # indigo vertex ends up adjacent to all of cyan.
        m = len(indigo)
        hit_by_all = (1 << m) - 1
        for u in cyan:
            mask = 1 + rng.uniform_below(2 ** m - 1)
            hit_by_all &= mask
            edges.extend((u, v) for v in _subset_from_mask(indigo, mask))
        ok = hit_by_all == 0
    if not ok:
        return None
    g = LabeledGraph(labels, edges)
    return SplitDraw(graph=g, branch="q1" if with_witness else "q0",
                     q=1 if with_witness else 0, c=c, iterations=0,
                     cyan=frozenset(cyan), indigo=frozenset(indigo),
                     swing=frozenset(white))


@dataclass
class _SplitPlan:
    """Precomputed stratum weights for one (n, working epsilon).

    Per-cell weights of the |Q| >= 2 stratum are only materialized if that
    branch is ever drawn; its total weight is exponentially smaller than the
    |Q| <= 1 strata, so at realistic sizes the lazy path never runs.
    """

    n: int
    w0: int
    w1: int
    w_mid: int
    mid_cells: tuple[tuple[int, int], ...]
    q01_cells: tuple[int, ...]
    q0_weights: tuple[int, ...]
    q1_weights: tuple[int, ...]
    cap: int
    mid_weights: tuple[int, ...] | None = None

    def mid_cell_weights(self) -> tuple[int, ...]:
        if self.mid_weights is None:
            self.mid_weights = tuple(_q_mid_term(self.n, q, c) for q, c in self.mid_cells)
        return self.mid_weights


_plan_cache: dict[tuple[int, Fraction], _SplitPlan] = {}


def _split_plan(n: int, eps_work: Fraction) -> _SplitPlan:
    plan = _plan_cache.get((n, eps_work))
    if plan is not None:
        return plan

    mid_cells = tuple(_q_mid_window_cells(n, eps_work))
    w_mid = 2 * _q_mid_sum(n, mid_cells)

    pad01 = ceil_log2_inverse(eps_work) + 2
    lo01 = max(2, n // 2 - pad01)
    hi01 = min((n + 1) // 2 + pad01, n - 2)
    q01_cells = tuple(range(lo01, hi01 + 1))
    q0_weights = tuple(comb(n, c) * (2 ** c - 1) ** (n - c) if c <= n // 2
                       else comb(n, c) * (2 ** (n - c) - 1) ** c for c in q01_cells)
    half1 = (n - 1) // 2
    q1_weights = tuple(n * comb(n - 1, c) * (2 ** c - 1) ** (n - c - 1) if c <= half1
                       else n * comb(n - 1, c) * (2 ** (n - c - 1) - 1) ** c
                       for c in q01_cells)

    plan = _SplitPlan(
        n=n,
        w0=sum(q0_weights),
        w1=sum(q1_weights),
        w_mid=w_mid,
        mid_cells=mid_cells,
        q01_cells=q01_cells,
        q0_weights=q0_weights,
        q1_weights=q1_weights,
        cap=REJECTION_CAP_FACTOR * ceil(1 / (1 - eps_work)),
    )
    _plan_cache[(n, eps_work)] = plan
    return plan


def sample_split_draw(n: int, eps, rng: RandomStream,
                      thresholds: SplitThresholds = DEFAULT_THRESHOLDS) -> SplitDraw:
    """Approximately uniform n-vertex labeled split graph, with bookkeeping.

    Output distribution is within total variation eps of uniform over split
    graphs; expected number of build-and-check iterations is at most 2.  The
    stratum weights for a given (n, eps) are computed once and cached.
    """
    eps = as_epsilon(eps)
    floor = threshold_f(eps / 2, thresholds)
    if n < floor:
        raise ValueError(f"approx split sampling needs n >= {floor} at this epsilon")
    eps_work = min(eps / 2, Fraction(1, 3))
    plan = _split_plan(n, eps_work)
    for iteration in range(1, plan.cap + 1):
        case = categorical([plan.w0, plan.w1, plan.w_mid, 2], rng)
        if case == 3:
            labels = range(1, n + 1)
            g = complete_graph(labels) if rng.bits(1) else LabeledGraph(labels)
            return SplitDraw(graph=g, branch="q_full", q=n, c=0, iterations=iteration,
                             cyan=frozenset(), indigo=frozenset(),
                             swing=frozenset(labels))
        if case == 2:
            q, c = plan.mid_cells[categorical(plan.mid_cell_weights(), rng)]
            draw = _build_q_mid(n, q, c, rng)
            draw.iterations = iteration
            return draw
        if case == 0:
            c = plan.q01_cells[categorical(plan.q0_weights, rng)]
            draw = _build_low_q(n, c, with_witness=False, rng=rng)
        else:
            c = plan.q01_cells[categorical(plan.q1_weights, rng)]
            draw = _build_low_q(n, c, with_witness=True, rng=rng)
        if draw is not None:
            draw.iterations = iteration
            return draw
    raise RejectionCapError(
        f"no draw accepted within {plan.cap} iterations; thresholds are misconfigured")


def sample_split_approx(n: int, eps, rng: RandomStream,
                        thresholds: SplitThresholds = DEFAULT_THRESHOLDS) -> LabeledGraph:
    """Approximately uniform n-vertex labeled split graph."""
    return sample_split_draw(n, eps, rng, thresholds).graph


def approx_sample_chordal(n: int, eps, rng: RandomStream,
                          thresholds: SplitThresholds = DEFAULT_THRESHOLDS) -> LabeledGraph:
    """Random n-vertex labeled chordal graph within total variation eps of uniform.

    Below the dispatch floor this is the exact uniform sampler; above it, a
    random split graph (always chordal) is drawn instead.
    """
    eps = as_epsilon(eps)
    if n < threshold_g(eps / 2, thresholds):
        from .counting import get_context
        from .sampling import ChordalSampler

        if n == 0:
            return LabeledGraph(())
        return ChordalSampler(get_context(n, n)).sample_chordal(n, rng)
    return sample_split_approx(n, eps / 2, rng, thresholds)
