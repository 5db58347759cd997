"""Exact uniform sampling of w-colorable labeled (connected) chordal graphs.

Every random decision inverts one term choice of the counting recurrences, so
the output distribution is exactly uniform: all branch weights are products of
memoized counts and binomial coefficients, chosen with exact integer draws.
No floating point appears anywhere on the sampling path.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .counting import CountingContext
from .graphs import LabeledGraph, complete_graph, glue, phi_map, relabel

_MASK64 = (1 << 64) - 1


class RandomStream:
    """Deterministic stream of uniform bits behind all sampling decisions.

    A stream must be exclusively owned by one sampler at a time; create one
    stream per concurrent sampler (e.g. via :meth:`spawn`).
    """

    def __init__(self, seed: int | None = None):
        if seed is None:
            seed = int.from_bytes(os.urandom(8), "big")
        self.seed = seed & _MASK64
        self._rng = random.Random(self.seed)

    def bits(self, k: int) -> int:
        """k independent uniform bits as an integer in [0, 2**k)."""
        if k < 0:
            raise ValueError("bit count must be nonnegative")
        if k == 0:
            return 0
        return self._rng.getrandbits(k)

    def uniform_below(self, bound: int) -> int:
        """Exact uniform integer in [0, bound) by rejection on fixed-width draws."""
        if bound < 1:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        width = (bound - 1).bit_length()
        while True:
            u = self._rng.getrandbits(width)
            if u < bound:
                return u

    def spawn(self, index: int) -> "RandomStream":
        """An independent stream derived from this stream's seed."""
        mix = (self.seed * 0x9E3779B97F4A7C15 + index * 0xBF58476D1CE4E5B9 + 1) & _MASK64
        return RandomStream(mix)


def uniform_below(bound: int, rng: RandomStream) -> int:
    return rng.uniform_below(bound)


@dataclass(frozen=True)
class WeightedChoice:
    """A finite distribution with exact nonnegative integer weights."""

    weights: tuple[int, ...]
    total: int

    @staticmethod
    def of(weights: Iterable[int]) -> "WeightedChoice":
        ws = tuple(weights)
        if any(w < 0 for w in ws):
            raise ValueError("weights must be nonnegative")
        total = sum(ws)
        if total <= 0:
            raise ValueError("total weight must be positive")
        return WeightedChoice(ws, total)

    def draw(self, rng: RandomStream) -> int:
        u = rng.uniform_below(self.total)
        acc = 0
        for i, w in enumerate(self.weights):
            acc += w
            if u < acc:
                return i
        raise AssertionError("unreachable: weights summed below total")


def categorical(weights: Sequence[int], rng: RandomStream) -> int:
    """Index i with probability weights[i] / sum(weights); zero weights never win."""
    return WeightedChoice.of(weights).draw(rng)


def sample_subset(pool: Sequence[int], k: int, rng: RandomStream) -> list[int]:
    """Uniform k-subset of the pool, by sequential inclusion with exact odds."""
    m = len(pool)
    if not 0 <= k <= m:
        raise ValueError(f"cannot draw {k} elements from {m}")
    chosen: list[int] = []
    need = k
    for i, e in enumerate(pool):
        if need == 0:
            break
        if rng.uniform_below(m - i) < need:
            chosen.append(e)
            need -= 1
    return chosen


def sample_subset_containing(pool: Sequence[int], k: int, required: int,
                             rng: RandomStream) -> list[int]:
    """Uniform k-subset of the pool conditioned on containing ``required``."""
    rest = [e for e in pool if e != required]
    if len(rest) == len(pool):
        raise ValueError(f"required element {required} not in pool")
    sub = sample_subset(rest, k - 1, rng)
    sub.append(required)
    sub.sort()
    return sub


def sample_subset_escaping_prefix(x: int, size: int, z: int, rng: RandomStream) -> list[int]:
    """Uniform size-subset of [1, x] that is not contained in [1, z].

    Draws the number of elements above z with its exact hypergeometric-style
    weight, then fills both parts uniformly; no rejection needed.
    """
    hi = x - z
    weights = [comb(hi, j) * comb(z, size - j) for j in range(1, min(hi, size) + 1)]
    j = categorical(weights, rng) + 1
    top = sample_subset(range(z + 1, x + 1), j, rng)
    low = sample_subset(range(1, z + 1), size - j, rng)
    return sorted(low + top)


_CLASS_KINDS = (
    "within", "exact", "exact_proper", "exact_single", "exact_multi",
    "pinned", "pinned_exact", "pinned_proper", "pinned_proper_z",
)


class ChordalSampler:
    """Uniform sampler over the graph classes of a filled counting context.

    The context is only read; any number of samplers may share one context as
    long as each owns its own :class:`RandomStream`.  ``ops`` counts the
    big-integer weight terms evaluated since construction (a proxy for
    arithmetic work per sample).
    """

    def __init__(self, ctx: CountingContext):
        self.ctx = ctx
        self.ops = 0

    # -- entry points --------------------------------------------------------

    def sample_chordal(self, n: int, rng: RandomStream) -> LabeledGraph:
        """Uniform w-colorable labeled chordal graph with vertex set [n]."""
        if not 0 <= n <= self.ctx.n_max:
            raise ValueError(f"n must be in [0, {self.ctx.n_max}]")
        if n == 0:
            return LabeledGraph(())
        ctx = self.ctx
        a_n = ctx.count_all(n)
        weights = []
        for k in range(1, n + 1):
            weights.append(ctx.binomial(n - 1, k - 1) * ctx.count_connected(k)
                           * ctx.count_all(n - k))
        self.ops += n
        k = categorical(weights, rng) + 1
        assert sum(weights) == a_n
        g1 = self.sample_connected(k, rng)
        g2 = self.sample_chordal(n - k, rng)
        c_labels = sample_subset_containing(range(1, n + 1), k, 1, rng)
        d_labels = [v for v in range(1, n + 1) if v not in set(c_labels)]
        g1 = relabel(g1, phi_map(range(1, k + 1), c_labels))
        g2 = relabel(g2, phi_map(range(1, n - k + 1), d_labels))
        return glue(g1, g2, ())

    def sample_connected(self, n: int, rng: RandomStream) -> LabeledGraph:
        """Uniform w-colorable labeled *connected* chordal graph on [n]."""
        if not 1 <= n <= self.ctx.n_max:
            raise ValueError(f"n must be in [1, {self.ctx.n_max}]")
        ctx = self.ctx
        c_n = ctx.count_connected(n)
        if c_n == 0:
            raise ValueError(f"no connected chordal graph on [{n}] is {ctx.omega}-colorable")
        weights = [ctx.count_exact_single(t, 0, n) for t in range(1, n + 1)]
        self.ops += n
        t = categorical(weights, rng) + 1
        return self._sample_exact_single(t, 0, n, rng)

    def sample_class(self, kind: str, args: Sequence[int], rng: RandomStream) -> LabeledGraph:
        """Uniform member of one counted class, e.g. ("pinned", (t, x, l, k)).

        Raises if the class is empty (count zero).
        """
        if kind not in _CLASS_KINDS:
            raise ValueError(f"unknown class kind {kind!r}; expected one of {_CLASS_KINDS}")
        ctx = self.ctx
        count = {
            "within": ctx.count_within,
            "exact": ctx.count_exact,
            "exact_proper": ctx.count_exact_proper,
            "exact_single": ctx.count_exact_single,
            "exact_multi": ctx.count_exact_multi,
            "pinned": ctx.count_pinned,
            "pinned_exact": ctx.count_pinned_exact,
            "pinned_proper": ctx.count_pinned_proper,
            "pinned_proper_z": ctx.count_pinned_proper_z,
        }[kind](*args)
        if count == 0:
            raise ValueError(f"class {kind}{tuple(args)} is empty")
        sampler = {
            "within": self._sample_within,
            "exact": self._sample_exact,
            "exact_proper": self._sample_exact_proper,
            "exact_single": self._sample_exact_single,
            "exact_multi": self._sample_exact_multi,
            "pinned": self._sample_pinned,
            "pinned_exact": self._sample_pinned_exact,
            "pinned_proper": self._sample_pinned_proper,
            "pinned_proper_z": self._sample_pinned_proper_z,
        }[kind]
        return sampler(*args, rng)

    # -- one procedure per counted class --------------------------------------

    def _sample_within(self, t: int, x: int, k: int, z: int, rng: RandomStream) -> LabeledGraph:
        ctx = self.ctx
        if t == 0 and k == 0:
            return complete_graph(range(1, x + 1))
        # Zero factors short-circuit left to right in fill order, so weighing
        # a filled context never writes to it.
        weights = []
        for k2 in range(k + 1):
            a = ctx.count_exact(t, x, k2, z)
            weights.append(ctx.binomial(k, k2) * a
                           * ctx.count_within(t - 1, x, k - k2, z) if a else 0)
        self.ops += k + 1
        k2 = categorical(weights, rng)
        g1 = self._sample_exact(t, x, k2, z, rng)
        g2 = self._sample_within(t - 1, x, k - k2, z, rng)
        free = range(x + 1, x + k + 1)
        a_labels = sample_subset(free, k2, rng)
        b_labels = [v for v in free if v not in set(a_labels)]
        g1 = relabel(g1, phi_map(range(x + 1, x + k2 + 1), a_labels))
        g2 = relabel(g2, phi_map(range(x + 1, x + (k - k2) + 1), b_labels))
        return glue(g1, g2, range(1, x + 1))

    def _sample_exact(self, t: int, x: int, k: int, z: int, rng: RandomStream) -> LabeledGraph:
        ctx = self.ctx
        if k == 0:
            return complete_graph(range(1, x + 1))
        pairs = []
        weights = []
        for k2 in range(1, k + 1):
            rest = ctx.count_exact(t, x, k - k2, z)
            if not rest:
                continue
            b = ctx.binomial(k - 1, k2 - 1)
            for x2 in range(1, x + 1):
                w = ((ctx.binomial(x, x2) - ctx.binomial(z, x2)) * b
                     * ctx.count_exact_single(t, x2, k2) * rest)
                if w:
                    pairs.append((k2, x2))
                    weights.append(w)
        self.ops += k * x
        k2, x2 = pairs[categorical(weights, rng)]
        g1 = self._sample_exact_single(t, x2, k2, rng)
        g2 = self._sample_exact(t, x, k - k2, z, rng)
        return self._attach_component(g1, g2, x, k, k2, x2, z, rng)

    def _sample_exact_proper(self, t: int, x: int, k: int, z: int, rng: RandomStream) -> LabeledGraph:
        ctx = self.ctx
        if k == 0:
            return complete_graph(range(1, x + 1))
        pairs = []
        weights = []
        for k2 in range(1, k + 1):
            rest = ctx.count_exact_proper(t, x, k - k2, z)
            if not rest:
                continue
            b = ctx.binomial(k - 1, k2 - 1)
            for x2 in range(1, x):
                w = ((ctx.binomial(x, x2) - ctx.binomial(z, x2)) * b
                     * ctx.count_exact_single(t, x2, k2) * rest)
                if w:
                    pairs.append((k2, x2))
                    weights.append(w)
        self.ops += k * max(x - 1, 0)
        k2, x2 = pairs[categorical(weights, rng)]
        g1 = self._sample_exact_single(t, x2, k2, rng)
        g2 = self._sample_exact_proper(t, x, k - k2, z, rng)
        return self._attach_component(g1, g2, x, k, k2, x2, z, rng)

    def _attach_component(self, g1: LabeledGraph, g2: LabeledGraph, x: int, k: int,
                          k2: int, x2: int, z: int, rng: RandomStream) -> LabeledGraph:
        """Shared tail of the exact/exact_proper procedures: pick label sets,
        line both pieces up, and glue at the component's root contact."""
        x_labels = sample_subset_escaping_prefix(x, x2, z, rng)
        free = range(x + 1, x + k + 1)
        c_labels = sample_subset_containing(free, k2, x + 1, rng)
        d_labels = [v for v in free if v not in set(c_labels)]
        m1 = phi_map(range(1, x2 + 1), x_labels)
        m1.update(phi_map(range(x2 + 1, x2 + k2 + 1), c_labels))
        g1 = relabel(g1, m1)
        g2 = relabel(g2, phi_map(range(x + 1, x + (k - k2) + 1), d_labels))
        return glue(g1, g2, x_labels)

    def _sample_exact_single(self, t: int, x: int, k: int, rng: RandomStream) -> LabeledGraph:
        ctx = self.ctx
        weights = [ctx.binomial(k, l) * ctx.count_pinned(t, x, l, k - l)
                   for l in range(1, k + 1)]
        self.ops += k
        l = categorical(weights, rng) + 1
        g = self._sample_pinned(t, x, l, k - l, rng)
        free = range(x + 1, x + k + 1)
        l_labels = sample_subset(free, l, rng)
        a_labels = [v for v in free if v not in set(l_labels)]
        m = phi_map(range(x + 1, x + l + 1), l_labels)
        m.update(phi_map(range(x + l + 1, x + k + 1), a_labels))
        return relabel(g, m)

    def _sample_exact_multi(self, t: int, x: int, k: int, rng: RandomStream) -> LabeledGraph:
        ctx = self.ctx
        s1 = 0
        s2 = 0
        w_one = []
        w_more = []
        for k2 in range(1, k):
            b = ctx.binomial(k - 1, k2 - 1) * ctx.count_exact_single(t, x, k2)
            u = b * ctx.count_exact_single(t, x, k - k2) if b else 0
            v = b * ctx.count_exact_multi(t, x, k - k2) if b else 0
            w_one.append(u)
            w_more.append(v)
            s1 += u
            s2 += v
        self.ops += 2 * k
        u = rng.uniform_below(s1 + s2)
        if u < s1:
            k2 = categorical(w_one, rng) + 1
            g2 = self._sample_exact_single(t, x, k - k2, rng)
        else:
            k2 = categorical(w_more, rng) + 1
            g2 = self._sample_exact_multi(t, x, k - k2, rng)
        g1 = self._sample_exact_single(t, x, k2, rng)
        free = range(x + 1, x + k + 1)
        c_labels = sample_subset_containing(free, k2, x + 1, rng)
        d_labels = [v for v in free if v not in set(c_labels)]
        g1 = relabel(g1, phi_map(range(x + 1, x + k2 + 1), c_labels))
        g2 = relabel(g2, phi_map(range(x + 1, x + (k - k2) + 1), d_labels))
        return glue(g1, g2, range(1, x + 1))

    def _sample_pinned(self, t: int, x: int, l: int, k: int, rng: RandomStream) -> LabeledGraph:
        ctx = self.ctx
        if t == 1 and k == 0:
            return complete_graph(range(1, x + l + 1))
        weights = []
        for k2 in range(1, k + 1):
            a = ctx.count_pinned_exact(t, x, l, k2)
            weights.append(ctx.binomial(k, k2) * a
                           * ctx.count_within(t - 2, x + l, k - k2, x) if a else 0)
        self.ops += k
        k2 = categorical(weights, rng) + 1
        g1 = self._sample_pinned_exact(t, x, l, k2, rng)
        g2 = self._sample_within(t - 2, x + l, k - k2, x, rng)
        free = range(x + l + 1, x + l + k + 1)
        a_labels = sample_subset(free, k2, rng)
        b_labels = [v for v in free if v not in set(a_labels)]
        g1 = relabel(g1, phi_map(range(x + l + 1, x + l + k2 + 1), a_labels))
        g2 = relabel(g2, phi_map(range(x + l + 1, x + l + (k - k2) + 1), b_labels))
        return glue(g1, g2, range(1, x + l + 1))

    def _sample_pinned_exact(self, t: int, x: int, l: int, k: int, rng: RandomStream) -> LabeledGraph:
        ctx = self.ctx
        xl = x + l
        s1 = ctx.count_pinned_proper(t, x, l, k)
        w_one = []
        w_more = []
        for k2 in range(1, k + 1):
            b = ctx.binomial(k, k2)
            one = ctx.count_exact_single(t - 1, xl, k2)
            w_one.append(b * one * ctx.count_pinned_proper(t, x, l, k - k2)
                         if one else 0)
            more = ctx.count_exact_multi(t - 1, xl, k2)
            w_more.append(b * more * ctx.count_exact_proper(t - 1, xl, k - k2, x)
                          if more else 0)
        self.ops += 2 * k + 1
        s2 = sum(w_one)
        s3 = sum(w_more)
        u = rng.uniform_below(s1 + s2 + s3)
        if u < s1:
            return self._sample_pinned_proper(t, x, l, k, rng)
        if u < s1 + s2:
            k2 = categorical(w_one, rng) + 1
            g1 = self._sample_exact_single(t - 1, xl, k2, rng)
            g2 = self._sample_pinned_proper(t, x, l, k - k2, rng)
        else:
            k2 = categorical(w_more, rng) + 1
            g1 = self._sample_exact_multi(t - 1, xl, k2, rng)
            g2 = self._sample_exact_proper(t - 1, xl, k - k2, x, rng)
        free = range(xl + 1, xl + k + 1)
        a_labels = sample_subset(free, k2, rng)
        b_labels = [v for v in free if v not in set(a_labels)]
        g1 = relabel(g1, phi_map(range(xl + 1, xl + k2 + 1), a_labels))
        g2 = relabel(g2, phi_map(range(xl + 1, xl + (k - k2) + 1), b_labels))
        return glue(g1, g2, range(1, xl + 1))

    def _sample_pinned_proper(self, t: int, x: int, l: int, k: int, rng: RandomStream) -> LabeledGraph:
        return self._sample_pinned_proper_z(t, x, l, k, x, rng)

    def _sample_pinned_proper_z(self, t: int, x: int, l: int, k: int, z: int,
                                rng: RandomStream) -> LabeledGraph:
        ctx = self.ctx
        triples = []
        weights = []
        for k2 in range(1, k + 1):
            b = ctx.binomial(k - 1, k2 - 1)
            kr = k - k2
            for x2 in range(x + 1):
                for l2 in range(l + 1):
                    if not 0 < x2 + l2 < x + l:
                        continue
                    s = ctx.count_exact_single(t - 1, x2 + l2, k2)
                    if not s:
                        continue
                    if l2 > 0:
                        w_root = ctx.binomial(x, x2)
                    else:
                        w_root = ctx.binomial(x, x2) - ctx.binomial(z, x2)
                    if not w_root:
                        continue
                    rest = (ctx.count_pinned_proper_z(t, x + l2, l - l2, kr, z) if l2 < l
                            else ctx.count_exact_proper(t - 1, x + l, kr, z))
                    if not rest:
                        continue
                    triples.append((k2, x2, l2))
                    weights.append(b * ctx.binomial(l, l2) * s * w_root * rest)
        self.ops += k * (x + 1) * (l + 1)
        k2, x2, l2 = triples[categorical(weights, rng)]
        g1 = self._sample_exact_single(t - 1, x2 + l2, k2, rng)
        if l2 < l:
            g2 = self._sample_pinned_proper_z(t, x + l2, l - l2, k - k2, z, rng)
        else:
            g2 = self._sample_exact_proper(t - 1, x + l, k - k2, z, rng)

        # Label choices for the component's root contact (x2 in the held root,
        # l2 in the pinned layer) and for its own vertices.
        if x2 == 0:
            x_labels: list[int] = []
        elif l2 > 0:
            x_labels = sample_subset(range(1, x + 1), x2, rng)
        else:
            x_labels = sample_subset_escaping_prefix(x, x2, z, rng)
        layer = range(x + 1, x + l + 1)
        l_labels = sample_subset(layer, l2, rng)
        free = range(x + l + 1, x + l + k + 1)
        c_labels = sample_subset_containing(free, k2, x + l + 1, rng)
        d_labels = [v for v in free if v not in set(c_labels)]

        m1 = phi_map(range(1, x2 + 1), x_labels)
        m1.update(phi_map(range(x2 + 1, x2 + l2 + 1), l_labels))
        m1.update(phi_map(range(x2 + l2 + 1, x2 + l2 + k2 + 1), c_labels))
        g1 = relabel(g1, m1)

        m2 = phi_map(range(x + l + 1, x + l + (k - k2) + 1), d_labels)
        g2 = relabel(g2, m2)
        if l2 < l:
            rest_layer = [v for v in layer if v not in set(l_labels)]
            m3 = phi_map(range(x + 1, x + l2 + 1), l_labels)
            m3.update(phi_map(range(x + l2 + 1, x + l + 1), rest_layer))
            g2 = relabel(g2, m3)
        return glue(g1, g2, sorted(x_labels + l_labels))


# ---------------------------------------------------------------------------
# Conveniences
# ---------------------------------------------------------------------------

def sample_chordal(n: int, omega: int | None = None, seed: int | None = None,
                   ctx: CountingContext | None = None) -> LabeledGraph:
    """One uniform w-colorable chordal graph on [n]."""
    from .counting import get_context

    if ctx is None:
        ctx = get_context(n, omega)
    return ChordalSampler(ctx).sample_chordal(n, RandomStream(seed))


def sample_connected_chordal(n: int, omega: int | None = None, seed: int | None = None,
                             ctx: CountingContext | None = None) -> LabeledGraph:
    """One uniform w-colorable connected chordal graph on [n]."""
    from .counting import get_context

    if ctx is None:
        ctx = get_context(n, omega)
    return ChordalSampler(ctx).sample_connected(n, RandomStream(seed))
