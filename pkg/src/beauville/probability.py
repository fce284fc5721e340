"""Monte Carlo and exhaustive estimation of the Beauville probability.

P(G) is the probability that four independent uniform elements
(x1, y1, x2, y2) form an unmixed Beauville structure.  Estimates are
fully deterministic for a fixed (group, sample count, master seed): each
sample index derives its own RNG stream from the master seed by an
injective counter construction, so results are identical no matter how the
index range is chunked across workers.

Component statistics mirror the split/non-split decomposition of PSL2(q):
element-level fractions (split, non-split, unipotent, even order for odd
q / order divisible by 3 for even q) and pair-level fractions (x, y, xy
all split; all non-split; generating).  Intervals are 95% Wilson scores,
which behave correctly near 0 and 1.
"""
from __future__ import annotations

import math
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .groups import CapExceeded, Group, parse_group
from .structures import DEFAULT_SEED, sigma_prime_fingerprints

WILSON_Z = 1.959963984540054  # 97.5% normal quantile


def wilson_interval(successes: int, trials: int) -> tuple[float, float]:
    """95% Wilson score interval for a binomial fraction."""
    if trials == 0:
        return (0.0, 1.0)
    z2 = WILSON_Z * WILSON_Z
    phat = successes / trials
    denom = 1 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = (WILSON_Z / denom) * math.sqrt(
        phat * (1 - phat) / trials + z2 / (4 * trials * trials))
    lo = 0.0 if successes == 0 else max(0.0, center - half)
    hi = 1.0 if successes == trials else min(1.0, center + half)
    return (lo, hi)


_M64 = (1 << 64) - 1


def _sample_rng(master_seed: int, index: int) -> random.Random:
    """Per-sample stream: (seed, index) mixed through the splitmix64
    finalizer so that nearby indices seed uncorrelated generators."""
    z = ((master_seed & _M64) * 0x9E3779B97F4A7C15 + index * 0xBF58476D1CE4E5B9
         + (master_seed >> 64)) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return random.Random(z ^ (z >> 31))


@dataclass(frozen=True)
class EstimationConfig:
    group: str
    samples: int
    seed: int = DEFAULT_SEED
    workers: int = 1
    component_stats: bool = True

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("sample_count must be >= 1")
        if self.workers < 1:
            raise ValueError("worker_count must be >= 1")


@dataclass
class EstimateResult:
    config: EstimationConfig
    successes: int
    estimate: float
    interval: tuple[float, float]
    components: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "group": self.config.group,
            "samples": self.config.samples,
            "seed": self.config.seed,
            "workers": self.config.workers,
            "successes": self.successes,
            "estimate": self.estimate,
            "wilson95": list(self.interval),
            "components": self.components,
        }

    def tsv_line(self) -> str:
        lo, hi = self.interval
        return "\t".join([
            self.config.group, str(self.config.samples), str(self.config.seed),
            str(self.successes), f"{self.estimate:.6f}", f"{lo:.6f}", f"{hi:.6f}"])


def _is_beauville_sample(G: Group, rng) -> tuple[bool, dict]:
    x1, y1 = G.random_element(rng), G.random_element(rng)
    x2, y2 = G.random_element(rng), G.random_element(rng)
    gen1, gen2 = G.generates(x1, y1), G.generates(x2, y2)
    tallies = _pair_tallies(G, x1, y1, gen1)
    for key, val in _pair_tallies(G, x2, y2, gen2).items():
        tallies[key] = tallies.get(key, 0) + val
    if not (gen1 and gen2):
        return False, tallies
    z1 = G.inverse(G.multiply(x1, y1))
    z2 = G.inverse(G.multiply(x2, y2))
    t1 = (G.order_of(x1), G.order_of(y1), G.order_of(z1))
    t2 = (G.order_of(x2), G.order_of(y2), G.order_of(z2))
    if math.gcd(math.prod(t1), math.prod(t2)) == 1:
        return True, tallies
    ok = not (sigma_prime_fingerprints(G, x1, y1)
              & sigma_prime_fingerprints(G, x2, y2))
    return ok, tallies


def _pair_tallies(G, x, y, gen: bool | None = None) -> dict:
    if gen is None:
        gen = G.generates(x, y)
    if G.kind != "psl2":
        return {"elements": 2, "pairs": 1, "generating": int(gen)}
    xy = G.multiply(x, y)
    types = [G.split_type(m) for m in (x, y, xy)]
    out = {"elements": 2, "pairs": 1, "split": 0, "nonsplit": 0,
           "unipotent": 0, "triple_split": 0, "triple_nonsplit": 0,
           "generating": int(gen)}
    out["even_order" if G.q % 2 else "order_div3"] = 0
    for st in types[:2]:
        if st in out:
            out[st] += 1
    if all(t == "split" for t in types):
        out["triple_split"] = 1
    if all(t == "nonsplit" for t in types):
        out["triple_nonsplit"] = 1
    for m in (x, y):
        k = G.order_of(m)
        if G.q % 2 == 1 and k % 2 == 0:
            out["even_order"] += 1
        if G.q % 2 == 0 and k % 3 == 0:
            out["order_div3"] += 1
    return out


def _estimate_range(descriptor: str, seed: int, start: int, stop: int,
                    component_stats: bool) -> dict:
    G = parse_group(descriptor)
    successes = 0
    tallies: dict = {}
    for idx in range(start, stop):
        rng = _sample_rng(seed, idx)
        ok, t = _is_beauville_sample(G, rng)
        successes += ok
        if component_stats:
            for key, val in t.items():
                tallies[key] = tallies.get(key, 0) + val
    return {"successes": successes, "tallies": tallies}


def _run_ranges(worker_fn, args_list, workers: int):
    if workers <= 1 or len(args_list) <= 1:
        return [worker_fn(*a) for a in args_list]
    import multiprocessing as mp
    ctx = mp.get_context("fork" if os.name == "posix" else "spawn")
    with ctx.Pool(workers) as pool:
        return pool.starmap(worker_fn, args_list)


def _chunk(n: int, pieces: int):
    pieces = max(1, min(pieces, n))
    step = (n + pieces - 1) // pieces
    return [(lo, min(lo + step, n)) for lo in range(0, n, step)]


def estimate_beauville_probability(G: Group, samples: int,
                                   seed: int = DEFAULT_SEED,
                                   workers: int = 1,
                                   component_stats: bool = True) -> EstimateResult:
    """Monte Carlo estimate of P(G) from `samples` uniform quadruples.

    Deterministic for fixed (group, samples, seed) regardless of workers:
    RNG streams split per sample index and the reduction is order-free.
    """
    cfg = EstimationConfig(G.descriptor(), samples, seed, workers, component_stats)
    t0 = time.perf_counter()
    ranges = _chunk(samples, workers * 8 if workers > 1 else 1)
    parts = _run_ranges(
        _estimate_range,
        [(cfg.group, seed, lo, hi, component_stats) for lo, hi in ranges],
        workers)
    successes = sum(p["successes"] for p in parts)
    tallies: dict = {}
    for p in parts:
        for key, val in p["tallies"].items():
            tallies[key] = tallies.get(key, 0) + val
    components = _tallies_to_components(tallies) if component_stats else {}
    return EstimateResult(
        config=cfg, successes=successes, estimate=successes / samples,
        interval=wilson_interval(successes, samples), components=components,
        elapsed=time.perf_counter() - t0)


def _tallies_to_components(tallies: dict) -> dict:
    out = {}
    elements = tallies.get("elements", 0)
    pairs = tallies.get("pairs", 0)
    for key, denom in (("split", elements), ("nonsplit", elements),
                       ("unipotent", elements), ("even_order", elements),
                       ("order_div3", elements),
                       ("triple_split", pairs), ("triple_nonsplit", pairs),
                       ("generating", pairs)):
        if denom and key in tallies:
            num = tallies[key]
            lo, hi = wilson_interval(num, denom)
            out[key] = {"fraction": num / denom, "count": num, "of": denom,
                        "wilson95": [lo, hi]}
    return out


def _component_range(descriptor: str, seed: int, start: int, stop: int) -> dict:
    G = parse_group(descriptor)
    tallies: dict = {}
    for idx in range(start, stop):
        rng = _sample_rng(seed, idx)
        x, y = G.random_element(rng), G.random_element(rng)
        for key, val in _pair_tallies(G, x, y).items():
            tallies[key] = tallies.get(key, 0) + val
    return {"tallies": tallies}


def estimate_component_stats(G: Group, samples: int, seed: int = DEFAULT_SEED,
                             workers: int = 1) -> dict:
    """Element- and pair-level component fractions from `samples` uniform
    pairs (each pair also contributes its two elements)."""
    cfg = EstimationConfig(G.descriptor(), samples, seed, workers)
    t0 = time.perf_counter()
    ranges = _chunk(samples, workers * 8 if workers > 1 else 1)
    parts = _run_ranges(_component_range,
                        [(cfg.group, seed, lo, hi) for lo, hi in ranges],
                        workers)
    tallies: dict = {}
    for p in parts:
        for key, val in p["tallies"].items():
            tallies[key] = tallies.get(key, 0) + val
    out = _tallies_to_components(tallies)
    out["_meta"] = {"group": cfg.group, "samples": samples, "seed": seed,
                    "workers": workers, "elapsed": time.perf_counter() - t0}
    return out


def exact_probability_exhaustive(G: Group, pair_cap: int = 2_000_000) -> Fraction:
    """Exact rational P(G) by enumerating generating pairs.

    The first element of each pair ranges over class representatives only
    (all conditions are conjugation-invariant), weighted by class size;
    quadruple counts then factor through the achievable Sigma sets.
    """
    ident = G.identity()
    by_fp: dict = {}
    for m in G.elements():
        by_fp.setdefault(G.fingerprint(m), []).append(m)
    reps = [(ms[0], len(ms)) for ms in by_fp.values() if ms[0] != ident]
    elements = [m for ms in by_fp.values() for m in ms]
    if len(reps) * len(elements) > pair_cap:
        raise CapExceeded(
            f"exact enumeration needs {len(reps) * len(elements)} pairs, cap {pair_cap}",
            required=len(reps) * len(elements), cap=pair_cap)
    weights: dict = {}
    for x, clsize in reps:
        for y in elements:
            if not G.generates(x, y):
                continue
            sig = sigma_prime_fingerprints(G, x, y)
            weights[sig] = weights.get(sig, 0) + clsize
    total = 0
    sigmas = list(weights)
    for s1 in sigmas:
        for s2 in sigmas:
            if not (s1 & s2):
                total += weights[s1] * weights[s2]
    n4 = Fraction(G.order) ** 4
    return Fraction(total) / n4
