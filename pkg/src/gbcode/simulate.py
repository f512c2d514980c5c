"""Seeded random-error channel simulation."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .code import LinearCode, xor
from .decoder import decode
from .errors import DecodeFailure


@dataclass(frozen=True)
class SimulationResult:
    trials: int
    successes: int
    failures: int  # decoder reported failure
    miscorrections: int  # decoder returned the wrong codeword

    @property
    def rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0


def run_trial(code: LinearCode, errors: int, seed: int, trial: int, t: int) -> str:
    """One encode -> corrupt -> decode round; returns 'ok', 'fail' or 'wrong'.

    The generator is seeded from (seed, trial) so any sharding gives the same draws.
    """
    rng = np.random.default_rng([seed, trial])
    message = tuple(int(b) for b in rng.integers(0, 2, size=code.k))
    sent = code.encode(message)
    e = [0] * code.n
    for p in rng.choice(code.n, size=errors, replace=False):
        e[int(p)] = 1
    try:
        result = decode(xor(sent, e), code, t)
    except DecodeFailure:
        return "fail"
    return "ok" if result.codeword == sent else "wrong"


def _run_range(code: LinearCode, errors: int, seed: int, start: int, stop: int, t: int):
    counts = {"ok": 0, "fail": 0, "wrong": 0}
    for trial in range(start, stop):
        counts[run_trial(code, errors, seed, trial, t)] += 1
    return counts


def simulate(
    code: LinearCode,
    trials: int,
    errors: int,
    seed: int,
    t: Optional[int] = None,
    workers: int = 1,
) -> SimulationResult:
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    if not 0 <= errors <= code.n:
        raise ValueError(f"errors must lie in 0..{code.n}")
    if t is None:
        t = code.t
    if workers <= 1 or trials < 2:
        counts = _run_range(code, errors, seed, 0, trials, t)
    else:
        bounds = np.linspace(0, trials, workers + 1).astype(int)
        counts = {"ok": 0, "fail": 0, "wrong": 0}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_range, code, errors, seed, int(a), int(b), t)
                for a, b in zip(bounds[:-1], bounds[1:])
            ]
            for f in futures:
                for key, value in f.result().items():
                    counts[key] += value
    return SimulationResult(trials, counts["ok"], counts["fail"], counts["wrong"])
