"""Monte Carlo channel simulation with exact-weight symbol errors.

Randomness: trial ``k`` of a run with seed ``s`` draws from NumPy's PCG64
generator seeded by ``SeedSequence([s, k])``. Each trial owns its stream,
so results do not depend on execution order or on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from .bounds import choose_params
from .code import HermitianCode, make_code
from .decode import list_decode
from .errors import ParameterError


@dataclass(frozen=True)
class SimConfig:
    q: int
    u: int
    m: int
    errors: int
    trials: int
    seed: int = 0
    l: int | None = None
    stats: bool = False
    jobs: int = 1


@dataclass
class SimReport:
    trials: int
    successes: int
    failures: int
    success_rate: float
    mean_list_size: float
    mean_mult_count: float | None
    l: int
    tau: int

    def to_dict(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=None)
def _code(q: int, u: int) -> HermitianCode:
    return make_code(q, u)


def trial_rng(seed: int, k: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, k])))


def corrupt(rng: np.random.Generator, word, t: int, order: int) -> list[int]:
    """Replace ``t`` distinct positions with uniformly chosen wrong symbols."""
    out = list(word)
    for pos in rng.choice(len(word), size=t, replace=False):
        wrong = [a for a in range(order) if a != out[pos]]
        out[pos] = wrong[int(rng.integers(len(wrong)))]
    return out


def run_trial(cfg: SimConfig, l: int, k: int) -> tuple[bool, int, int]:
    code = _code(cfg.q, cfg.u)
    rng = trial_rng(cfg.seed, k)
    msg = [int(a) for a in rng.integers(code.F.order, size=code.k)]
    cw, _ = code.encode(msg)
    v = corrupt(rng, cw, cfg.errors, code.F.order)
    res = list_decode(code, v, cfg.m, l)
    return tuple(msg) in res.messages, len(res.entries), res.stats.mult_count


def _run_chunk(args):
    cfg, l, ks = args
    return [run_trial(cfg, l, k) for k in ks]


def validate(cfg: SimConfig) -> HermitianCode:
    code = _code(cfg.q, cfg.u)
    if not 0 <= cfg.errors <= code.n:
        raise ParameterError(f"errors must be in 0..{code.n}")
    if cfg.trials < 1:
        raise ParameterError("trials must be >= 1")
    if cfg.m < 1:
        raise ParameterError("m must be >= 1")
    if cfg.l is not None and cfg.l < cfg.m:
        raise ParameterError(f"l={cfg.l} must be >= m={cfg.m}")
    return code


def run_simulation(cfg: SimConfig) -> SimReport:
    code = validate(cfg)
    params = choose_params(code, cfg.m)
    l = cfg.l if cfg.l is not None else max(cfg.m, params.l)
    ks = list(range(cfg.trials))
    if cfg.jobs > 1:
        chunks = [(cfg, l, ks[i :: cfg.jobs]) for i in range(cfg.jobs)]
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
    else:
        results = _run_chunk((cfg, l, ks))
    successes = sum(1 for ok, _, _ in results if ok)
    n = len(results)
    return SimReport(
        trials=n,
        successes=successes,
        failures=n - successes,
        success_rate=successes / n,
        mean_list_size=sum(s for _, s, _ in results) / n,
        mean_mult_count=(sum(c for _, _, c in results) / n) if cfg.stats else None,
        l=l,
        tau=params.tau,
    )
