# MIT License
#
# Copyright (c) 2024 the mssampler developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""seeded Monte Carlo draws of inspection outcomes.

the trials are split into fixed-size blocks, and each block draws from
its own Philox stream keyed by ``(seed, block index)``. the draws thus
depend on the seed only, never on the number of worker threads."""

from typing import Optional
import concurrent.futures as _futures
import dataclasses as _dataclasses
import logging as _logging

import numpy as _np
import numpy.typing as _npt

from .. import (
    defaults as _defaults,
)
from ..typing import (
    Probability,
)

MAX_SEED = 2 ** 64 - 1

_logger = _logging.getLogger(__name__)


@_dataclasses.dataclass(frozen=True)
class ValidationScenario:
    true_conformity_rate: Probability  # the population parameter f_r
    sample_size: int
    trials: int = _defaults.MC_TRIALS
    seed: int = _defaults.MC_SEED

    def __post_init__(self):
        if not (0.0 <= self.true_conformity_rate <= 1.0):
            raise ValueError(
                f"true conformity rate must lie in [0, 1], got {self.true_conformity_rate!r}"
            )
        if int(self.sample_size) != self.sample_size or self.sample_size < 1:
            raise ValueError(f"sample size must be a positive integer, got {self.sample_size!r}")
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError(f"trials must be a positive integer, got {self.trials!r}")
        if int(self.seed) != self.seed or not (0 <= self.seed <= MAX_SEED):
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


def block_generator(seed: int, block: int) -> _np.random.Generator:
    """the random stream of trial block ``block``."""
    sequence = _np.random.SeedSequence(entropy=seed, spawn_key=(block,))
    return _np.random.Generator(_np.random.Philox(sequence))


def _draw_block(
    scenario: ValidationScenario,
    block: int,
    size: int
) -> _npt.NDArray:
    rng = block_generator(scenario.seed, block)
    p   = 1.0 - scenario.true_conformity_rate
    return rng.binomial(scenario.sample_size, p, size=size).astype(_np.int64)


def simulate_inspections(
    scenario: ValidationScenario,
    threads: Optional[int] = None,
    block_size: Optional[int] = None,
) -> _npt.NDArray:
    """draws ``scenario.trials`` non-conforming counts
    ``d ~ Binomial(sample_size, 1 - true_conformity_rate)``."""
    if threads is None:
        threads = _defaults.MC_THREADS
    if block_size is None:
        block_size = _defaults.MC_BLOCK_SIZE
    if threads < 1:
        raise ValueError(f"threads must be a positive integer, got {threads!r}")

    trials = scenario.trials
    sizes  = [min(block_size, trials - start) for start in range(0, trials, block_size)]
    _logger.debug(
        "drawing %d trials in %d block(s) on %d thread(s) (seed=%d)",
        trials, len(sizes), threads, scenario.seed
    )
    if threads == 1:
        blocks = [_draw_block(scenario, idx, size) for idx, size in enumerate(sizes)]
    else:
        with _futures.ThreadPoolExecutor(max_workers=threads) as pool:
            blocks = list(pool.map(
                lambda item: _draw_block(scenario, item[0], item[1]),
                enumerate(sizes)
            ))
    return _np.concatenate(blocks)
