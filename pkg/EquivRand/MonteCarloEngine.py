from concurrent.futures import ThreadPoolExecutor
import functools
import logging

from events import Events
import numpy as np

from . import settings
from .errors import InputDomainError
from .harness import sampling_tables, simulate_block
from .multiplicity import adaptive_threshold, k0_hat_matrix, lambda_sweep
from .regions import build_family
from .types import TableRow

logger = logging.getLogger(__name__)


def _mean_and_stderr(values):
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        return float(np.mean(values)), 0.0
    return float(np.mean(values)), float(np.std(values, ddof=1) / np.sqrt(values.size))


class MonteCarloEngine(Events):
    """ Replicated simulation of hypothesis families

    Replicates are split into chunks that run on a thread pool. Results are
    put back together in replicate order, so a run is bit-identical for any
    worker count.

    Events:
        on_chunk_done(done, total): a chunk of replicates finished
        on_row_done(row): a table row finished
    """
    __events__ = ('on_chunk_done', 'on_row_done')

    def __init__(self, spec, workers=None, chunk_size=settings.DEFAULT_CHUNK_SIZE):
        """ Initializes an engine for one simulation configuration

        Args:
            spec (SimulationSpec): seed, replicate count and tuning constants
            workers (int): thread count, ``settings.default_workers()`` if None
            chunk_size (int): replicates per task
        """
        super().__init__()
        if chunk_size < 1:
            raise InputDomainError("chunk_size must be at least 1")
        self.spec = spec
        self.workers = settings.default_workers() if workers is None else max(1, int(workers))
        self.chunk_size = int(chunk_size)

    def _chunks(self, replicate_ids):
        return [replicate_ids[i:i + self.chunk_size] for i in range(0, len(replicate_ids), self.chunk_size)]

    def simulate(self, family, replicate_ids=None):
        """ Simulate replicates of a family

        Args:
            family (HypothesisFamily): hypotheses to simulate
            replicate_ids (sequence): ids to run, ``range(spec.reps)`` if None

        Returns:
            dict with ``x``, ``UMP`` and ``RAND2`` arrays of shape (replicates, k)
        """
        replicate_ids = list(range(self.spec.reps) if replicate_ids is None else replicate_ids)
        if not replicate_ids:
            raise InputDomainError("no replicates to simulate")
        chunks = self._chunks(replicate_ids)
        # tables are cached, build them once before the threads start
        sampling_tables(family)
        blocks = []
        if self.workers == 1:
            for chunk in chunks:
                blocks.append(simulate_block(family, self.spec, chunk))
                self.on_chunk_done(len(blocks), len(chunks))
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                for block in pool.map(functools.partial(simulate_block, family, self.spec), chunks):
                    blocks.append(block)
                    self.on_chunk_done(len(blocks), len(chunks))
        logger.debug("simulated %d replicates of k=%d in %d chunks", len(replicate_ids), family.k, len(chunks))
        return {name: np.concatenate([block[name] for block in blocks]) for name in blocks[0]}

    def generator(self, family):
        """Callable mapping replicate ids to simulated p-value matrices"""
        return functools.partial(self.simulate, family)

    def algorithm1_run(self, regions, theta1, theta2):
        """ Mean Schweder-Spjotvoll estimates over replicates for one pair of bounds

        Args:
            regions (list of RegionRecord): cleaned regions
            theta1 (float): lower equivalence bound
            theta2 (float): upper equivalence bound

        Returns:
            TableRow
        """
        family = build_family(regions, theta1, theta2)
        simulated = self.simulate(family)
        ump, ump_se = _mean_and_stderr(k0_hat_matrix(simulated["UMP"], self.spec.lambda_))
        rand2, rand2_se = _mean_and_stderr(k0_hat_matrix(simulated["RAND2"], self.spec.lambda_))
        logger.info("bounds (%.4f, %.4f): k0=%d, UMP %.4f, RAND2 %.4f", theta1, theta2, family.k0, ump, rand2)
        return TableRow(theta1=theta1, theta2=theta2, delta=round(theta2 - theta1, 12), k0=family.k0,
                        k0_hat_ump=ump, k0_hat_rand2=rand2, mc_stderr_ump=ump_se, mc_stderr_rand2=rand2_se)

    def table(self, regions, bounds):
        """ One TableRow per (theta1, theta2) pair, in the given order """
        rows = []
        for bound in bounds:
            row = self.algorithm1_run(regions, bound[0], bound[1])
            rows.append(row)
            self.on_row_done(row)
        return rows

    def fwer_estimate(self, family):
        """ Familywise error rate of adaptive Bonferroni per method

        Each replicate estimates k0 from its own p-values and tests every
        hypothesis at alpha / max(1, k0_hat). An error is a rejected true null.

        Returns:
            dict method -> (fwer, Monte Carlo standard error)
        """
        if self.spec.alpha == 0.0:
            return {method: (0.0, 0.0) for method in self.spec.method_set}
        simulated = self.simulate(family)
        truth = np.asarray(family.truth_mask, dtype=bool)
        result = {}
        for method in self.spec.method_set:
            pmatrix = simulated[method]
            threshold = adaptive_threshold(self.spec.alpha, k0_hat_matrix(pmatrix, self.spec.lambda_))
            errors = np.any((pmatrix <= threshold[:, None]) & truth[None, :], axis=1)
            result[method] = _mean_and_stderr(errors)
            logger.info("FWER %s: %.4f (k=%d, k0=%d)", method, result[method][0], family.k, family.k0)
        return result

    def lambda_sweep(self, family, lambda_grid):
        """Mean k0_hat per lambda for both methods, see :func:`multiplicity.lambda_sweep`"""
        return lambda_sweep(self.generator(family), lambda_grid, self.spec.reps)


def algorithm1_run(regions, theta1, theta2, spec, workers=1):
    return MonteCarloEngine(spec, workers=workers).algorithm1_run(regions, theta1, theta2)


def fwer_estimate(family, spec, workers=1):
    return MonteCarloEngine(spec, workers=workers).fwer_estimate(family)
