"""
Runs the trials of an ExperimentConfig, serially or in a process pool. Every trial draws from its own stream, so the
resulting TrialBatch is the same for any parallelism.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import List, Optional, Tuple

from geosat.experiments import TrialBudgetExceededError, experiment_logger
from geosat.experiments.events import EventEvaluator
from geosat.experiments.rng import trial_seed
from geosat.experiments.settings_provider import get_settings
from geosat.generators.factory import generate_from_params
from geosat.models.enums import SolverEngine
from geosat.models.experiment_results import ExperimentConfig, TrialBatch, TrialOutcome
from geosat.models.settings import ExperimentSettings

_Task = Tuple[ExperimentConfig, int, int]


@lru_cache(maxsize=None)
def _evaluator(engine: SolverEngine, var_limit: int) -> EventEvaluator:
    """one evaluator per process and solver setup"""
    return EventEvaluator(engine=engine, var_limit=var_limit)


def run_single_trial(config: ExperimentConfig, trial_index: int, var_limit: int) -> TrialOutcome:
    """
    draws the random object of trial trial_index and evaluates the event on it
    """
    seed = trial_seed(config.master_seed, trial_index)
    start = time.perf_counter()
    _, drawn = generate_from_params(config.model_params, seed)
    outcome = _evaluator(config.engine, var_limit).evaluate(config.event, drawn, config.event_argument)
    elapsed_ms = (time.perf_counter() - start) * 1000
    return TrialOutcome(
        trial=trial_index, seed=seed, param=config.model_params.param, outcome=outcome, elapsed_ms=elapsed_ms
    )


def _run_task(task: _Task) -> TrialOutcome:
    return run_single_trial(*task)


def check_budget(config: ExperimentConfig, settings: ExperimentSettings) -> None:
    """
    :raises TrialBudgetExceededError: if n * trials exceeds the trial budget
    """
    requested = max(config.model_params.n, 1) * config.trials
    if requested > settings.trial_budget:
        raise TrialBudgetExceededError(requested, settings.trial_budget)


def run_trials(config: ExperimentConfig, settings: Optional[ExperimentSettings] = None) -> TrialBatch:
    """
    runs all trials of the config, with config.parallelism worker processes
    :param settings: defaults to the injected settings
    :raises TrialBudgetExceededError: if n * trials exceeds the trial budget
    """
    if settings is None:
        settings = get_settings()
    check_budget(config, settings)
    var_limit = settings.complete_solver_var_limit
    tasks: List[_Task] = [(config, trial_index, var_limit) for trial_index in range(config.trials)]
    start = time.perf_counter()
    if config.parallelism == 1 or config.trials == 1:
        outcomes = [_run_task(task) for task in tasks]
    else:
        chunk_size = max(1, config.trials // (4 * config.parallelism))
        with ProcessPoolExecutor(max_workers=config.parallelism) as executor:
            # map keeps the order of the tasks, i.e. the trial order
            outcomes = list(executor.map(_run_task, tasks, chunksize=chunk_size))
    batch = TrialBatch(config=config, outcomes=outcomes)
    experiment_logger.info(
        "%i trials of %s at %s=%s (n=%i) took %.1fs; mean outcome %s",
        config.trials,
        config.event,
        config.model_params.model,
        config.model_params.param,
        config.model_params.n,
        time.perf_counter() - start,
        batch.mean,
    )
    return batch
