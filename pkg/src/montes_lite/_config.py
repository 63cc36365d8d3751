# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""Runtime knobs shared by the arithmetic engine.

Nothing in here is mutable at runtime. The seed is read from the environment on every call so a fuzzing harness can
change it between runs without reloading the package.
"""

import dataclasses
import enum
import logging
import os

log = logging.getLogger(__name__)

LOG_CFG_ENV_VAR = "MONTES_LITE_LOG_CFG"
SEED_ENV_VAR = "MONTES_LITE_SEED"

DEFAULT_SEED = 0x5EED


class Variant(str, enum.Enum):
    """Selects which reading of the congruence rules is applied.

    proof:
        The conditions each come with an explicit polygon argument, this is the default.

    theorem:
        The conditions as stated in the headline classification, ``m ≡ -1 (mod 27)`` for the 3-adic rule with
        ``v >= 3`` and ``m ≡ ±1 (mod 25)`` with ``u = 2k``, ``k`` odd, for the 5-adic rules.
    """

    proof = "proof"
    theorem = "theorem"


@dataclasses.dataclass(frozen=True)
class FactoringBudget:
    """Effort allowed when factoring a rational integer.

    Attributes:
        trial_limit: Primes up to and including this bound are removed by trial division.
        rho_retries: Number of Pollard rho restarts (each with a new polynomial constant) per composite cofactor.
        rho_max_steps: Iteration cap of a single Pollard rho run.
    """

    trial_limit: int = 10**6
    rho_retries: int = 8
    rho_max_steps: int = 1 << 20


DEFAULT_BUDGET = FactoringBudget()


def get_seed() -> int:
    """Returns the seed used for the randomized factoring steps.

    The value of ``MONTES_LITE_SEED`` wins over the built in default. Both decimal and ``0x`` prefixed hex values are
    accepted.
    """
    raw = os.environ.get(SEED_ENV_VAR, None)
    if not raw:
        return DEFAULT_SEED

    try:
        seed = int(raw, 0)
    except ValueError:
        log.warning("Ignoring invalid %s value '%s'", SEED_ENV_VAR, raw)
        return DEFAULT_SEED

    log.debug("Using factoring seed %d from %s", seed, SEED_ENV_VAR)
    return seed
