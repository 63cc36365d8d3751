# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

import json
import logging
import logging.config
import os

from montes_lite._config import LOG_CFG_ENV_VAR
from montes_lite.arith import FactoredInteger, vp
from montes_lite.ffpoly import FpPoly, FqField, FqPoly
from montes_lite.monogen import FieldSpec, RuleHit, Variant, Verdict, VerdictKind, classify
from montes_lite.ore import OreReport, analyze_prime, is_p_maximal
from montes_lite.polygon import NewtonPolygon, Side
from montes_lite.zxpoly import PhiExpansion, ZxPoly, parse_poly

__all__ = [
    "FactoredInteger",
    "FieldSpec",
    "FpPoly",
    "FqField",
    "FqPoly",
    "NewtonPolygon",
    "OreReport",
    "PhiExpansion",
    "RuleHit",
    "Side",
    "Variant",
    "Verdict",
    "VerdictKind",
    "ZxPoly",
    "analyze_prime",
    "classify",
    "is_p_maximal",
    "parse_poly",
    "vp",
]


def _setup_logging(logger: logging.Logger) -> None:
    log_path = os.environ.get(LOG_CFG_ENV_VAR, None)

    if log_path is not None and os.path.exists(log_path):  # pragma: no cover
        # log log config from JSON file
        with open(log_path, "rt") as f:
            config = json.load(f)

        logging.config.dictConfig(config)
    else:
        # no logging was provided
        logger.addHandler(logging.NullHandler())


logger = logging.getLogger(__name__)
_setup_logging(logger)
