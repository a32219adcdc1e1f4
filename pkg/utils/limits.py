#!/usr/bin/env python3
"""
Engine limits for ExtWords
Process-wide caps read by the word, period and reduction layers
"""

import logging
from typing import Dict, Any

from utils.config_loader import DEFAULT_ENGINE_CONFIG
from utils.errors import DegreeBoundError

logger = logging.getLogger(__name__)


class EngineLimits:
    """Mutable holder for the engine caps"""

    def __init__(self, config: Dict[str, Any] = None):
        self.update(DEFAULT_ENGINE_CONFIG)
        if config:
            self.update(config)

    def update(self, config: Dict[str, Any]):
        """Overlay settings from a config dict"""
        self.d_max = int(config.get('d_max', getattr(self, 'd_max', 3)))
        self.window = int(config.get('window', getattr(self, 'window', 64)))
        self.max_steps = int(config.get('max_steps', getattr(self, 'max_steps', 1000000)))
        self.preprocess_rounds = int(config.get('preprocess_rounds', getattr(self, 'preprocess_rounds', 100)))
        self.seed = int(config.get('seed', getattr(self, 'seed', 0)))
        self.max_unroll = int(config.get('max_unroll', getattr(self, 'max_unroll', 4096)))
        self.max_doubling = int(config.get('max_doubling', getattr(self, 'max_doubling', 64)))
        if self.d_max < 1:
            logger.warning(f"d_max={self.d_max}: rank(A) < 2, no infinite words can be formed")

    def check_degree(self, degree, what: str = "exponent"):
        """Raise when a degree exceeds d_max"""
        if degree > self.d_max:
            raise DegreeBoundError(f"{what} has degree {degree} > d_max={self.d_max}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'd_max': self.d_max,
            'window': self.window,
            'max_steps': self.max_steps,
            'preprocess_rounds': self.preprocess_rounds,
            'seed': self.seed,
            'max_unroll': self.max_unroll,
            'max_doubling': self.max_doubling,
        }


LIMITS = EngineLimits()


def configure(config: Dict[str, Any]) -> EngineLimits:
    """Apply engine settings process-wide"""
    LIMITS.update(config)
    logger.debug(f"Engine limits: {LIMITS.to_dict()}")
    return LIMITS
