#!/usr/bin/env python3
"""
Configuration loader for ExtWords
"""

import json
import os
import logging
from typing import Dict, Any

logger = logging.getLogger(__name__)

DEFAULT_ENGINE_CONFIG: Dict[str, Any] = {
    'd_max': 3,
    'window': 64,
    'max_steps': 1000000,
    'preprocess_rounds': 100,
    'seed': 0,
    'max_unroll': 4096,
    'max_doubling': 64,
}

DEFAULT_SHELL_CONFIG: Dict[str, Any] = {
    'group': 'free:a,b',
    'json': False,
    'prompt': 'ext> ',
}


class ConfigLoader:
    """Load and manage engine configuration"""

    @staticmethod
    def load_config(config_path: str = None) -> Dict[str, Any]:
        """Load configuration from JSON file"""
        if config_path is None:
            # Default to extwords_config.json in the root directory
            config_path = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'extwords_config.json')

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                config = json.load(f)
            logger.info(f"Configuration loaded from {config_path}")
            return config
        except FileNotFoundError:
            logger.error(f"Configuration file not found: {config_path}")
            return {}
        except json.JSONDecodeError as e:
            logger.error(f"Invalid JSON in configuration file: {e}")
            return {}
        except Exception as e:
            logger.error(f"Error loading configuration: {e}")
            return {}

    @staticmethod
    def get_engine_config(config_path: str = None) -> Dict[str, Any]:
        """Get engine caps and limits, defaults overlaid with the file"""
        config = ConfigLoader.load_config(config_path)
        merged = dict(DEFAULT_ENGINE_CONFIG)
        merged.update(config.get('engine', {}))
        return merged

    @staticmethod
    def get_shell_config(config_path: str = None) -> Dict[str, Any]:
        """Get shell defaults (base group, output mode, prompt)"""
        config = ConfigLoader.load_config(config_path)
        merged = dict(DEFAULT_SHELL_CONFIG)
        merged.update(config.get('shell', {}))
        return merged
