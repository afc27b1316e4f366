"""
Configuration loader for the block decomposition engine.
Loads the shipped YAML data tables from the config directory.
"""

import yaml
from pathlib import Path
from typing import Dict, Any, Optional, Union

from config.settings import CUSPIDAL_TABLE_FILE, GOLDEN_EXAMPLES_FILE

DEFAULT_CONFIG_DIR = Path(__file__).resolve().parents[2] / "config"


class ConfigLoader:
    """simplified config loader - load yaml file to dict"""

    def __init__(self, config_dir: Union[str, Path] = DEFAULT_CONFIG_DIR):
        self.config_dir = Path(config_dir)

    def load_yaml(self, config_file_name: str) -> Dict[str, Any]:
        """load a yaml file from the config directory, or an explicit path"""
        config_file = Path(config_file_name)
        if not config_file.is_absolute() and not config_file.exists():
            config_file = self.config_dir / config_file_name

        if not config_file.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_file}")

        with open(config_file, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f)

        if not isinstance(config, dict):
            raise ValueError(f"Configuration file {config_file} must contain a mapping")
        return config

    def load_cuspidal_table(self, config_file_name: str = CUSPIDAL_TABLE_FILE) -> Dict[str, Any]:
        """load the cuspidal classification table"""
        return self.load_yaml(config_file_name)

    def load_golden_examples(self, config_file_name: str = GOLDEN_EXAMPLES_FILE) -> Dict[str, Any]:
        """load the golden decompositions and figure labels"""
        return self.load_yaml(config_file_name)


# global config loader instance
_config_loader: Optional[ConfigLoader] = None


def get_config_loader() -> ConfigLoader:
    """get global config loader instance"""
    global _config_loader
    if _config_loader is None:
        _config_loader = ConfigLoader()
    return _config_loader


def load_cuspidal_config(config_file_name: str = CUSPIDAL_TABLE_FILE) -> Dict[str, Any]:
    """convenient function - load cuspidal table config"""
    return get_config_loader().load_cuspidal_table(config_file_name)


def load_golden_config(config_file_name: str = GOLDEN_EXAMPLES_FILE) -> Dict[str, Any]:
    """convenient function - load golden example config"""
    return get_config_loader().load_golden_examples(config_file_name)
