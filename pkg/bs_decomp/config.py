"""
Configuration management for bs-decomp.

This module provides utilities for loading engine and sweep settings from
JSON or YAML files and from the environment.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

logger = logging.getLogger(__name__)

JOBS_ENV_VAR = "BS_DECOMP_JOBS"


class EngineConfig:
    """
    Configuration manager for computations and sweeps.

    This class handles loading, validating, and providing access to
    configuration settings.
    """

    DEFAULT_CONFIG = {
        # Parallelism
        "jobs": None,
        "chunk_size": 1,

        # Logging
        "log_level": "WARNING",
        "configure_logging": True,

        # Sweep defaults
        "codim": 3,
        "max_degree": 6,
        "next_range": 5,
        "sweep_out": None,

        # Output
        "json_indent": 2,
    }

    def __init__(self, config_dict: Optional[Dict[str, Any]] = None):
        """
        Initialize a new configuration.

        Args:
            config_dict: Optional dictionary with configuration values
        """
        self._config = self.DEFAULT_CONFIG.copy()

        if config_dict:
            self.update(config_dict)

    def update(self, config_dict: Dict[str, Any]) -> None:
        """
        Update configuration with values from the given dictionary.

        None values are ignored so unset command-line options keep the defaults.
        """
        for key, value in config_dict.items():
            if value is not None:
                self._config[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        return self._config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        self._config[key] = value

    def as_dict(self) -> Dict[str, Any]:
        return self._config.copy()

    @property
    def jobs(self) -> int:
        """Worker count, falling back to the CPU count."""
        return int(self._config.get("jobs") or os.cpu_count() or 1)

    def load_from_file(self, file_path: Union[str, Path]) -> None:
        """
        Load configuration from a file.

        Supports JSON and YAML file formats, determined by file extension.

        Args:
            file_path: Path to the configuration file

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If the file format is not supported or the content is not a mapping
        """
        file_path = Path(file_path)

        if not file_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {file_path}")

        with open(file_path, "r", encoding="utf-8") as f:
            if file_path.suffix.lower() == ".json":
                config_data = json.load(f)
            elif file_path.suffix.lower() in (".yaml", ".yml"):
                config_data = yaml.safe_load(f)
            else:
                raise ValueError(f"Unsupported configuration file format: {file_path.suffix}")

        if config_data is None:
            config_data = {}
        if not isinstance(config_data, dict):
            raise ValueError(f"Configuration file {file_path} does not contain a mapping")

        self.update(config_data)
        logger.info(f"Loaded configuration from {file_path}")

    def save_to_file(self, file_path: Union[str, Path], format: str = "json") -> None:
        """
        Save configuration to a file.

        Args:
            file_path: Path to save the configuration to
            format: File format ("json" or "yaml")

        Raises:
            ValueError: If the format is not supported
        """
        file_path = Path(file_path)
        os.makedirs(file_path.parent, exist_ok=True)

        if format.lower() == "json":
            with open(file_path, "w", encoding="utf-8") as f:
                json.dump(self._config, f, indent=2)
        elif format.lower() in ("yaml", "yml"):
            with open(file_path, "w", encoding="utf-8") as f:
                yaml.safe_dump(self._config, f, default_flow_style=False)
        else:
            raise ValueError(f"Unsupported configuration format: {format}")

    def apply_environment(self, environ: Optional[Dict[str, str]] = None) -> None:
        """Apply BS_DECOMP_JOBS from the environment if it holds a positive integer."""
        environ = os.environ if environ is None else environ
        raw = environ.get(JOBS_ENV_VAR)
        if raw is None:
            return
        try:
            jobs = int(raw)
        except ValueError:
            jobs = 0
        if jobs < 1:
            logger.warning(f"Ignoring {JOBS_ENV_VAR}={raw!r}: not a positive integer")
            return
        self._config["jobs"] = jobs


def find_config_file(start_dir: Union[str, Path] = None) -> Optional[Path]:
    """
    Find a configuration file in the given directory or its parents.

    Looks for files named "bs_decomp.json", "bs_decomp.yaml", etc.

    Args:
        start_dir: Directory to start searching from (defaults to current directory)

    Returns:
        Path to the configuration file, or None if not found
    """
    current_dir = Path.cwd() if start_dir is None else Path(start_dir)

    config_names = [
        "bs_decomp.json",
        "bs_decomp.yaml",
        "bs_decomp.yml",
        ".bs_decomp.json",
        ".bs_decomp.yaml",
        ".bs_decomp.yml",
    ]

    while True:
        for name in config_names:
            config_path = current_dir / name
            if config_path.exists():
                return config_path
        if current_dir == current_dir.parent:
            return None
        current_dir = current_dir.parent


def load_config(
    config_path: Optional[Union[str, Path]] = None,
    search_parents: bool = True,
    environ: Optional[Dict[str, str]] = None,
) -> EngineConfig:
    """
    Load a configuration from a file, the environment, or the defaults.

    An explicitly given file must exist; otherwise parent directories are
    searched when search_parents is set.

    Args:
        config_path: Path to the configuration file (optional)
        search_parents: Whether to search parent directories for config files
        environ: Environment mapping (defaults to os.environ)

    Returns:
        EngineConfig object with loaded configuration
    """
    config = EngineConfig()

    if config_path:
        config.load_from_file(config_path)
    elif search_parents:
        found_path = find_config_file()
        if found_path:
            try:
                config.load_from_file(found_path)
            except ValueError as e:
                logger.warning(f"Ignoring configuration file {found_path}: {e}")

    config.apply_environment(environ)
    return config
