import os
import pathlib
import sys
from typing import Any, Dict, Optional, Tuple

import yaml
from platformdirs import user_config_dir

# Default configuration values
DEFAULT_CONFIG: Dict[str, Any] = {
    "truncation_depth": 0,  # 0 means "2r + 2" for the scheme at hand.
    "search_height": 50,  # Coefficient height for principal generator searches.
    "formal_precision": 0,  # 0 means "p^2 + 2" for formal group series.
    "enumeration_limit": 81,  # Largest |k (x) F| the Ext brute force accepts.
    "workers": 1,  # Thread count for verify-all; 1 runs checks inline.
    "output_format": "json",
    "include_timings": False,
    "verbose": False,
    "log_file": "",  # Empty string means no file logging.
}

ALLOWED_OUTPUT_FORMATS = ("json", "text")

# smallest accepted value of each integer setting
INT_MINIMUMS: Dict[str, int] = {
    "truncation_depth": 0,
    "search_height": 1,
    "formal_precision": 0,
    "enumeration_limit": 1,
    "workers": 1,
}


# Configuration file paths
USER_CONFIG_DIR = pathlib.Path(user_config_dir("honda_verify"))
USER_CONFIG_PATH = USER_CONFIG_DIR / "config.yaml"
LOCAL_CONFIG_PATH = pathlib.Path(".hondaverify.yaml")

# Source descriptions
SOURCE_DEFAULT = "application default"
SOURCE_USER_CONFIG = f"user global config file ({USER_CONFIG_PATH})"
SOURCE_LOCAL_CONFIG = f"local project config file ({LOCAL_CONFIG_PATH})"
SOURCE_ENV_VAR = "environment variable"
SOURCE_OVERRIDE = "runtime override"
SOURCE_CLI = "command-line argument"

ENV_VAR_PREFIX = "HONDA_VERIFY_"


def _coerce(key: str, value: Any) -> Any:
    """Cast ``value`` to the type of the default for ``key``."""
    expected = type(DEFAULT_CONFIG[key])
    if isinstance(value, expected) and not (
        expected is int and isinstance(value, bool)
    ):
        return value
    if expected is bool:
        return str(value).lower() in ("true", "1", "yes", "on")
    if expected is int:
        return int(value)
    if expected is float:
        return float(value)
    if value is None:
        return ""
    return str(value)


class Config:
    """Layered settings: defaults < user YAML < local YAML < env < CLI."""

    def __init__(self) -> None:
        self._config: Dict[str, Any] = {}
        self._sources: Dict[str, str] = {}

        self._load_defaults()
        self._load_file(USER_CONFIG_PATH, SOURCE_USER_CONFIG)
        self._load_file(LOCAL_CONFIG_PATH, SOURCE_LOCAL_CONFIG)
        self._load_env_vars()

    def _load_defaults(self) -> None:
        for key, value in DEFAULT_CONFIG.items():
            self._config[key] = value
            self._sources[key] = SOURCE_DEFAULT

    def _load_file(self, path: pathlib.Path, source: str) -> None:
        if not path.exists():
            return
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except Exception as e:
            print(f"Error loading config '{path}': {e}", file=sys.stderr)
            return
        if not data or not isinstance(data, dict):
            return
        for key, value in data.items():
            if key not in DEFAULT_CONFIG:
                continue
            try:
                self._config[key] = _coerce(key, value)
            except (TypeError, ValueError):
                print(
                    f"Warning: ignoring '{key}' from '{path}': cannot convert {value!r}.",
                    file=sys.stderr,
                )
                continue
            self._sources[key] = source

    def _load_env_vars(self) -> None:
        for key in DEFAULT_CONFIG:
            env_var_name = ENV_VAR_PREFIX + key.upper()
            raw = os.getenv(env_var_name)
            if raw is None:
                continue
            try:
                self._config[key] = _coerce(key, raw)
            except ValueError:
                print(
                    f"Warning: Could not cast env var {env_var_name} value '{raw}' to "
                    f"{type(DEFAULT_CONFIG[key]).__name__}. Keeping previous value.",
                    file=sys.stderr,
                )
                continue
            self._sources[key] = f"{SOURCE_ENV_VAR} ({env_var_name})"

    def get(self, key: str, default: Any = None) -> Any:
        return self._config.get(key, default)

    def get_all_keys(self) -> Tuple[str, ...]:
        """Return all known configuration keys."""

        return tuple(DEFAULT_CONFIG.keys())

    def set(self, key: str, value: Any, source: str = SOURCE_OVERRIDE) -> bool:
        """Set ``key`` and persist it to the user config file."""
        if key not in DEFAULT_CONFIG:
            allowed = ", ".join(sorted(self.get_all_keys()))
            print(
                f"Error: Configuration key '{key}' is not a recognized setting. Allowed keys are: {allowed}",
                file=sys.stderr,
            )
            return False

        try:
            value = _coerce(key, value)
        except ValueError:
            print(
                f"Error: Invalid value format for '{key}'. Cannot convert '{value}' to "
                f"{type(DEFAULT_CONFIG[key]).__name__}.",
                file=sys.stderr,
            )
            return False
        if key == "output_format" and value not in ALLOWED_OUTPUT_FORMATS:
            print(
                f"Error: output_format must be one of {', '.join(ALLOWED_OUTPUT_FORMATS)}.",
                file=sys.stderr,
            )
            return False
        if key in INT_MINIMUMS and value < INT_MINIMUMS[key]:
            print(
                f"Error: '{key}' must be at least {INT_MINIMUMS[key]}, got {value}.",
                file=sys.stderr,
            )
            return False

        self._config[key] = value
        self._sources[key] = source

        user_config_data: Dict[str, Any] = {}
        if USER_CONFIG_PATH.exists():
            try:
                with open(USER_CONFIG_PATH, "r", encoding="utf-8") as f:
                    loaded = yaml.safe_load(f)
                    if isinstance(loaded, dict):
                        user_config_data = loaded
            except Exception as e:
                print(f"Error reading user config before set: {e}", file=sys.stderr)

        user_config_data[key] = value

        try:
            USER_CONFIG_PATH.parent.mkdir(parents=True, exist_ok=True)
            with open(USER_CONFIG_PATH, "w", encoding="utf-8") as f:
                yaml.safe_dump(user_config_data, f, sort_keys=True)
            return True
        except Exception as e:
            print(f"Error writing to user config: {e}", file=sys.stderr)
            return False

    def get_with_source(self, key: str) -> Optional[Tuple[Any, str]]:
        if key in self._config:
            return self._config[key], self._sources.get(key, "Unknown")
        if key in DEFAULT_CONFIG:
            return DEFAULT_CONFIG[key], SOURCE_DEFAULT
        return None

    def get_all_with_sources(self) -> Dict[str, Tuple[Any, str]]:
        return {
            key: (
                self._config.get(key, DEFAULT_CONFIG[key]),
                self._sources.get(key, SOURCE_DEFAULT),
            )
            for key in DEFAULT_CONFIG
        }

    def update_from_cli(self, key: str, value: Any) -> None:
        """Apply a command-line override; ``None`` means "not given"."""
        if value is None or key not in DEFAULT_CONFIG:
            return
        self._config[key] = _coerce(key, value)
        self._sources[key] = SOURCE_CLI


__all__ = [
    "Config",
    "DEFAULT_CONFIG",
    "USER_CONFIG_PATH",
    "LOCAL_CONFIG_PATH",
    "ENV_VAR_PREFIX",
]
