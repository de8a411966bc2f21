"""
Configuration Management
Centralized configuration for the entire system.

Resolution order: class defaults < JSON config file < PLUSWELD_* environment
variables < command-line flags.
"""
import json
import os
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from core.context import ExecutionContext, SearchBudget
from core.errors import ConfigError


@dataclass(frozen=True)
class RunConfig:
    """Settings of one run after every layer has been applied"""
    max_nodes: int
    max_depth: int
    max_chords: Optional[int]
    enumeration_ceiling: int
    alternation: str
    fplus_mode: str
    log_level: str
    pretty_json: bool
    use_colors: bool

    @property
    def fplus_permissive(self) -> bool:
        return self.fplus_mode == "permissive"

    def budget(self) -> SearchBudget:
        return SearchBudget(self.max_nodes, self.max_depth, self.max_chords)

    def context(self) -> ExecutionContext:
        return ExecutionContext(
            alternation=self.alternation,
            fplus_permissive=self.fplus_permissive,
            budget=self.budget(),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class Config:
    """
    Application configuration.
    Single source of truth for all settings.
    """

    # Engine Configuration
    ENGINE_VERSION = "1.0.0"
    ENGINE_NAME = "Plusweld"

    # Search Budget
    MAX_NODES = 100_000
    MAX_DEPTH = 12
    MAX_CHORDS = None  # None: n + 2 of each input
    ENUMERATION_CEILING = 3

    # Conventions
    ALTERNATION = "cyclic"  # cyclic | linear
    FPLUS_MODE = "strict"   # strict | permissive

    # Output Configuration
    USE_COLORS = True
    PRETTY_JSON = False

    # Logging Configuration
    LOG_LEVEL = "WARNING"  # DEBUG | INFO | WARNING | ERROR | CRITICAL

    ENV_PREFIX = "PLUSWELD_"
    ENV_KEYS = {
        "MAX_NODES": "max_nodes",
        "MAX_DEPTH": "max_depth",
        "MAX_CHORDS": "max_chords",
        "ALTERNATION": "alternation",
        "FPLUS": "fplus_mode",
        "LOG_LEVEL": "log_level",
    }

    CHOICES = {
        "alternation": ("cyclic", "linear"),
        "fplus_mode": ("strict", "permissive"),
        "log_level": ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
    }

    @classmethod
    def to_dict(cls) -> Dict[str, Any]:
        """Export configuration as dictionary"""
        return {
            "engine": {
                "version": cls.ENGINE_VERSION,
                "name": cls.ENGINE_NAME
            },
            "budget": {
                "max_nodes": cls.MAX_NODES,
                "max_depth": cls.MAX_DEPTH,
                "max_chords": cls.MAX_CHORDS,
                "enumeration_ceiling": cls.ENUMERATION_CEILING
            },
            "conventions": {
                "alternation": cls.ALTERNATION,
                "fplus_mode": cls.FPLUS_MODE
            },
            "output": {
                "use_colors": cls.USE_COLORS,
                "pretty_json": cls.PRETTY_JSON
            },
            "logging": {
                "level": cls.LOG_LEVEL
            }
        }

    @classmethod
    def get(cls, key: str, default: Any = None) -> Any:
        """Get configuration value by key"""
        return getattr(cls, key.upper(), default)

    @classmethod
    def defaults(cls) -> RunConfig:
        return RunConfig(
            max_nodes=cls.MAX_NODES,
            max_depth=cls.MAX_DEPTH,
            max_chords=cls.MAX_CHORDS,
            enumeration_ceiling=cls.ENUMERATION_CEILING,
            alternation=cls.ALTERNATION,
            fplus_mode=cls.FPLUS_MODE,
            log_level=cls.LOG_LEVEL,
            pretty_json=cls.PRETTY_JSON,
            use_colors=cls.USE_COLORS,
        )

    @classmethod
    def resolve(cls,
                config_path: Optional[str] = None,
                env: Optional[Mapping[str, str]] = None,
                overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
        """
        Layer the configuration sources; None-valued overrides are ignored.

        Raises:
            ConfigError: unreadable file, unknown key or malformed value
        """
        config = cls.defaults()

        if config_path:
            config = cls._apply(config, cls._read_file(config_path), f"config file {config_path}")

        env = os.environ if env is None else env
        from_env = {field: env[cls.ENV_PREFIX + name]
                    for name, field in cls.ENV_KEYS.items() if cls.ENV_PREFIX + name in env}
        config = cls._apply(config, from_env, "environment")

        if overrides:
            config = cls._apply(config, {k: v for k, v in overrides.items() if v is not None}, "flags")

        # SearchBudget validates the budget fields
        config.budget()
        return config

    @staticmethod
    def _read_file(path: str) -> Dict[str, Any]:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}", path=path) from exc
        if not isinstance(data, dict):
            raise ConfigError(f"config file {path} must hold a JSON object", path=path)
        return {str(k).lower(): v for k, v in data.items()}

    @classmethod
    def _apply(cls, config: RunConfig, values: Mapping[str, Any], source: str) -> RunConfig:
        fields = set(config.to_dict())
        changes = {}
        for key, raw in values.items():
            if key not in fields:
                raise ConfigError(f"unknown setting {key!r} in {source}", key=key)
            changes[key] = cls._coerce(key, raw, source)
        return replace(config, **changes)

    @classmethod
    def _coerce(cls, key: str, raw: Any, source: str) -> Any:
        if key == "max_chords" and (raw is None or str(raw).strip().lower() in ("", "none", "null")):
            return None
        if key in ("max_nodes", "max_depth", "max_chords", "enumeration_ceiling"):
            if isinstance(raw, bool):
                raise ConfigError(f"{key} from {source} must be an integer, got {raw!r}", key=key)
            try:
                value = int(raw)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"{key} from {source} must be an integer, got {raw!r}",
                                  key=key) from exc
            if value < 0 or (value == 0 and key != "enumeration_ceiling"):
                raise ConfigError(f"{key} from {source} must be positive, got {value}", key=key)
            return value
        if key in ("pretty_json", "use_colors"):
            if isinstance(raw, bool):
                return raw
            text = str(raw).strip().lower()
            if text not in ("1", "0", "true", "false", "yes", "no"):
                raise ConfigError(f"{key} from {source} must be a boolean, got {raw!r}", key=key)
            return text in ("1", "true", "yes")
        value = str(raw).strip()
        if key == "log_level":
            value = value.upper()
        else:
            value = value.lower()
        if value not in cls.CHOICES[key]:
            raise ConfigError(f"{key} from {source} must be one of {cls.CHOICES[key]}, got {raw!r}",
                              key=key)
        return value
