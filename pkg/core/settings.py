"""Settings manager for persistent search configuration."""
import json
import logging
import os
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field

from config import (
    APP_NAME,
    BUDGET_ENV_VAR,
    DEFAULT_MAX_EDGES_2PAGE,
    DEFAULT_MAX_VERTICES_1PAGE,
    DEFAULT_MAX_VERTICES_2PAGE,
    DEFAULT_MAX_VERTICES_MATMULT,
    DEFAULT_THREADS,
)

logger = logging.getLogger(__name__)


class SearchLimits(BaseModel):
    """Caps and budget applied to every exact search."""

    max_vertices_1page: int = Field(DEFAULT_MAX_VERTICES_1PAGE, ge=1)
    max_vertices_2page: int = Field(DEFAULT_MAX_VERTICES_2PAGE, ge=1)
    max_edges_2page: int = Field(DEFAULT_MAX_EDGES_2PAGE, ge=0)
    max_vertices_matmult: int = Field(DEFAULT_MAX_VERTICES_MATMULT, ge=1)
    budget: Optional[int] = Field(None, ge=1)
    threads: int = Field(DEFAULT_THREADS, ge=1)


class Settings:
    """
    Manages persistent solver settings.
    Stores settings in a JSON file in the user's config directory.
    """

    def __init__(self, settings_dir: Optional[Path] = None):
        self._settings_dir = settings_dir or self._get_settings_dir()
        self._settings_file = self._settings_dir / "settings.json"
        self._settings = self._load_settings()

    def _get_settings_dir(self) -> Path:
        """Get the settings directory."""
        # Use AppData on Windows, ~/.config on Linux/Mac
        if os.name == 'nt':
            base = Path(os.environ.get('APPDATA', Path.home()))
        else:
            base = Path.home() / '.config'
        return base / APP_NAME

    def _load_settings(self) -> dict:
        """Load settings from file."""
        if self._settings_file.exists():
            try:
                with open(self._settings_file, 'r', encoding='utf-8') as f:
                    data = json.load(f)
                if isinstance(data, dict):
                    return data
                logger.warning("Ignoring %s: top level is not an object", self._settings_file)
            except (json.JSONDecodeError, IOError) as e:
                logger.warning("Could not read settings from %s: %s", self._settings_file, e)
        return {}

    def _save_settings(self) -> None:
        """Save settings to file."""
        try:
            self._settings_dir.mkdir(parents=True, exist_ok=True)
            with open(self._settings_file, 'w', encoding='utf-8') as f:
                json.dump(self._settings, f, indent=2)
        except IOError as e:
            logger.warning("Could not save settings: %s", e)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a setting value."""
        return self._settings.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """Set a setting value and save."""
        self._settings[key] = value
        self._save_settings()

    def delete(self, key: str) -> None:
        """Delete a setting."""
        if key in self._settings:
            del self._settings[key]
            self._save_settings()

    @property
    def budget(self) -> Optional[int]:
        """Default explored-configuration budget; the environment overrides the file."""
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw:
            try:
                return int(raw)
            except ValueError:
                logger.warning("Ignoring non-integer %s=%r", BUDGET_ENV_VAR, raw)
        return self.get('budget')

    @budget.setter
    def budget(self, value: Optional[int]) -> None:
        """Set the stored budget."""
        if value:
            self.set('budget', value)
        else:
            self.delete('budget')

    def search_limits(self, **overrides: Any) -> SearchLimits:
        """Build search limits from stored values, with explicit overrides winning."""
        values = {
            key: self.get(key)
            for key in SearchLimits.model_fields
            if self.get(key) is not None
        }
        budget = self.budget
        if budget is not None:
            values['budget'] = budget
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SearchLimits(**values)


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings
