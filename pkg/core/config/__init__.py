"""Configuration module: caps, budgets and logging defaults."""

from .settings import (
    Settings,
    SettingsBuilder,
    SettingsLoader,
    get_settings,
    override_settings,
    reload_settings,
    reset_settings,
)

__all__ = [
    "Settings",
    "SettingsBuilder",
    "SettingsLoader",
    "get_settings",
    "override_settings",
    "reload_settings",
    "reset_settings",
]
