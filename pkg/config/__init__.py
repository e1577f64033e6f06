"""Settings, run specs and tagged logging."""

from .console import log, progress, set_verbose, is_verbose
from .loader import (
    ConfigError,
    RunSpecError,
    Settings,
    SettingsLoader,
    load_settings,
    ModuleSpec,
    LiftSpec,
    RunSpec,
    load_run_spec,
    NAMED_ELEMENTS,
)

__all__ = [
    'log', 'progress', 'set_verbose', 'is_verbose',
    'ConfigError', 'RunSpecError', 'Settings', 'SettingsLoader', 'load_settings',
    'ModuleSpec', 'LiftSpec', 'RunSpec', 'load_run_spec', 'NAMED_ELEMENTS',
]
