"""YAML settings and JSON/YAML run-spec loading."""

import json
import os
import re
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import yaml

from .console import log, set_verbose


class ConfigError(Exception):
    """Base exception for configuration errors."""
    pass


class RunSpecError(ConfigError):
    """Invalid run spec; the message names the offending field."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field_name = field_name


@dataclass
class Settings:
    irrep_dimension_cap: int = 1000
    jacobi_exhaustive_max_dim: int = 133
    jacobi_samples: int = 100000
    seed: int = 7
    sl2_samples: int = 20
    cache_dir: Optional[str] = None
    verbose: bool = False

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Settings':
        modules = data.get('modules', {}) or {}
        jacobi = data.get('jacobi', {}) or {}
        verification = data.get('verification', {}) or {}
        defaults = cls()
        return cls(
            irrep_dimension_cap=int(modules.get('irrep_dimension_cap', defaults.irrep_dimension_cap)),
            jacobi_exhaustive_max_dim=int(jacobi.get('exhaustive_max_dim', defaults.jacobi_exhaustive_max_dim)),
            jacobi_samples=int(jacobi.get('samples', defaults.jacobi_samples)),
            seed=int(verification.get('seed', defaults.seed)),
            sl2_samples=int(verification.get('sl2_samples', defaults.sl2_samples)),
            cache_dir=data.get('cache_dir'),
            verbose=bool(data.get('verbose', False)),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class SettingsLoader:
    def __init__(self, config_path: Optional[str] = None):
        if config_path:
            self.config_path = Path(config_path)
        else:
            self.config_path = Path(__file__).parent / "settings.yaml"
        self._config: Dict[str, Any] = {}
        self.settings = Settings()

    def load(self) -> "SettingsLoader":
        if not self.config_path.exists():
            log("config", f"No settings file at {self.config_path}, using defaults")
        else:
            try:
                with open(self.config_path, 'r') as f:
                    self._config = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"Cannot parse {self.config_path}: {e}") from e
            self.settings = Settings.from_dict(self._config)
            log("config", f"Loaded settings from {self.config_path}")

        env_cache = os.environ.get("DNLIFT_CACHE_DIR")
        if env_cache:
            self.settings.cache_dir = env_cache
            log("config", f"Structure-table cache directory from environment: {env_cache}")
        if self.settings.verbose:
            set_verbose(True)
        return self


def load_settings(config_path: Optional[str] = None) -> Settings:
    return SettingsLoader(config_path).load().settings


ADJOINT = "adjoint"
VARIANTS = ("natural", "twisted")
NAMED_ELEMENTS = ("X'", "X''", "X'''", "Y'", "Y''", "H")
_GENERATOR_NAME = re.compile(r"^[XYH]_[1-8]$")
_SUPPORTED_AMBIENTS = {"E6": 6, "E7": 7, "E8": 8}

Coefficient = Union[str, Fraction]


@dataclass
class ModuleSpec:
    ambient: str
    highest_weight: Optional[Tuple[int, ...]] = None

    @property
    def is_adjoint(self) -> bool:
        return self.highest_weight is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ambient': self.ambient,
            'highest_weight': ADJOINT if self.is_adjoint else list(self.highest_weight),
        }


@dataclass
class LiftSpec:
    weight: Tuple[int, ...]
    element: Dict[str, Coefficient]
    params: Dict[str, Fraction] = field(default_factory=dict)

    def coefficient(self, name: str) -> Fraction:
        value = self.element[name]
        if isinstance(value, str):
            return self.params[value]
        return value

    def to_dict(self) -> Dict[str, Any]:
        return {
            'weight': list(self.weight),
            'element': {k: (v if isinstance(v, str) else str(v)) for k, v in self.element.items()},
            'params': {k: str(v) for k, v in self.params.items()},
        }


@dataclass
class RunSpec:
    """Module, embedding and optional lift descriptors for one run."""

    module: ModuleSpec
    source: str
    variant: str = "natural"
    lift: Optional[LiftSpec] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunSpec':
        if not isinstance(data, dict):
            raise RunSpecError("<root>", "expected a mapping")

        module_data = data.get('module')
        if not isinstance(module_data, dict):
            raise RunSpecError("module", "missing or not a mapping")
        ambient = str(module_data.get('ambient', data.get('ambient', ''))).upper()
        if ambient not in _SUPPORTED_AMBIENTS:
            raise RunSpecError("module.ambient", f"expected one of E6, E7, E8, got {ambient!r}")
        rank = _SUPPORTED_AMBIENTS[ambient]

        hw = module_data.get('highest_weight', ADJOINT)
        if hw == ADJOINT:
            highest_weight = None
        else:
            highest_weight = _int_tuple(hw, rank, "module.highest_weight")
            if any(c < 0 for c in highest_weight):
                raise RunSpecError("module.highest_weight", "weight must be dominant")

        source = str(data.get('source', f"D{rank - 1}")).upper()
        if source != f"D{rank - 1}":
            raise RunSpecError("source", f"{ambient} embeds D{rank - 1}, got {source!r}")

        variant = str(data.get('variant', 'natural')).lower()
        if variant not in VARIANTS:
            raise RunSpecError("variant", f"expected natural or twisted, got {variant!r}")

        lift = None
        if data.get('lift') is not None:
            lift = _parse_lift(data['lift'], rank - 1)

        return cls(ModuleSpec(ambient, highest_weight), source, variant, lift)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'module': self.module.to_dict(),
            'source': self.source,
            'variant': self.variant,
            'lift': self.lift.to_dict() if self.lift else None,
        }


def _int_tuple(value: Any, length: int, field_name: str) -> Tuple[int, ...]:
    if not isinstance(value, (list, tuple)) or len(value) != length:
        raise RunSpecError(field_name, f"expected a list of {length} integers")
    try:
        return tuple(int(v) for v in value)
    except (TypeError, ValueError) as e:
        raise RunSpecError(field_name, f"non-integer entry ({e})") from e


def _rational(value: Any, field_name: str) -> Fraction:
    if isinstance(value, bool):
        raise RunSpecError(field_name, "expected a rational number")
    try:
        return Fraction(str(value))
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise RunSpecError(field_name, f"expected a rational number ({e})") from e


def _parse_lift(data: Any, source_rank: int) -> LiftSpec:
    if not isinstance(data, dict):
        raise RunSpecError("lift", "expected a mapping")
    weight = _int_tuple(data.get('weight'), source_rank, "lift.weight")

    raw_params = data.get('params', {}) or {}
    if not isinstance(raw_params, dict):
        raise RunSpecError("lift.params", "expected a mapping of name to rational")
    params = {str(k): _rational(v, f"lift.params.{k}") for k, v in raw_params.items()}

    raw_element = data.get('element')
    if isinstance(raw_element, str):
        raw_element = {raw_element: next(iter(params)) if len(params) == 1 else 1}
    if not isinstance(raw_element, dict) or not raw_element:
        raise RunSpecError("lift.element", "expected a non-empty mapping of element name to coefficient")

    element: Dict[str, Coefficient] = {}
    for name, coeff in raw_element.items():
        name = str(name)
        if name not in NAMED_ELEMENTS and not _GENERATOR_NAME.match(name):
            raise RunSpecError(f"lift.element.{name}", "unknown element name")
        if isinstance(coeff, str) and coeff in params:
            element[name] = coeff
        elif isinstance(coeff, str) and re.match(r"^[A-Za-z_]\w*$", coeff):
            raise RunSpecError(f"lift.element.{name}", f"parameter {coeff!r} not in lift.params")
        else:
            element[name] = _rational(coeff, f"lift.element.{name}")
    return LiftSpec(weight, element, params)


def load_run_spec(path: Union[str, Path]) -> RunSpec:
    path = Path(path)
    if not path.exists():
        raise RunSpecError("<file>", f"no such spec file: {path}")
    try:
        with open(path, 'r') as f:
            if path.suffix.lower() == '.json':
                data = json.load(f)
            else:
                data = yaml.safe_load(f)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise RunSpecError("<file>", f"cannot parse {path}: {e}") from e
    spec = RunSpec.from_dict(data)
    log("config", f"Loaded run spec {path.name}: {spec.module.ambient} {spec.variant}")
    return spec
