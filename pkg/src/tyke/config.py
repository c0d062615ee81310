"""
Configuration management for Tyke.

Every default below is the value used in the published listings and
evaluation. Precedence: command-line flags > config file > these defaults.
Environment variables are not read.
"""

import json
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from loguru import logger
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .core.errors import InputParseError
from .core.planck import constants_for
from .models import (
    BiasSign,
    ConstantsPreset,
    EvalConfig,
    MemristorState,
    OutputFormat,
    PhysicalConstants,
    PlanckVariant,
    StdpParams,
    TrainConfig,
    TransformParams,
    WavelengthGrid,
)


class Settings(BaseSettings):
    """Resolved run configuration."""

    model_config = SettingsConfigDict(extra="forbid", validate_default=True, allow_inf_nan=False)

    log_level: str = Field(default="WARNING", description="loguru level for stderr diagnostics")

    # Physical constants
    constants: ConstantsPreset = Field(default=ConstantsPreset.LISTING)
    h: Optional[float] = Field(default=None, gt=0, description="Planck constant override")
    c: Optional[float] = Field(default=None, gt=0, description="Speed of light override")
    k: Optional[float] = Field(default=None, gt=0, description="Boltzmann constant override")

    # Wavelength grid: 1e-9:10e-9:3000e-9
    lambda_start: float = Field(default=1e-9, gt=0)
    lambda_step: float = Field(default=10e-9, gt=0)
    count: int = Field(default=300, ge=1)
    variant: PlanckVariant = Field(default=PlanckVariant.ENERGY_DENSITY)

    # Temperatures: curve triple and the 4500:500:7500 spike loop
    planck_temperatures: Tuple[float, ...] = Field(default=(4500.0, 6000.0, 7500.0), min_length=1)
    train_temperatures: Tuple[float, ...] = Field(
        default=(4500.0, 5000.0, 5500.0, 6000.0, 6500.0, 7000.0, 7500.0), min_length=1
    )

    # Intensity-to-potential transform (never given numerically, A/I = 1)
    area: float = Field(default=1.0, gt=0)
    current: float = Field(default=1.0, gt=0)

    # Resistance ladder; the charge has no default on purpose
    n_min: int = Field(default=1, ge=1)
    n_max: int = Field(default=5, ge=1)
    charge: Optional[float] = Field(default=None)

    # STDP
    mu: float = Field(default=0.1)
    tau_d: float = Field(default=0.01, gt=0)
    w0: float = Field(default=0.5)
    clamp: bool = Field(default=False, description="Clamp weights to [0, 1] after each update")
    pairs: Optional[str] = Field(default=None, description="CSV of t_post_s,t_pre_s pairs")

    # Memristor sweep
    r0: float = Field(default=100.0, gt=0)
    eta: BiasSign = Field(default=BiasSign.POSITIVE)
    delta_r: float = Field(default=50.0, ge=0)
    q0: float = Field(default=1.0, gt=0)
    flux_start: float = Field(default=0.0)
    flux_step: float = Field(default=1.0)
    flux_count: int = Field(default=100, ge=0)

    # Matched-point evaluation
    t0: float = Field(default=3.3357e-18, ge=0)
    t_max: float = Field(default=9.9770e-15)
    dt: float = Field(default=3.3357e-17, gt=0)
    tolerance: float = Field(default=1e-6, ge=0)
    threshold: float = Field(default=0.97)
    self_check: bool = Field(default=False)

    # Output
    output: Optional[str] = Field(default=None, description="Output path, '-' for stdout")
    format: OutputFormat = Field(default=OutputFormat.CSV)

    @classmethod
    def settings_customise_sources(
        cls, settings_cls, init_settings, env_settings, dotenv_settings, file_secret_settings
    ):
        return (init_settings,)

    @field_validator("planck_temperatures", "train_temperatures")
    @classmethod
    def _positive_temperatures(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(t <= 0 for t in value):
            raise ValueError("temperatures must be positive")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        # raises ValueError for names loguru does not know
        return logger.level(value.upper()).name

    def physical_constants(self) -> PhysicalConstants:
        """Preset constants with any individual overrides applied."""
        base = constants_for(self.constants)
        overrides = {name: getattr(self, name) for name in ("h", "c", "k") if getattr(self, name) is not None}
        return base.model_copy(update=overrides) if overrides else base

    def wavelength_grid(self) -> WavelengthGrid:
        return WavelengthGrid(start=self.lambda_start, step=self.lambda_step, count=self.count)

    def transform(self) -> TransformParams:
        return TransformParams(area=self.area, current=self.current)

    def train_config(self) -> TrainConfig:
        return TrainConfig(
            grid=self.wavelength_grid(),
            temperatures=self.train_temperatures,
            transform=self.transform(),
            variant=self.variant,
        )

    def eval_config(self) -> EvalConfig:
        return EvalConfig(t0=self.t0, t_max=self.t_max, dt=self.dt, tolerance=self.tolerance)

    def stdp_params(self) -> StdpParams:
        return StdpParams(mu=self.mu, tau_d=self.tau_d)

    def memristor_state(self) -> MemristorState:
        return MemristorState(r0=self.r0, eta=self.eta, delta_r=self.delta_r, q0=self.q0)

    def flux_values(self) -> list:
        return [self.flux_start + i * self.flux_step for i in range(self.flux_count)]

    def echo(self) -> Dict[str, Any]:
        """JSON-ready dump of the resolved settings, without the output path."""
        return self.model_dump(mode="json", exclude={"output"})


# Global settings instance with the built-in defaults
settings = Settings()


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a flat JSON key-value config document."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError(path, e.lineno, e.msg) from None
    if not isinstance(data, dict):
        raise InputParseError(path, 1, "config file must hold a single JSON object")
    for key, value in data.items():
        if isinstance(value, dict):
            raise InputParseError(path, 1, f"config key {key!r} must not be nested")
    return data


def load_settings(
    config_path: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    defaults: Optional[Mapping[str, Any]] = None,
) -> Settings:
    """Merge command defaults < config file < non-None flag overrides."""
    merged: Dict[str, Any] = dict(defaults or {})
    if config_path is not None:
        merged.update(read_config_file(config_path))
    if overrides:
        merged.update({key: value for key, value in overrides.items() if value is not None})
    return Settings(**merged)
