"""
Data models for Tyke.
"""

from enum import Enum, IntEnum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class PlanckVariant(str, Enum):
    """Prefactor variants of the Planck curve."""
    RADIANCE = "radiance"              # 2*pi*h*c^2 / lambda^5
    ENERGY_DENSITY = "energy_density"  # 8*pi*h*c / lambda^5


class ConstantsPreset(str, Enum):
    """Named sets of physical constants."""
    LISTING = "listing"
    PROSE = "prose"
    CODATA = "codata"


class BiasSign(IntEnum):
    """Memristor bias sign (eta)."""
    POSITIVE = 1
    NEGATIVE = -1


class OutputFormat(str, Enum):
    """Output file formats."""
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


class CommandCategory(str, Enum):
    """Command categories."""
    SPECTRUM = "spectrum"
    QUANTIZATION = "quantization"
    SYNAPSE = "synapse"
    SPIKES = "spikes"
    EVALUATION = "evaluation"


class ValueModel(BaseModel):
    """Immutable value type; NaN and infinities are rejected."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)


# Planck

class PhysicalConstants(ValueModel):
    """Physical constants in SI units. Defaults are the code-listing values."""
    h: float = Field(default=6.6261e-34, gt=0, description="Planck constant (J*s)")
    c: float = Field(default=2.9979e8, gt=0, description="Speed of light (m/s)")
    k: float = Field(default=1.3807e-23, gt=0, description="Boltzmann constant (J/K)")
    e_charge: float = Field(default=1.60218e-19, gt=0, description="Elementary charge (C)")


class WavelengthGrid(ValueModel):
    """Half-open wavelength grid: sample i sits at start + i*step."""
    start: float = Field(..., gt=0, description="First wavelength (m)")
    step: float = Field(..., gt=0, description="Wavelength spacing (m)")
    count: int = Field(..., ge=1, description="Number of samples")

    def wavelength(self, index: int) -> float:
        """Wavelength of sample `index`."""
        return self.start + index * self.step


class PlanckCurve(ValueModel):
    """Sampled Planck curve."""
    grid: WavelengthGrid
    temperature: float = Field(..., gt=0, description="Temperature (K)")
    variant: PlanckVariant
    values: Tuple[float, ...] = Field(..., description="Intensity samples, one per grid point")

    @model_validator(mode="after")
    def _check_length(self) -> "PlanckCurve":
        if len(self.values) != self.grid.count:
            raise ValueError(f"curve has {len(self.values)} values for a grid of {self.grid.count}")
        return self


class OscillatorEnergy(ValueModel):
    """Energy of a Planck oscillator, E = n*h*nu."""
    n: int = Field(..., ge=1, description="Quantum number")
    frequency: float = Field(..., gt=0, description="Frequency (Hz)")
    energy: float = Field(..., description="Energy (J)")


# Quantization

MAX_QUANTUM_NUMBER = 2 ** 53 - 1


class QuantumResistor(ValueModel):
    """A rung of the resistance ladder R = n*h/Q^2."""
    n: int = Field(..., ge=1, le=MAX_QUANTUM_NUMBER, description="Quantum number")
    charge: float = Field(..., description="Charge Q (C), nonzero")
    resistance: float = Field(..., description="Resistance (ohm)")

    @field_validator("charge")
    @classmethod
    def _nonzero_charge(cls, value: float) -> float:
        if value == 0:
            raise ValueError("charge must be nonzero")
        return value


class DerivationTrace(ValueModel):
    """Every intermediate quantity of the resistance derivation."""
    n: int = Field(..., ge=1)
    frequency: float = Field(..., gt=0, description="Oscillator frequency (Hz)")
    power: float = Field(..., description="P = E/t (W)")
    energy: float = Field(..., description="E = n*h*nu (J)")
    time: float = Field(..., gt=0, description="Duration t (s)")
    current: float = Field(..., gt=0, description="Current I (A)")
    voltage: float = Field(..., description="V = I*R (V)")
    resistance: float = Field(..., description="R = P/I^2 (ohm)")


class TykePotential(ValueModel):
    """Potential across the smallest quantized resistance."""
    current: float = Field(..., description="Current (A)")
    charge: float = Field(..., description="Charge Q (C), nonzero")
    potential: float = Field(..., description="Potential (V)")


# Synapse

class MemristorState(ValueModel):
    """Snapshot of a flux-controlled memristor.

    The radicand of the memristance law is not checked here: a state past the
    device range is representable, evaluating it raises a saturation error.
    """
    r0: float = Field(..., gt=0, description="Initial resistance (ohm)")
    eta: BiasSign = Field(..., description="Bias sign")
    delta_r: float = Field(..., ge=0, description="R_max - R_min (ohm)")
    q0: float = Field(..., gt=0, description="Charge capacity (C)")
    flux: float = Field(default=0.0, description="Accumulated flux (Wb)")

    @property
    def radicand(self) -> float:
        """1 - 2*eta*delta_r*flux / (q0*r0^2)."""
        return 1.0 - 2.0 * int(self.eta) * self.delta_r * self.flux / (self.q0 * self.r0 ** 2)


class StdpParams(ValueModel):
    """STDP constants."""
    mu: float = Field(..., description="Learning rate")
    tau_d: float = Field(..., gt=0, description="Reference time delay (s)")


class SynapseWeight(ValueModel):
    """Synaptic weight w_ij."""
    w: float


class SpikePair(ValueModel):
    """Post- and pre-synaptic spike times (s)."""
    t_post: float
    t_pre: float


# Spike trains

class TransformParams(ValueModel):
    """Area and current of the intensity-to-potential transform."""
    area: float = Field(default=1.0, gt=0, description="Area A (m^2)")
    current: float = Field(default=1.0, gt=0, description="Current I (A)")


class TrainSegment(ValueModel):
    """One transformed Planck curve inside a spike train."""
    start_index: int = Field(..., ge=0)
    length: int = Field(..., ge=1)
    temperature: float = Field(..., gt=0, description="Temperature (K)")


class SpikeTrain(ValueModel):
    """Zero prefix followed by one segment per temperature."""
    sample_period: float = Field(..., gt=0, description="Seconds between samples")
    potentials: Tuple[float, ...]
    segments: Tuple[TrainSegment, ...]
    prefix_length: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _check_structure(self) -> "SpikeTrain":
        expected = self.prefix_length + sum(segment.length for segment in self.segments)
        if len(self.potentials) != expected:
            raise ValueError(f"train has {len(self.potentials)} samples, structure needs {expected}")
        if any(value != 0.0 for value in self.potentials[:self.prefix_length]):
            raise ValueError("zero prefix contains nonzero samples")
        position = self.prefix_length
        for segment in self.segments:
            if segment.start_index != position:
                raise ValueError(f"segment starts at {segment.start_index}, expected {position}")
            position += segment.length
        return self

    def segment_values(self, index: int) -> Tuple[float, ...]:
        """Samples of segment `index` (0 is the zero prefix)."""
        if index == 0:
            return self.potentials[:self.prefix_length]
        segment = self.segments[index - 1]
        return self.potentials[segment.start_index:segment.start_index + segment.length]


class TrainConfig(ValueModel):
    """Spike-train generation settings."""
    grid: WavelengthGrid
    temperatures: Tuple[float, ...] = Field(..., min_length=1)
    transform: TransformParams = Field(default_factory=TransformParams)
    variant: PlanckVariant = PlanckVariant.ENERGY_DENSITY

    @field_validator("temperatures")
    @classmethod
    def _positive_temperatures(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(t <= 0 for t in value):
            raise ValueError("temperatures must be positive")
        return value


# Evaluation

class MatchReport(ValueModel):
    """Matched-point count between two potential sequences."""
    total: int = Field(..., ge=1)
    matched: int = Field(..., ge=0)
    fraction: float = Field(..., ge=0, le=1)
    tolerance: float = Field(..., ge=0)
    first_mismatch_index: Optional[int] = None
    segment_matches: Optional[Tuple[int, ...]] = None

    @model_validator(mode="after")
    def _check_counts(self) -> "MatchReport":
        if self.matched > self.total:
            raise ValueError("matched exceeds total")
        if self.fraction != self.matched / self.total:
            raise ValueError("fraction must equal matched/total")
        return self


class SegmentComparison(ValueModel):
    """Model and reference potentials of one evaluated segment."""
    temperature: float
    model: Tuple[float, ...]
    reference: Tuple[float, ...]
    report: MatchReport


class EvalConfig(ValueModel):
    """Time grid and tolerance for the matched-point evaluation."""
    t0: float = Field(default=3.3357e-18, ge=0, description="First sample time (s)")
    t_max: float = Field(default=9.9770e-15, description="Last sample time (s)")
    dt: float = Field(default=3.3357e-17, gt=0, description="Time step (s)")
    tolerance: float = Field(default=1e-6, ge=0, description="Relative tolerance")

    @model_validator(mode="after")
    def _check_range(self) -> "EvalConfig":
        if not self.t0 < self.t_max:
            raise ValueError("t0 must be smaller than t_max")
        return self


# Commands

class CommandDefinition(BaseModel):
    """Command definition model."""
    name: str = Field(..., description="Subcommand name")
    category: CommandCategory = Field(..., description="Command category")
    description: str = Field(..., description="Command description")
    formats: List[OutputFormat] = Field(default_factory=list, description="Supported output formats")
    enabled: bool = Field(default=True, description="Whether the command is enabled")


class CommandResult(BaseModel):
    """Outcome of one command invocation."""
    command: str = Field(..., description="Subcommand name")
    exit_code: int = Field(default=0, description="Process exit code")
    outputs: List[str] = Field(default_factory=list, description="Files written")
    summary: Dict[str, Any] = Field(default_factory=dict, description="Headline numbers")
