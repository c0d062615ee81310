"""
Memristive synapse and spike-timing-dependent plasticity.
"""

import math
from typing import Callable, Iterable, List, Optional, Sequence

from loguru import logger

from ..models import MemristorState, SpikePair, StdpParams, SynapseWeight
from .errors import DeviceSaturationError

WeightHook = Callable[[SynapseWeight], SynapseWeight]


def memristance_ratio(state: MemristorState) -> float:
    """M_T / R_0, the square root of the radicand."""
    radicand = state.radicand
    if radicand < 0:
        raise DeviceSaturationError(state.flux, radicand)
    return math.sqrt(radicand)


def memristance(state: MemristorState) -> float:
    """M_T = R_0 * sqrt(1 - 2*eta*delta_R*phi / (Q_0*R_0^2)) in ohm."""
    return state.r0 * memristance_ratio(state)


def with_flux(state: MemristorState, flux: float) -> MemristorState:
    """Snapshot of `state` at another accumulated flux."""
    return MemristorState.model_validate({**state.model_dump(), "flux": flux})


def flux_sweep(state: MemristorState, flux_values: Iterable[float]) -> List[float]:
    """Memristance at each flux value, in order."""
    resistances = []
    for index, flux in enumerate(flux_values):
        try:
            resistances.append(memristance(with_flux(state, flux)))
        except DeviceSaturationError as e:
            raise DeviceSaturationError(e.flux, e.radicand, index=index) from None
    logger.debug(f"Swept {len(resistances)} flux values")
    return resistances


def _signum(value: float) -> int:
    return (value > 0) - (value < 0)


def stdp_delta(pair: SpikePair, params: StdpParams) -> float:
    """mu * sgn(t_post - t_pre) * exp(-|t_post - t_pre| / tau_d); zero for simultaneous spikes."""
    interval = pair.t_post - pair.t_pre
    sign = _signum(interval)
    if sign == 0:
        return 0.0
    return params.mu * sign * math.exp(-abs(interval) / params.tau_d)


def apply_stdp(w: SynapseWeight, pair: SpikePair, params: StdpParams) -> SynapseWeight:
    """w + delta_w, unclipped."""
    return SynapseWeight(w=w.w + stdp_delta(pair, params))


def clamp_unit_interval(w: SynapseWeight) -> SynapseWeight:
    """Post-hook clamping the weight to [0, 1]."""
    return SynapseWeight(w=min(1.0, max(0.0, w.w)))


def weight_trajectory(
    w0: SynapseWeight,
    pairs: Sequence[SpikePair],
    params: StdpParams,
    clamp: Optional[WeightHook] = None,
) -> List[SynapseWeight]:
    """Weights after each update, starting with w0 itself."""
    trajectory = [w0]
    weight = w0
    for pair in pairs:
        weight = apply_stdp(weight, pair, params)
        if clamp is not None:
            weight = clamp(weight)
        trajectory.append(weight)
    return trajectory
