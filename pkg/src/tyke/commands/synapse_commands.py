"""
STDP and memristor commands.
"""

import argparse
import csv
import logging
import math
from pathlib import Path
from typing import List, Union

from .base import BaseCommand, add_output_arguments
from .writers import PlotSeries, write_csv, write_json, write_svg
from ..config import Settings
from ..core.errors import InputParseError, ModelDomainError
from ..core.synapse import clamp_unit_interval, flux_sweep, stdp_delta, weight_trajectory
from ..models import BiasSign, CommandCategory, CommandResult, OutputFormat, SpikePair, SynapseWeight

logger = logging.getLogger(__name__)

PAIRS_HEADER = ["t_post_s", "t_pre_s"]


def read_spike_pairs(path: Union[str, Path]) -> List[SpikePair]:
    """Read a CSV of t_post_s,t_pre_s rows; the header row is optional."""
    pairs = []
    with open(path, "r", encoding="utf-8", newline="") as f:
        for line_number, row in enumerate(csv.reader(f), start=1):
            cells = [cell.strip() for cell in row]
            if not any(cells):
                continue
            if line_number == 1 and cells == PAIRS_HEADER:
                continue
            if len(cells) != 2:
                raise InputParseError(path, line_number, f"expected 2 columns, found {len(cells)}")
            try:
                t_post, t_pre = float(cells[0]), float(cells[1])
            except ValueError:
                raise InputParseError(path, line_number, f"not a number in {','.join(cells)!r}") from None
            if not (math.isfinite(t_post) and math.isfinite(t_pre)):
                raise InputParseError(path, line_number, "spike times must be finite")
            pairs.append(SpikePair(t_post=t_post, t_pre=t_pre))
    logger.debug(f"Read {len(pairs)} spike pairs from {path}")
    return pairs


class StdpCommand(BaseCommand):
    """Apply the STDP rule to a file of spike pairs."""

    def __init__(self):
        super().__init__(
            name="stdp",
            category=CommandCategory.SYNAPSE,
            description="Apply STDP updates from a spike-pair file and emit the weight trajectory",
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--pairs", default=None, help="CSV file with t_post_s,t_pre_s rows")
        parser.add_argument("--mu", type=float, default=None, help="Learning rate (default: 0.1)")
        parser.add_argument("--tau-d", type=float, default=None, help="Reference delay in s (default: 0.01)")
        parser.add_argument("--w0", type=float, default=None, help="Initial weight (default: 0.5)")
        parser.add_argument(
            "--clamp", action="store_const", const=True, default=None, help="Clamp weights to [0, 1]"
        )
        add_output_arguments(parser, self.formats, self.default_format)

    def _execute(self, settings: Settings) -> CommandResult:
        if settings.pairs is None:
            raise ModelDomainError("stdp needs --pairs")
        pairs = read_spike_pairs(settings.pairs)
        params = settings.stdp_params()
        hook = clamp_unit_interval if settings.clamp else None
        trajectory = weight_trajectory(SynapseWeight(w=settings.w0), pairs, params, clamp=hook)
        deltas = [0.0] + [stdp_delta(pair, params) for pair in pairs]
        weights = [w.w for w in trajectory]
        output = self.default_output(settings)

        if settings.format is OutputFormat.CSV:
            rows = [(event, delta, w) for event, (delta, w) in enumerate(zip(deltas, weights))]
            path = write_csv(output, ["event", "delta_w", "w"], rows)
        elif settings.format is OutputFormat.JSON:
            path = write_json(output, {
                "config": settings.echo(),
                "pairs": [{"t_post_s": p.t_post, "t_pre_s": p.t_pre} for p in pairs],
                "delta_w": deltas[1:],
                "w": weights,
            })
        else:
            series = [PlotSeries(label="w", xs=[float(i) for i in range(len(weights))], ys=weights)]
            path = write_svg(output, series, "Synaptic Weight Trajectory", "Event", "Weight")

        return CommandResult(
            command=self.name,
            outputs=[path],
            summary={"events": len(pairs), "final_w": weights[-1]},
        )


class MemristorCommand(BaseCommand):
    """Sweep the memristance law over a flux grid."""

    def __init__(self):
        super().__init__(
            name="memristor",
            category=CommandCategory.SYNAPSE,
            description="Evaluate memristance over a grid of flux values",
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--r0", type=float, default=None, help="Initial resistance in ohm (default: 100)")
        parser.add_argument(
            "--eta", type=int, choices=[int(sign) for sign in BiasSign], default=None, help="Bias sign (default: 1)"
        )
        parser.add_argument("--delta-r", type=float, default=None, help="R_max - R_min in ohm (default: 50)")
        parser.add_argument("--q0", type=float, default=None, help="Charge capacity in C (default: 1)")
        parser.add_argument("--flux-start", type=float, default=None, help="First flux in Wb (default: 0)")
        parser.add_argument("--flux-step", type=float, default=None, help="Flux step in Wb (default: 1)")
        parser.add_argument("--flux-count", type=int, default=None, help="Number of flux values (default: 100)")
        add_output_arguments(parser, self.formats, self.default_format)

    def _execute(self, settings: Settings) -> CommandResult:
        state = settings.memristor_state()
        fluxes = settings.flux_values()
        resistances = flux_sweep(state, fluxes)
        ratios = [resistance / state.r0 for resistance in resistances]
        output = self.default_output(settings)

        if settings.format is OutputFormat.CSV:
            path = write_csv(output, ["flux_wb", "memristance_ohm", "ratio"], zip(fluxes, resistances, ratios))
        elif settings.format is OutputFormat.JSON:
            path = write_json(output, {
                "config": settings.echo(),
                "flux_wb": fluxes,
                "memristance_ohm": resistances,
                "ratio": ratios,
            })
        else:
            series = [PlotSeries(label=f"eta = {int(state.eta)}", xs=fluxes, ys=resistances)]
            path = write_svg(output, series, "Memristance vs Flux", "Flux (Wb)", "Memristance (ohm)")

        return CommandResult(command=self.name, outputs=[path], summary={"points": len(fluxes)})
