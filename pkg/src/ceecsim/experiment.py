"""Protocol x seed sweeps, CSV emission and figure rendering."""

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .baselines import ProtocolKind
from .config import ExperimentSpec
from .engine import SimulationResult, run_simulation

log = logging.getLogger(__name__)

ROUND_HEADER = [
    "round",
    "alive_total",
    "alive_normal",
    "alive_advance",
    "alive_super",
    "dead_total",
    "ch_count",
    "packets_to_bs",
    "total_residual_j",
]
SUMMARY_HEADER = ["protocol", "seed", "first_death_round", "last_death_round", "total_packets_to_bs",
                  "first_death_observed", "last_death_observed"]
PLOT_FILES = {
    "alive_total": "alive_nodes.svg",
    "dead_total": "dead_nodes.svg",
    "packets_to_bs": "packets_to_bs.svg",
    "ch_count": "ch_per_round.svg",
}


def round_csv_name(protocol: ProtocolKind, seed: int) -> str:
    return f"{protocol.value}_seed{seed}.csv"


def write_round_csv(result: SimulationResult, path: Path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(ROUND_HEADER)
        for m in result.per_round:
            writer.writerow([
                m.round,
                m.alive_total,
                m.alive_normal,
                m.alive_advance,
                m.alive_super,
                m.dead_total,
                m.ch_count,
                m.packets_to_bs,
                f"{m.total_residual:.9f}",
            ])


def write_summary_csv(results: list[SimulationResult], path: Path):
    def landmark(value):
        return "" if value is None else value

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SUMMARY_HEADER)
        for r in results:
            writer.writerow([
                r.protocol.value,
                r.config_echo.seed,
                landmark(r.first_death_round),
                landmark(r.last_death_round),
                r.total_packets_to_bs,
                int(r.first_death_observed),
                int(r.last_death_observed),
            ])


def _run(args):
    config, protocol = args
    return run_simulation(config, protocol)


def run_all(spec: ExperimentSpec, jobs: int = 1) -> list[SimulationResult]:
    """Every (protocol, seed) simulation, protocol-major, in spec order."""
    tasks = [(spec.config_for(seed), protocol) for protocol in spec.protocols for seed in spec.seeds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, tasks))
    return [_run(task) for task in tasks]


def run_experiment(spec: ExperimentSpec, jobs: int = 1) -> list[Path]:
    """Run the sweep and write its outputs; returns the written paths.

    Outputs: one per-round CSV per (protocol, seed), ``summary.csv`` and,
    with ``emit_plots``, four SVG figures overlaying the protocols.
    """
    out = Path(spec.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    results = run_all(spec, jobs)
    written = []
    for result in results:
        path = out / round_csv_name(result.protocol, result.config_echo.seed)
        write_round_csv(result, path)
        written.append(path)
        log.info(
            "%s seed %d: first death %s, last death %s",
            result.protocol.value,
            result.config_echo.seed,
            result.first_death_round,
            result.last_death_round,
        )
    summary = out / "summary.csv"
    write_summary_csv(results, summary)
    written.append(summary)
    if spec.emit_plots:
        from .plots import plot_metrics

        written.extend(plot_metrics(results, out))
    return written
