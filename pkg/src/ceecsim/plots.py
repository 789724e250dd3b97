"""SVG figures of per-round metrics, one line per protocol.

With several seeds, each line is the per-round mean across seeds; runs that
ended early are padded with their final value (0 for the head count).
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .engine import SimulationResult  # noqa: E402

LABELS = {
    "alive_total": "Alive nodes",
    "dead_total": "Dead nodes",
    "packets_to_bs": "Packets to BS",
    "ch_count": "Cluster heads per round",
}


def _mean_series(results: list[SimulationResult], metric: str) -> np.ndarray:
    length = max(len(r.per_round) for r in results)
    rows = []
    for r in results:
        values = [getattr(m, metric) for m in r.per_round]
        fill = 0 if metric == "ch_count" or not values else values[-1]
        rows.append(values + [fill] * (length - len(values)))
    return np.mean(np.array(rows, dtype=float), axis=0)


def plot_metrics(results: list[SimulationResult], out_dir: Path) -> list[Path]:
    from .experiment import PLOT_FILES

    by_protocol: dict = {}
    for r in results:
        by_protocol.setdefault(r.protocol, []).append(r)

    written = []
    with plt.rc_context({"svg.hashsalt": "ceecsim"}):
        for metric, filename in PLOT_FILES.items():
            fig, ax = plt.subplots(figsize=(7, 4.5))
            for protocol, runs in by_protocol.items():
                if not any(r.per_round for r in runs):
                    continue
                series = _mean_series(runs, metric)
                ax.plot(np.arange(1, len(series) + 1), series, label=protocol.value.upper(), linewidth=1)
            ax.set_xlabel("Round")
            ax.set_ylabel(LABELS[metric])
            ax.legend()
            ax.grid(alpha=0.3)
            fig.tight_layout()
            path = Path(out_dir) / filename
            fig.savefig(path, format="svg", metadata={"Date": None})
            plt.close(fig)
            written.append(path)
    return written
