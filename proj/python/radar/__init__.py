"""Online learners with dynamic-regret guarantees on Riemannian manifolds."""

import csv
import io
import json

from ._core import (
    ConvergenceError,
    DomainError,
    Manifold,
    hedge_update,
    optimistic_hedge_weights,
    play_game,
    radar_initial_weights,
    verify,
    zeta,
)
from ._core import run_json as _run_json


def _parse_trace(text):
    rows = []
    for r in csv.DictReader(io.StringIO(text)):
        row = {k: float(v) for k, v in r.items() if k not in ("t", "bound_ok")}
        row["t"] = int(r["t"])
        row["bound_ok"] = r["bound_ok"] == "true"
        rows.append(row)
    return rows


def run(config, seed=None, reps=None):
    """Run a config (dict or JSON string). Returns one {"trace", "summary"} per repetition."""
    text = config if isinstance(config, str) else json.dumps(config)
    return [
        {"trace": _parse_trace(csv_text), "summary": json.loads(summary)}
        for csv_text, summary in _run_json(text, seed, reps)
    ]


__all__ = [
    "ConvergenceError",
    "DomainError",
    "Manifold",
    "hedge_update",
    "optimistic_hedge_weights",
    "play_game",
    "radar_initial_weights",
    "run",
    "verify",
    "zeta",
]
