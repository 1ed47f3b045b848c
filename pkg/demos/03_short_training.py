"""
A short hierarchical training run
=================================

Trains h-IL and the flat IL-DQN baseline on the Room task with a shrunken
schedule so it finishes in about a minute, then draws both learning curves
into one SVG. The schedule is far too short to learn the task; the
acceptance runs use the full one.
"""

from pathlib import Path

from hmarl.config import ExperimentConfig
from hmarl.harness import evaluate_recent, run_suite
from hmarl.plot import plot_aggregates

out = Path("demo_results")
short = dict(task="Room", episodes=150, trials=2, warmup_updates=500,
             eps_high_updates=1000, eps_low_updates=1000)
configs = [ExperimentConfig.for_architecture("h-IL", **short),
           ExperimentConfig.for_architecture("IL-DQN", **short)]

results = run_suite(configs, parallelism=1, out_dir=out)
for res in results:
    for m in res.succeeded:
        reward, steps = evaluate_recent(m)
        print(f"{res.config.name:>7} seed {m.seed}: recent reward {reward:.2f}, "
              f"steps {steps:.1f}, high-level updates {m.updates_high}")

svg = plot_aggregates([out / c.name / "aggregate.csv" for c in configs], out / "curves.svg",
                      title="Room, shortened schedule")
print("wrote", svg)
