"""A short speaker-listener comparison of MADDPG and transfer empowerment.

Trains both learners for a few hundred episodes with the same seed, prints
the final evaluation, and merges the two learning curves into
``comparison.csv`` / ``comparison.svg``. The same can be done from the
shell with ``socialemp train`` and ``socialemp compare``. It takes about a minute on one
CPU. 600 episodes is far too short for either learner to solve the task; the
script shows the workflow, not the final numbers.

    python3 demos/train_and_compare.py [output_dir]
"""
import sys
from pathlib import Path

from socialemp.harness import RunConfig, compare, train

out = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demo")
dirs = []
for algo in ("maddpg", "transfer_emp"):
    cfg = RunConfig(env="speaker_listener", algorithm=algo, episodes=600, eval_every=100,
                    eval_episodes=20, seed=0, output_dir=str(out / algo))
    s = train(cfg)
    m = s.final_metrics
    print(f"{algo:>12}: reward {m['reward']:+.3f}  reach {m['target_reach_pct']:.0f}%  "
          f"({s.wall_clock:.0f}s)")
    dirs.append(cfg.output_dir)

csv_path, svg_path = compare(dirs, out)
print(f"wrote {csv_path} and {svg_path}")
