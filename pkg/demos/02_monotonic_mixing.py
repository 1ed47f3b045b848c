"""
Monotonic mixing of per-agent values
====================================

The h-Qmix critic mixes per-agent goal values into one joint value with a
network whose weights come from hypernetworks of the state. Absolute values
on those weights keep the joint value non-decreasing in every agent's value,
so each agent's greedy goal also maximises the joint value.
"""

import itertools

import numpy as np

from hmarl.agents import QmixCritic

rng = np.random.default_rng(0)
obs_width, n_goals, n_agents = 8, 6, 2
critic = QmixCritic(obs_width, n_goals, n_agents, rng)
critic.net.params[...] = rng.normal(scale=0.5, size=critic.net.params.size)

joint = rng.normal(size=(n_agents, obs_width))
q = critic.agent_q(joint)[0]
print("per-agent values:\n", np.round(q, 3))

# raise agent 0's value and watch the joint value respond
base = q[:, 0].copy()
for bump in (0.0, 0.5, 1.0, 2.0):
    v = base.copy()
    v[0] += bump
    print(f"agent 0 value +{bump:.1f} -> joint {critic.mix_values(v[None], joint[:1])[0]:+.4f}")

# exhaustive search over joint goals agrees with the independent argmaxes
combos = list(itertools.product(range(n_goals), repeat=n_agents))
qtot = critic.qtot(np.repeat(joint[None], len(combos), axis=0), np.array(combos))
print("best joint goal:", combos[int(np.argmax(qtot))])
print("greedy per agent:", tuple(int(np.argmax(q[i])) for i in range(n_agents)))
