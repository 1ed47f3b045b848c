"""
A tour of the trash-collection gridworlds
=========================================

Two agents share a walled grid with cans and bins. Picking a can up and
putting it down on a bin pays the team 0.5; an episode ends when every can
is dumped or the horizon runs out.
"""

import numpy as np

from hmarl import envs
from hmarl.abstraction import goal_set, intrinsic_observation, target_cell

# reset gives the full state plus one observation per agent
state, obs = envs.reset("Room", seed=0)
print(envs.render_ascii(state))
print("observation channels per agent:", obs[0].channels.shape)

# the goal set is shared by every agent; navigation goals resolve to cells
for goal in goal_set("Room"):
    print(f"{goal.name:>20}  target for agent 0: {target_cell(goal, state, 0)}")

# walk agent 0 one step right and leave agent 1 idle
state, obs, reward, done = envs.step(state, [envs.RIGHT, envs.NOOP])
print(envs.render_ascii(state), "reward", reward, "done", done)

# the low level sees a reduced observation that also marks the goal target
goal = goal_set("Room")[0]
io = intrinsic_observation(obs[0], goal)
print("intrinsic observation:", io.channels.shape, "->", io.vector.size, "inputs")

# random joint actions until the episode ends
rng = np.random.default_rng(1)
total = 0.0
while not state.done:
    state, obs, reward, done = envs.step(state, rng.integers(0, 7, size=2))
    total += reward
print(f"random play: {state.step} steps, team reward {total}")
