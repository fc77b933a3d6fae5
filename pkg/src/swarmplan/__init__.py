"""Hierarchical unlabeled multi-robot motion planning.

A graph-attention subgoal planner trained by imitation of a Hungarian
assignment expert, executed through a QP-based predictive safety
controller, with a discrete-event decentralized inference runtime.
"""

__version__ = "0.1.0"
