"""Mechanics toolkit for a tendon/pneumatic bidirectional-stiffening soft actuator.

Closed-form lateral stiffness of the curved backbone, pneumatic bending-moment
balance, constant-curvature kinematics, and least-squares reduction of
experimental stiffness data. All quantities are strict SI (m, N, Pa, rad)
unless an argument name says otherwise.
"""

from ._core import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
