"""Dual quaternion linear algebra, power-method eigensolver, and pose-graph SLAM."""

try:
    from ._dqmat import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # build-tree layout: extension next to this package on sys.path
    from _dqmat import *  # noqa: F401,F403

__version__ = "0.1.0"
