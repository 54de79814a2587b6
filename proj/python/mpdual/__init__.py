"""Exact multiparameter persistence duality: free complexes over F_p,
cone replacements, global duals and minimal free resolutions."""

try:
    from ._mpd import *  # noqa: F401,F403 (installed layout)
except ImportError:
    from _mpd import *  # noqa: F401,F403 (build tree on PYTHONPATH)
