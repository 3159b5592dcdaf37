"""
ordo - prioritized planning for multi-agent path finding.

``ordo.solver`` is the library (CBS, CBSw/P, PBS and the fixed-ordering
baselines, instance formats, oracles); ``ordo.bench`` is the command-line
experiment runner built on it.
"""

__version__ = "0.1.0"
