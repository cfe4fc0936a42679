"""Hamiltonian path index of graphs under iterated line graphs.

Graphs are immutable ``Graph`` objects; structured results come back as
plain dicts with the same layout as the command-line ``--json`` output.
"""
from ._core import *  # noqa: F401,F403
from ._core import HpidxError, CapExceeded, Graph, SearchBudget, __version__  # noqa: F401
