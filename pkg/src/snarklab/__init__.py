"""snarklab: exact analysis and construction toolkit for cubic graphs.

Computes uncolourability measures (oddness, resistance), cyclic
connectivity and girth of cubic multigraphs; applies oddness-preserving
reductions; and generates snark families with machine-checkable
certificates.
"""

from .multigraph import (  # noqa: F401
    Circuit,
    GraphError,
    LoopError,
    MultiGraph,
    Network,
    enumerate_circuits,
    five_circuit_incidence,
    girth,
    validate,
)

__version__ = "0.1.0"
