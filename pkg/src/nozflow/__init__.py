"""Steady 2D supersonic potential-flow solver for expanding nozzles.

Marches the flow in the potential-stream plane by the method of
characteristics, detects shock and vacuum formation, continues past the
first vacuum point as a free-boundary problem, and evaluates closed-form
design criteria.
"""

__version__ = "0.1.0"

from .gasdyn import GasModel

__all__ = ["GasModel", "__version__"]
