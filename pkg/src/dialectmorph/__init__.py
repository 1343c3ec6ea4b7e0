"""Multi-dialect Arabic morphological disambiguation engine.

Subpackages cover the whole pipeline: script utilities, morphological
databases, out-of-context analysis, contextual tagging and ranking,
dialect identification, orchestration, and an HTTP service.
"""

__version__ = '0.1.0'
