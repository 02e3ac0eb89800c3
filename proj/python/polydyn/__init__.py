"""Exact arithmetic for polynomial dynamics.

Thin Python surface over the C++ core: field elements, polynomial systems,
Bottcher series, Green functions and canonical heights, pair-equivalence
certificates, transcendence-style decision procedures, and plane
endomorphism analysis. All results mirror the CLI's JSON reports.
"""

try:
    from . import _core
except ImportError:  # dev tree: the built module sits on PYTHONPATH directly
    import _core

__all__ = [n for n in dir(_core) if not n.startswith("_")]
globals().update({n: getattr(_core, n) for n in __all__})
__version__ = _core.version()
