"""Contextuality toolkit: empirical models over measurement scenarios, the
three-level contextuality hierarchy, quantum model generation, the logical
non-locality witness, and contextual entropy.

Structured inputs (models, states, menus, densities) are JSON text in the
same shapes the ``ctxlab`` command-line tool reads; small results come back
as plain dicts. The heavy lifting lives in the compiled ``_ctxlab`` module.
"""

import json as _json

try:
    from . import _ctxlab as _core  # installed layout: extension inside the package
except ImportError:  # pragma: no cover - build-tree layout
    import _ctxlab as _core

__version__ = _core.__version__

classify_model = _core.classify_model
analyze_model = _core.analyze_model
state_model = _core.state_model
classify_state = _core.classify_state
hardy_witness = _core.hardy_witness
von_neumann_entropy = _core.von_neumann_entropy
contextual_entropy = _core.contextual_entropy
reconstruct_state = _core.reconstruct_state
subadditivity_counterexample = _core.subadditivity_counterexample
random_violation_4d = _core.random_violation_4d
chapter3_suite = _core.chapter3_suite


def state(kind, **fields):
    """JSON text for a named state family, e.g. ``state("ghz", n=3)``."""
    payload = {"kind": kind}
    payload.update(fields)
    return _json.dumps(payload)


def pauli_menus(*menus):
    """JSON text for per-party menus of Pauli observables.

    ``pauli_menus("XY", "XY", "XY")`` gives three parties the X and Y
    observables each.
    """
    return _json.dumps([[{"pauli": axis} for axis in menu] for menu in menus])


__all__ = [
    "__version__",
    "classify_model",
    "analyze_model",
    "state_model",
    "classify_state",
    "hardy_witness",
    "von_neumann_entropy",
    "contextual_entropy",
    "reconstruct_state",
    "subadditivity_counterexample",
    "random_violation_4d",
    "chapter3_suite",
    "state",
    "pauli_menus",
]
