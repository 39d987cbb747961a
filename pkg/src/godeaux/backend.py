"""Groebner-kernel backend selection.

Two interchangeable kernels ship with the package:

* ``godeaux._kernel_pure`` — the pure-Python reference, always available;
* ``godeaux._kernel`` — a compiled extension with identical semantics
  (same pair selection, pruning, reduction rule, budget behaviour, and
  canonical output), built at install time when a C toolchain exists.

The environment variable ``GODEAUX_BACKEND`` picks the default:
``pure`` forces the reference kernel, ``compiled`` demands the
extension (raising if it is missing), and ``auto`` (or unset) prefers
the extension when importable.  Individual calls still route to the
pure kernel for rings outside the extension's static limits (more than
``MAX_VARS`` variables or a huge modulus).
"""

from __future__ import annotations

import os

from . import _kernel_pure

try:  # pragma: no cover - depends on the build environment
    from . import _kernel as _compiled
except ImportError:  # pragma: no cover
    _compiled = None


def available_backends() -> tuple[str, ...]:
    """Names of the kernels importable in this installation."""
    if _compiled is None:
        return ("pure",)
    return ("pure", "compiled")


def selected_name() -> str:
    """The backend the current environment resolves to."""
    choice = os.environ.get("GODEAUX_BACKEND", "auto").strip().lower()
    if choice not in ("auto", "pure", "compiled"):
        raise ValueError(
            f"GODEAUX_BACKEND must be auto, pure, or compiled; got {choice!r}")
    if choice == "pure":
        return "pure"
    if choice == "compiled":
        if _compiled is None:
            raise ImportError(
                "GODEAUX_BACKEND=compiled but the extension is not built")
        return "compiled"
    return "compiled" if _compiled is not None else "pure"


def get(name: str | None = None):
    """The kernel module for ``name`` (or the selected default)."""
    if name is None:
        name = selected_name()
    if name == "pure":
        return _kernel_pure
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernel requested but not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def for_ring(nvars: int, p: int, name: str | None = None):
    """The kernel to use for a ring, honouring the extension's limits."""
    mod = get(name)
    if mod is _kernel_pure:
        return mod
    if nvars > mod.MAX_VARS or p >= mod.MAX_COEFF_MODULUS:
        return _kernel_pure
    return mod
