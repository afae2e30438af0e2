"""Backend selection for the hypergeometric summation kernels.

The compiled extension is preferred when it was built; otherwise the pure
Python twin is used.  ``BACKEND`` names the active choice so callers and the
benchmark can report it.
"""

from __future__ import annotations

from types import ModuleType

try:
    from hydrenyi import _kernels_cy as _active  # type: ignore[attr-defined]

    BACKEND = "cython"
except ImportError:
    from hydrenyi import _kernels_py as _active  # type: ignore[no-redef]

    BACKEND = "python"

lauricella_boxsum = _active.lauricella_boxsum
daoust_boxsum = _active.daoust_boxsum


def available_backends() -> list[str]:
    names = ["python"]
    try:
        from hydrenyi import _kernels_cy  # noqa: F401

        names.insert(0, "cython")
    except ImportError:
        pass
    return names


def load_backend(name: str) -> ModuleType:
    if name == "python":
        from hydrenyi import _kernels_py

        return _kernels_py
    if name == "cython":
        from hydrenyi import _kernels_cy  # type: ignore[attr-defined]

        return _kernels_cy
    raise ValueError(f"unknown kernel backend {name!r}")
