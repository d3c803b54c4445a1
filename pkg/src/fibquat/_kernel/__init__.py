"""Scalar kernel selection: compiled extension if built, else pure Python."""

try:
    from ._crational import Rational

    KERNEL_BACKEND = "compiled"
except ImportError:  # extension not built on this install
    from ._pyrational import Rational

    KERNEL_BACKEND = "pure-python"

__all__ = ["Rational", "KERNEL_BACKEND"]
