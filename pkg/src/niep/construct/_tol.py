"""Shared tolerance helpers for hypothesis checks."""

PRE_TOL = 1e-9


def leq(lhs: float, rhs: float, tol: float = PRE_TOL) -> bool:
    """``lhs <= rhs`` up to ``tol``, scaled by the operands once they exceed 1."""
    return lhs <= rhs + tol * max(1.0, abs(lhs), abs(rhs))


def close(x: float, y: float, tol: float = PRE_TOL) -> bool:
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))
