"""Exact integer evaluation of the clustered-colouring bound formulas."""
from __future__ import annotations

from dataclasses import dataclass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def ej_bound(delta: int, g: int) -> int:
    """Component-size bound for 3-colouring graphs on a surface of Euler genus ``g``:
    ``(5 delta)^(2^g - 1) * (15 delta)^((32 delta + 8) 2^g)``."""
    _require(delta >= 1 and g >= 0, "need delta >= 1 and g >= 0")
    scale = 2 ** g
    return (5 * delta) ** (scale - 1) * (15 * delta) ** ((32 * delta + 8) * scale)


def adov_bound(w: int, delta: int) -> int:
    """``24 w delta``: component bound for 2-colouring bounded-treewidth graphs."""
    _require(w >= 1 and delta >= 1, "need w >= 1 and delta >= 1")
    return 24 * w * delta


def necklace_bound(q: int) -> int:
    _require(q >= 1, "need q >= 1")
    return max(q - 1, 2)


def combine_bound(q: int, w: int) -> int:
    _require(q >= 3, "the combination bound needs q >= 3")
    _require(w >= 0, "need w >= 0")
    return q * (w + 1) - 1


def outgrowth_bound(d: int, w: int, delta: int) -> int:
    """``48 d^4 w delta^5``."""
    _require(d >= 1 and w >= 1 and delta >= 1, "need positive d, w, delta")
    return 48 * d ** 4 * w * delta ** 5


def recolor_budget(z: int, delta: int, k: int) -> int:
    """``z (delta k + 1)``: vertices reachable by recolouring ``z`` vertices."""
    _require(z >= 0 and delta >= 0 and k >= 0, "inputs must be nonnegative")
    return z * (delta * k + 1)


@dataclass(frozen=True)
class MainConstants:
    d: int
    M: int
    eta: int


def main_constants(rho: int, theta: int, delta: int, g: int,
                   d: int | None = None, M: int | None = None) -> MainConstants:
    """``d``, ``M = 48 d^4 (2 rho + 3)(3 delta + 2 rho)^5`` and
    ``eta = 2000 rho theta^3 M delta^6``.

    ``d`` and ``M`` may be injected to exercise the downstream arithmetic
    without the astronomically large genuine values.
    """
    _require(rho >= 0 and theta >= 1 and delta >= 1 and g >= 0,
             "need rho >= 0, theta >= 1, delta >= 1, g >= 0")
    if d is None:
        d = ej_bound(delta, g)
    if M is None:
        M = 48 * d ** 4 * (2 * rho + 3) * (3 * delta + 2 * rho) ** 5
    eta = 2000 * rho * theta ** 3 * M * delta ** 6
    return MainConstants(d, M, eta)


@dataclass(frozen=True)
class BoundParams:
    """Scalar parameters of the bound formulas. ``xi`` and ``kappa`` are carried
    for the record only; no formula here uses them."""

    delta: int = 3
    g: int = 0
    w: int = 3
    q: int = 3
    rho: int = 0
    theta: int = 1
    k: int = 1
    z: int = 1
    d: int | None = None
    xi: int | None = None
    kappa: int | None = None


def bound_table(p: BoundParams) -> list[dict]:
    """Every formula evaluated at ``p`` as rows of name, inputs, value, digits."""
    mc = main_constants(p.rho, p.theta, p.delta, p.g, d=p.d)
    d = mc.d
    rows = [
        ("ej", {"delta": p.delta, "g": p.g}, ej_bound(p.delta, p.g)),
        ("adov", {"w": p.w, "delta": p.delta}, adov_bound(p.w, p.delta)),
        ("necklace", {"q": p.q}, necklace_bound(p.q)),
        ("combine", {"q": p.q, "w": p.w}, combine_bound(p.q, p.w) if p.q >= 3 else None),
        ("outgrowth", {"d": "d", "w": p.w, "delta": p.delta}, outgrowth_bound(d, p.w, p.delta)),
        ("recolor", {"z": p.z, "delta": p.delta, "k": p.k}, recolor_budget(p.z, p.delta, p.k)),
        ("d", {"delta": p.delta, "g": p.g}, d),
        ("M", {"d": "d", "rho": p.rho, "delta": p.delta}, mc.M),
        ("eta", {"rho": p.rho, "theta": p.theta, "M": "M", "delta": p.delta}, mc.eta),
    ]
    return [{"name": name, "inputs": inputs, "value": value,
             "digits": None if value is None else len(str(abs(value)))}
            for name, inputs, value in rows]
