"""Robust losses."""

from .huber import (
    LossEval,
    huber_deriv,
    huber_value,
    loss_gradient,
    pseudo_huber_deriv,
    pseudo_huber_value,
)

__all__ = [
    "LossEval",
    "huber_value",
    "huber_deriv",
    "loss_gradient",
    "pseudo_huber_value",
    "pseudo_huber_deriv",
]
