"""Coined quantum walks on the line and circle and their optical cavity versions."""

from ._qwalk import (
    CoinOperator,
    MomentReport,
    StepOrdering,
    cavity,
    classical_distribution,
    galton_coin,
    galton_predicted_moments,
    hadamard,
    konno_coin,
    konno_predicted_moments,
    moments,
    total_variation,
    walk,
    walk_asymptotic_moments,
)

__all__ = [
    "CoinOperator",
    "MomentReport",
    "StepOrdering",
    "cavity",
    "classical_distribution",
    "galton_coin",
    "galton_predicted_moments",
    "hadamard",
    "konno_coin",
    "konno_predicted_moments",
    "moments",
    "total_variation",
    "walk",
    "walk_asymptotic_moments",
]
