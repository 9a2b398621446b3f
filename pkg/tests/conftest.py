"""Shared fixtures and helpers for the compfade test suite."""

import pytest

from compfade.params import AefParams, AkfParams


def rel_err(got: float, want: float) -> float:
    """Relative error with a floor so exact zeros compare cleanly."""
    scale = max(abs(want), 1e-290)
    return abs(got - want) / scale


@pytest.fixture
def aef_params():
    """A generic alpha-eta-F parameter point away from every special case."""
    return AefParams(alpha=3.5, eta=0.5, mu=1.5, ms=3.0)


@pytest.fixture
def akf_params():
    """A generic alpha-kappa-F parameter point away from every special case."""
    return AkfParams(alpha=2.5, kappa=1.5, mu=1.2, ms=4.0)
