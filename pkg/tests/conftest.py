import numpy as np

from orlicz import DiscreteMeasure, SampledFunction


def atoms(values, weights):
    """Measure/function pair over consecutive integer coordinates."""
    values = np.asarray(values, dtype=float)
    mu = DiscreteMeasure(np.arange(len(values), dtype=float), weights)
    return mu, SampledFunction(values)


def random_instance(rng, n_lo=5, n_hi=50, value_scale=10.0, weight_scale=5.0):
    """Random discrete instance: values in [-s, s], weights in (0, w]."""
    n = int(rng.integers(n_lo, n_hi + 1))
    values = rng.uniform(-value_scale, value_scale, n)
    weights = weight_scale * (1.0 - rng.random(n))
    return atoms(values, weights)
