import random
from fractions import Fraction

from uqdim import PoleAtParameters, VogelParams


def rand_fraction(rng: random.Random, bound: int = 64) -> Fraction:
    """Nonzero rational with numerator and denominator bounded by `bound`."""
    while True:
        num = rng.randint(-bound, bound)
        if num != 0:
            return Fraction(num, rng.randint(1, bound))


def rand_params(rng: random.Random, bound: int = 64) -> VogelParams:
    return VogelParams(rand_fraction(rng, bound), rand_fraction(rng, bound),
                       rand_fraction(rng, bound))


def sample_regular_points(seed: int, count: int, probe) -> list[VogelParams]:
    """Deterministic parameter points for which `probe(v)` does not hit a
    pole of the formulas under test."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        v = rand_params(rng)
        try:
            probe(v)
        except PoleAtParameters:
            continue
        points.append(v)
    return points
