from math import gcd

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def coprime_pairs(rmax, rmin=2):
    return [(r, a) for r in range(rmin, rmax + 1) for a in range(1, r) if gcd(r, a) == 1]
