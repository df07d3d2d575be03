import math
import os

from hypothesis import HealthCheck, settings, strategies as st

from aarf.almost_arith import AAPresentation
from aarf.errors import InputError

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.register_profile("ci", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def generator_lists(draw, lo=3, hi=24, min_size=2, max_size=4):
    gens = draw(st.lists(st.integers(lo, hi), min_size=min_size, max_size=max_size, unique=True))
    if math.gcd(*gens) != 1:
        gens.append(draw(st.sampled_from([g for g in range(lo, hi + 2) if math.gcd(g, *gens) == 1])))
    return gens


@st.composite
def presentations(draw, max_m0=16, max_d=6, max_p=4):
    m0 = draw(st.integers(3, max_m0))
    d = draw(st.integers(1, max_d))
    p = draw(st.integers(1, min(max_p, m0 - 1)))
    n = draw(st.integers(m0 + 1, 3 * m0))
    try:
        return AAPresentation(m0, d, p, n)
    except InputError:
        from hypothesis import assume
        assume(False)
