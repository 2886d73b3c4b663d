import numpy as np
import pytest

from orthoflow import (
    ContinuousHahnParams,
    FlowFamily,
    FlowSettings,
    PotentialKind,
    WilsonParams,
    solve_roots,
)

# Reference root tables for the two showcase configurations, 4-decimal
# precision. Continuous Hahn: n = 30, a = 10, b = 3/10 (negative half;
# the positive half is the mirror image). Wilson: n = 15, a = 17/3,
# b = 1/5, c = 1+i, d = 1-i.
CH30_PARAMS = ContinuousHahnParams(10.0, 0.3)
CH30_NEGATIVE_ROOTS = np.array([
    -15.6230, -13.3738, -11.6001, -10.0841, -8.7415,
    -7.5285, -6.4188, -5.3956, -4.4474, -3.5671,
    -2.7503, -1.9957, -1.3059, -0.6907, -0.1919,
])

W15_PARAMS = WilsonParams(17.0 / 3.0, 0.2, 1 + 1j, 1 - 1j)
W15_ROOTS = np.array([
    0.5274, 1.1194, 1.7050, 2.3375, 3.0266,
    3.7728, 4.5787, 5.4496, 6.3938, 7.4231,
    8.5546, 9.8143, 11.2449, 12.9284, 15.0759,
])

LONG_SETTINGS = FlowSettings(step=0.05, t_max=30.0, grad_tol=1e-13)


def random_ch_params(rng) -> ContinuousHahnParams:
    if rng.random() < 0.5:
        return ContinuousHahnParams(rng.uniform(0.3, 5.0), rng.uniform(0.3, 5.0))
    re, im = rng.uniform(0.3, 4.0), rng.uniform(0.1, 2.0)
    return ContinuousHahnParams(complex(re, im), complex(re, -im))


def random_wilson_params(rng) -> WilsonParams:
    shape = rng.integers(3)

    def reals(k):
        return [rng.uniform(0.3, 2.5) for _ in range(k)]

    def conj_pair():
        z = complex(rng.uniform(0.3, 2.5), rng.uniform(0.1, 1.2))
        return [z, z.conjugate()]

    if shape == 0:
        vals = reals(4)
    elif shape == 1:
        vals = reals(2) + conj_pair()
    else:
        vals = conj_pair() + conj_pair()
    return WilsonParams(*vals)


@pytest.fixture(scope="session")
def ch30_run():
    kind = PotentialKind(FlowFamily.CONTINUOUS_HAHN, CH30_PARAMS)
    traj, eq = solve_roots(kind, 30, settings=LONG_SETTINGS, newton_tol=1e-11)
    return traj, eq


@pytest.fixture(scope="session")
def ch30_broken_run():
    kind = PotentialKind(FlowFamily.CONTINUOUS_HAHN, CH30_PARAMS)
    traj, eq = solve_roots(
        kind, 30, x0=np.full(30, 3.0), settings=LONG_SETTINGS, newton_tol=1e-11
    )
    return traj, eq


@pytest.fixture(scope="session")
def w15_run():
    kind = PotentialKind(FlowFamily.WILSON, W15_PARAMS)
    traj, eq = solve_roots(kind, 15, settings=LONG_SETTINGS, newton_tol=1e-11)
    return traj, eq
