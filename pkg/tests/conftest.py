import itertools

import pytest

from cfgn import CfgnParams, ProcessParams, Variant

#: Validation grid: Hurst pairs x correlations x variants, skipping the
#: combinations the parameterization itself rejects (H1 + H2 = 1 with
#: rho != 0 has an undefined cross-correlation coefficient).
H_VALUES = (0.3, 0.5, 0.7)
RHO_VALUES = (-0.5, 0.0, 0.5)


def param_grid():
    """All constructible grid points as ProcessParams."""
    out = []
    for H1, H2 in itertools.product(H_VALUES, H_VALUES):
        for rho in RHO_VALUES:
            if rho != 0.0 and abs(H1 + H2 - 1.0) <= 1e-12:
                continue
            for variant in Variant:
                out.append(ProcessParams(H1=H1, H2=H2, rho=rho,
                                         variant=variant, allow_half_wb=True))
    return out


@pytest.fixture(scope="session")
def reference_params():
    """The headline parameter point used throughout validation."""
    return ProcessParams(H1=0.4, H2=0.7, rho=0.15, variant=Variant.CAUSAL)


@pytest.fixture(scope="session")
def reference_cfgn(reference_params):
    return CfgnParams(base=reference_params)
