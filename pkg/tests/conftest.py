import pytest

from toeplitz_fredholm import preset

PRESETS = {
    "bessel": dict(theta=1.0),
    "charlier": dict(kappa=2.0, theta=0.5),
    "hypergeometric": dict(z=2.0, zprime=3.0, xi=0.4),
}


@pytest.fixture(params=sorted(PRESETS))
def preset_symbol(request):
    return preset(request.param, **PRESETS[request.param])
