import random

import pytest
from hypothesis import HealthCheck, settings

from comodcat.coalgebra import bicomodule
from comodcat.exact import QQ
from comodcat.monoidal import Mor, finvect, obj, tensor_obj

settings.register_profile(
    "ci", derandomize=True, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

VQ = finvect(QQ)


def graded_bicomodule(comonoid, labels, degrees):
    """A bicomodule over a group-like comonoid from one degree table."""
    carrier = obj(comonoid.backend, labels)
    dim = len(labels)
    n = comonoid.carrier.size
    fld = comonoid.backend.field
    lrows = [[fld.zero] * dim for _ in range(n * dim)]
    rrows = [[fld.zero] * dim for _ in range(dim * n)]
    for i, d in enumerate(degrees):
        lrows[d * dim + i][i] = fld.one
        rrows[i * n + d][i] = fld.one
    lam = Mor.from_matrix(carrier, tensor_obj(comonoid.carrier, carrier), lrows)
    rho = Mor.from_matrix(carrier, tensor_obj(carrier, comonoid.carrier), rrows)
    return bicomodule(carrier, comonoid, lam, comonoid, rho)


@pytest.fixture
def rng():
    return random.Random(20240801)
