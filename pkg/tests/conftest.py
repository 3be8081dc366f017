import pytest

from tnormint import LUKASIEWICZ, MINIMUM, PRODUCT, Capacity

BUILTIN_OPS = [MINIMUM, PRODUCT, LUKASIEWICZ]


@pytest.fixture(params=BUILTIN_OPS, ids=lambda op: op.kind)
def op(request):
    return request.param


@pytest.fixture
def uniform2():
    # additive uniform measure on two points
    return Capacity.from_mapping(2, {(): 0, (0,): 0.5, (1,): 0.5, (0, 1): 1})
