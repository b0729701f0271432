import pytest

from sumsetrange import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """JIT-compile every kernel once so timed tests measure work, not compilation."""
    _kernels.warmup()
