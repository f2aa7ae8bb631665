import pytest

import younggap._kernels as kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # JIT-compile every kernel once so timed tests measure steady-state.
    kernels.warmup()
