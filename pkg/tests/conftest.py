import importlib

import pytest

from petinduce import _kernels_py, pipeline


def _compiled():
    try:
        return importlib.import_module("petinduce._kernels")
    except ImportError:
        return None


KERNELS = [_kernels_py] + ([_compiled()] if _compiled() else [])


@pytest.fixture(params=KERNELS, ids=lambda m: m.BACKEND)
def kernel(request):
    """Each available kernel module, so both backends run the same checks."""
    return request.param


@pytest.fixture(scope="session")
def chain():
    return pipeline.run_chain()


@pytest.fixture(scope="session")
def expected():
    return pipeline.load_expected()
