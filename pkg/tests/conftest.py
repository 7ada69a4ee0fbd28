import pytest

from firecut import _kernels


@pytest.fixture
def each_backend():
    """Yield both kernel backends, restoring the active one afterwards."""
    current = _kernels.get_backend()
    yield
    _kernels.set_backend(current)


def backends_available():
    names = ["python"]
    try:
        _kernels._load("numba")
        names.insert(0, "numba")
    except ImportError:
        pass
    return names
