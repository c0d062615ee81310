import pytest

from tyke.models import TrainConfig, TransformParams, WavelengthGrid

LISTING_TEMPERATURES = (4500.0, 5000.0, 5500.0, 6000.0, 6500.0, 7000.0, 7500.0)


@pytest.fixture
def listing_grid():
    return WavelengthGrid(start=1e-9, step=10e-9, count=300)


@pytest.fixture
def default_train_config(listing_grid):
    return TrainConfig(grid=listing_grid, temperatures=LISTING_TEMPERATURES, transform=TransformParams())


@pytest.fixture
def fine_grid():
    """1 nm grid from 100 nm to 3000 nm."""
    return WavelengthGrid(start=100e-9, step=1e-9, count=2901)
