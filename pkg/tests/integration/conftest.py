"""Fixtures for end-to-end pipeline tests."""

import pytest

from samba_gqw.config import SambaConfig
from samba_gqw.manager import SambaManager


@pytest.fixture
def config() -> SambaConfig:
    """Configuration with snapshots on every layer and modest tuning budgets."""
    return SambaConfig(default_slices=8, snapshot_every=1, gqw_max_iter=10, qaoa_max_iter=50)


@pytest.fixture
def manager(config: SambaConfig) -> SambaManager:
    """Manager bound to the test configuration."""
    return SambaManager(config)
