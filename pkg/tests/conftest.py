import pytest
from hypothesis import HealthCheck, settings

from richness import validate

# Derandomized so statistical assertions are stable run to run.
settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")


@pytest.fixture
def flower_sample():
    """The worked example: 44 flowers in 5 colors."""
    return validate([
        ("purple", 14),
        ("red", 10),
        ("yellow", 10),
        ("orange", 9),
        ("white", 1),
    ])
