import os
import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings as hyp_settings

# 讓 pytest 從 repo 根目錄找到 pnca/
ROOT_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT_DIR not in sys.path:
    sys.path.insert(0, ROOT_DIR)

from pnca.config import settings  # noqa: E402

hyp_settings.register_profile("default", max_examples=60, derandomize=True, deadline=None)
hyp_settings.register_profile("ci", max_examples=200, derandomize=True, deadline=None,
                              suppress_health_check=[HealthCheck.too_slow])
hyp_settings.register_profile("thorough", max_examples=1000, derandomize=True, deadline=None,
                              suppress_health_check=[HealthCheck.too_slow])
hyp_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(settings.SEED)
