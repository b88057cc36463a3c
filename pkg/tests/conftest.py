import math

import pytest

from strangleval import MarketContext


@pytest.fixture
def ibm_ctx():
    # 115.73 underlying, 0.3832 annualized IV, 23 days, zero rate
    return MarketContext(mu=115.73, sigma=0.3832 / math.sqrt(365.0), t=23.0, r=0.0)
