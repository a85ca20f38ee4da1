"""Parameters, regime classification and time domains.

See :doc:`regimes` for more information.
"""
from ._constants import (
    eps, v_min, v_warn, default_step, max_order, pictures, inf)
from ._params import (
    Params, check_params, check_picture, is_close, is_case1, critical_time,
    delta)
from ._keys import (
    CASE1, CASE2, B_GT, B_LT, CRITICAL, T_LT, T_EQ, T_GT, SystemKey,
    classify, key_string)
from ._domains import TimeDomain, tprime_domain, time_domain, check_time_grid
from ._random import regimes, random_params, random_time, sample_horizon


__all__ = [
    "eps", "v_min", "v_warn", "default_step", "max_order", "pictures", "inf",
    "Params", "check_params", "check_picture", "is_close", "is_case1",
    "critical_time", "delta",
    "CASE1", "CASE2", "B_GT", "B_LT", "CRITICAL", "T_LT", "T_EQ", "T_GT",
    "SystemKey", "classify", "key_string",
    "TimeDomain", "tprime_domain", "time_domain", "check_time_grid",
    "regimes", "random_params", "random_time", "sample_horizon"
]
