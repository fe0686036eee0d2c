"""Suite-wide hooks: enforce the wall-clock budget for the whole run.

The acceptance contract requires the full test suite to finish in under 60
seconds; no single test can observe that, so the session hook prints the
verdict and fails the run if the budget is exceeded.
"""

import time

_BUDGET_SECONDS = 60.0
_t0 = None


def pytest_configure(config):
    global _t0
    _t0 = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _t0
    ok = elapsed < _BUDGET_SECONDS
    print(
        f"\nACCEPTANCE 11 {'PASS' if ok else 'FAIL'}: "
        f"full suite wall clock {elapsed:.1f}s (budget {_BUDGET_SECONDS:.0f}s)"
    )
    if not ok:
        session.exitstatus = 1
