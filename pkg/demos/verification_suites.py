"""
Running the verification suites
===============================

Every identity the package knows about is grouped into a named suite.
Each check carries both sides as exact rationals; a check passes only on
exact equality.  The same suites are available as ``hodge verify``.
"""
from hodgeint.suites import SUITES, reports_to_text, run_suite

reports = [run_suite(name, max_genus=3, max_degree=4) for name in SUITES]
print(reports_to_text(reports, timing=True))
print("all passed:", all(r.passed for r in reports))
