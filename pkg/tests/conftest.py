import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "wradii",
    deadline=None,
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "wradii"))

# acceptance criterion number -> list of (label, passed, detail)
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        rows = ACCEPTANCE[number]
        failed = [r for r in rows if not r[1]]
        status = "PASS" if not failed else "FAIL"
        title = rows[0][0]
        line = f"criterion {number:2d} {status}  {title}  ({len(rows) - len(failed)}/{len(rows)} sub-checks)"
        tr.write_line(line)
        for _, _, detail in failed:
            tr.write_line(f"      failed: {detail}")
