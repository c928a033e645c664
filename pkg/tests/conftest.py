"""Session wiring: print one verdict line per acceptance criterion.

The acceptance tests are named ``test_criterion_<n>_<slug>``; after the run
this hook writes ``criterion <n> (<slug>): PASS|FAIL`` lines outside of
pytest's capture, so they are always visible in the terminal output.
"""

_PREFIX = "test_criterion_"


def _verdicts(terminalreporter):
    found = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            name = getattr(report, "location", ("", "", ""))[2]
            if _PREFIX not in str(name):
                continue
            tail = str(name).split(_PREFIX, 1)[1]
            number, _, slug = tail.partition("_")
            found.append((int(number), slug.replace("_", " "), outcome == "passed"))
    return sorted(set(found))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = _verdicts(terminalreporter)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number, slug, passed in verdicts:
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number} ({slug}): {verdict}")
