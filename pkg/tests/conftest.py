import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, capture-proof."""
    mod = None
    for name, candidate in sys.modules.items():
        if name.rpartition(".")[2] == "test_acceptance":
            mod = candidate
            break
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for num in sorted(results):
        ok, elapsed, detail = results[num]
        status = "PASS" if ok else "FAIL"
        tail = f" ({detail})" if detail else ""
        terminalreporter.write_line(
            f"  criterion {num:2d}: {status} in {elapsed:.2f}s{tail}")
