import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_VERDICTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str) -> None:
    _VERDICTS[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} -- {detail}"


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_VERDICTS):
        terminalreporter.write_line(_VERDICTS[n])
