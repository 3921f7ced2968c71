"""Shared fixtures: the standard small data and acceptance reporting.

All coordinates are fundamental-weight coordinates with the coroots as the
standard dual basis, so pairing a coroot against kappa just reads off an
entry of kappa.
"""

from mhecke import DiagramTwist, HeckeContext, RootDatum, WeylGroup

_CACHE = {}

_SPECS = {
    "a1": ([[2]], [[1]], None),
    "a2": ([[2, -1], [-1, 2]], [[1, 0], [0, 1]], None),
    "b2": ([[2, -2], [-1, 2]], [[1, 0], [0, 1]], None),
    "a2_flip": ([[2, -1], [-1, 2]], [[1, 0], [0, 1]], ([[0, 1], [1, 0]], 2)),
    "a1xa1_swap": ([[2, 0], [0, 2]], [[1, 0], [0, 1]], ([[0, 1], [1, 0]], 2)),
}

ALL_DATA = tuple(_SPECS)


def make_group(name):
    """(WeylGroup, DiagramTwist) for one of the named standard data."""
    if name not in _CACHE:
        roots, coroots, twist_spec = _SPECS[name]
        datum = RootDatum(roots, coroots)
        group = WeylGroup(datum)
        if twist_spec is None:
            twist = DiagramTwist.identity(datum)
        else:
            twist = DiagramTwist(datum, twist_spec[0], twist_spec[1])
        _CACHE[name] = (group, twist)
    return _CACHE[name]


def make_ctx(name, n) -> HeckeContext:
    group, twist = make_group(name)
    return HeckeContext(group, n, twist)


# -- acceptance reporting ----------------------------------------------------

acceptance_lines = []


def record_criterion(num, name, ok, detail=""):
    suffix = " (%s)" % detail if detail else ""
    line = "criterion %02d %-34s %s%s" % (num, name, "PASS" if ok else "FAIL", suffix)
    acceptance_lines.append(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_lines):
            terminalreporter.write_line(line)
