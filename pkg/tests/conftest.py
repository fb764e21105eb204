import pytest
from hypothesis import settings

from boxprime.semiring import (instance_all_graphs, instance_even_edge,
                               instance_hamming)

settings.register_profile("exact", deadline=None, max_examples=40)
settings.load_profile("exact")

# the acceptance module appends one verdict line per criterion here
acceptance_log: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_log:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in acceptance_log:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def graphs_instance():
    return instance_all_graphs()


@pytest.fixture(scope="session")
def even_instance():
    return instance_even_edge()


@pytest.fixture(scope="session")
def hamming_instance():
    return instance_hamming()
