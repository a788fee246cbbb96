from importlib import resources

import pytest

from symq.algebra import verify_good_involution, verify_quandle
from symq.diagram import load_diagram, parse_pd
from symq.presentation import load_presentation
from symq.targets import CATALOGUE, builtin_target, builtin_targets


@pytest.mark.parametrize("name", CATALOGUE)
def test_catalogue_entries_are_symmetric_quandles(name):
    t = builtin_target(name)
    assert verify_quandle(t.quandle)
    assert verify_good_involution(t)


def test_catalogue_order_filter():
    small = builtin_targets(4)
    assert all(t.quandle.n <= 4 for t in small.values())
    assert list(builtin_targets()) == list(CATALOGUE)


@pytest.mark.parametrize("name,n", [("R9-id", 9), ("R6-g1", 6), ("triv-5-swap", 5), ("D-R5", 10),
                                    ("D-triv-4", 8), ("conj-Z7-inv", 7), ("conj-S3-inv", 6)])
def test_patterns(name, n):
    t = builtin_target(name)
    assert t.quandle.n == n and verify_good_involution(t)


@pytest.mark.parametrize("name", ["R0-id", "R3-g1", "S3", "triv-x"])
def test_bad_names(name):
    with pytest.raises(ValueError):
        builtin_target(name)


def test_bundled_data_files_parse():
    data = resources.files("symq").joinpath("data")
    seen = 0
    for entry in data.iterdir():
        text = entry.read_text()
        if entry.name.endswith(".pd"):
            parse_pd(text)
        elif entry.name.endswith(".sq"):
            load_presentation(text)
        elif entry.name.endswith(".json"):
            load_diagram(text)
        else:
            continue
        seen += 1
    assert seen >= 7
