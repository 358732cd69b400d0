from pathlib import Path

import pytest

from higher_tc.graded_algebra import make_algebra
from higher_tc.graph_core import Graph, parse_graph
from higher_tc.sullivan import parse_model

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"

EXAMPLE_GRAPH_TEXT = (DATA / "example_graph.txt").read_text()
EXAMPLE_ODD_TEXT = "gen x 3\ngen y 3\ngen z 5\nd z = x*y\n"


def example_ring():
    return make_algebra(
        [("1", 0), ("x", 3), ("y", 3), ("xz", 8), ("yz", 8), ("xyz", 11)],
        {
            ("x", "yz"): {"xyz": 1},
            ("yz", "x"): {"xyz": 1},
            ("y", "xz"): {"xyz": -1},
            ("xz", "y"): {"xyz": -1},
        },
    )


def exterior(*degrees):
    """
    Cohomology of a product of spheres with the given degrees: basis = subsets,
    each generator squares to zero, sign = Koszul sign of sorting the word.
    """
    from itertools import combinations

    n = len(degrees)
    subsets = [s for k in range(n + 1) for s in combinations(range(n), k)]
    label = lambda s: "".join(f"e{i}" for i in s) or "1"
    basis = [(label(s), sum(degrees[i] for i in s)) for s in subsets]
    prods = {}
    for a in subsets:
        for b in subsets:
            if set(a) & set(b):
                continue
            word = list(a) + list(b)
            inv = sum(
                degrees[word[i]] * degrees[word[j]]
                for i in range(len(word))
                for j in range(i + 1, len(word))
                if word[i] > word[j]
            )
            prods[(label(a), label(b))] = {label(tuple(sorted(word))): (-1) ** inv}
    return make_algebra(basis, prods)


def even_sphere(d=2):
    return make_algebra([("1", 0), ("u", d)], {})


def odd_sphere(d=3):
    return make_algebra([("1", 0), ("x", d)], {})


@pytest.fixture
def example_graph():
    return parse_graph(EXAMPLE_GRAPH_TEXT)


@pytest.fixture
def ring():
    return example_ring()


@pytest.fixture
def odd_model():
    return parse_model(EXAMPLE_ODD_TEXT)
