import pytest

from chronet import OrderedEdgeList, edges_from_tuples, load_ordered_edge_list

# the worked example used across the suite: 4 vertices a, b, c, d and
# 7 edges; a reaches everything, d and b only via each other, c feeds b
EXAMPLE_LINES = [
    "a d 1 5",
    "a b 2 1",
    "a b 5 2",
    "c b 6 1",
    "d c 6 2",
    "b d 7 2",
    "d c 8 4",
]

# label -> dense id in first-appearance order of the lines above
A, D, B, C = 0, 1, 2, 3


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.tg"
    path.write_text("".join(line + "\n" for line in EXAMPLE_LINES))
    return str(path)


@pytest.fixture
def example_graph(example_file):
    return load_ordered_edge_list(example_file)


@pytest.fixture
def write_graph(tmp_path):
    """Factory: write edge-list lines to a temp file, return its path."""

    def factory(lines, name="graph.tg"):
        path = tmp_path / name
        path.write_text("".join(line + "\n" for line in lines))
        return str(path)

    return factory


def graph_from_rows(n, rows, labels=None):
    """Rows (u, v, t[, lam]) in any order; sorted by t here."""
    ordered = sorted(rows, key=lambda r: r[2])
    return OrderedEdgeList(n=n, edges=edges_from_tuples(ordered), labels=labels)
