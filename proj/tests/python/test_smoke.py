import oddcolor
import pytest


def complete(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def test_k4_is_colored():
    code, artifact, _ = oddcolor.color(4, complete(4), 3)
    assert code == oddcolor.EXIT_COLORED
    assert artifact["colors"] == [[1, 1], [1, 2], [2, 1], [2, 2]]
    assert artifact["report"] == {"colors_used": 4, "max_component": 1, "max_defect": 0}


def test_k5_certificate_round_trip():
    code, cert, _ = oddcolor.color(5, complete(5), 3)
    assert code == oddcolor.EXIT_CERTIFICATE
    assert [tree["vertices"] for tree in cert["trees"]] == [[0, 1], [2, 3], [4]]
    assert oddcolor.verify(5, complete(5), cert)[0] == oddcolor.EXIT_COLORED
    cert["coloring"]["4"] = 2
    code, _, message = oddcolor.verify(5, complete(5), cert)
    assert code == oddcolor.EXIT_REJECTED
    assert "monochromatic" in message
    assert oddcolor.has_odd_minor(5, complete(5), 3)


def test_cycle_parity():
    assert not oddcolor.has_odd_minor(6, cycle(6), 3)
    assert oddcolor.has_odd_minor(5, cycle(5), 3)
    code, artifact, _ = oddcolor.color(6, cycle(6), 3, parallel=True)
    assert code == oddcolor.EXIT_COLORED
    assert artifact["report"]["colors_used"] == 2


def test_decompose_reports_stuck_component():
    code, doc, _ = oddcolor.decompose(5, complete(5), 3)
    assert code == oddcolor.EXIT_CERTIFICATE
    assert doc["components"][0]["stuck"] == {"component": [4], "adjacent_parts": [1, 2]}


@pytest.mark.parametrize("seed", range(20))
def test_random_graphs_are_certified(seed):
    edges = oddcolor.gnp(40, 0.1, seed, connected=True)
    for t in (3, 4, 5, 6):
        code, artifact, _ = oddcolor.color(40, edges, t)
        assert code in (oddcolor.EXIT_COLORED, oddcolor.EXIT_CERTIFICATE)
        artifact.pop("report", None)
        assert oddcolor.verify(40, edges, artifact)[0] == oddcolor.EXIT_COLORED


def test_bad_input_raises():
    with pytest.raises(oddcolor.GraphError):
        oddcolor.color(2, [(0, 0)], 3)
    assert oddcolor.color(3, [(0, 1)], 2)[0] == oddcolor.EXIT_USAGE
