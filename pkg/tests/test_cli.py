import csv
import io
import random

import pytest

from conftest import disjoint_rows, random_graph
from convexmatch import CompactConvexGraph, check_certificate
from convexmatch import formats
from convexmatch.cli import main
from convexmatch.generate import MODELS, GenSpec, expected_uniform_length, generate, generate_weighted


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


# -- formats ---------------------------------------------------------------


def test_parse_unweighted_instance():
    g = formats.parse_graph("3 4\n1 2\n0 0\n\n2 4\n")
    assert g == CompactConvexGraph(3, 4, ((1, 2), None, (2, 4)))


def test_parse_weighted_instance():
    g, wg = formats.parse_instance("2 3\n1 2 5 -6\n3 3 9\n")
    assert wg.weights == ((5, -6), (9,))
    assert formats.format_weighted_graph(wg) == "2 3\n1 2 5 -6\n3 3 9\n"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n",
        "1 3\n3 2\n",
        "1 3\n1 4\n",
        "1 3\n0 2\n",
        "2 3\n1 2\n",
        "1 3\n1 2 5\n",
        "2 3\n1 2 1 1\n2 3\n",
        "1 3\n1 2\n1 1\n",
        "1 3\na b\n",
        "1 3\n0 0 4\n",
        "1 3\n1 1 99999999999999999999\n",
    ],
)
def test_parser_rejections(text):
    with pytest.raises(formats.ParseError):
        formats.parse_instance(text)


def test_graph_round_trip():
    rng = random.Random(2)
    for _ in range(50):
        g = random_graph(rng, 20, 20)
        assert formats.parse_graph(formats.format_graph(g)) == g


def test_matching_and_cover_formats():
    g = disjoint_rows(2)
    text = "2\n1 1\n2 2\n1 1 1 1\n2 1 2 2\n"
    assert formats.parse_matching(text) == [(1, 1), (2, 2)]
    assert formats.parse_colorings(text)[1].row == 2
    assert formats.parse_matching("7 1\n1 1\n") == [(1, 1)]
    claim = formats.parse_cover("2 2\n1 1 1 1\n2 2 2 2\n")
    assert claim.w_star == 2 and list(claim.quadruples()) == [(1, 1, 1, 1), (2, 2, 2, 2)]
    assert check_certificate(g, [(1, 1), (2, 2)], claim.to_cover()).valid
    with pytest.raises(formats.ParseError):
        formats.parse_cover("1 2\n1 1 1 1\n")
    with pytest.raises(formats.ParseError):
        formats.parse_matching("2\n1 1\n")


# -- solve / cover / certify -----------------------------------------------


def test_solve_disjoint(tmp_path, capsys):
    path = write(tmp_path, "g.txt", formats.format_graph(disjoint_rows(3)))
    status, out, _ = run(capsys, "solve", path)
    assert status == 0
    assert out == "3\n1 1\n2 2\n3 3\n"


def test_solve_weighted_single_edge(tmp_path, capsys):
    path = write(tmp_path, "g.txt", "1 1\n1 1 42\n")
    status, out, _ = run(capsys, "solve", "--weighted", path)
    assert (status, out) == (0, "42 1\n1 1\n")


def test_solve_with_colorings(tmp_path, capsys):
    path = write(tmp_path, "g.txt", "2 3\n1 2\n2 3\n")
    status, out, _ = run(capsys, "solve", "--colorings", path)
    assert status == 0
    assert formats.parse_colorings(out)[1].b2 == 3


def test_cover_counts(tmp_path, capsys):
    full = write(tmp_path, "full.txt", cmd_gen_text(4, 6, "full-intervals"))
    status, out, _ = run(capsys, "cover", full)
    assert status == 0 and out.split()[0] == "1"
    disjoint = write(tmp_path, "d.txt", formats.format_graph(disjoint_rows(5)))
    status, out, _ = run(capsys, "cover", disjoint)
    assert status == 0 and out.split()[0] == "5"


def cmd_gen_text(n_u, n_v, model, seed=0, weights=None):
    spec = GenSpec(n_u, n_v, model=model, seed=seed, weight_range=weights)
    g = generate(spec) if weights is None else generate_weighted(spec)
    return formats.format_graph(g) if weights is None else formats.format_weighted_graph(g)


@pytest.mark.parametrize("model", MODELS)
def test_round_trip_through_certify(tmp_path, capsys, model):
    for seed in range(5):
        graph = tmp_path / "g.txt"
        assert main(["gen", "--n-u", "40", "--n-v", "30", "--model", model, "--seed", str(seed), "--out", str(graph)]) == 0
        assert main(["solve", str(graph), "--out", str(tmp_path / "m.txt")]) == 0
        assert main(["cover", str(graph), "--out", str(tmp_path / "c.txt")]) == 0
        status, out, _ = run(capsys, "certify", str(graph), str(tmp_path / "m.txt"), str(tmp_path / "c.txt"))
        assert (status, out) == (0, "valid\n")
        size = int((tmp_path / "m.txt").read_text().split()[0])
        assert size == int((tmp_path / "c.txt").read_text().split()[0])


def test_certify_rejects_with_reason(tmp_path, capsys):
    graph = write(tmp_path, "g.txt", "2 2\n1 1\n2 2\n")
    matching = write(tmp_path, "m.txt", "1\n1 1\n")
    cover = write(tmp_path, "c.txt", "2 2\n1 1 1 1\n2 2 2 2\n")
    status, out, err = run(capsys, "certify", graph, matching, cover)
    assert status == 1 and out == ""
    assert err.strip() == "SizeMismatch matching_size=1 w_star=2"


def test_weighted_output_certifies_as_matching(tmp_path, capsys):
    graph = write(tmp_path, "g.txt", cmd_gen_text(30, 30, "uniform-intervals", seed=3, weights=(-5, 9)))
    status, out, _ = run(capsys, "solve", "--weighted", graph)
    assert status == 0
    g = formats.parse_graph(open(graph).read())
    from convexmatch import check_induced_matching

    assert check_induced_matching(g, formats.parse_matching(out)).valid


def test_bad_input_exit_codes(tmp_path, capsys):
    bad = write(tmp_path, "bad.txt", "1 3\n3 1\n")
    status, _, err = run(capsys, "solve", bad)
    assert status == 2 and "line 2" in err
    status, _, _ = run(capsys, "solve", str(tmp_path / "missing.txt"))
    assert status == 2
    status, _, _ = run(capsys, "solve", "--weighted", write(tmp_path, "u.txt", "1 1\n1 1\n"))
    assert status == 2
    status, _, _ = run(capsys, "gen", "--n-u", "3", "--n-v", "0")
    assert status == 2
    status, _, _ = run(capsys, "bench", "--sizes", "10", "--models", "nope")
    assert status == 2


# -- gen -------------------------------------------------------------------


def test_gen_is_deterministic(capsys):
    argv = ["gen", "--n-u", "50", "--n-v", "40", "--weights", "-3", "3", "--seed"]
    _, first, _ = run(capsys, *argv, "9")
    _, second, _ = run(capsys, *argv, "9")
    assert first == second
    _, other, _ = run(capsys, *argv, "10")
    assert other != first


def test_gen_full_intervals(capsys):
    _, out, _ = run(capsys, "gen", "--n-u", "4", "--n-v", "9", "--model", "full-intervals")
    assert out == "4 9\n" + "1 9\n" * 4


def test_gen_fixed_length():
    g = generate(GenSpec(200, 50, model="fixed-length", length=7, seed=1))
    assert all(r[1] - r[0] + 1 == 7 for r in g.rows)


def test_gen_shared_endpoints():
    g = generate(GenSpec(500, 100, model="shared-endpoint-adversarial", seed=1))
    assert len({r[1] for r in g.rows}) <= 10


def test_uniform_mean_length():
    n_v = 1000
    g = generate(GenSpec(10_000, n_v, seed=4))
    mean = g.edge_count / g.n_u
    assert abs(mean - expected_uniform_length(n_v)) <= 0.05 * expected_uniform_length(n_v)


# -- bench -----------------------------------------------------------------


def test_bench_empty_sizes(capsys):
    status, out, _ = run(capsys, "bench", "--sizes", "")
    assert (status, out) == (0, "algorithm,n_u,n_v,m,nanos\n")


def test_bench_rows(capsys):
    status, out, _ = run(capsys, "bench", "--sizes", "50,100", "--repetitions", "1")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["algorithm"] for r in rows} == {
        "unweighted:uniform-intervals",
        "weighted:uniform-intervals",
        "naive_dp:uniform-intervals",
    }
    assert all(int(r["nanos"]) > 0 for r in rows)


def test_bench_skips_naive_above_cap(capsys):
    status, out, _ = run(capsys, "bench", "--sizes", "1000", "--models", "full-intervals", "--repetitions", "1", "--algorithms", "unweighted,naive_dp")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["algorithm"] for r in rows] == ["unweighted:full-intervals"]
    assert rows[0]["m"] == str(10**6)
