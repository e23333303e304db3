import io
import json
import subprocess
import sys

import pytest

from twinless.cli import EXIT_CHECK, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, main, run_bench
from twinless.generators import bidirect, gen_cycle, gen_random_2vc, gen_random_twinless_sc
from twinless.graph import serialize


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_cutpairs_v_on_c5(write):
    code, out, _ = run(["cutpairs-v", write(serialize(gen_cycle(5)))])
    assert code == EXIT_OK
    assert out == "".join(f"{v}\t3\n" for v in range(5))


def test_cutpairs_v_subtotals_sum(write):
    code, out, _ = run(["cutpairs-v", "--subtotals", "--check", write(serialize(gen_random_2vc(12, 20, 4)))])
    assert code == EXIT_OK
    for line in out.splitlines():
        v, total, *parts = map(int, line.split("\t"))
        assert total == sum(parts) and len(parts) == 5


def test_tsap_on_directed_triangle(write):
    code, out, _ = run(["tsap", write("p d 3 3\n0 1\n1 2\n2 0\n")])
    assert code == EXIT_OK
    assert out == "0\tstrong\t-\n1\tstrong\t-\n2\tstrong\t-\n"


def test_query_v_on_c5(write):
    code, out, _ = run(["query-v", write(serialize(gen_cycle(5))), "3"])
    assert code == EXIT_OK
    assert out.splitlines() == ["0\t1", "1\t2", "4\t0"]


def test_query_e_and_cutpairs_e(write):
    path = write(serialize(gen_cycle(4)))
    assert run(["query-e", path, "1", "0"])[1].splitlines() == ["1\t2", "2\t3", "3\t0"]
    assert run(["cutpairs-e", path])[1] == "0\t1\t3\n1\t2\t3\n2\t3\t3\n3\t0\t3\n"


def test_tsb_and_tscc_json(write):
    path = write(serialize(bidirect(gen_cycle(4))))
    code, out, _ = run(["tsb", path, "--format", "json"])
    assert code == EXIT_OK and json.loads(out) == {"twinless_strong_bridges": []}
    code, out, _ = run(["tscc", path, "--format", "json"])
    assert json.loads(out) == {"tsccs": [[0, 1, 2, 3]]}
    code, out, _ = run(["tsap", path, "--format", "json"])
    assert [r["tsccs_after"] for r in json.loads(out)["twinless_strong_articulation_points"]] == [3] * 4


def test_labels(write):
    code, out, _ = run(["labels", write(serialize(gen_cycle(4)))])
    assert code == EXIT_OK
    assert out.splitlines()[3].split("\t") == ["3", "2", "0", "0", "0", "0", "3", "3"]


@pytest.mark.parametrize(
    "argv_tail,text",
    [
        (["cutpairs-v"], "p u 3 2\n0 1\n1 2\n"),
        (["cutpairs-v"], "p u 4 2\n0 1\n2 3\n"),
        (["cutpairs-e"], "p u 6 7\n0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n"),
        (["tsap"], "p d 2 2\n0 1\n1 0\n"),
        (["tsb"], "p d 3 2\n0 1\n1 2\n"),
        (["query-v", "--", "9"], "p u 3 3\n0 1\n1 2\n2 0\n"),
        (["cutpairs-v"], "p d 3 3\n0 1\n1 2\n2 0\n"),
    ],
)
def test_precondition_and_parse_exits(write, argv_tail, text):
    path = write(text)
    argv = [argv_tail[0], path, *argv_tail[1:]]
    code, out, err = run(argv)
    assert out == ""
    expected = EXIT_PARSE if "p d" in text and argv_tail[0] == "cutpairs-v" else EXIT_PRECONDITION
    assert code == expected
    assert err


def test_precondition_witness(write):
    code, _, err = run(["cutpairs-v", write("p u 3 2\n0 1\n1 2\n")])
    assert code == EXIT_PRECONDITION
    assert "articulation point 1" in err
    code, _, err = run(["cutpairs-e", write("p u 6 7\n0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n")])
    assert "bridge 2 3" in err


def test_parse_errors(write, tmp_path):
    code, _, err = run(["cutpairs-v", write("p u 3 3\n0 1\n0 1\n1 2\n")])
    assert code == EXIT_PARSE and "line 3" in err
    code, _, err = run(["tscc", str(tmp_path / "missing.txt")])
    assert code == EXIT_PARSE


def test_check_mismatch_exit(write, monkeypatch):
    from twinless import cli, oracles

    monkeypatch.setattr(oracles, "oracle_count_v", lambda g, v: -1)
    code, _, err = run(["cutpairs-v", "--check", write(serialize(gen_cycle(5)))])
    assert code == EXIT_CHECK and "oracle" in err
    assert cli.EXIT_CHECK == 3


@pytest.mark.parametrize("cmd", ["tsap", "tsb", "tscc"])
def test_oracle_mode_matches_fast(write, cmd):
    path = write(serialize(gen_random_twinless_sc(9, 18, 5)))
    assert run([cmd, path])[1] == run([cmd, path, "--oracle"])[1]
    assert run([cmd, path, "--check"])[0] == EXIT_OK


def test_output_is_deterministic(write):
    path = write(serialize(gen_random_2vc(15, 30, 2)))
    first = run(["cutpairs-v", "--subtotals", path])[1]
    assert all(run(["cutpairs-v", "--subtotals", path])[1] == first for _ in range(3))


def test_bench():
    rows = run_bench("cutpairs-v", [64, 128], runs=2)
    assert [(n, m) for n, m, _ in rows] == [(64, 64), (128, 128)]
    code, out, _ = run(["bench", "cutpairs-e", "--n", "50", "--runs", "1", "--format", "json"])
    assert code == EXIT_OK and json.loads(out)["bench"][0]["n"] == 50


def test_module_entry_point(write):
    path = write(serialize(gen_cycle(5)))
    a = subprocess.run([sys.executable, "-m", "twinless", "cutpairs-v", path], capture_output=True, text=True)
    b = subprocess.run([sys.executable, "-m", "twinless", "cutpairs-v", path], capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout == "0\t3\n1\t3\n2\t3\n3\t3\n4\t3\n"
    bad = subprocess.run([sys.executable, "-m", "twinless", "cutpairs-v", write("p u 2 1\n0 1\n", "b.txt")], capture_output=True, text=True)
    assert bad.returncode == EXIT_PRECONDITION
