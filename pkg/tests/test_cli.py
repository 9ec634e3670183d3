import json

import pytest

from syzdepth.cli import main

LCM_TRIANGLE = {"n": 3, "generators": [[1, 1, 0], [0, 1, 1], [1, 0, 1]]}
SQUARES = {"n": 2, "generators": [[2, 0], [1, 1], [0, 2]]}
MAXIMAL4 = {"n": 4, "generators": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0],
                                   [0, 0, 0, 1]]}


@pytest.fixture
def ideal_file(tmp_path):
    def write(payload, name="ideal.json"):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)
    return write


def run_json(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_resolve_taylor_ranks(ideal_file, capsys):
    code, data = run_json(["resolve", "--input", ideal_file(MAXIMAL4),
                           "--method", "taylor"], capsys)
    assert code == 0
    assert data["complex"]["ranks"] == [1, 4, 6, 4, 1]


def test_resolve_minimize_rank_table(ideal_file, capsys):
    code, data = run_json(["resolve", "--input", ideal_file(LCM_TRIANGLE),
                           "--method", "taylor", "--minimize"], capsys)
    assert code == 0
    assert data["rank_table"] == {"original": [1, 3, 3, 1], "minimized": [1, 3, 2]}


def test_resolve_check_certificate(ideal_file, capsys):
    code, data = run_json(["resolve", "--input", ideal_file(SQUARES),
                           "--check", "--box", "3,3"], capsys)
    assert code == 0
    assert data["exactness"]["ok"] and data["exactness"]["box"] == [3, 3]


def test_resolve_ek_rejects_nonstable(ideal_file, capsys):
    path = ideal_file({"n": 2, "generators": [[0, 1]]})
    code = main(["resolve", "--input", path, "--method", "ek"])
    err = capsys.readouterr().err
    assert code == 2
    assert "not stable" in err


def test_initial_boundary_matches_spec_example(ideal_file, capsys):
    code, data = run_json(["initial", "--input", ideal_file(SQUARES),
                           "--p", "1", "--basis", "boundary", "--oracle"], capsys)
    assert code == 0
    assert data["oracle_equal"]
    assert data["components"] == [[[1, 0]], [[1, 0]], []]


def test_initial_lex_basis(ideal_file, capsys):
    code, data = run_json(["initial", "--input", ideal_file(SQUARES),
                           "--p", "1", "--basis", "lex", "--oracle"], capsys)
    assert code == 0
    assert data["oracle_equal"]
    assert data["components"] == [[[0, 1]], [[0, 1]], []]


def test_initial_beyond_length(ideal_file, capsys):
    code, data = run_json(["initial", "--input", ideal_file(SQUARES),
                           "--p", "7", "--basis", "lex"], capsys)
    assert code == 0
    assert data["components"] == []


def test_sdepth_exact(ideal_file, capsys):
    code, data = run_json(["sdepth", "--input", ideal_file(MAXIMAL4),
                           "--mode", "exact"], capsys)
    assert code == 0
    assert data["sdepth"] == 2
    assert data["g"] == [1, 1, 1, 1]
    assert data["intervals"]


def test_sdepth_exact_quotient(ideal_file, capsys):
    code, data = run_json(["sdepth", "--input", ideal_file(MAXIMAL4),
                           "--mode", "exact", "--quotient"], capsys)
    assert code == 0
    assert data["sdepth"] == 0


def test_sdepth_shen_example(ideal_file, capsys):
    ci = {"n": 4, "generators": [[1, 0, 0, 0], [0, 1, 1, 1]]}
    code, data = run_json(["sdepth", "--input", ideal_file(ci), "--mode", "exact"],
                          capsys)
    assert code == 0
    assert data["sdepth"] == 3


def test_sdepth_filtration_bound(ideal_file, capsys):
    code, data = run_json(["sdepth", "--input", ideal_file(LCM_TRIANGLE),
                           "--mode", "filtration-bound", "--p", "1"], capsys)
    assert code == 0
    assert data["sdepth_lower_bound"] >= 2


def test_sdepth_sqfree_construct(ideal_file, capsys):
    gens = [[1 if j == i else 0 for j in range(5)] for i in range(5)]
    code, data = run_json(["sdepth", "--input", ideal_file({"n": 5, "generators": gens}),
                           "--mode", "sqfree-construct"], capsys)
    assert code == 0
    assert data["sdepth"] == 3 and data["bound"] == 3


def test_partition_command(ideal_file, capsys):
    code, data = run_json(["partition", "--input", ideal_file(LCM_TRIANGLE)], capsys)
    assert code == 0
    assert data["intervals"]
    assert all(set(iv) == {"a", "b"} for iv in data["intervals"])


def test_partition_rejects_nonsquarefree(ideal_file, capsys):
    code = main(["partition", "--input", ideal_file(SQUARES)])
    assert code == 2
    assert "squarefree" in capsys.readouterr().err


def test_bad_input_exit_codes(ideal_file, capsys, tmp_path):
    assert main(["resolve", "--input", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()
    bad = ideal_file({"n": 2, "generators": [[0, 0]]}, "zero.json")
    assert main(["resolve", "--input", bad]) == 2
    capsys.readouterr()
    bad2 = ideal_file({"n": 2, "generators": [[1, 2, 3]]}, "len.json")
    assert main(["resolve", "--input", bad2]) == 2


def test_verify_stream_and_replay(capsys):
    code = main(["verify", "--theorem", "regular", "--trials", "3", "--seed", "11"])
    first = capsys.readouterr().out
    assert code == 0
    assert len(first.strip().splitlines()) == 3
    code2 = main(["verify", "--theorem", "regular", "--trials", "3", "--seed", "11"])
    second = capsys.readouterr().out
    assert code2 == 0
    assert first == second  # identical (seed, caps) -> identical stream
    for line in first.strip().splitlines():
        report = json.loads(line)
        assert report["status"] == "PASS"
        assert "instance" in report


def test_verify_bad_theorem_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "nonsense"])
    assert exc.value.code == 2
