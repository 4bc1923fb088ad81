import json

from fibword.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_examples(capsys):
    code, out, _ = run_cli(capsys, "gen", "mechanical", "13")
    assert code == 0 and out == "0100101001001\n"
    code, out, _ = run_cli(capsys, "gen", "q", "1")
    assert code == 0 and out == "aabb\n"
    code, out, _ = run_cli(capsys, "gen", "fibab", "5")
    assert code == 0 and out == "abaababa\n"
    code, out, _ = run_cli(capsys, "gen", "y", "3")
    assert code == 0 and out == "abaab\n"


def test_gen_morphic_equals_mechanical(capsys):
    for n in ("1", "13", "1000"):
        _, morphic, _ = run_cli(capsys, "gen", "morphic", n)
        _, mechanical, _ = run_cli(capsys, "gen", "mechanical", n)
        assert morphic == mechanical


def test_gen_csv_and_json(capsys):
    code, out, _ = run_cli(capsys, "gen", "mechanical", "5", "--format", "csv")
    assert code == 0
    assert out == "kind,index,word\nmechanical,5,01001\n"
    code, out, _ = run_cli(capsys, "gen", "mechanical", "5", "--format", "json")
    document = json.loads(out)
    assert document["schema_version"] == 1
    assert document["word"] == "01001"


def test_gen_invalid_index(capsys):
    code, _, err = run_cli(capsys, "gen", "mechanical", "0")
    assert code == 1
    assert "error" in err


def test_gen_unknown_kind(capsys):
    code = main(["gen", "nope", "5"])
    captured = capsys.readouterr()
    assert code == 1
    assert "invalid choice" in captured.err


def test_density_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "density", "13")
    assert code == 0
    assert "count1: 5" in out
    assert "density1: 0.384615" in out
    code, out, _ = run_cli(capsys, "density", "13", "--format", "json")
    document = json.loads(out)
    assert document["count1"] == 5
    assert document["density1"] == "0.384615"
    assert document["density1_exact"] == "5/13"
    assert document["deviation1_sign"] == 1
    code, out, _ = run_cli(capsys, "density", "1", "--format", "json")
    document = json.loads(out)
    assert document["count1"] == 0
    assert document["deviation1_sign"] == -1
    assert document["deviation1"] == "-0.381966"


def test_density_invalid(capsys):
    code, _, err = run_cli(capsys, "density", "0")
    assert code == 1 and "error" in err


def test_density_large_prefix_deviation_below_one(capsys):
    code, out, _ = run_cli(capsys, "density", "100000", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["count0"] + document["count1"] == 100000
    # rendered magnitude stays below 1; exactness is covered by library tests
    assert abs(float(document["deviation1"])) < 1
    assert document["deviation1_sign"] in (-1, 1)


def test_table_csv_single_row(capsys):
    code, out, _ = run_cli(capsys, "table", "--rows", "1", "--format", "csv")
    assert code == 0
    assert out == (
        "m,dens_a_q,dens_b_q,dens_a_y,dens_b_y\n"
        "3,0.571429,0.428571,0.600000,0.400000\n"
    )


def test_table_json_strings(capsys):
    code, out, _ = run_cli(capsys, "table", "--rows", "2", "--format", "json")
    document = json.loads(out)
    assert document["rows"][1] == {
        "m": "4",
        "dens_a_q": "0.600000",
        "dens_b_q": "0.400000",
        "dens_a_y": "0.625000",
        "dens_b_y": "0.375000",
    }


def test_table_cells_fixed_point(capsys):
    import re

    _, out, _ = run_cli(capsys, "table", "--rows", "20", "--format", "csv")
    assert "\r" not in out
    for line in out.splitlines()[1:]:
        m, *cells = line.split(",")
        assert m.isdigit()
        for cell in cells:
            assert re.fullmatch(r"0\.\d{6}", cell), cell


def test_table_invalid(capsys):
    code, _, err = run_cli(capsys, "table", "--rows", "0")
    assert code == 1 and "error" in err


def test_beatty_rows(capsys):
    code, out, _ = run_cli(capsys, "beatty", "4", "--format", "csv")
    assert code == 0
    assert out == "n,f1,f2\n1,1,2\n2,3,5\n3,4,7\n4,6,10\n"
    _, out, _ = run_cli(capsys, "beatty", "30", "--format", "csv")
    assert out.splitlines()[-1] == "30,48,78"
    code, out, _ = run_cli(capsys, "beatty", "1", "--format", "json")
    assert json.loads(out)["rows"] == [{"n": 1, "f1": 1, "f2": 2}]


def test_claims_single_id(capsys):
    code, out, _ = run_cli(
        capsys, "claims", "--id", "beatty-partition", "--sweep-n", "2000",
        "--scan-n", "1000", "--ball-cases", "200",
    )
    assert code == 0
    assert "beatty-partition: verified" in out


def test_claims_refuted_exit_zero(capsys):
    code, out, _ = run_cli(
        capsys, "claims", "--id", "pow-invariance", "--sweep-n", "2000",
        "--scan-n", "1000", "--ball-cases", "200",
    )
    assert code == 0
    assert "pow-invariance: refuted" in out
    assert "witness" in out


def test_claims_unknown_id(capsys):
    code, _, err = run_cli(capsys, "claims", "--id", "nope")
    assert code == 1 and "unknown claim id" in err


def test_claims_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "claims", "--id", "pow-value", "--format", "json",
        "--sweep-n", "2000", "--scan-n", "1000", "--ball-cases", "200",
    )
    document = json.loads(out)
    assert document["schema_version"] == 1
    record = document["claims"][0]
    assert set(record) == {"id", "location", "status", "witness", "payload"}
    assert record["status"] == "refuted"


def test_claims_csv_payload_column(capsys):
    code, out, _ = run_cli(
        capsys, "claims", "--id", "doubling-lucas-form", "--format", "csv",
        "--sweep-n", "2000", "--scan-n", "1000", "--ball-cases", "200",
    )
    lines = out.splitlines()
    assert lines[0] == "id,location,status,witness,payload"
    assert lines[1].startswith("doubling-lucas-form,")


def test_claims_all_lists_whole_registry(capsys):
    import csv as csv_module
    import io

    code, out, _ = run_cli(
        capsys, "claims", "--all", "--format", "csv",
        "--sweep-n", "2000", "--scan-n", "1000", "--ball-cases", "200",
    )
    assert code == 0
    rows = list(csv_module.reader(io.StringIO(out)))
    assert len(rows) == 1 + 19
    from fibword.claims import ALL_CLAIM_IDS

    assert [row[0] for row in rows[1:]] == sorted(ALL_CLAIM_IDS)


def test_deterministic_output(capsys):
    _, first, _ = run_cli(capsys, "table", "--rows", "11", "--format", "csv")
    _, second, _ = run_cli(capsys, "table", "--rows", "11", "--format", "csv")
    assert first == second
    _, a, _ = run_cli(
        capsys, "claims", "--format", "json", "--sweep-n", "2000",
        "--scan-n", "1000", "--ball-cases", "200",
    )
    _, b, _ = run_cli(
        capsys, "claims", "--format", "json", "--sweep-n", "2000",
        "--scan-n", "1000", "--ball-cases", "200",
    )
    assert a == b


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "beatty.csv"
    code, out, _ = run_cli(capsys, "beatty", "3", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "n,f1,f2\n1,1,2\n2,3,5\n3,4,7\n"


def test_missing_subcommand(capsys):
    code = main([])
    captured = capsys.readouterr()
    assert code == 1
    assert "usage" in captured.err.lower()
