from bielliptic import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_genus(capsys):
    code, out, _ = run(capsys, "genus", "120", "--w", "w15")
    assert (code, out.strip()) == (0, "5")


def test_genus_trivial_subgroup(capsys):
    code, out, _ = run(capsys, "genus", "60")
    assert (code, out.strip()) == (0, "7")


def test_genus_usage_error(capsys):
    code, _, err = run(capsys, "genus", "120", "--w", "w7")
    assert code == 2
    assert "w7" in err


def test_group_genus(capsys):
    code, out, _ = run(capsys, "group-genus", "126", "--gens", "w9,V3*w7")
    assert (code, out.strip()) == (0, "1")


def test_fix_element(capsys):
    code, out, _ = run(capsys, "fix", "252", "--element", "V3*w7")
    assert (code, out.strip()) == (0, "24")


def test_fix_all(capsys):
    code, out, _ = run(capsys, "fix", "252", "--all")
    assert code == 0
    lines = dict(line.split("\t") for line in out.splitlines()[1:])
    assert lines["w63"] == "24"
    assert lines["V3*w252"] == "8"


def test_fix_needs_argument(capsys):
    code, _, err = run(capsys, "fix", "252")
    assert code == 2


def test_screen(capsys):
    code, out, _ = run(capsys, "screen", "92", "--w", "w4", "--trace")
    assert code == 0
    assert out.splitlines()[0] == "excluded"
    assert "castelnuovo" in out


def test_selftest_levels(capsys):
    code, out, _ = run(capsys, "selftest", "--genus-tables", "--levels", "60,120")
    assert code == 0
    assert "32 genus cells verified" in out


def test_selftest_fix_tables(capsys):
    code, out, _ = run(capsys, "selftest", "--fix-tables")
    assert code == 0
    assert "37 fixed-point counts verified" in out


def test_selftest_needs_selection(capsys):
    code, _, err = run(capsys, "selftest")
    assert code == 2


def test_missing_data_file(capsys):
    code, _, err = run(capsys, "screen", "84", "--w", "w3", "--ec", "/no/such/file")
    assert code == 3
    assert "missing data file" in err


def test_malformed_data_file(capsys, tmp_path):
    bad = tmp_path / "curves.txt"
    bad.write_text("15a 15 0 -\nbroken row\n")
    code, _, err = run(capsys, "screen", "84", "--w", "w3", "--ec", str(bad))
    assert code == 1
    assert "integrity failure" in err


def test_bad_verb(capsys):
    assert cli.main(["frobnicate"]) == 2


def test_classify_json(capsys, classification):
    import json

    code, out, _ = run(capsys, "classify", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert len(blob) == len(classification)
    record = next(r for r in blob if r["level"] == 90 and r["subgroup"] == "<w9>")
    assert record["status"] == "bielliptic-confirmed"
    assert record["witness"].startswith("V3*w10")


def test_quadpoints(capsys, classification):
    code, out, _ = run(capsys, "quadpoints")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == len(classification)
    assert "99 <w9> infinite(bielliptic:99a,rank 1)" in lines


def test_output_reproducible(capsys):
    code1, out1, _ = run(capsys, "fix", "120", "--all")
    code2, out2, _ = run(capsys, "fix", "120", "--all")
    assert (code1, code2) == (0, 0)
    assert out1 == out2
