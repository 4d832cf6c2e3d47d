"""Command-line interface: outputs and the exit-code contract."""

import json

from galmod import serialize
from galmod.cli import main
from galmod.groups import symmetric_group_3


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cohomology_text_output(capsys):
    code, out, _ = run(capsys, "cohomology", "--group", "fixtures:Z2",
                       "--lattice", "fixtures:sign", "--degree", "1")
    assert code == 0
    assert out.strip() == "invariant factors: [2]"


def test_cohomology_json_output(capsys):
    code, out, _ = run(capsys, "cohomology", "--lattice", "fixtures:sign",
                       "--degree", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["invariant_factors"] == [2]
    assert payload["format"] == "galmod-report-1"


def test_cohomology_with_subgroup(capsys):
    code, out, _ = run(capsys, "cohomology", "--lattice",
                       "fixtures:s3-sign", "--degree", "1",
                       "--subgroup", "0,2,5")
    assert code == 0
    # the sign character is trivial on A3
    assert out.strip() == "invariant factors: []"


def test_tate_and_hyper(capsys):
    code, out, _ = run(capsys, "tate", "--lattice", "fixtures:sign",
                       "--degree", "-1")
    assert code == 0 and out.strip() == "invariant factors: [2]"
    code, out, _ = run(capsys, "hyper", "--complex", "fixtures:z2-mult2",
                       "--degree", "1")
    assert code == 0 and out.strip() == "invariant factors: [2]"


def test_classify_verdicts(capsys):
    code, out, _ = run(capsys, "classify", "--lattice",
                       "fixtures:z2-regular", "--mode", "coflasque")
    assert code == 0
    assert out.splitlines()[0] == "coflasque: yes"
    code, out, _ = run(capsys, "classify", "--lattice", "fixtures:sign",
                       "--mode", "flasque")
    assert code == 1
    assert out.splitlines()[0] == "flasque: no"


def test_resolve_with_certificate_replay(capsys):
    code, out, _ = run(capsys, "resolve-coflasque", "--complex",
                       "fixtures:sign-deg0", "--verify-certificate")
    assert code == 0
    assert "replay: ok" in out
    code, out, _ = run(capsys, "resolve-flasque", "--complex",
                       "fixtures:z2-aug", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    cert = serialize.load_certificate(payload["certificate"])
    assert cert.mode == "flasque"


def test_crossed_h0(capsys):
    code, out, _ = run(capsys, "crossed-h0", "--crossed",
                       "fixtures:z2-z2-order4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["h_zero_order"] == 4
    assert payload["h_minus_one_order"] == 2


def test_sha_and_mv_report(capsys):
    code, out, _ = run(capsys, "sha", "--graph",
                       "fixtures:single-trivial-vertex",
                       "--lattice", "fixtures:sign", "--degree", "1")
    assert code == 0 and out.strip() == "invariant factors: [2]"
    code, out, _ = run(capsys, "mv-report", "--graph",
                       "fixtures:two-vertex-whole",
                       "--complex", "fixtures:sign-deg-1")
    assert code == 0
    assert "degree -1" in out


def test_remark_compare(capsys):
    code, out, _ = run(capsys, "remark-compare", "--graph",
                       "fixtures:two-vertex-whole",
                       "--complex", "fixtures:sign-deg-1")
    assert code == 0
    assert "all agree: True" in out


def test_refine(capsys):
    code, out, _ = run(capsys, "refine", "--graph",
                       "fixtures:s3-transposition-vertex",
                       "--subgroup", "0 2 5")
    assert code == 0
    assert out.splitlines()[0].startswith("refined: 1 vertices")


def test_shapiro_exit_codes(capsys):
    code, out, _ = run(capsys, "shapiro", "--group", "fixtures:S3",
                       "--subgroup", "0,2,5", "--degree", "1")
    assert code == 0
    assert "isomorphic: True" in out


def test_sylow_cyclic(capsys):
    code, _, _ = run(capsys, "sylow-cyclic", "--group", "fixtures:S3")
    assert code == 0
    code, _, _ = run(capsys, "sylow-cyclic", "--group", "fixtures:Z2xZ2")
    assert code == 1


def test_snf_from_file(capsys, tmp_path):
    path = tmp_path / "mat.json"
    path.write_text(json.dumps({"matrix": [[2, 0], [0, 3]]}))
    code, out, _ = run(capsys, "snf", "--matrix", str(path))
    assert code == 0
    assert "invariant factors: [1, 6]" in out


def test_fixtures_listing(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0
    assert "sign" in out and "S3" in out


def test_input_errors_exit_two(capsys):
    code, _, err = run(capsys, "cohomology", "--lattice",
                       "fixtures:no-such-thing", "--degree", "1")
    assert code == 2
    code, _, err = run(capsys, "cohomology", "--lattice", "fixtures:sign",
                       "--degree", "9")
    assert code == 2
    code, _, _ = run(capsys, "cohomology", "--degree", "1")
    assert code == 2
    code, _, _ = run(capsys, "no-such-command")
    assert code == 2
    code, _, err = run(capsys, "shapiro", "--group", "fixtures:S3",
                       "--subgroup", "1,2", "--degree", "1")
    assert code == 2


def test_size_limit_exit_three(capsys):
    code, _, err = run(capsys, "crossed-h0", "--crossed",
                       "fixtures:s3-identity", "--size-limit", "10")
    assert code == 3
    assert "size limit" in err


def test_group_table_mismatch(capsys):
    code, _, err = run(capsys, "cohomology", "--group", "fixtures:Z3",
                       "--lattice", "fixtures:sign", "--degree", "1")
    assert code == 2
    assert "does not match" in err
