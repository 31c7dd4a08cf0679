import json

from polydec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_meet_worked_example(capsys):
    code, out, _ = run(
        capsys, "meet", "--field", "GF(3)", "x^27+2*x^9+x^3+2*x", "x^9+x^3+x"
    )
    assert code == 0 and out.strip() == "x^3+2*x"


def test_join_worked_example(capsys):
    code, out, _ = run(
        capsys, "join", "--field", "GF(3)", "x^27+2*x^9+x^3+2*x", "x^9+x^3+x"
    )
    assert code == 0 and out.strip() == "x^81+x^27+2*x^9+x^3+x"


def test_decompose_no_decomposition_exits_1(capsys):
    code, out, _ = run(
        capsys,
        "decompose", "--field", "GF(5)", "--strategy", "sep",
        "--shape", "5,5", "x^25+x^5+x",
    )
    assert code == 1 and "no decomposition" in out


def test_decompose_wild_pairs(capsys):
    code, out, _ = run(
        capsys,
        "decompose", "--field", "GF(5)", "--strategy", "sep",
        "--shape", "25,5", "x^125+x^25+x^5+x",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert "(x^25+x) o (x^5+x)" in lines


def test_decompose_json_schema(capsys):
    code, out, _ = run(
        capsys,
        "decompose", "--field", "GF(5)", "--strategy", "sep", "--json",
        "--shape", "25,5", "x^125+x^25+x^5+x",
    )
    assert code == 0
    payload = json.loads(out)
    assert isinstance(payload, list) and len(payload) == 3
    for rec in payload:
        assert set(rec) == {"target", "field", "factors", "complete"}
        assert rec["field"] == "GF(5)"
        assert rec["target"] == "x^125+x^25+x^5+x"
        assert len(rec["factors"]) == 2


def test_compose_and_assert_additive(capsys):
    code, out, _ = run(
        capsys, "compose", "--field", "GF(5)", "x^25+x", "x^5+x"
    )
    assert code == 0 and out.strip() == "x^125+x^25+x^5+x"
    code, _out, err = run(
        capsys, "compose", "--field", "GF(5)", "--assert-additive", "x^2+x", "x"
    )
    assert code == 2 and "p-power" in err


def test_similar_true_and_false(capsys):
    code, out, _ = run(capsys, "similar", "--field", "GF(2)", "x^2+x", "x^2+x")
    assert code == 0 and out.startswith("true witness=")
    code, out, _ = run(capsys, "similar", "--field", "GF(2)", "x^2", "x^2+x")
    assert code == 1 and out.strip() == "false"


def test_transmute(capsys):
    code, out, _ = run(capsys, "transmute", "--field", "GF(2)", "x^2", "x^2")
    assert code == 1 and "no transmutation" in out
    code, out, _ = run(capsys, "transmute", "--field", "GF(5)", "x^5+3*x", "x^5+2*x")
    assert code in (0, 1)


def test_counts(capsys):
    code, out, _ = run(capsys, "counts", "2", "2", "1")
    assert code == 0 and out.strip() == "S=3 T=3 F=3"


def test_chebyshev(capsys):
    code, out, _ = run(capsys, "chebyshev", "--field", "GF(7)", "3")
    assert code == 0 and out.strip() == "4*x^3+4*x"


def test_minaddmult(capsys):
    code, out, _ = run(capsys, "minaddmult", "--field", "GF(3)", "x+2")
    assert code == 0 and out.strip() == "x^3+2*x"


def test_basis(capsys):
    code, out, _ = run(
        capsys, "basis", "--field", "GF(2)[g1]/(g1^2+g1+1)", "x^4+x"
    )
    assert code == 0 and len(out.strip().splitlines()) == 2


def test_all_complete(capsys):
    code, out, _ = run(
        capsys, "all-complete", "--field", "GF(2)[g1]/(g1^2+g1+1)", "x^4+x"
    )
    assert code == 0 and len(out.strip().splitlines()) == 3
    code, out, _ = run(
        capsys, "all-complete", "--field", "GF(2)[g1]/(g1^2+g1+1)",
        "--limit", "2", "x^4+x",
    )
    assert len(out.strip().splitlines()) == 2


def test_complete(capsys):
    code, out, _ = run(capsys, "complete", "--field", "GF(2)", "x^12+x^9+x^6+x^3")
    assert code == 0 and out.strip() == "(x^3) o (x^2+x) o (x^2+x)"


def test_absdec(capsys):
    code, out, _ = run(capsys, "absdec", "--field", "GF(5)", "x^25+x^5+x")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("field: GF(5)[g1]/(")
    code, out, _ = run(capsys, "absdec", "--field", "GF(5)", "--json", "x^25+x^5+x")
    rec = json.loads(out)
    assert rec["complete"] and len(rec["factors"]) == 2


def test_ratdec(capsys):
    code, out, _ = run(
        capsys, "ratdec", "--field", "GF(5)", "--shape", "2,0,2,1",
        "x^4/(x^2+2*x+1)",
    )
    assert code == 0 and out.strip() == "(x^2) o (x^2/(x+1))"
    code, out, _ = run(
        capsys, "ratdec", "--field", "GF(5)", "--shape", "4,0,1,1", "x^4/(x^2+2*x+1)"
    )
    assert code == 1


def test_usage_errors_exit_2(capsys):
    code, _out, err = run(capsys, "meet", "--field", "GF(6)", "x", "x")
    assert code == 2 and "error" in err
    code, _out, _err = run(capsys, "nonsense")
    assert code == 2
    code, _out, err = run(capsys, "meet", "--field", "GF(3)", "x^2+x", "x^3")
    assert code == 2  # non-additive input to an additive subcommand


def test_byte_identical_reruns(capsys):
    args = [
        "decompose", "--field", "GF(5)", "--strategy", "sep",
        "--shape", "25,5", "--seed", "9", "x^125+x^25+x^5+x",
    ]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("ok ") >= 20


def test_decompose_irreducible_strategy(capsys):
    code, out, _ = run(
        capsys, "decompose", "--field", "GF(2)", "--strategy", "irred",
        "--shape", "2,2", "x^4+x+1",
    )
    assert code == 0 and out.strip() == "(x^2+x+1) o (x^2+x)"


def test_all_complete_requires_additive_input(capsys):
    code, _out, err = run(capsys, "all-complete", "--field", "GF(2)", "x^3+x")
    assert code == 2 and "p-power" in err


def test_non_monic_input_is_normalized_with_note(capsys):
    code, out, _ = run(
        capsys, "decompose", "--field", "GF(5)", "--strategy", "sep",
        "--shape", "25,5", "2*x^125+2*x^25+2*x^5+2*x",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("note: input scaled by 3")
    assert len(lines) == 4
