import io
import json

import pytest

from permhopf import cli
from permhopf.formal import SSYM_M
from permhopf.syntax import element_from_json, parse_element


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


M12_21 = "M[1243] + M[1342] + M[1423] + 3*M[1432] + M[2341] + 2*M[2431] + M[3421] + M[4123] + 2*M[4132] + M[4231] + M[4312]"


def test_product():
    assert run("product", "M[12]", "M[21]") == (0, M12_21 + "\n", "")
    assert run("antipode", "F[1]")[1] == "-F[1]\n"
    assert run("product", "Mq[(2)]", "Mq[(1,1)]")[1] == "Mq[(1,1,2)] + Mq[(1,2,1)] + Mq[(1,3)] + Mq[(2,1,1)] + Mq[(3,1)]\n"


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("coproduct", "M[4312]"), "M[] ⊗ M[4312] + M[1] ⊗ M[312] + M[21] ⊗ M[12] + M[4312] ⊗ M[]"),
        (("antipode-power", "-k", "4", "M[231]"), "-4*M[132] + 4*M[213] + M[231]"),
        (("convert", "--to", "F", "M[4123]"), "F[4123] - F[4132] - F[4213] + F[4321]"),
        (("convert", "--to", "M", "Fq[(2)]"), "Mq[(1,1)] + Mq[(2)]"),
        (("descent-map", "--check", "M[231]"), "Mq[(2,1)]"),
        (("descent-map", "M[213]"), "0"),
        (("split-z", "Mq[{2}@4]"), "M[3412]"),
        (("mobius", "weak", "4123", "4321"), "1"),
        (("mobius", "boolean", "(2,1)", "(1,1,1)"), "-1"),
        (("alpha", "12", "21", "2431"), "2"),
        (("kappa", "3412", "3412"), "1"),
        (("lambda", "231", "312"), "1"),
        (("primitives", "-n", "3"), "{123, 132, 213}"),
        (("kernel-basis", "-n", "3"), "{132, 213}"),
        (("kernel-test", "M[132]"), "true"),
        (("sigma", "()", "()"), "M[]"),
        (("sigma", "(1)", "{}@1"), "0"),
    ],
)
def test_subcommands(argv, expected):
    code, out, err = run(*argv)
    assert (code, err) == (0, "")
    assert out.splitlines()[0] == expected


def test_witnesses():
    code, out, _ = run("alpha", "12", "21", "2431", "--witnesses")
    assert out == "2\nwitnesses: {1234, 1324}\n"
    code, out, _ = run("alpha", "12", "21", "2431", "--witnesses", "--json")
    assert json.loads(out) == {"count": 2, "witnesses": [[1, 2, 3, 4], [1, 3, 2, 4]]}
    assert run("lambda", "231", "312", "--witnesses")[1] == "1\nwitnesses: {{1}@3, {2}@3, {1,2}@3}\n"
    assert run("kappa", "3412", "3412", "--witnesses")[1] == "1\nwitnesses: {3412}\n"


def test_coradical_level_output():
    code, out, _ = run("coradical-level", "M[4312]")
    assert out.startswith("3\ncertificate: ")
    code, out, _ = run("coradical-level", "M[4312]", "--json")
    assert json.loads(out)["level"] == 3


def test_json_output_round_trips():
    code, out, _ = run("product", "M[12]", "M[21]", "--json")
    data = json.loads(out)
    assert data["algebra"] == "SSym" and data["basis"] == "M"
    assert element_from_json(data) == parse_element(M12_21)


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (("product", "M[12", "M[1]"), "position 0"),
        (("product", "M[12]", "F[21]"), "SSym/M"),
        (("antipode", "F[1223]"), "duplicate"),
        (("primitives", "-n", "9"), "--max-degree"),
        (("alpha", "12", "21", "123"), "degree"),
        (("sigma", "(0)", "()"), "positive"),
        (("no-such-command",), ""),
    ],
)
def test_domain_errors_exit_1(argv, fragment, capsys):
    code, out, err = run(*argv)
    assert code == 1
    assert fragment in err + capsys.readouterr().err


def test_degree_guard_override():
    code, out, _ = run("primitives", "-n", "9", "--max-degree", "9")
    assert code == 0 and out.startswith("{123456789, ")


def test_verify():
    code, out, _ = run("verify", "--degree", "4")
    assert code == 0 and out.count("all axioms hold") == 2


def test_verify_failure_exits_2(monkeypatch):
    from permhopf.formal import HopfAxiomReport, Violation

    def broken(algebra, degree):
        r = HopfAxiomReport(degree)
        r.violations.append(Violation("associativity", SSYM_M, ()))
        return r

    monkeypatch.setattr(cli, "verify_hopf_axioms", broken)
    assert run("verify", "--degree", "2", "--algebra", "SSym")[0] == 2


def test_worked_examples_deterministic_and_golden(tmp_path):
    first, second = run("paper-examples"), run("paper-examples")
    assert first[0] == 0 and first == second
    assert first[1] == cli.golden_text()
    bad = tmp_path / "golden.txt"
    bad.write_text(first[1].replace("2*F[231]", "3*F[231]"), encoding="utf-8")
    code, out, err = run("paper-examples", "--golden", str(bad))
    assert code == 2
    assert "-S(F[231]): F[132] - F[213] - 3*F[231] + F[312]" in out
    assert "+S(F[231]): F[132] - F[213] - 2*F[231] + F[312]" in out


def test_worked_examples_json_round_trip():
    code, out, _ = run("paper-examples", "--json")
    assert code == 0
    entries = cli.report_from_json(out)
    assert cli.render_report(entries) == cli.golden_text()
    assert cli.report_to_json(entries) == out
