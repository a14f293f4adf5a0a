import pytest

import quasi_shuffle_signature.cli.dimension_table as dimension_table
import quasi_shuffle_signature.cli.hoffman_calculator as hoffman_calculator
import quasi_shuffle_signature.cli.qsh_calculator as qsh_calculator
import quasi_shuffle_signature.cli.qsig as qsig


@pytest.mark.parametrize(
    "argv,expected",
    [(["prod", "[2]", "[3]"], "[2][3] + [3][2] + [2,3]"),
     (["prod", "e", "[1]"], "[1]"),
     (["shuffle", "[1,2]", "[3]"], "[1,2][3] + [3][1,2]"),
     (["concat", "[1]", "[2,3]"], "[1][2,3]"),
     (["half-qsh", "diamond", "[1]", "[2]"], "[1,2]"),
     (["half-sh", "right", "[1]", "[2]"], "[1][2]"),
     (["antipode", "[1]"], "-[1]"),
     (["coproduct", "e"], "e ⊗ e"),
     (["--d", "3", "prod", "[2]", "[3]"], "[2][3] + [3][2] + [2,3]")]
)
def test_qsh_cli(argv, expected, capsys):
    assert qsh_calculator.main(argv) == 0
    assert capsys.readouterr().out == expected + "\n"


def test_qsh_cli_errors(capsys):
    assert qsh_calculator.main(["--d", "2", "prod", "[2]", "[3]"]) == 2
    assert capsys.readouterr().err.startswith("qsig qsh: error:")

    assert qsh_calculator.main(["prod", "[2", "[3]"]) == 2
    assert "unmatched '['" in capsys.readouterr().err

    assert qsh_calculator.main(["half-qsh", "up", "[1]", "[2]"]) == 2
    assert qsh_calculator.main(["half-sh", "right", "e", "[2]"]) == 2

    with pytest.raises(SystemExit):
        qsh_calculator.main(["prod", "[1]"])


@pytest.mark.parametrize(
    "argv,expected",
    [(["exp", "[1][2]"], "[1][2] + 1/2 [1,2]"),
     (["log", "[1][2]"], "[1][2] - 1/2 [1,2]"),
     (["exp", "e"], "e"),
     (["remainder", "[1][2]"], "1/2 [1,2]")]
)
def test_hoffman_cli(argv, expected, capsys):
    assert hoffman_calculator.main(argv) == 0
    assert capsys.readouterr().out == expected + "\n"


def test_hoffman_cli_errors(capsys):
    assert hoffman_calculator.main(["exp", "[3]", "--d", "2"]) == 2
    assert capsys.readouterr().err.startswith("qsig hoffman: error:")
    with pytest.raises(SystemExit):
        hoffman_calculator.main(["sin", "[1]"])


def test_dims_cli(capsys):
    assert dimension_table.main(["--d", "1", "--max-n", "4"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "n   0 1 2 3 4",
        "dim 1 1 2 4 8",
        "cross-check (enumeration checked for n <= 4; "
        "Hilbert series checked for n <= 4): OK"
    ]

    assert dimension_table.main(
        ["--d", "2", "--max-n", "4", "--enumerate-up-to", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n   0 1 2  3  4"
    assert lines[1] == "dim 1 2 7 24 82"
    assert "enumeration checked for n <= 2" in lines[2]

    assert dimension_table.main(["--d", "0", "--max-n", "2"]) == 2


def test_qsig_dispatcher(capsys):
    assert qsig.main(["qsh", "prod", "[1]", "[1]"]) == 0
    assert capsys.readouterr().out == "2 [1][1] + [1,1]\n"

    assert qsig.main(["qsh", "--d", "1", "prod", "[1]", "[2]"]) == 2
    assert capsys.readouterr().err.startswith("qsig qsh: error:")

    assert qsig.main(["hoffman", "exp", "[1][2]"]) == 0
    assert capsys.readouterr().out == "[1][2] + 1/2 [1,2]\n"

    with pytest.raises(SystemExit):
        qsig.main(["frobnicate"])
