from fractions import Fraction

import pytest

from ppgroups import hstep
from ppgroups.cli import main, parse_map
from ppgroups.group import parse, realize
from ppgroups.numeric import QuadExt, parse_quad
from ppgroups.piecewise import compose, parse_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_seq_fixed_tail(capsys):
    assert run(capsys, "eval-seq", "y[10]", "10(0)") == (0, "10(0)\n", "")


def test_eval_seq_moves_sequence(capsys):
    code, out, _ = run(capsys, "eval-seq", "y", "01(1)")
    assert code == 0 and out == "10(1)\n"


def test_abelianize(capsys):
    assert run(capsys, "abelianize", "x", "--group", "g0")[1] == "(1,0,0)\n"
    assert run(capsys, "abelianize", "y")[1] == "(-1,1,1)\n"


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "y[10] x")
    assert code == 0 and out == "x y[110]\n"
    assert run(capsys, "normalize", "x x^-1")[1] == "1\n"


def test_eval_real(capsys):
    assert run(capsys, "eval-real", "x", "3/2")[1] == "5/2\n"
    assert run(capsys, "eval-real", "y[1]", "inf")[1] == "inf\n"


def test_realize_round_trips(capsys):
    _, out, _ = run(capsys, "realize", "x[1] y[10]")
    assert parse_text(out) == realize(parse("x[1] y[10]"))


def test_member(capsys):
    assert run(capsys, "member", "x[1] y[10] x[1]^-1 y[10]^-1", "G0prime")[1] == "true\n"
    assert run(capsys, "member", "y[10]", "Gprime")[1] == "false\n"


def test_relcheck(capsys):
    code, out, _ = run(capsys, "relcheck", "--max-depth", "2")
    assert code == 0
    assert out.strip().endswith("all instances pass")


def test_relcheck_default_depth(capsys):
    code, out, _ = run(capsys, "relcheck", "--max-depth", "3", "--jobs", "2")
    assert code == 0 and "510 instances" in out and "all instances pass" in out


def test_syntax_error_exit_code(capsys):
    code, out, err = run(capsys, "normalize", "x[12]")
    assert code == 2 and out == "" and "syntax error" in err


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "abelianize", "y[1]", "--group", "g0")
    assert code == 1 and err
    assert run(capsys, "hstep", "gamma", "-1")[0] == 1


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    assert run(capsys, "eval-seq", "x", "10")[0] == 2


def test_hstep_commands(capsys):
    _, out, _ = run(capsys, "hstep", "gamma", "1")
    assert parse_text(out) == hstep.gamma(1).map
    _, out, _ = run(capsys, "hstep", "lambda", "-2", "--n", "3")
    assert parse_text(out) == hstep.lambda_n(3, -2).map
    _, out, _ = run(capsys, "hstep", "step", "left", "2", "1/2")
    assert parse_text(out) == hstep.step_left(2, Fraction(1, 2))


def test_hstep_compactify(capsys):
    code, out, _ = run(capsys, "hstep", "compactify", "translate:1", "gamma:1*step_left:1:2")
    assert code == 0
    assert "identities verified" in out.splitlines()[0]
    assert "## t2" in out


def test_map_expressions_compose_as_functions():
    # rightmost term acts first: gamma_2, then the translation
    f = parse_map("translate:1*gamma:2")
    assert f == compose(parse_map("translate:1"), hstep.gamma(2).map)
    assert f(QuadExt(5)) == 8 and f(QuadExt(-3)) == -2
    assert parse_map("word:x") == parse_map("x") == parse_map("translate:1")


def test_plot_csv_is_exact(capsys):
    code, out, _ = run(capsys, "plot", "gamma:1", "--range", "-1", "1", "--samples", "5",
                       "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "t_exact,t_decimal,f_exact,f_decimal"
    f = hstep.gamma(1).map
    ts = []
    for line in lines[1:]:
        t_exact, _, f_exact, _ = line.split(",")
        t = Fraction(t_exact)
        ts.append(t)
        assert parse_quad(f_exact) == f(QuadExt(t))
    assert ts == [-1, Fraction(-1, 2), 0, Fraction(1, 2), 1]


def test_plot_svg(capsys):
    code, out, _ = run(capsys, "plot", "lambda:-1", "--samples", "20", "--format", "svg")
    assert code == 0 and out.startswith("<svg") and "polyline" in out


def test_plot_rejects_empty_range(capsys):
    assert run(capsys, "plot", "x", "--range", "2", "1")[0] == 2
