import logging
import multiprocessing
import random
from fractions import Fraction

import pytest

from pgl3.algebra.parser import parse_expr
from pgl3.algebra.positivity import Positivity, is_positive_laurent, random_positive_point
from pgl3.algebra.ratfunc import RatFunc, as_laurent, derivative, eval_at, format_expr, substitute
from pgl3.core.config import Settings, settings
from pgl3.core.exceptions import (
    CheckFailedError,
    DenominatorVanishesError,
    InvalidInputError,
    ParseError,
    PoleError,
    SearchCapExceededError,
)
from pgl3.core.logging import configure_logging
from pgl3.services.workers import run_parallel


X, Y, Z, W = (RatFunc.var(n) for n in "XYZW")


# configuration and errors


def test_settings_defaults():
    s = Settings()
    assert s.POISSON_CONSTANT == 2
    assert s.TOLERANCE == 1e-9
    assert s.QUANTUM_ORDERS == [5, 7]
    assert s.echo()["RNG_SEED"] == s.RNG_SEED


def test_settings_reject_bad_poisson_constant():
    with pytest.raises(ValueError):
        Settings(POISSON_CONSTANT=3)


def test_settings_read_environment(monkeypatch):
    monkeypatch.setenv("JOBS", "3")
    assert Settings().JOBS == 3


def test_error_exit_codes():
    assert InvalidInputError("x").exit_code == 2
    assert CheckFailedError("x").exit_code == 1
    assert SearchCapExceededError("x", states=5).exit_code == 1


def test_error_document():
    doc = SearchCapExceededError("too many", states=10, cap=5).to_dict()
    assert doc["error"] == "too many"
    assert doc["type"] == "SearchCapExceededError"
    assert doc["statistics"] == {"states": 10, "cap": 5}


def test_logging_goes_to_stderr(capsys):
    configure_logging("info")
    logging.getLogger("pgl3.test").info("hello")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "hello" in captured.err
    configure_logging(settings.LOG_LEVEL)


def tolerance_in_worker(_):
    return settings.TOLERANCE


@pytest.mark.parametrize("start_method", ["spawn", "fork"])
def test_workers_see_overridden_settings(monkeypatch, start_method):
    if start_method not in multiprocessing.get_all_start_methods():
        pytest.skip(f"{start_method} is not available")
    monkeypatch.setattr(settings, "TOLERANCE", 0.125)
    assert run_parallel(tolerance_in_worker, range(4), jobs=2, start_method=start_method) == [0.125] * 4


def test_single_job_runs_in_process():
    assert run_parallel(abs, [-1, 2, -3], jobs=1) == [1, 2, 3]


# rational functions


def test_arithmetic_is_canonical():
    assert (X + Y) + Z == X + (Y + Z)
    assert X * Y == Y * X
    assert (X**2 - Y**2) / (X - Y) == X + Y


def test_division_then_multiplication(rng):
    for _ in range(10):
        a = X * rng.randint(1, 5) + Y ** rng.randint(1, 3) + 1
        b = Z * rng.randint(1, 5) - X + 2
        assert a / b * b == a


def test_inverse_is_involution():
    assert substitute(substitute(X, {"X": X.inverse()}), {"X": X.inverse()}) == X


def test_substitute_direct_image():
    assert substitute(X / Z, {"X": X * (1 + Z)}) == X * (1 + Z) / Z


def test_substitute_is_a_homomorphism():
    images = {"X": X + 1, "Y": X * Y}
    a, b = X / (1 + Y), Y + X**2
    assert substitute(a * b, images) == substitute(a, images) * substitute(b, images)


def test_substitute_composes():
    first = {"X": X * Y, "Y": 1 + Y}
    second = {"X": X + Y, "Y": Y / X}
    expr = X**2 / (1 + Y)
    composed = {k: substitute(v, first) for k, v in second.items()}
    assert substitute(substitute(expr, second), first) == substitute(expr, composed)


def test_substitute_vanishing_denominator():
    with pytest.raises(DenominatorVanishesError):
        substitute(1 / (X - Y), {"X": Y})


def test_eval_at():
    assert eval_at((1 + Z) / (X * Z * (1 + W)), {"X": 1, "Z": 1, "W": 1}) == 1
    assert eval_at(X, {"X": Fraction(3, 7)}) == Fraction(3, 7)


def test_eval_at_pole():
    with pytest.raises(PoleError) as exc:
        eval_at(1 / (X - 1), {"X": 1})
    assert "X" in exc.value.factor


def test_derivative():
    assert derivative(X**3 * Y, "X") == 3 * X**2 * Y
    assert derivative(X, "Y") == 0


def test_laurent_form():
    laurent = as_laurent(X + 2 / X)
    assert laurent.variables == ("X",)
    assert sorted(laurent.coefficients()) == [1, 2]
    assert laurent.to_ratfunc() == X + 2 / X


def test_parse_expr():
    assert parse_expr("X*(1+Z)/Z") == X * (1 + Z) / Z
    assert parse_expr("X^-1 + 2") == X.inverse() + 2
    assert parse_expr(format_expr((1 + X) / (Y * Z))) == (1 + X) / (Y * Z)


@pytest.mark.parametrize("text", ["", "X +", "(X", "X $ Y"])
def test_parse_expr_errors(text):
    with pytest.raises(ParseError):
        parse_expr(text)


def test_invalid_variable_name():
    with pytest.raises(ParseError):
        RatFunc.var("1X")


# positivity


def test_positive_laurent():
    assert is_positive_laurent(X + 2 / X).status is Positivity.POSITIVE_LAURENT


def test_positive_ratio_needs_a_multiplier():
    cert = is_positive_laurent(1 - X + X**2)
    assert cert.status is Positivity.POSITIVE_RATIO
    assert cert.multiplier is not None


def test_negative_witness():
    cert = is_positive_laurent(X - 1, rng=random.Random(7), samples=100)
    assert cert.status is Positivity.NEGATIVE_WITNESS
    assert eval_at(X - 1, cert.witness) <= 0


def test_positive_laurent_is_positive_at_samples(rng):
    expr = X * Y + 3 / Z + Y / (X * Z)
    assert is_positive_laurent(expr).status is Positivity.POSITIVE_LAURENT
    for _ in range(100):
        assert eval_at(expr, random_positive_point("XYZ", rng)) > 0
