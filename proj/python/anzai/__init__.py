"""Python access to the anzai library.

Every function takes JSON-compatible Python values (dicts and lists) in the same forms
the command-line tool reads from files, and returns decoded JSON.
"""

import json

from . import _anzai

Error = _anzai.Error

__all__ = [
    "Error",
    "absorb",
    "average_csv",
    "diagnose",
    "dominate",
    "example_zinf",
    "expect",
    "factorize",
    "report",
    "verify_ce",
]


def _dump(value):
    return None if value is None else json.dumps(value)


def report(system, n_max=8):
    return json.loads(_anzai.report(_dump(system), n_max))


def expect(system, observable, matrix=None, n_max=8):
    return json.loads(_anzai.expect(_dump(system), _dump(observable), _dump(matrix), n_max))


def factorize(problem, tol=1e-9, grid=4096):
    """Scalar input {"coeffs": [[k, c], ...]} or parametric {"system", "coeffs", "grid"}."""
    return json.loads(_anzai.factorize(_dump(problem), tol, grid))


def verify_ce(system, matrix=None, seed=0, samples=50, n_max=8, zgrid=16):
    return json.loads(_anzai.verify_ce(_dump(system), _dump(matrix), seed, samples, n_max, zgrid))


def dominate(system, observable, matrix, square=False, points=(), zgrid=16, tol=1e-9, n_max=8):
    return json.loads(
        _anzai.dominate(
            _dump(system), _dump(observable), _dump(matrix), square, list(points), zgrid, tol, n_max
        )
    )


def absorb(system, observable, tol=1e-9, n_max=8):
    return json.loads(_anzai.absorb(_dump(system), _dump(observable), tol, n_max))


def example_zinf(seed=0, tol=1e-12):
    return json.loads(_anzai.example_zinf(seed, tol))


def diagnose(system, observable, schedule=(), points=(), zgrid=16):
    return json.loads(
        _anzai.diagnose(_dump(system), _dump(observable), list(schedule), list(points), zgrid)
    )


def average_csv(system, observable, schedule=(), points=(), zgrid=16, cesaro=False):
    """CSV text with one row per point, fiber node and N."""
    return _anzai.average_csv(
        _dump(system), _dump(observable), list(schedule), list(points), zgrid, cesaro
    )
