"""Exact certificates for Veech groups: Thurston-Veech construction, trace
fields, Pisot numbers and the no-parabolic obstruction."""

import json

from . import _core
from ._core import Error, count_real_roots, count_roots_in_unit_disk, factor

__all__ = [
    "Error",
    "ay_report",
    "construct",
    "count_real_roots",
    "count_roots_in_unit_disk",
    "factor",
    "isolate_real_roots",
    "no_parabolic_certificate",
    "pisot_check",
    "pisot_lemma_check",
    "recheck",
    "run",
    "trace_plus_inverse_minpoly",
]


def _interval(lam):
    return None if lam is None else (str(lam[0]), str(lam[1]))


def isolate_real_roots(p):
    return json.loads(_core.isolate_real_roots(p))


def construct(system):
    """system: {"E": [[...]], "m": [...], "n": [...]} with integers or decimal strings."""
    return json.loads(_core.construct(json.dumps(system)))


def trace_plus_inverse_minpoly(p, lam=None):
    return _core.trace_plus_inverse_minpoly(p, _interval(lam))


def pisot_check(p):
    return json.loads(_core.pisot_check(p))


def pisot_lemma_check(p):
    return json.loads(_core.pisot_lemma_check(p))


def no_parabolic_certificate(p, lam=None):
    """lam optionally isolates the expansion factor as (lo, hi); default is the largest real root."""
    return json.loads(_core.no_parabolic_certificate(p, _interval(lam)))


def ay_report(n):
    return json.loads(_core.ay_report(n))


def recheck(certificate):
    return _core.recheck(json.dumps(certificate))


def run(*args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run(list(args))
