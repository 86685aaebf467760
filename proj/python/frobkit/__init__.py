"""Exact class-count computations for Frobenius groups, near-fields and
groups of Lie type."""

import json

from ._frobkit import (
    FrobkitError,
    __version__,
    clifford_class_count,
    closed_form_lB,
    cyclotomic_value,
    defining_char_scan,
    dickson_condition,
    euler_phi,
    exceptional_11_report,
    factorize,
    find_regular_subgroups,
    frobenius_class_report,
    is_prime,
    jordan_totient2,
    lB_lower_bound,
    multiplicative_order,
    nearfield_class_count,
    out_order,
    scan_exceptions,
    sum_of_two_divisors,
    torus_lower_bound,
)
from . import _frobkit


def nearfield_report(p, k, n, brute_force=False, affine=False):
    return json.loads(_frobkit._nearfield_report(p, k, n, brute_force, affine))


def frobenius_report(p, t=None):
    return json.loads(_frobkit._frobenius_report(p, p - 1 if t is None else t))


def table34_report(bound=3481, workers=1):
    return json.loads(_frobkit._table34_report(bound, workers))


def scan_report(family="all", workers=1):
    return json.loads(_frobkit._scan_report(family, workers))


def verify_all(workers=1, extended=False):
    return json.loads(_frobkit._verify_all_report(workers, extended))
