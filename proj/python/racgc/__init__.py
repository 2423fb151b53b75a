"""Commensurability of right-angled Coxeter groups and geometric amalgams of free groups."""

import json
from fractions import Fraction

from . import _racgc
from ._racgc import InvalidInput, InvariantFailure, Unsupported

__all__ = [
    "InvalidInput",
    "InvariantFailure",
    "Unsupported",
    "amalgam_to_racg",
    "classify",
    "cover16",
    "cycle_data",
    "euler",
    "in_G_3convex",
    "jsj",
    "run",
    "theta_vector",
]


def euler(graph):
    return Fraction(_racgc.euler(graph))


def theta_vector(n):
    return [Fraction(x) for x in _racgc.theta_vector(list(n))]


def cycle_data(graph):
    return json.loads(_racgc.cycle_data(graph))


def in_G_3convex(graph):
    return _racgc.in_G_3convex(graph)


def jsj(graph):
    return json.loads(_racgc.jsj(graph))


def classify(first, second):
    return json.loads(_racgc.classify(first, second))


def cover16(graph):
    return json.loads(_racgc.cover16(graph))


def amalgam_to_racg(amalgam):
    if not isinstance(amalgam, str):
        amalgam = json.dumps(amalgam)
    return json.loads(_racgc.amalgam_to_racg(amalgam))


def run(*args):
    """Run the command line front end; returns (exit code, stdout, stderr)."""
    return _racgc.run([str(a) for a in args])
