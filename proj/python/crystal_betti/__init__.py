"""Graded Betti numbers of join-meet ideals of crystal lattices."""

import json

from ._core import (
    CrystalError,
    betti,
    betti_of_monomials,
    figure_data,
    groebner,
    lattice_check,
    lattice_info,
    render_betti,
    table1,
    verify,
)
from ._core import syzygy_report as _syzygy_report

__all__ = [
    "CrystalError",
    "betti",
    "betti_of_monomials",
    "figure_data",
    "groebner",
    "lattice_check",
    "lattice_info",
    "render_betti",
    "syzygy_report",
    "table1",
    "total_betti",
    "verify",
]


def syzygy_report(N, n2):
    return json.loads(_syzygy_report(N, n2))


def total_betti(table, i):
    """Sum of B_{i,j} over j for a table returned by betti()."""
    return sum(v for (k, _), v in table.items() if k == i)
