"""Reference tables shipped with the package as CSV files under ``data/``."""

from __future__ import annotations

import csv
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .algebra import Poly


def _rows(name: str) -> list[list[str]]:
    text = resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    return [[cell.strip() for cell in row] for row in csv.reader(lines)]


def _int_table(name: str) -> dict[int, tuple[int, ...]]:
    return {int(row[0]): tuple(int(v) for v in row[1:]) for row in _rows(name)}


@lru_cache(maxsize=None)
def complement_classes() -> dict[int, tuple[int, ...]]:
    """c-rows keyed by r."""
    return _int_table("complement_classes.csv")


@lru_cache(maxsize=None)
def projective_degrees() -> dict[int, tuple[int, ...]]:
    """d-rows keyed by r."""
    return _int_table("projective_degrees.csv")


@lru_cache(maxsize=None)
def interpolants() -> dict[str, dict[int, Poly]]:
    out: dict[str, dict[int, Poly]] = {"polc": {}, "pold": {}}
    for row in _rows("interpolants.csv"):
        out[row[0]][int(row[1])] = Poly(Fraction(v) for v in row[2:])
    return out


@lru_cache(maxsize=None)
def column_numerators() -> dict[int, Poly]:
    return {i: Poly(cs) for i, cs in _int_table("column_numerators.csv").items()}


@lru_cache(maxsize=None)
def dyck_rows() -> dict[int, tuple[int, ...]]:
    return _int_table("dyck_long_ascents.csv")


@lru_cache(maxsize=None)
def mather_polar() -> dict[str, dict[int, tuple[int, ...]]]:
    out: dict[str, dict[int, tuple[int, ...]]] = {"mather": {}, "polar": {}}
    for row in _rows("mather_polar.csv"):
        out[row[0]][int(row[1])] = tuple(int(v) for v in row[2:])
    return out


@lru_cache(maxsize=None)
def hypersurfaces() -> dict[str, dict]:
    """Worked examples keyed by name, each with n, k and the printed fields."""
    out: dict[str, dict] = {}
    for row in _rows("hypersurfaces.csv"):
        entry = out.setdefault(row[0], {"n": int(row[1]), "k": int(row[2])})
        vals = tuple(int(v) for v in row[4:])
        entry[row[3]] = vals if len(vals) > 1 else vals[0]
    return out


DIRECT_RMAX = 5
"""Largest r whose rows were computed directly rather than by interpolation."""
