"""Polar Grassmannians over finite fields: geometries, distances and subspace checks."""

import json

from ._polargrass import (
    BudgetExceeded,
    Error,
    Geometry,
    InvalidArgument,
    Unsupported,
    build_geometry,
    distances_from,
    gaussian_binomial,
    lemma_names,
    oriflamme_apartment,
    run_cli,
)
from . import _polargrass as _core

__all__ = [
    "BudgetExceeded",
    "Error",
    "Geometry",
    "InvalidArgument",
    "Unsupported",
    "build_geometry",
    "classify_pair",
    "classify_subspace",
    "distance_distribution",
    "distances_from",
    "engine_oracle_counts",
    "gaussian_binomial",
    "geometry_json",
    "lemma_names",
    "oriflamme_apartment",
    "run_cli",
    "verify_lemma",
]


def geometry_json(geometry):
    return json.loads(geometry.to_json())


def distance_distribution(geometry, base, refine=True):
    return json.loads(_core.distance_distribution(geometry, base, refine))


def classify_pair(geometry, x, y):
    return json.loads(_core.classify_pair(geometry, x, y))


def classify_subspace(geometry, points):
    return json.loads(_core.classify_subspace(geometry, list(points)))


def verify_lemma(name, type="", n=0, k=0, q=0):
    return json.loads(_core.verify_lemma(name, type, n, k, q))


def engine_oracle_counts():
    return json.loads(_core.engine_oracle_counts())
