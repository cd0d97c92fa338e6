"""Loader for the packaged expected-value catalog (data/catalog.json)."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .families import PairFamily


@lru_cache(maxsize=1)
def raw() -> dict:
    path = resources.files("acmcurves").joinpath("data/catalog.json")
    return json.loads(path.read_text("utf-8"))


@lru_cache(maxsize=None)
def kind_families(degree: int) -> tuple[PairFamily, ...]:
    """The parametrized pair families cataloged for a degree."""
    docs = raw()["kind_families"].get(str(degree))
    if docs is None:
        raise KeyError(f"no family catalog for degree {degree}")
    return tuple(PairFamily.from_json(degree, doc) for doc in docs)


def family_by_name(degree: int, name: str) -> PairFamily:
    for fam in kind_families(degree):
        if fam.name == name:
            return fam
    raise KeyError(f"no family {name} in the degree-{degree} catalog")


def quartic_proposition(label: str) -> dict:
    return raw()["quartic_propositions"][label]


def low_degree_corollaries() -> list[dict]:
    return raw()["low_degree_corollaries"]


def liaison_table() -> list[dict]:
    return raw()["liaison_table"]
