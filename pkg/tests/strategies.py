"""Hypothesis strategies over small constructible groups."""

from __future__ import annotations

from hypothesis import strategies as st

from commprob import catalog
from commprob.group import FiniteGroup

_RECIPES = {}


def _recipes(max_order: int):
    if max_order not in _RECIPES:
        _RECIPES[max_order] = catalog.family_recipes("corpus", max_order)
    return _RECIPES[max_order]


def small_groups(max_order: int = 64) -> st.SearchStrategy[FiniteGroup]:
    """Any corpus group of order <= max_order."""
    return st.sampled_from(_recipes(max_order)).map(lambda r: r.group())


def nonabelian_groups(max_order: int = 64) -> st.SearchStrategy[FiniteGroup]:
    return st.sampled_from([r for r in _recipes(max_order) if not r.abelian]).map(lambda r: r.group())
