"""DOT, JSON and tabular exports of finite posets."""

from collections.abc import Callable, Hashable
from typing import Any, cast

import networkx as nx
import pandas as pd

from src.parking.conversions import ConversionError, convert
from src.poset.finite import FinitePoset


def default_label(x: Hashable) -> str:
    """Element label: the parking word for parking objects, str() otherwise."""
    try:
        return str(convert(cast(Any, x), "word"))
    except ConversionError:
        return str(x)


def hasse_digraph(poset: FinitePoset, label: Callable[[Hashable], str] = default_label) -> nx.DiGraph:
    """Hasse diagram with string node names and rank attributes."""
    graph = nx.DiGraph()
    names = [label(e) for e in poset.elements]
    for name, rank in zip(names, poset.ranks, strict=True):
        graph.add_node(name, rank=rank)
    graph.add_edges_from((names[i], names[j]) for i, j in poset.hasse.edges())
    return graph


def to_dot(poset: FinitePoset, label: Callable[[Hashable], str] = default_label) -> str:
    """Render the Hasse diagram in DOT, bottom to top."""
    dot = nx.nx_pydot.to_pydot(hasse_digraph(poset, label))
    dot.set_rankdir("BT")
    dot.set_name(poset.name.replace("+", "_"))
    return str(dot.to_string())


def to_json(
    poset: FinitePoset, encode: Callable[[Hashable], Any] = default_label, n: int | None = None
) -> dict[str, Any]:
    """JSON dump {"n": ..., "elements": [...], "covers": [[i, j], ...]}."""
    return {
        "n": n,
        "elements": [encode(e) for e in poset.elements],
        "covers": [[int(i), int(j)] for i, j in sorted(poset.hasse.edges())],
    }


def to_frame(poset: FinitePoset, label: Callable[[Hashable], str] = default_label) -> pd.DataFrame:
    """One row per element: index, label, rank, number of upper covers."""
    return pd.DataFrame(
        {
            "index": range(len(poset)),
            "element": [label(e) for e in poset.elements],
            "rank": poset.ranks,
            "upper_covers": [poset.hasse.out_degree(i) for i in range(len(poset))],
        }
    )
