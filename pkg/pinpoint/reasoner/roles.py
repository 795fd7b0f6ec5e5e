# filepath: pinpoint/reasoner/roles.py
from typing import Dict, FrozenSet, Iterable

import networkx as nx

from pinpoint.models import Axiom, RoleInclusion


def role_hierarchy(axioms: Iterable[Axiom]) -> nx.DiGraph:
    """Directed graph with an edge sub -> sup per role inclusion"""
    graph = nx.DiGraph()
    for ax in axioms:
        if isinstance(ax.kind, RoleInclusion):
            graph.add_edge(ax.kind.sub, ax.kind.sup)
    return graph


class RoleClosure:
    """Reflexive-transitive closure of the declared role inclusions"""

    def __init__(self, axioms: Iterable[Axiom]):
        self._graph = role_hierarchy(axioms)
        self._cache: Dict[str, FrozenSet[str]] = {}

    def supers(self, role: str) -> FrozenSet[str]:
        """All s with role ⊑* s, including role itself"""
        cached = self._cache.get(role)
        if cached is None:
            found = {role}
            if role in self._graph:
                found |= nx.descendants(self._graph, role)
            cached = self._cache[role] = frozenset(found)
        return cached
