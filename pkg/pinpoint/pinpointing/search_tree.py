# filepath: pinpoint/pinpointing/search_tree.py
"""
Justification search tree: nodes are reached by removing axioms along a
path from the root; each edge is labelled with the removed axiom id.
"""
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional

import networkx as nx


class NodeStatus(str, Enum):
    OPEN = "open"
    REDUNDANT = "redundant"  # skipped by the path redundancy check
    CLOSED = "closed"        # remaining axioms no longer entail the goal
    PRUNED = "pruned"        # remaining axioms already inside the union
    EXPANDED = "expanded"    # a justification was attached to the node


class SearchTree:
    ROOT = 0

    def __init__(self):
        self.graph = nx.DiGraph()
        self.graph.add_node(self.ROOT, removed=frozenset(), status=NodeStatus.OPEN)
        self.explored: List[int] = []

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def add_child(self, parent: int, axiom_id: str) -> int:
        node = self.graph.number_of_nodes()
        removed = self.removed(parent) | {axiom_id}
        self.graph.add_node(node, removed=removed, status=NodeStatus.OPEN)
        self.graph.add_edge(parent, node, axiom=axiom_id)
        return node

    def removed(self, node: int) -> FrozenSet[str]:
        """Labels on the path from the root to node"""
        return self.graph.nodes[node]["removed"]

    def path_labels(self, node: int) -> List[str]:
        labels: List[str] = []
        while node != self.ROOT:
            parent = next(iter(self.graph.predecessors(node)))
            labels.append(self.graph.edges[parent, node]["axiom"])
            node = parent
        return labels[::-1]

    def status(self, node: int) -> NodeStatus:
        return self.graph.nodes[node]["status"]

    def mark(self, node: int, status: NodeStatus):
        self.graph.nodes[node]["status"] = status
        self.explored.append(node)

    def is_leaf(self, node: int) -> bool:
        return self.graph.out_degree(node) == 0 and self.status(node) != NodeStatus.REDUNDANT

    def parent(self, node: int) -> Optional[int]:
        preds = list(self.graph.predecessors(node))
        return preds[0] if preds else None


def is_path_redundant(tree: SearchTree, path_axioms: Iterable[str], explored: Iterable[int]) -> bool:
    """
    Path redundancy check.

    True iff some explored node w has removed-set equal to path_axioms, or
    contained in path_axioms while w is a leaf.
    """
    path = frozenset(path_axioms)
    for w in explored:
        removed = tree.removed(w)
        if removed == path:
            return True
        if removed <= path and tree.is_leaf(w):
            return True
    return False
