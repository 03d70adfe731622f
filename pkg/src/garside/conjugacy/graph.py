"""Conjugacy graphs: class members with the simple conjugators that reached them."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field

from garside.conjugacy.minimal import ClassMode
from garside.core.element import (
    ElementKey,
    GroupElement,
    conjugate,
    from_simple,
    identity,
    multiply,
)
from garside.core.structure import GarsideStructure, Simple
from garside.errors import InvariantError

logger = logging.getLogger(__name__)


@dataclass
class ConjugacyGraph:
    """Nodes in discovery order; each non-root node remembers (parent key, simple).

    `prefix` conjugates the element the graph was built from to `root`. An empty graph has no
    root: the requested subset of the class is empty.
    """

    structure: GarsideStructure
    mode: ClassMode
    m: int | None = None
    root: GroupElement | None = None
    prefix: GroupElement | None = None
    nodes: dict[ElementKey, GroupElement] = field(default_factory=dict)
    parents: dict[ElementKey, tuple[ElementKey, Simple]] = field(default_factory=dict)
    # conjugations by candidate simples, one per member of each node's candidate set
    conjugations: int = 0
    # conjugations spent inside rho_x while the candidate set was being computed
    search_conjugations: int = 0
    expanded: int = 0
    verify: bool = False

    @classmethod
    def rooted(
        cls,
        root: GroupElement,
        prefix: GroupElement,
        mode: ClassMode,
        m: int | None = None,
        *,
        verify: bool = False,
    ) -> ConjugacyGraph:
        graph = cls(root.structure, mode, m, root=root, prefix=prefix, verify=verify)
        graph.nodes[root.key] = root
        return graph

    @property
    def is_empty(self) -> bool:
        return self.root is None

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, item: object) -> bool:
        key = item.key if isinstance(item, GroupElement) else item
        return key in self.nodes

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.nodes.values())

    def keys(self) -> list[ElementKey]:
        return sorted(self.nodes)

    def add(self, node: GroupElement, parent: ElementKey, s: Simple) -> None:
        self.nodes[node.key] = node
        self.parents[node.key] = (parent, s)
        if self.verify:
            c = self.witness(node.key)
            if conjugate(self.nodes[self._root_key], c).key != node.key:
                raise InvariantError(f"witness for {node} does not conjugate the root onto it")

    @property
    def _root_key(self) -> ElementKey:
        if self.root is None:
            raise InvariantError("empty graph has no root")
        return self.root.key

    def path(self, key: ElementKey) -> list[Simple]:
        """Simple conjugators along the tree path from the root to key."""
        steps: list[Simple] = []
        while key in self.parents:
            key, s = self.parents[key]
            steps.append(s)
        steps.reverse()
        return steps

    def witness(self, key: ElementKey) -> GroupElement:
        """c with c^-1 root c equal to the node with this key."""
        if key not in self.nodes:
            raise KeyError(key)
        c = identity(self.structure)
        for s in self.path(key):
            c = multiply(c, from_simple(self.structure, s))
        return c

    def witness_from_input(self, key: ElementKey) -> GroupElement:
        """c with c^-1 a c equal to the node, a being the element the graph was built from."""
        prefix = self.prefix if self.prefix is not None else identity(self.structure)
        return multiply(prefix, self.witness(key))

    def verify_witnesses(self) -> None:
        root = self.nodes[self._root_key]
        for key in self.nodes:
            if conjugate(root, self.witness(key)).key != key:
                raise InvariantError(f"witness check failed for node {key}")
