"""Cyclic and dihedral group arithmetic, connecting sets and Cayley graphs.

Elements are written a^i b^e with 0 <= i < n. The cyclic group C_n is the
rotation subgroup of D_n, so both groups share the :class:`DihedralElement`
type; a :class:`ConnectingSet` records which group it lives in.

Vertices are ordered a, a^2, ..., a^n (then ab, a^2b, ..., a^nb for D_n), so
vertex index p holds the element with exponent (p + 1) mod n.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal

from .errors import ConnectingSetError, OrderMismatchError

GroupKind = Literal["cyclic", "dihedral"]
GROUP_KINDS = ("cyclic", "dihedral")


@dataclass(frozen=True, order=True)
class DihedralElement:
    exponent: int
    reflected: bool
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("group order parameter must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.n)
        object.__setattr__(self, "reflected", bool(self.reflected))

    @classmethod
    def rotation(cls, k: int, n: int) -> DihedralElement:
        return cls(k, False, n)

    @classmethod
    def reflection(cls, j: int, n: int) -> DihedralElement:
        return cls(j, True, n)

    @classmethod
    def identity(cls, n: int) -> DihedralElement:
        return cls(0, False, n)

    def is_identity(self) -> bool:
        return self.exponent == 0 and not self.reflected

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return multiply(self, other)

    def __str__(self) -> str:
        if self.exponent == 0:
            return "b" if self.reflected else "1"
        a = "a" if self.exponent == 1 else f"a^{self.exponent}"
        return a + ("b" if self.reflected else "")

    def vertex_label(self) -> str:
        """Label in the 1-based a, a^2, ..., a^n convention (identity is a^n)."""
        k = self.exponent or self.n
        a = "a" if k == 1 else f"a^{k}"
        return a + ("b" if self.reflected else "")


def multiply(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    """Normal form of x*y, using b a^j = a^-j b."""
    if x.n != y.n:
        raise OrderMismatchError(f"cannot multiply elements of order parameters {x.n} and {y.n}")
    sign = -1 if x.reflected else 1
    return DihedralElement(x.exponent + sign * y.exponent, x.reflected != y.reflected, x.n)


def inverse(x: DihedralElement) -> DihedralElement:
    if x.reflected:
        return x
    return DihedralElement(-x.exponent, False, x.n)


def group_elements(kind: GroupKind, n: int) -> list[DihedralElement]:
    """All elements in vertex order."""
    rot = [DihedralElement((p + 1) % n, False, n) for p in range(n)]
    if kind == "cyclic":
        return rot
    return rot + [DihedralElement((p + 1) % n, True, n) for p in range(n)]


def vertex_index(x: DihedralElement) -> int:
    p = (x.exponent - 1) % x.n
    return p + x.n if x.reflected else p


@dataclass(frozen=True)
class ConnectingSet:
    n: int
    kind: GroupKind
    rotations: frozenset[int]
    reflections: frozenset[int] = frozenset()
    require_generating: bool = True

    @property
    def elements(self) -> list[DihedralElement]:
        return [DihedralElement.rotation(k, self.n) for k in sorted(self.rotations)] + [
            DihedralElement.reflection(j, self.n) for j in sorted(self.reflections)
        ]

    def __len__(self) -> int:
        return len(self.rotations) + len(self.reflections)

    def __contains__(self, x: DihedralElement) -> bool:
        if x.n != self.n:
            return False
        return x.exponent in (self.reflections if x.reflected else self.rotations)

    def group_order(self) -> int:
        return self.n if self.kind == "cyclic" else 2 * self.n

    def to_text(self) -> str:
        """Canonical text form accepted by :func:`parse_connecting_set`."""
        r = ",".join(str(k) for k in sorted(self.rotations))
        if self.kind == "cyclic":
            return r
        f = ",".join(str(j) for j in sorted(self.reflections))
        return ";".join(part for part in (r and f"r:{r}", f and f"f:{f}") if part)

    def __str__(self) -> str:
        if not len(self):
            return "{}"
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


def generates(kind: GroupKind, n: int, elements: Iterable[DihedralElement]) -> bool:
    """Breadth-first closure from the identity under right multiplication."""
    gens = list(elements)
    start = DihedralElement.identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for h in gens:
            x = g * h
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return len(seen) == (n if kind == "cyclic" else 2 * n)


def validate_connecting_set(
    raw: Iterable[DihedralElement],
    n: int,
    kind: GroupKind,
    require_generating: bool = True,
) -> ConnectingSet:
    if n < 3:
        raise ValueError("n must be at least 3")
    if kind not in GROUP_KINDS:
        raise ValueError(f"unknown group kind {kind!r}")
    elements = set()
    for x in raw:
        if x.n != n:
            raise OrderMismatchError(f"element {x} belongs to order parameter {x.n}, not {n}")
        if kind == "cyclic" and x.reflected:
            raise ConnectingSetError("parse", f"reflection {x} is not an element of C_{n}", x)
        elements.add(x)
    for x in sorted(elements):
        if x.is_identity():
            raise ConnectingSetError("ii", "connecting set contains the identity", x)
    for x in sorted(elements):
        if inverse(x) not in elements:
            raise ConnectingSetError(
                "i", f"connecting set is not symmetric: {x} is present but {inverse(x)} is not", x
            )
    if require_generating and not generates(kind, n, elements):
        raise ConnectingSetError("iii", f"connecting set does not generate the {kind} group of order parameter {n}")
    return ConnectingSet(
        n=n,
        kind=kind,
        rotations=frozenset(x.exponent for x in elements if not x.reflected),
        reflections=frozenset(x.exponent for x in elements if x.reflected),
        require_generating=require_generating,
    )


_INT_LIST = re.compile(r"^(-?\d+(,-?\d+)*)?$")


def _parse_ints(text: str, what: str) -> list[int]:
    if not _INT_LIST.match(text):
        raise ConnectingSetError("parse", f"malformed {what} list: {text!r}")
    return [int(t) for t in text.split(",")] if text else []


def parse_elements(text: str, n: int, kind: GroupKind) -> list[DihedralElement]:
    """Parse the set grammar without validating it.

    cyclic:   ``k1,k2,...``            exponents of a, each in [1, n-1]
    dihedral: ``r:k1,...;f:j1,...``    rotations a^k and reflections a^j b,
              j in [0, n-1]; either part may be omitted.
    Whitespace is ignored.
    """
    text = re.sub(r"\s+", "", text)
    rot: list[int] = []
    ref: list[int] = []
    if kind == "cyclic":
        rot = _parse_ints(text, "exponent")
    else:
        seen = set()
        for part in filter(None, text.split(";")):
            tag, sep, body = part.partition(":")
            if not sep or tag not in ("r", "f") or tag in seen:
                raise ConnectingSetError("parse", f"bad dihedral set component {part!r}; expected r:... or f:...")
            seen.add(tag)
            (rot if tag == "r" else ref).extend(_parse_ints(body, "exponent"))
    for k in rot:
        if not 0 <= k < n:
            raise ConnectingSetError("parse", f"rotation exponent {k} outside [0, {n - 1}]")
    for j in ref:
        if not 0 <= j < n:
            raise ConnectingSetError("parse", f"reflection exponent {j} outside [0, {n - 1}]")
    return [DihedralElement.rotation(k, n) for k in rot] + [DihedralElement.reflection(j, n) for j in ref]


def parse_connecting_set(text: str, n: int, kind: GroupKind, require_generating: bool = True) -> ConnectingSet:
    return validate_connecting_set(parse_elements(text, n, kind), n, kind, require_generating)


@dataclass(frozen=True)
class CayleyGraph:
    connecting_set: ConnectingSet
    vertices: tuple[DihedralElement, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def vertex_labels(self) -> list[str]:
        return [v.vertex_label() for v in self.vertices]

    def edge_count(self) -> int:
        return sum(map(sum, self.adjacency)) // 2

    def matrix(self) -> list[list[int]]:
        return [list(row) for row in self.adjacency]


def build_cayley_graph(H: ConnectingSet) -> CayleyGraph:
    """u ~ v iff v u^-1 is in H, rows and columns in vertex order."""
    verts = group_elements(H.kind, H.n)
    adj = tuple(tuple(int(v * inverse(u) in H) for v in verts) for u in verts)
    return CayleyGraph(H, tuple(verts), adj)


def right_translation_is_automorphism(G: CayleyGraph, g: DihedralElement) -> bool:
    """Check that v -> v g preserves adjacency. A test utility."""
    if g.n != G.connecting_set.n or (G.connecting_set.kind == "cyclic" and g.reflected):
        raise ValueError(f"{g} is not an element of the graph's group")
    image = [vertex_index(v * g) for v in G.vertices]
    A = G.adjacency
    m = len(image)
    return all(A[i][j] == A[image[i]][image[j]] for i in range(m) for j in range(m))
