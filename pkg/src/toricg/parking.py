"""Parking functions and their tree encodings.

A function f: [n] -> [n] is stored as a tuple of its values (1-indexed).
f is a parking function when |f^{-1}([k])| >= k for every k.  Ascents of
functions are weak (f(i) <= f(i+1)), unlike the strict ascents of
permutations; keep the two notions apart.

A parking tree is a rooted plane tree on n+1 vertices whose vertex labels
(a bijection to [n+1]) increase away from the root and whose edge labels
(a bijection to [n]) increase left to right among siblings.  Setting f(i)
to the label of the parent vertex of the edge labeled i always yields a
parking function, and the vertex labelings following the depth-first or
breadth-first search order give two bijective encodings.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterator, NamedTuple, Sequence

from . import perms
from .config import check_capacity
from .errors import PreconditionError, StructuralError
from .words import D, U


def fn_from_text(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split())


def fn_to_text(f) -> str:
    return " ".join(str(v) for v in f)


def validate_fn(f) -> None:
    n = len(f)
    if any(not (1 <= v <= n) for v in f):
        raise StructuralError(f"values must lie in [1, {n}]: {f!r}")


def is_parking(f) -> bool:
    """True when the k-th smallest value is at most k for every k."""
    validate_fn(f)
    return all(v <= k for k, v in enumerate(sorted(f), start=1))


def fn_is_123_avoiding(f) -> bool:
    """No i1 < i2 < i3 with f(i1) <= f(i2) <= f(i3) (weak inequalities)."""
    m1 = m2 = None
    for v in f:
        if m2 is not None and m2 <= v:
            return False
        if m1 is not None and m1 <= v and (m2 is None or v < m2):
            m2 = v
        if m1 is None or v < m1:
            m1 = v
    return True


def fn_ascent_set(f) -> tuple[int, ...]:
    """Positions i with f(i) <= f(i+1) (weak ascents)."""
    return tuple(i for i in range(1, len(f)) if f[i - 1] <= f[i])


def fn_ascents(f) -> int:
    return len(fn_ascent_set(f))


class GHPair(NamedTuple):
    """A permutation and a compatible balanced word: the fibers of a
    function, listed increasingly, concatenate to ``perm`` while the fiber
    sizes q_i give ``word`` = U^{q_1} D ... U^{q_n} D."""

    perm: tuple[int, ...]
    word: str


def is_compatible_pair(perm, word: str) -> bool:
    """Descents of ``perm`` must sit at fiber boundaries of ``word``."""
    runs = _u_runs(word)
    if runs is None or len(runs) != len(perm) or sum(runs) != len(perm):
        return False
    boundaries = set(itertools.accumulate(runs[:-1]))
    return set(perms.descent_set(perm)) <= boundaries


def _u_runs(word: str) -> list[int] | None:
    """Run lengths q_i of U^{q_1} D ... U^{q_n} D, or None if malformed."""
    if any(ch not in "UD" for ch in word) or (word and word[-1] != D):
        return None
    runs = []
    run = 0
    for ch in word:
        if ch == U:
            run += 1
        else:
            runs.append(run)
            run = 0
    return runs


def garsia_haiman(f) -> GHPair:
    """Encode a function as a (permutation, balanced word) pair.

    The word records the fiber sizes and the permutation concatenates the
    fibers f^{-1}(1), ..., f^{-1}(n), each listed increasingly.  f is a
    parking function exactly when the word is a Dyck word.
    """
    validate_fn(f)
    n = len(f)
    fibers: list[list[int]] = [[] for _ in range(n + 1)]
    for i, v in enumerate(f, start=1):
        fibers[v].append(i)
    perm = tuple(i for fiber in fibers[1:] for i in fiber)
    word = "".join(U * len(fiber) + D for fiber in fibers[1:])
    return GHPair(perm, word)


def garsia_haiman_inv(perm, word: str) -> tuple[int, ...]:
    """Inverse encoding; the pair must be compatible."""
    perms.validate_perm(perm)
    if not is_compatible_pair(perm, word):
        raise PreconditionError(f"incompatible pair: {perm!r}, {word!r}")
    runs = _u_runs(word)
    f = [0] * len(perm)
    pos = 0
    for value, q in enumerate(runs, start=1):
        for i in perm[pos : pos + q]:
            f[i - 1] = value
        pos += q
    return tuple(f)


# ---------------------------------------------------------------------------
# Parking trees.
# ---------------------------------------------------------------------------

# A tree node is (vertex_label, ((edge_label, node), ...)).
Node = tuple


class ParkingTree:
    """Immutable bilabeled rooted plane tree; see the module docstring."""

    __slots__ = ("root", "n")

    def __init__(self, root: Node):
        self.root = root
        self.n = _validate_parking_tree(root)

    @classmethod
    def _unchecked(cls, root: Node, n: int) -> "ParkingTree":
        tree = object.__new__(cls)
        tree.root = root
        tree.n = n
        return tree

    def __eq__(self, other):
        if not isinstance(other, ParkingTree):
            return NotImplemented
        return self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f"ParkingTree.from_text({parking_tree_to_text(self)!r})"

    def vertex_count(self) -> int:
        return self.n + 1


def _validate_parking_tree(root: Node) -> int:
    vlabels: list[int] = []
    elabels: list[int] = []

    def walk(node: Node) -> None:
        vlabel, edges = node
        vlabels.append(vlabel)
        previous = 0
        for elabel, child in edges:
            if child[0] <= vlabel:
                raise StructuralError(
                    f"vertex labels must increase: {vlabel} -> {child[0]}"
                )
            if elabel <= previous:
                raise StructuralError(
                    f"sibling edge labels must increase left to right at vertex {vlabel}"
                )
            previous = elabel
            elabels.append(elabel)
            walk(child)

    walk(root)
    n = len(elabels)
    if sorted(vlabels) != list(range(1, n + 2)):
        raise StructuralError("vertex labels are not a bijection to [n+1]")
    if sorted(elabels) != list(range(1, n + 1)):
        raise StructuralError("edge labels are not a bijection to [n]")
    if root[0] != 1:
        raise StructuralError("the root must be labeled 1")
    return n


def tree_to_function(t: ParkingTree) -> tuple[int, ...]:
    """f(i) = label of the parent vertex of the edge labeled i."""
    f = [0] * t.n

    def walk(node: Node) -> None:
        vlabel, edges = node
        for elabel, child in edges:
            f[elabel - 1] = vlabel
            walk(child)

    walk(t.root)
    return tuple(f)


def edge_perm(t: ParkingTree) -> tuple[int, ...]:
    """Edge labels grouped by parent vertex label (ascending), left to right
    within a group; equals the fiber permutation of the encoded function."""
    groups: dict[int, tuple[int, ...]] = {}

    def walk(node: Node) -> None:
        vlabel, edges = node
        if edges:
            groups[vlabel] = tuple(elabel for elabel, _ in edges)
        for _, child in edges:
            walk(child)

    walk(t.root)
    return tuple(e for v in sorted(groups) for e in groups[v])


def is_123_parking_tree(t: ParkingTree) -> bool:
    """True when every vertex has at most two children and the edge
    permutation is 123-avoiding; equivalently the encoded parking function
    is 123-avoiding."""

    def small(node: Node) -> bool:
        return len(node[1]) <= 2 and all(small(c) for _, c in node[1])

    return small(t.root) and perms.is_123_avoiding(edge_perm(t))


def _child_counts(f) -> tuple[int, ...]:
    n = len(f)
    counts = [0] * (n + 1)
    for v in f:
        counts[v - 1] += 1
    return tuple(counts)


def _attach_edges(children: Sequence[Sequence[int]], f) -> Node:
    """Build the tree given each vertex's child list; the edges at vertex v
    take the elements of f^{-1}(v) in increasing order."""
    fibers: dict[int, list[int]] = {}
    for i, v in enumerate(f, start=1):
        fibers.setdefault(v, []).append(i)

    def build(v: int) -> Node:
        kids = children[v - 1]
        return (v, tuple(zip(sorted(fibers.get(v, ())), map(build, kids))))

    return build(1)


def dfs_tree(f) -> ParkingTree:
    """The unique parking tree of f whose vertex labels follow the
    depth-first search order (so they read as a preorder traversal)."""
    return _search_tree(f, bfs=False)


def bfs_tree(f) -> ParkingTree:
    """The unique parking tree of f whose vertex labels follow the
    breadth-first search order (level by level, left to right)."""
    return _search_tree(f, bfs=True)


def _search_tree(f, bfs: bool) -> ParkingTree:
    if not is_parking(f):
        raise PreconditionError(f"not a parking function: {f!r}")
    n = len(f)
    counts = _child_counts(f)
    children: list[list[int]] = [[] for _ in range(n + 1)]
    pending = deque([1])
    remaining = list(counts)
    for label in range(2, n + 2):
        v = pending[0] if bfs else pending[-1]
        children[v - 1].append(label)
        remaining[v - 1] -= 1
        if remaining[v - 1] == 0:
            pending.popleft() if bfs else pending.pop()
        if remaining[label - 1] > 0:
            pending.append(label)
    root = _attach_edges(children, f)
    return ParkingTree._unchecked(root, n)


def enumerate_parking_trees(n: int, unsafe: bool = False) -> Iterator[ParkingTree]:
    """All (n!)^2 parking trees on n+1 vertices.

    Emitted as (vertex-labeled shape, edge assignment) pairs: shapes stream
    in the insertion order of :func:`toricg.perms.increasing_plane_trees`
    and the sets of edge labels given to the vertices 1, 2, ... vary in
    lexicographic order.  This ordering is an artifact convention.
    """
    if n < 0:
        raise PreconditionError("n must be >= 0")
    check_capacity("parking_trees", n, unsafe)
    labels = tuple(range(1, n + 1))
    for shape in perms.increasing_plane_trees(n + 1):
        counts: dict[int, int] = {}
        kids: dict[int, tuple] = {}

        def scan(node) -> None:
            v, cs = node
            counts[v] = len(cs)
            kids[v] = cs
            for c in cs:
                scan(c)

        scan(shape)
        parents = [v for v in sorted(counts) if counts[v]]
        sizes = [counts[v] for v in parents]
        for groups in _ordered_groups(labels, sizes):
            fiber = dict(zip(parents, groups))

            def build(node) -> Node:
                v, cs = node
                return (v, tuple(zip(fiber.get(v, ()), map(build, cs))))

            yield ParkingTree._unchecked(build(shape), n)


def _ordered_groups(labels: tuple[int, ...], sizes: Sequence[int]) -> Iterator[tuple]:
    """Split ``labels`` into consecutive groups of the given sizes, each
    group sorted; all ways, lexicographic in the choice sequence."""
    if not sizes:
        yield ()
        return
    for combo in itertools.combinations(labels, sizes[0]):
        chosen = set(combo)
        rest = tuple(x for x in labels if x not in chosen)
        for tail in _ordered_groups(rest, sizes[1:]):
            yield (combo,) + tail


def sibling_type(tree012: perms.PlaneTree) -> tuple[int, ...]:
    """For a plane 0-1-2 tree with increasing vertex labels, label the edges
    by the identity rule (vertices in label order, left to right) and return
    the sparse set {b : edges b and b+1 share a parent}; its size is the
    number of forks."""
    counts: dict[int, int] = {}

    def scan(node) -> None:
        v, cs = node
        if len(cs) > 2:
            raise StructuralError("vertex has more than two children")
        counts[v] = len(cs)
        for c in cs:
            scan(c)

    scan(tree012)
    out = []
    k = 0
    for v in sorted(counts):
        if counts[v] == 2:
            out.append(k + 1)
        k += counts[v]
    return tuple(out)


def tree_motzkin_word(tree012: perms.PlaneTree) -> str:
    """Word x_1 ... x_n over {U,D,H}: vertex i maps to U if it is a fork,
    D if a leaf, H otherwise; the result encodes a Motzkin path."""
    counts: dict[int, int] = {}

    def scan(node) -> None:
        v, cs = node
        if len(cs) > 2:
            raise StructuralError("vertex has more than two children")
        counts[v] = len(cs)
        for c in cs:
            scan(c)

    scan(tree012)
    n = len(counts) - 1
    return "".join(
        U if counts[i] == 2 else D if counts[i] == 0 else "H"
        for i in range(1, n + 1)
    )


def parking_tree_to_text(t: ParkingTree) -> str:
    """Nested rendering "(v=1 [e=7 (v=2)] [e=10 (v=3)])"."""

    def render(node: Node) -> str:
        v, edges = node
        parts = [f"v={v}"]
        parts.extend(f"[e={e} {render(child)}]" for e, child in edges)
        return "(" + " ".join(parts) + ")"

    return render(t.root)


def parking_tree_from_text(text: str) -> ParkingTree:
    s = text.replace(" ", "")

    def parse_node(i: int) -> tuple[Node, int]:
        if not s.startswith("(v=", i):
            raise StructuralError(f"expected '(v=' at {i} in {text!r}")
        i += 3
        v, i = _parse_int(s, i, text)
        edges = []
        while i < len(s) and s[i] == "[":
            if not s.startswith("[e=", i):
                raise StructuralError(f"expected '[e=' at {i} in {text!r}")
            e, i = _parse_int(s, i + 3, text)
            child, i = parse_node(i)
            if i >= len(s) or s[i] != "]":
                raise StructuralError(f"expected ']' at {i} in {text!r}")
            i += 1
            edges.append((e, child))
        if i >= len(s) or s[i] != ")":
            raise StructuralError(f"expected ')' at {i} in {text!r}")
        return (v, tuple(edges)), i + 1

    root, end = parse_node(0)
    if end != len(s):
        raise StructuralError(f"trailing text in {text!r}")
    return ParkingTree(root)


def _parse_int(s: str, i: int, text: str) -> tuple[int, int]:
    j = i
    while j < len(s) and s[j].isdigit():
        j += 1
    if j == i:
        raise StructuralError(f"expected an integer at {i} in {text!r}")
    return int(s[i:j]), j


# ---------------------------------------------------------------------------
# Function enumeration (plumbing for the verification sweeps and the CLI).
# ---------------------------------------------------------------------------


def iter_functions(n: int) -> Iterator[tuple[int, ...]]:
    """All n^n functions [n] -> [n]."""
    return itertools.product(range(1, n + 1), repeat=n)


def iter_parking_functions(n: int) -> Iterator[tuple[int, ...]]:
    return (f for f in iter_functions(n) if is_parking(f))


def iter_123_avoiding_functions(n: int, parking_only: bool = False) -> Iterator[tuple[int, ...]]:
    """All 123-avoiding functions [n] -> [n], optionally only the parking
    ones.  Prefixes containing a weak 123 pattern are pruned, so the sweep
    stays far below n^n."""
    if n == 0:
        yield ()
        return
    prefix: list[int] = []
    big = n + 1

    def rec(m1: int, m2: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            f = tuple(prefix)
            if not parking_only or is_parking(f):
                yield f
            return
        for v in range(1, n + 1):
            if m2 <= v:
                continue
            prefix.append(v)
            yield from rec(min(m1, v), min(m2, v) if m1 <= v else m2)
            prefix.pop()

    yield from rec(big, big)
