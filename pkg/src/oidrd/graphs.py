"""Simple undirected graphs: construction, named families, enumeration, text I/O.

Vertices are always dense integer indices 0..n-1.  Every named family
documents its vertex numbering so that witness labelings are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph input or violated family constraint."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. adj[v] is the open neighborhood of v."""

    n: int
    adj: tuple[frozenset[int], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    @property
    def min_degree(self) -> int:
        return min(len(a) for a in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on n vertices.

    Duplicate edges (in either orientation) are merged silently; self-loops
    and out-of-range endpoints are rejected.
    """
    if n < 1:
        raise GraphError(f"vertex count must be at least 1, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range 0..{n - 1}: ({u}, {v})")
        if u == v:
            raise GraphError(f"self-loop rejected: ({u}, {v})")
        if v not in nbrs[u]:
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
    return Graph(n, tuple(frozenset(s) for s in nbrs), m)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    return g.max_degree


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    """P_n with vertices 0..n-1 in path order."""
    if n < 1:
        raise GraphError("path requires n >= 1")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """C_n with vertices 0..n-1 in cycle order."""
    if n < 3:
        raise GraphError("cycle requires n >= 3")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete requires n >= 1")
    return build(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 1:
        raise GraphError("empty requires n >= 1")
    return build(n, [])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: center 0, leaves 1..leaves."""
    if leaves < 1:
        raise GraphError("star requires at least 1 leaf")
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def double_star(a: int, b: int) -> Graph:
    """S_{a,b}: centers 0 and 1 adjacent; leaves of 0 are 2..a+1, of 1 are a+2..a+b+1."""
    if a < 1 or b < 1:
        raise GraphError("double_star requires a, b >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return build(2 + a + b, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: first part 0..m-1, second part m..m+n-1."""
    if m < 1 or n < 1:
        raise GraphError("complete_bipartite requires m, n >= 1")
    return build(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def complete_multipartite(parts: Iterable[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive index blocks in the given order."""
    sizes = list(parts)
    if len(sizes) < 2 or any(p < 1 for p in sizes):
        raise GraphError("complete_multipartite requires k >= 2 parts, each of size >= 1")
    offsets = [0]
    for p in sizes:
        offsets.append(offsets[-1] + p)
    n = offsets[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(offsets[i], offsets[i + 1]):
                for v in range(offsets[j], offsets[j + 1]):
                    edges.append((u, v))
    return build(n, edges)


def g1(k: int, leaves: int) -> Graph:
    """Family G1: v1=0 and v2=1 adjacent, w_1..w_k = 2..k+1 adjacent to both
    (pairwise nonadjacent), plus at least one pendant leaf on v1
    (leaves occupy k+2..k+1+leaves)."""
    if k < 1:
        raise GraphError("g1 requires k >= 1 common neighbors")
    if leaves < 1:
        raise GraphError("g1 requires at least 1 pendant leaf on v1")
    edges = [(0, 1)]
    for i in range(k):
        edges += [(0, 2 + i), (1, 2 + i)]
    edges += [(0, 2 + k + i) for i in range(leaves)]
    return build(2 + k + leaves, edges)


def g2(k: int) -> Graph:
    """Family G2: v1=0 and v2=1 adjacent, w_1..w_k = 2..k+1 adjacent to both."""
    if k < 1:
        raise GraphError("g2 requires k >= 1 common neighbors")
    edges = [(0, 1)]
    for i in range(k):
        edges += [(0, 2 + i), (1, 2 + i)]
    return build(2 + k, edges)


def g3(k: int) -> Graph:
    """Family G3: v1=0 and v2=1 nonadjacent, w_1..w_k = 2..k+1 adjacent to both."""
    if k < 2:
        raise GraphError("g3 requires k >= 2 common neighbors")
    edges = []
    for i in range(k):
        edges += [(0, 2 + i), (1, 2 + i)]
    return build(2 + k, edges)


_H_SUBCASES = {
    "h1": ("a1", "b1", "c1"),
    "h2": ("a2", "b2"),
    "h4": ("a4", "b4"),
    "h5": ("a5", "b5"),
    "h6": ("a6", "b6"),
}


def _attach_sets(base_n: int, base_edges: list[tuple[int, int]],
                 blocks: list[tuple[tuple[int, ...], int]]) -> Graph:
    """Append vertex blocks, each wired to a fixed anchor set.

    blocks is a list of (anchor tuple, size); block vertices are numbered
    consecutively after the base in the given block order.
    """
    edges = list(base_edges)
    nxt = base_n
    for anchors, size in blocks:
        for _ in range(size):
            for a in anchors:
                edges.append((a, nxt))
            nxt += 1
    return build(nxt, edges)


def h1(subcase: str, n_abc: int, n_ab: int = 0, n_bc: int = 0, n_b: int = 0) -> Graph:
    """Family H1: path a-b-c on 0,1,2; then blocks V_abc, V_ab, V_bc, V_b
    in that order, starting at vertex 3.

    Subcases: a1 requires V_ab = V_bc = empty and |V_abc| >= 2;
    b1 requires exactly one of V_ab, V_bc empty and V_abc nonempty;
    c1 requires V_ab and V_bc both nonempty.  V_b is unconstrained.
    """
    if subcase == "a1":
        if n_ab or n_bc or n_abc < 2:
            raise GraphError("h1 subcase a1 needs V_ab = V_bc = empty and |V_abc| >= 2")
    elif subcase == "b1":
        if (n_ab == 0) == (n_bc == 0) or n_abc < 1:
            raise GraphError("h1 subcase b1 needs exactly one of V_ab, V_bc empty and V_abc nonempty")
    elif subcase == "c1":
        if n_ab < 1 or n_bc < 1:
            raise GraphError("h1 subcase c1 needs V_ab and V_bc nonempty")
    else:
        raise GraphError(f"unknown h1 subcase: {subcase!r}")
    return _attach_sets(3, [(0, 1), (1, 2)],
                        [((0, 1, 2), n_abc), ((0, 1), n_ab), ((1, 2), n_bc), ((1,), n_b)])


def h2(subcase: str, n_abc: int, n_ab: int = 0, n_bc: int = 0, n_b: int = 0) -> Graph:
    """Family H2: triangle on 0,1,2 (a,b,c); blocks V_abc, V_ab, V_bc, V_b from vertex 3.

    Subcases: a2 requires V_abc nonempty; b2 requires V_ab and V_bc nonempty.
    """
    if subcase == "a2":
        if n_abc < 1:
            raise GraphError("h2 subcase a2 needs V_abc nonempty")
    elif subcase == "b2":
        if n_ab < 1 or n_bc < 1:
            raise GraphError("h2 subcase b2 needs V_ab and V_bc nonempty")
    else:
        raise GraphError(f"unknown h2 subcase: {subcase!r}")
    return _attach_sets(3, [(0, 1), (1, 2), (0, 2)],
                        [((0, 1, 2), n_abc), ((0, 1), n_ab), ((1, 2), n_bc), ((1,), n_b)])


def h3(n_a: int, n_ab: int) -> Graph:
    """Family H3: nonadjacent a=0, b=1; nonempty blocks V_a then V_ab from vertex 2."""
    if n_a < 1 or n_ab < 1:
        raise GraphError("h3 needs V_a and V_ab nonempty")
    return _attach_sets(2, [], [((0,), n_a), ((0, 1), n_ab)])


def h4(subcase: str, n_abc: int, n_ab: int = 0) -> Graph:
    """Family H4: vertex a=0 and edge bc on 1,2 (a adjacent to neither);
    blocks V_abc then V_ab from vertex 3.

    Subcases: a4 requires V_ab empty and |V_abc| >= 2; b4 requires V_ab nonempty.
    """
    if subcase == "a4":
        if n_ab or n_abc < 2:
            raise GraphError("h4 subcase a4 needs V_ab empty and |V_abc| >= 2")
    elif subcase == "b4":
        if n_ab < 1:
            raise GraphError("h4 subcase b4 needs V_ab nonempty")
    else:
        raise GraphError(f"unknown h4 subcase: {subcase!r}")
    return _attach_sets(3, [(1, 2)], [((0, 1, 2), n_abc), ((0, 1), n_ab)])


def h5(subcase: str, n_abc: int, n_ab: int = 0) -> Graph:
    """Family H5: path a-b-c on 0,1,2; blocks V_abc then V_ab from vertex 3.

    Subcases: a5 requires both blocks nonempty; b5 requires V_ab empty and |V_abc| >= 2.
    """
    if subcase == "a5":
        if n_ab < 1 or n_abc < 1:
            raise GraphError("h5 subcase a5 needs V_ab and V_abc nonempty")
    elif subcase == "b5":
        if n_ab or n_abc < 2:
            raise GraphError("h5 subcase b5 needs V_ab empty and |V_abc| >= 2")
    else:
        raise GraphError(f"unknown h5 subcase: {subcase!r}")
    return _attach_sets(3, [(0, 1), (1, 2)], [((0, 1, 2), n_abc), ((0, 1), n_ab)])


def h6(subcase: str, n_abc: int, n_ac: int = 0) -> Graph:
    """Family H6: path a-b-c on 0,1,2; blocks V_abc then V_ac from vertex 3.

    Subcases: a6 requires both blocks nonempty; b6 requires V_ac empty and |V_abc| >= 2.
    """
    if subcase == "a6":
        if n_ac < 1 or n_abc < 1:
            raise GraphError("h6 subcase a6 needs V_ac and V_abc nonempty")
    elif subcase == "b6":
        if n_ac or n_abc < 2:
            raise GraphError("h6 subcase b6 needs V_ac empty and |V_abc| >= 2")
    else:
        raise GraphError(f"unknown h6 subcase: {subcase!r}")
    return _attach_sets(3, [(0, 1), (1, 2)], [((0, 1, 2), n_abc), ((0, 2), n_ac)])


def sharpness_h(m: Iterable[int]) -> Graph:
    """Lower-bound sharpness graph built from t >= 3 blocks.

    Block i (sizes m[i] >= 2) occupies a consecutive index range: x_i, y_i,
    z_i, then the m[i] large-part vertices of a K_{2,m_i} whose small part is
    {x_i, y_i}; z_i is adjacent to x_i and y_i, and the z_i form a cycle.
    """
    sizes = list(m)
    t = len(sizes)
    if t < 3:
        raise GraphError("sharpness_h requires t >= 3 blocks (cycle on the z_i)")
    if any(mi < 2 for mi in sizes):
        raise GraphError("sharpness_h requires every m_i >= 2")
    edges = []
    z = []
    off = 0
    for mi in sizes:
        x, y, zi = off, off + 1, off + 2
        z.append(zi)
        for j in range(mi):
            big = off + 3 + j
            edges += [(x, big), (y, big)]
        edges += [(zi, x), (zi, y)]
        off += 3 + mi
    for i in range(t):
        edges.append((z[i], z[(i + 1) % t]))
    return build(off, edges)


def corona(g: Graph, h: Graph) -> Graph:
    """Corona of g with h on g.n * (1 + h.n) vertices.

    g keeps indices 0..g.n-1; copy i of h occupies the contiguous block
    g.n + i*h.n .. g.n + (i+1)*h.n - 1, and vertex i of g is adjacent to
    every vertex of copy i.
    """
    edges = list(g.edges())
    for i in range(g.n):
        base = g.n + i * h.n
        for (u, v) in h.edges():
            edges.append((base + u, base + v))
        for j in range(h.n):
            edges.append((i, base + j))
    return build(g.n * (1 + h.n), edges)


def gadget(g: Graph) -> Graph:
    """Hardness gadget on 4n vertices: attach to each vertex v_i the center
    u_i of a fresh 3-vertex path.

    Base vertices keep 0..n-1; u_i = n + i; the two leaves of u_i are
    2n + 2i and 2n + 2i + 1.
    """
    n = g.n
    edges = list(g.edges())
    for i in range(n):
        u = n + i
        edges += [(i, u), (u, 2 * n + 2 * i), (u, 2 * n + 2 * i + 1)]
    return build(4 * n, edges)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus its parameters (nested for corona/gadget)."""

    tag: str
    params: tuple[int, ...] = ()
    subcase: str | None = None
    inner: tuple["FamilySpec", ...] = ()


def family(spec: FamilySpec) -> Graph:
    """Instantiate a FamilySpec; raises GraphError on violated family constraints."""
    t, p = spec.tag, spec.params
    if t == "corona":
        if len(spec.inner) != 2:
            raise GraphError("corona spec needs exactly two inner specs")
        return corona(family(spec.inner[0]), family(spec.inner[1]))
    if t == "gadget":
        if len(spec.inner) != 1:
            raise GraphError("gadget spec needs exactly one inner spec")
        return gadget(family(spec.inner[0]))
    if t in _H_SUBCASES:
        if spec.subcase is None:
            raise GraphError(f"{t} requires a subcase, one of {_H_SUBCASES[t]}")
        fn = {"h1": h1, "h2": h2, "h4": h4, "h5": h5, "h6": h6}[t]
        return fn(spec.subcase, *p)
    table = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "empty": empty,
        "star": star,
        "double_star": double_star,
        "dstar": double_star,
        "kbipartite": complete_bipartite,
        "g1": g1,
        "g2": g2,
        "g3": g3,
        "h3": h3,
    }
    if t in table:
        return table[t](*p)
    if t == "kpartite":
        return complete_multipartite(p)
    if t == "sharph":
        return sharpness_h(p)
    raise GraphError(f"unknown family tag: {t!r}")


def _split_top(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise GraphError(f"unbalanced parentheses in spec: {s!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise GraphError(f"unbalanced parentheses in spec: {s!r}")
    parts.append("".join(cur))
    return parts


_KNOWN_TAGS = frozenset({
    "path", "cycle", "complete", "empty", "star", "double_star", "dstar",
    "kbipartite", "kpartite", "g1", "g2", "g3",
    "h1", "h2", "h3", "h4", "h5", "h6", "sharph",
})


def parse_family_spec(text: str) -> FamilySpec:
    """Parse a generator DSL string, e.g. 'path:6', 'h1:a1,2', 'corona(path:2,empty:2)'."""
    s = text.strip()
    for wrapper in ("corona", "gadget"):
        if s.startswith(wrapper + "(") and s.endswith(")"):
            inner = [parse_family_spec(p) for p in _split_top(s[len(wrapper) + 1:-1])]
            return FamilySpec(wrapper, inner=tuple(inner))
    name, sep, argstr = s.partition(":")
    name = name.strip().lower()
    if not sep:
        raise GraphError(f"cannot parse graph spec {text!r}: expected family:params")
    if name not in _KNOWN_TAGS:
        raise GraphError(f"unknown family tag: {name!r}")
    raw = [a.strip() for a in argstr.split(",") if a.strip() != ""]
    subcase = None
    if name in _H_SUBCASES:
        if not raw or raw[0] not in _H_SUBCASES[name]:
            raise GraphError(f"{name} spec needs a subcase from {_H_SUBCASES[name]}, got {text!r}")
        subcase = raw[0]
        raw = raw[1:]
    try:
        params = tuple(int(a) for a in raw)
    except ValueError:
        raise GraphError(f"non-integer parameter in spec {text!r}") from None
    return FamilySpec(name, params=params, subcase=subcase)


# ---------------------------------------------------------------------------
# Enumeration and sampling
# ---------------------------------------------------------------------------

MAX_ENUM_GRAPH_N = 7
MAX_ENUM_TREE_N = 10


def _graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    return build(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All labeled simple graphs on n vertices, edge-bitmask ascending.

    Edge i of the bitmask is the i-th pair in lexicographic order.
    """
    if not 1 <= n <= MAX_ENUM_GRAPH_N:
        raise GraphError(f"graph enumeration supports 1 <= n <= {MAX_ENUM_GRAPH_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield _graph_from_mask(n, pairs, mask)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All labeled connected simple graphs on n vertices, edge-bitmask ascending."""
    if not 1 <= n <= MAX_ENUM_GRAPH_N:
        raise GraphError(f"graph enumeration supports 1 <= n <= {MAX_ENUM_GRAPH_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        for i in range(len(pairs)):
            if mask >> i & 1:
                u, v = pairs[i]
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
        seen = 1
        stack = [0]
        while stack:
            w = nbr[stack.pop()] & ~seen
            while w:
                b = w & -w
                seen |= b
                stack.append(b.bit_length() - 1)
                w ^= b
        if seen == (1 << n) - 1:
            yield _graph_from_mask(n, pairs, mask)


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    """Decode a Prufer sequence of length n-2 into its labeled tree."""
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    edges = []
    ptr = 0
    leaf = -1
    for s in seq:
        if leaf == -1:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, s))
        deg[leaf] -= 1
        deg[s] -= 1
        if deg[s] == 1 and s < ptr:
            leaf = s
        else:
            leaf = -1
    u, v = (x for x in range(n) if deg[x] == 1)
    edges.append((u, v))
    return build(n, edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees via Prufer decoding, sequence-lexicographic order."""
    if not 1 <= n <= MAX_ENUM_TREE_N:
        raise GraphError(f"tree enumeration supports 1 <= n <= {MAX_ENUM_TREE_N}, got {n}")
    if n == 1:
        yield build(1, [])
        return
    if n == 2:
        yield build(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def sample_connected_graphs(n: int, count: int, seed: int,
                            max_deg: int | None = None) -> Iterator[Graph]:
    """Seeded uniform edge-subset sampling, rejection-filtered to connected graphs."""
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    produced = 0
    while produced < count:
        edges = [p for p in pairs if rng.getrandbits(1)]
        g = build(n, edges)
        if not is_connected(g):
            continue
        if max_deg is not None and g.max_degree > max_deg:
            continue
        produced += 1
        yield g


def sample_trees(n: int, count: int, seed: int) -> Iterator[Graph]:
    """Seeded uniform labeled trees via random Prufer sequences."""
    rng = random.Random(seed)
    if n <= 2:
        for _ in range(count):
            yield path(n)
        return
    for _ in range(count):
        seq = tuple(rng.randrange(n) for _ in range(n - 2))
        yield prufer_decode(seq, n)


# ---------------------------------------------------------------------------
# Edge-list text format: "n m" header then m lines "u v"
# ---------------------------------------------------------------------------


def from_edge_list_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty graph text: expected 'n m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"line 1: expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"line 1: expected integer header 'n m', got {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"expected {m} edges, found {len(body)}")
    edges = []
    for i, ln in enumerate(body, start=2):
        toks = ln.split()
        if len(toks) != 2:
            raise GraphError(f"line {i}: expected 'u v', got {ln!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphError(f"line {i}: expected integers, got {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {i}: vertex out of range 0..{n - 1}: {ln!r}")
        if u == v:
            raise GraphError(f"line {i}: self-loop rejected: {ln!r}")
        edges.append((u, v))
    return build(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines)
