"""Recognizers for the connected graphs with gamma_oidR in {3, 4, 5}.

Recognition is brute force over anchor tuples with exact neighborhood
matching; families may overlap, so classify reports the first accepting
family in the fixed order star, G1, G2, G3, H1..H6.  Only the value class
carries a correctness contract.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_connected

THREE, FOUR, FIVE, OTHER = "THREE", "FOUR", "FIVE", "OTHER"


class CharacterizeError(ValueError):
    """Classification precondition violated."""


@dataclass(frozen=True)
class ClassifyResult:
    value_class: str
    family: str | None = None
    subcase: str | None = None
    anchors: tuple[int, ...] = ()


def is_star(g: Graph) -> bool:
    """True iff g is K_{1,n-1}; requires a connected graph on n >= 3."""
    _require_connected(g)
    return g.m == g.n - 1 and g.max_degree == g.n - 1


def _require_connected(g: Graph) -> None:
    if g.n < 3:
        raise CharacterizeError(f"classification requires n >= 3, got n = {g.n}")
    if not is_connected(g):
        raise CharacterizeError("classification requires a connected graph")


# --- the three graphs of the gamma_oidR = 4 family ---


def _match_g1(g: Graph, v1: int, v2: int) -> bool:
    # edge v1v2, k >= 1 common neighbors seeing exactly {v1, v2}, plus
    # at least one pendant leaf on v1, and nothing else
    if not g.has_edge(v1, v2):
        return False
    k = leaves = 0
    for u in range(g.n):
        if u == v1 or u == v2:
            continue
        nb = g.adj[u]
        if nb == {v1, v2}:
            k += 1
        elif nb == {v1}:
            leaves += 1
        else:
            return False
    return k >= 1 and leaves >= 1


def _match_g2(g: Graph, v1: int, v2: int) -> bool:
    if not g.has_edge(v1, v2):
        return False
    others = [u for u in range(g.n) if u != v1 and u != v2]
    return len(others) >= 1 and all(g.adj[u] == {v1, v2} for u in others)


def _match_g3(g: Graph, v1: int, v2: int) -> bool:
    if g.has_edge(v1, v2):
        return False
    others = [u for u in range(g.n) if u != v1 and u != v2]
    return len(others) >= 2 and all(g.adj[u] == {v1, v2} for u in others)


def recognize_G(g: Graph) -> tuple[str, tuple[int, int]] | None:
    """First family among G1, G2, G3 matching g, with its anchor pair."""
    _require_connected(g)
    n = g.n
    for v1 in range(n):
        for v2 in range(n):
            if v2 != v1 and _match_g1(g, v1, v2):
                return "G1", (v1, v2)
    for v1 in range(n):
        for v2 in range(v1 + 1, n):
            if _match_g2(g, v1, v2):
                return "G2", (v1, v2)
    for v1 in range(n):
        for v2 in range(v1 + 1, n):
            if _match_g3(g, v1, v2):
                return "G3", (v1, v2)
    return None


# --- the six families of the gamma_oidR = 5 characterization ---


def _partition_by_neighborhood(g: Graph, anchors: tuple[int, ...],
                               allowed: dict[frozenset, str]) -> dict[str, list[int]] | None:
    """Assign every non-anchor vertex to the V-set its exact neighborhood names;
    None if some vertex fits no set."""
    out: dict[str, list[int]] = {name: [] for name in allowed.values()}
    anchor_set = set(anchors)
    for u in range(g.n):
        if u in anchor_set:
            continue
        name = allowed.get(g.adj[u])
        if name is None:
            return None
        out[name].append(u)
    return out


def _match_h1(g: Graph, a: int, b: int, c: int) -> str | None:
    sets = _partition_by_neighborhood(g, (a, b, c), {
        frozenset((b,)): "b",
        frozenset((a, b)): "ab",
        frozenset((b, c)): "bc",
        frozenset((a, b, c)): "abc",
    })
    if sets is None:
        return None
    ab, bc, abc = len(sets["ab"]), len(sets["bc"]), len(sets["abc"])
    if ab == 0 and bc == 0 and abc >= 2:
        return "a1"
    if (ab == 0) != (bc == 0) and abc >= 1:
        return "b1"
    if ab >= 1 and bc >= 1:
        return "c1"
    return None


def _match_h2(g: Graph, a: int, b: int, c: int) -> str | None:
    sets = _partition_by_neighborhood(g, (a, b, c), {
        frozenset((b,)): "b",
        frozenset((a, b)): "ab",
        frozenset((b, c)): "bc",
        frozenset((a, b, c)): "abc",
    })
    if sets is None:
        return None
    if len(sets["abc"]) >= 1:
        return "a2"
    if len(sets["ab"]) >= 1 and len(sets["bc"]) >= 1:
        return "b2"
    return None


def _match_h3(g: Graph, a: int, b: int) -> str | None:
    sets = _partition_by_neighborhood(g, (a, b), {
        frozenset((a,)): "a",
        frozenset((a, b)): "ab",
    })
    if sets is None:
        return None
    if len(sets["a"]) >= 1 and len(sets["ab"]) >= 1:
        return "none"
    return None


def _match_h4(g: Graph, a: int, b: int, c: int) -> str | None:
    sets = _partition_by_neighborhood(g, (a, b, c), {
        frozenset((a, b)): "ab",
        frozenset((a, b, c)): "abc",
    })
    if sets is None:
        return None
    ab, abc = len(sets["ab"]), len(sets["abc"])
    if ab == 0 and abc >= 2:
        return "a4"
    if ab >= 1:
        return "b4"
    return None


def _match_h5(g: Graph, a: int, b: int, c: int) -> str | None:
    sets = _partition_by_neighborhood(g, (a, b, c), {
        frozenset((a, b)): "ab",
        frozenset((a, b, c)): "abc",
    })
    if sets is None:
        return None
    ab, abc = len(sets["ab"]), len(sets["abc"])
    if ab >= 1 and abc >= 1:
        return "a5"
    if ab == 0 and abc >= 2:
        return "b5"
    return None


def _match_h6(g: Graph, a: int, b: int, c: int) -> str | None:
    sets = _partition_by_neighborhood(g, (a, b, c), {
        frozenset((a, c)): "ac",
        frozenset((a, b, c)): "abc",
    })
    if sets is None:
        return None
    ac, abc = len(sets["ac"]), len(sets["abc"])
    if ac >= 1 and abc >= 1:
        return "a6"
    if ac == 0 and abc >= 2:
        return "b6"
    return None


def _path_triples(g: Graph):
    # ordered (a, b, c) with edges ab, bc and non-edge ac, lexicographic
    for a in range(g.n):
        for b in sorted(g.adj[a]):
            for c in sorted(g.adj[b]):
                if c != a and c not in g.adj[a]:
                    yield a, b, c


def _triangle_triples(g: Graph):
    for a in range(g.n):
        for b in sorted(g.adj[a]):
            for c in sorted(g.adj[a] & g.adj[b]):
                yield a, b, c


def _h3_pairs(g: Graph):
    for a in range(g.n):
        for b in range(g.n):
            if b != a and b not in g.adj[a]:
                yield a, b


def _h4_triples(g: Graph):
    # a isolated from the edge bc
    for a in range(g.n):
        for b in range(g.n):
            if b == a or b in g.adj[a]:
                continue
            for c in sorted(g.adj[b]):
                if c != a and c not in g.adj[a]:
                    yield a, b, c


_H_MATCHERS = (
    ("H1", _match_h1, _path_triples),
    ("H2", _match_h2, _triangle_triples),
    ("H3", _match_h3, _h3_pairs),
    ("H4", _match_h4, _h4_triples),
    ("H5", _match_h5, _path_triples),
    ("H6", _match_h6, _path_triples),
)


def recognize_H(g: Graph) -> tuple[str, str, tuple[int, ...]] | None:
    """First family among H1..H6 matching g, with its subcase and anchors."""
    _require_connected(g)
    for name, matcher, candidates in _H_MATCHERS:
        for anchors in candidates(g):
            sub = matcher(g, *anchors)
            if sub is not None:
                return name, sub, tuple(anchors)
    return None


def classify(g: Graph) -> ClassifyResult:
    """Value class of a connected graph on n >= 3: THREE, FOUR, FIVE, or OTHER.

    All three recognizers run so that an (impossible) overlap between value
    classes is surfaced as an error rather than masked by ordering.
    """
    _require_connected(g)
    star_hit = is_star(g)
    g_hit = recognize_G(g)
    h_hit = recognize_H(g)
    if int(star_hit) + int(g_hit is not None) + int(h_hit is not None) > 1:
        raise CharacterizeError("recognizers for distinct value classes both accepted; "
                                "this contradicts their characterizations")
    if star_hit:
        center = next(v for v in range(g.n) if g.degree(v) == g.n - 1)
        return ClassifyResult(THREE, "star", None, (center,))
    if g_hit is not None:
        return ClassifyResult(FOUR, g_hit[0], None, g_hit[1])
    if h_hit is not None:
        name, sub, anchors = h_hit
        return ClassifyResult(FIVE, name, None if sub == "none" else sub, anchors)
    return ClassifyResult(OTHER)


def verify_classification(g: Graph, res: ClassifyResult) -> bool:
    """Re-check the reported anchors and V-set partition against the family definition."""
    if res.value_class == OTHER:
        return res.family is None
    if res.family == "star":
        return is_star(g) and len(res.anchors) == 1 and g.degree(res.anchors[0]) == g.n - 1
    if res.family == "G1":
        return _match_g1(g, *res.anchors)
    if res.family == "G2":
        return _match_g2(g, *res.anchors)
    if res.family == "G3":
        return _match_g3(g, *res.anchors)
    matcher = dict((name, fn) for name, fn, _ in _H_MATCHERS).get(res.family)
    if matcher is None:
        return False
    sub = matcher(g, *res.anchors)
    return sub is not None and (res.subcase or "none") == sub
