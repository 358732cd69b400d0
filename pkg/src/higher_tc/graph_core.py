"""
Finite simple graphs and the clique invariants behind RAAG complexity.

For a right-angled Artin group A_G the classifying space satisfies
cat(BA_G) = c(G), the clique number, and TC_r(BA_G) = z_r(G), the largest
total size of r cliques whose common intersection is empty.

Vertex sets are bitmasks internally and sorted tuples at the API surface.
The empty set and singletons count as cliques.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .errors import DomainError, ParseError, ResourceError

MAX_VERTICES = 64
BRUTEFORCE_BUDGET = 10**7


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``; ``edges`` holds pairs (i, j) with i < j."""

    n: int
    edges: frozenset
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise DomainError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise DomainError(f"edge ({i}, {j}) has an endpoint outside 0..{self.n - 1}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))
        adj = [0] * self.n
        for i, j in norm:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        edges = list(edges)
        seen = set()
        for i, j in edges:
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DomainError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(edges), labels)

    @property
    def adjacency(self):
        """Neighbour bitmask of every vertex."""
        return self._adj

    def label(self, v):
        return self.labels[v] if self.labels else str(v)


def complete_graph(m):
    return Graph.from_edges(m, combinations(range(m), 2))


def parse_graph(text):
    """
    Read the graph file format::

        # comment
        # name 0 a          (optional vertex label)
        v 6
        e 0 1

    Errors carry the offending line number.
    """
    n = None
    edges = []
    seen = {}
    names = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s:
            continue
        if s.startswith("#"):
            parts = s[1:].split()
            if len(parts) == 3 and parts[0] == "name":
                try:
                    names[int(parts[1])] = parts[2]
                except ValueError:
                    raise ParseError(f"bad vertex index in name line: {parts[1]!r}", no)
            continue
        parts = s.split()
        if parts[0] == "v":
            if n is not None:
                raise ParseError("duplicate 'v' header", no)
            if edges:
                raise ParseError("'v' header must precede edges", no)
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("expected 'v <n>'", no)
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before 'v <n>' header", no)
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise ParseError("expected 'e <i> <j>'", no)
            i, j = int(parts[1]), int(parts[2])
            if i >= n or j >= n:
                raise ParseError(f"vertex index out of range (n = {n})", no)
            if i == j:
                raise ParseError(f"self-loop at vertex {i}", no)
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ParseError(f"duplicate edge {key} (first on line {seen[key]})", no)
            seen[key] = no
            edges.append(key)
        else:
            raise ParseError(f"unrecognised line {s!r}", no)
    if n is None:
        raise ParseError("missing 'v <n>' header")
    labels = None
    if names:
        bad = [k for k in names if not 0 <= k < n]
        if bad:
            raise ParseError(f"name given for nonexistent vertex {bad[0]}")
        labels = tuple(names.get(v, str(v)) for v in range(n))
    return Graph(n, frozenset(edges), labels)


def format_graph(g):
    lines = []
    if g.labels:
        lines += [f"# name {v} {g.labels[v]}" for v in range(g.n)]
    lines.append(f"v {g.n}")
    lines += [f"e {i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def is_clique(g, s):
    s = tuple(s)
    for v in s:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} not in graph with {g.n} vertices")
    adj = g.adjacency
    m = _mask(s)
    return all((adj[v] | (1 << v)) & m == m for v in s)


def _maximal_clique_masks(g, max_vertices):
    if g.n > max_vertices:
        raise ResourceError(
            f"graph has {g.n} vertices; clique enumeration is capped at {max_vertices}"
        )
    adj = g.adjacency
    out = []

    # Bron-Kerbosch with Tomita pivoting on bitmasks
    def expand(R, P, X):
        if not P and not X:
            out.append(R)
            return
        PX = P | X
        pivot = max(_bits(PX), key=lambda u: bin(P & adj[u]).count("1"))
        cand = P & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(R | low, P & adj[v], X & adj[v])
            P &= ~low
            X |= low
            cand &= ~low

    expand(0, (1 << g.n) - 1, 0)
    return sorted(out, key=_bits)


def maximal_cliques(g, max_vertices=MAX_VERTICES):
    """All inclusion-maximal cliques, each a sorted tuple, in lexicographic order."""
    return [_bits(m) for m in _maximal_clique_masks(g, max_vertices)]


def all_cliques(g):
    """Every clique including the empty one, as bitmasks (exhaustive extension)."""
    adj = g.adjacency
    out = [0]

    def grow(mask, common, start):
        for v in range(start, g.n):
            if common >> v & 1:
                m = mask | (1 << v)
                out.append(m)
                grow(m, common & adj[v], v + 1)

    grow(0, (1 << g.n) - 1, 0)
    return out


def clique_number(g):
    if g.n < 1:
        raise DomainError("clique number needs at least one vertex")
    return max(len(c) for c in maximal_cliques(g))


def _check_r(g, r):
    if r < 2:
        raise DomainError(f"r must be at least 2, got {r}")
    if g.n < 1:
        raise DomainError("z_r needs at least one vertex")


def z_r(g, r, witness=False, max_vertices=MAX_VERTICES):
    """
    Maximum of |C_1| + ... + |C_r| over cliques with empty common intersection.

    Works on maximal cliques only: for an r-multiset D_1..D_r of maximal
    cliques the best clique family inside it scores sum |D_i| - |meet D_i|,
    since every vertex of the common meet has to be dropped from one member.
    The search memoizes on (picks left, current meet) so its cost grows with
    the number of distinct meets, not with r.

    With ``witness=True`` returns ``(value, family)`` where family is built
    from the lexicographically smallest optimal index tuple of maximal
    cliques, with the residual meet removed from the last member.
    """
    _check_r(g, r)
    masks = _maximal_clique_masks(g, max_vertices)
    sizes = [bin(m).count("1") for m in masks]
    full = (1 << g.n) - 1

    @lru_cache(maxsize=None)
    def best(k, meet):
        if k == 0:
            return -bin(meet).count("1")
        return max(s + best(k - 1, meet & m) for s, m in zip(sizes, masks))

    value = best(r, full)
    if not witness:
        best.cache_clear()
        return value

    picks = []
    meet, k, target = full, r, value
    while k:
        for idx, (s, m) in enumerate(zip(sizes, masks)):
            if s + best(k - 1, meet & m) == target:
                picks.append(idx)
                target -= s
                meet &= m
                k -= 1
                break
    best.cache_clear()
    family = [masks[i] for i in picks]
    family[-1] &= ~meet
    family = tuple(_bits(m) for m in family)
    assert sum(len(c) for c in family) == value
    return value, family


def z_r_bruteforce(g, r, budget=BRUTEFORCE_BUDGET):
    """Exhaustive z_r over all clique multisets, not just maximal cliques."""
    _check_r(g, r)
    cliques = all_cliques(g)
    if len(cliques) ** r > budget:
        raise ResourceError(
            f"{len(cliques)} cliques ^ {r} exceeds the brute-force budget {budget}"
        )
    sizes = {c: bin(c).count("1") for c in cliques}
    best = -1
    for fam in combinations_with_replacement(cliques, r):
        meet = fam[0]
        for c in fam[1:]:
            meet &= c
        if meet:
            continue
        total = sum(sizes[c] for c in fam)
        if total > best:
            best = total
    return best


def gamma_n(n):
    """
    1-skeleton of an n-simplex with an extra n-simplex glued on each facet.

    Vertices 0..n are the base simplex v_0..v_n, vertices n+1..2n+1 are the
    apexes w_0..w_n; w_i sees every v_j except v_i.
    """
    if n < 2:
        raise DomainError(f"gamma_n needs n >= 2, got {n}")
    edges = list(combinations(range(n + 1), 2))
    for i in range(n + 1):
        w = n + 1 + i
        edges += [(j, w) for j in range(n + 1) if j != i]
    labels = tuple(f"v{i}" for i in range(n + 1)) + tuple(f"w{i}" for i in range(n + 1))
    return Graph.from_edges(2 * n + 2, edges, labels)


def z_gamma_closed_form(n, r):
    if n < 2 or r < 2:
        raise DomainError("need n >= 2 and r >= 2")
    if r <= n:
        return (r - 1) * (n + 1) + r
    return r * (n + 1)


@dataclass(frozen=True)
class RaagInvariants:
    cat: int
    tc: dict


def raag_invariants(g, r_max):
    if r_max < 2:
        raise DomainError("r_max must be at least 2")
    return RaagInvariants(clique_number(g), {r: z_r(g, r) for r in range(2, r_max + 1)})


def stabilization_bound(g):
    """
    An r0 with z_{r+1}(g) = z_r(g) + c(g) for every r >= r0.

    Writing z_r = r c - defect(r), the defect is minimised by a set of
    distinct maximal cliques containing a maximum one; extra picks repeat
    that maximum clique at no cost. Such a set has at most as many members
    as there are maximal cliques, so r0 = max(2, #maximal cliques) works.
    """
    return max(2, len(maximal_cliques(g)))
