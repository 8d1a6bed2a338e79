"""Finite simplicial complexes with the star/link/cut-set calculus.

Everything is kept combinatorial: a complex is its downward-closed family of
simplices (nonempty vertex sets).  Removing the open star of a full subcomplex
B keeps exactly the simplices disjoint from B, so ``A_B`` is the full
subcomplex on the complementary vertices.  Connectivity questions are then
plain graph questions about the 1-skeleton.
"""

import itertools
import json

from .errors import (AdjacencyViolation, BadLinkMap, DisconnectedInput,
                     NotFull)


def _vkey(v):
    # total order over mixed-type vertex ids, deterministic across runs
    return (v.__class__.__name__, repr(v))


class SimplicialComplex:
    """A finite simplicial complex, closed under taking faces.

    ``simplices`` may be given as any iterable of vertex iterables; faces are
    added automatically.  ``labels`` optionally tags vertices with external
    data (e.g. wall ids) and is carried through constructions.
    """

    def __init__(self, simplices=(), labels=None, vertices=()):
        closed = set()
        for s in simplices:
            s = frozenset(s)
            if not s:
                continue
            for k in range(1, len(s) + 1):
                for face in itertools.combinations(sorted(s, key=_vkey), k):
                    closed.add(frozenset(face))
        for v in vertices:
            closed.add(frozenset([v]))
        self.simplices = frozenset(closed)
        self.vertices = tuple(sorted({v for s in closed for v in s}, key=_vkey))
        self.labels = dict(labels) if labels else {}

    def __contains__(self, s):
        return frozenset(s) in self.simplices

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.simplices == other.simplices)

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        return (f"SimplicialComplex({len(self.vertices)} vertices, "
                f"{len(self.simplices)} simplices, dim {self.dimension()})")

    def dimension(self):
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def simplices_sorted(self):
        """All simplices in the canonical (dimension, lexicographic) order."""
        return sorted(self.simplices,
                      key=lambda s: (len(s), sorted(map(_vkey, s))))

    def k_simplices(self, k):
        return [s for s in self.simplices_sorted() if len(s) == k + 1]

    def edges(self):
        return self.k_simplices(1)

    def adjacent(self, u, v):
        return frozenset([u, v]) in self.simplices

    def neighbors(self, v):
        return sorted({w for e in self.simplices if len(e) == 2 and v in e
                       for w in e if w != v}, key=_vkey)

    def link(self, B):
        """Link of the full subcomplex spanned by the vertex set ``B``.

        Faces of simplices meeting B that are themselves disjoint from B, for
        B given as a set of vertices spanning a simplex or a full subcomplex.
        """
        B = frozenset(B)
        out = set()
        for s in self.simplices:
            inter = s & B
            if inter and inter in self.simplices:
                rest = s - B
                if rest and (inter | rest) in self.simplices:
                    out.add(rest)
        return SimplicialComplex(out,
                                 labels={v: self.labels[v] for s in out
                                         for v in s if v in self.labels})

    def is_full(self, vertex_set):
        """Every simplex spanned inside ``vertex_set`` is accounted for.

        With simplices stored as vertex sets, a set of vertices always spans a
        full subcomplex; this checks the set is a subset of the vertices.
        """
        return set(vertex_set) <= set(self.vertices)

    def restrict(self, vertex_set):
        """Full subcomplex on ``vertex_set``."""
        vs = set(vertex_set)
        keep = {s for s in self.simplices if s <= vs}
        return SimplicialComplex(keep, labels={v: self.labels[v] for v in vs
                                               if v in self.labels},
                                 vertices=vs & set(self.vertices))

    def relabel(self, mapping):
        """Rename vertices by ``mapping`` (missing keys map to themselves)."""
        f = lambda v: mapping.get(v, v)
        return SimplicialComplex(
            ({f(v) for v in s} for s in self.simplices),
            labels={f(v): lab for v, lab in self.labels.items()},
            vertices=[f(v) for v in self.vertices])


def components(S):
    """Partition of the vertices by 1-skeleton connectivity.

    Components are frozensets, ordered by their least vertex id.
    """
    parent = {v: v for v in S.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in S.simplices:
        if len(e) == 2:
            a, b = sorted(e, key=_vkey)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for v in S.vertices:
        groups.setdefault(find(v), set()).add(v)
    comps = [frozenset(g) for g in groups.values()]
    return tuple(sorted(comps, key=lambda c: min(map(_vkey, c))))


def b0(S):
    return len(components(S))


def is_connected(S):
    return b0(S) <= 1


def remove_open_star(S, B):
    """``A_B``: delete the open star of the full subcomplex on vertices ``B``.

    Keeps exactly the simplices whose vertex set avoids B.
    """
    B = set(B)
    if not S.is_full(B):
        raise NotFull(f"vertices {sorted(B, key=_vkey)!r} not in the complex")
    return S.restrict(set(S.vertices) - B)


def is_cut_set(S, V):
    """True iff the pairwise non-adjacent vertex set ``V`` separates ``S``."""
    V = set(V)
    for u, v in itertools.combinations(sorted(V, key=_vkey), 2):
        if S.adjacent(u, v):
            raise AdjacencyViolation(f"{u!r} and {v!r} are adjacent")
    return b0(remove_open_star(S, V)) >= 2


def min_cut_cardinality(S, k_max):
    """Smallest k <= k_max admitting a cut set, with its lex-least witness.

    Exhaustive over antichains of pairwise non-adjacent vertices; returns
    (k, witness) or None.  Requires S connected.
    """
    if not is_connected(S):
        raise DisconnectedInput("min_cut_cardinality requires a connected complex")
    verts = sorted(S.vertices, key=_vkey)
    for k in range(1, k_max + 1):
        for combo in itertools.combinations(verts, k):
            if any(S.adjacent(u, v)
                   for u, v in itertools.combinations(combo, 2)):
                continue
            if b0(remove_open_star(S, combo)) >= 2:
                return k, frozenset(combo)
    return None


def find_cut_simplex(S):
    """Lexicographically least simplex whose open-star removal disconnects S."""
    if not is_connected(S):
        raise DisconnectedInput("find_cut_simplex requires a connected complex")
    for s in S.simplices_sorted():
        if b0(remove_open_star(S, s)) >= 2:
            return s
    return None


def connected_sum(A, a, B, b, phi=None):
    """Glue ``A`` minus the open star of ``a`` to ``B`` minus the star of ``b``.

    ``phi`` maps Lk_A(a) vertices to Lk_B(b) vertices and must be a simplicial
    isomorphism of the links (identity on shared ids when omitted).  Vertex
    ids from A are kept; B's remaining vertices are relabelled ("B", v) when
    they would collide with retained A ids.
    """
    la, lb = A.link([a]), B.link([b])
    if phi is None:
        phi = {v: v for v in la.vertices}
    if sorted(map(_vkey, phi.keys())) != sorted(map(_vkey, la.vertices)) or \
       sorted(map(_vkey, phi.values())) != sorted(map(_vkey, lb.vertices)):
        raise BadLinkMap("phi is not a bijection between the links")
    if {frozenset(phi[v] for v in s) for s in la.simplices} != lb.simplices:
        raise BadLinkMap("phi does not carry Lk(a) to Lk(b)")

    Aa = remove_open_star(A, [a])
    Bb = remove_open_star(B, [b])
    inv = {w: v for v, w in phi.items()}
    taken = set(Aa.vertices)
    rename = {}
    for w in Bb.vertices:
        if w in inv:
            rename[w] = inv[w]
        elif w in taken:
            rename[w] = ("B", w)
        else:
            rename[w] = w
    Bb = Bb.relabel(rename)
    labels = dict(Bb.labels)
    labels.update(Aa.labels)
    return SimplicialComplex(set(Aa.simplices) | set(Bb.simplices),
                             labels=labels,
                             vertices=set(Aa.vertices) | set(Bb.vertices))


def flag_complete(G):
    """Clique complex of the 1-skeleton of ``G``."""
    simplices = set(s for s in G.simplices if len(s) <= 2)
    current = [s for s in simplices if len(s) == 2]
    k = 2
    while current:
        nxt = set()
        for s in current:
            top = max(s, key=_vkey)
            for v in G.vertices:
                if _vkey(v) <= _vkey(top) or v in s:
                    continue
                if all(G.adjacent(v, u) for u in s):
                    nxt.add(s | {v})
        simplices |= nxt
        current = sorted(nxt, key=lambda s: sorted(map(_vkey, s)))
        k += 1
    return SimplicialComplex(simplices, labels=dict(G.labels),
                             vertices=G.vertices)


def is_flag(S):
    """Every clique of the 1-skeleton spans a simplex."""
    return flag_complete(S).simplices == S.simplices


class ZeroCohomologyClass:
    """A nonzero reduced 0-cohomology class of S with Z/2 coefficients.

    Recorded as a proper nonempty subset of the components, canonicalized so
    the subset avoids the component containing the least vertex.
    """

    def __init__(self, ambient, chosen):
        self.ambient = ambient
        self.components = components(ambient)
        chosen = frozenset(chosen)
        if not chosen or chosen == frozenset(self.components):
            raise ValueError("class must be a proper nonempty subset of components")
        if self.components[0] in chosen:
            chosen = frozenset(self.components) - chosen
        self.chosen = chosen

    def value(self, vertex):
        """0/1 value of the class on the component containing ``vertex``."""
        for comp in self.components:
            if vertex in comp:
                return 1 if comp in self.chosen else 0
        raise KeyError(vertex)

    def __eq__(self, other):
        return (isinstance(other, ZeroCohomologyClass)
                and self.chosen == other.chosen
                and self.components == other.components)

    def __hash__(self):
        return hash(self.chosen)

    def __repr__(self):
        picks = sorted(sorted(map(_vkey, c))[0] for c in self.chosen)
        return f"ZeroCohomologyClass(on components {picks})"


def reduced_h0_classes(S):
    """One representative per nonzero class of reduced H^0(S; Z/2).

    Proper nonempty subsets of the component set modulo complementation,
    canonicalized to avoid the least component; deterministic order.
    """
    comps = components(S)
    if len(comps) <= 1:
        return []
    rest = comps[1:]
    out = []
    for k in range(1, len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            out.append(ZeroCohomologyClass(S, frozenset(combo)))
    out.sort(key=lambda c: (len(c.chosen),
                            sorted(sorted(map(_vkey, comp))[0]
                                   for comp in c.chosen)))
    return out


def isomorphism(A, B, respect_labels=False):
    """A simplicial isomorphism A -> B as a vertex dict, or None.

    Deterministic backtracking over vertices sorted by a local invariant
    (label, simplex-degree profile); label-compatible when flagged.
    """
    if len(A.vertices) != len(B.vertices) or len(A.simplices) != len(B.simplices):
        return None

    def profile(S, v):
        counts = {}
        for s in S.simplices:
            if v in s:
                counts[len(s)] = counts.get(len(s), 0) + 1
        lab = S.labels.get(v) if respect_labels else None
        return (repr(lab), tuple(sorted(counts.items())))

    pa = {v: profile(A, v) for v in A.vertices}
    pb = {v: profile(B, v) for v in B.vertices}
    if sorted(pa.values()) != sorted(pb.values()):
        return None

    averts = sorted(A.vertices, key=lambda v: (pa[v], _vkey(v)))
    b_by_profile = {}
    for v in B.vertices:
        b_by_profile.setdefault(pb[v], []).append(v)
    for vs in b_by_profile.values():
        vs.sort(key=_vkey)

    asimp = A.simplices
    bsimp = B.simplices
    adj_a = {v: set(A.neighbors(v)) for v in A.vertices}
    adj_b = {v: set(B.neighbors(v)) for v in B.vertices}

    mapping = {}
    used = set()

    def consistent(v, w):
        for u, x in mapping.items():
            if (u in adj_a[v]) != (x in adj_b[w]):
                return False
        return True

    def extend(i):
        if i == len(averts):
            return all(frozenset(mapping[v] for v in s) in bsimp for s in asimp)
        v = averts[i]
        for w in b_by_profile.get(pa[v], []):
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return dict(mapping)
    return None


def to_json(S):
    """JSON dict with maximal simplices only (string/int vertex ids)."""
    maximal = [s for s in S.simplices
               if not any(s < t for t in S.simplices)]
    return {
        "vertices": [v for v in S.vertices],
        "simplices": [sorted(s, key=_vkey) for s in
                      sorted(maximal, key=lambda s: (len(s), sorted(map(_vkey, s))))],
        "labels": {str(v): S.labels[v] for v in S.labels},
    }


def from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    labels = {}
    verts = {str(v): v for v in data.get("vertices", [])}
    for k, lab in data.get("labels", {}).items():
        labels[verts.get(k, k)] = lab
    return SimplicialComplex(data.get("simplices", ()), labels=labels,
                             vertices=data.get("vertices", ()))


def to_dot(S, name="complex"):
    """DOT rendering of the 1-skeleton; vertex label = external tag."""
    lines = [f"graph {name} {{"]
    for v in S.vertices:
        lab = S.labels.get(v, v)
        lines.append(f'  "{v}" [label="{lab}"];')
    for e in S.edges():
        a, b = sorted(e, key=_vkey)
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines)
