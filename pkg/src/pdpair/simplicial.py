"""Finite ordered simplicial complexes, pairs, triads, and constructions.

Simplices are strictly increasing tuples of integer vertex ids drawn
from a universe 0..N-1; the global vertex order fixes all orientations
and basis orders, so every matrix downstream is reproducible.
"""

from __future__ import annotations

import json
from itertools import combinations

from .chaincomplex import ChainComplexZ
from .intmatrix import SparseIntMatrix


def _as_simplex(seq):
    t = tuple(seq)
    if len(set(t)) != len(t):
        raise ValueError(f"repeated vertex in simplex {t}")
    if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
        t = tuple(sorted(t))
    return t


def _close_faces(facets):
    simplices = set()
    for f in facets:
        t = _as_simplex(f)
        for k in range(1, len(t) + 1):
            simplices.update(combinations(t, k))
    return simplices


class SimplicialComplex:
    """Simplicial complex on the vertex universe 0..vertex_count-1.

    Stores every simplex, grouped by dimension and sorted, so each
    degree has a deterministic chain basis. Not every universe id must
    appear as a vertex; this lets subcomplexes share their ambient
    complex's ids.
    """

    def __init__(self, vertex_count, facets=()):
        self.vertex_count = vertex_count
        simplices = _close_faces(facets)
        for s in simplices:
            if s[0] < 0 or s[-1] >= vertex_count:
                raise ValueError(f"simplex {s} outside universe "
                                 f"0..{vertex_count - 1}")
        self.by_dim = {}
        for s in simplices:
            self.by_dim.setdefault(len(s) - 1, []).append(s)
        for d in self.by_dim:
            self.by_dim[d].sort()
        self._index = {d: {s: i for i, s in enumerate(lst)}
                       for d, lst in self.by_dim.items()}

    @property
    def dim(self):
        return max(self.by_dim) if self.by_dim else -1

    def simplices(self, d):
        return self.by_dim.get(d, [])

    def index(self, s):
        s = tuple(s)
        return self._index[len(s) - 1][s]

    def __contains__(self, s):
        s = tuple(s)
        return s in self._index.get(len(s) - 1, ())

    def rank(self, d):
        return len(self.by_dim.get(d, ()))

    def f_vector(self):
        return tuple(self.rank(d) for d in range(self.dim + 1))

    def size(self):
        return sum(len(v) for v in self.by_dim.values())

    def vertices(self):
        return [s[0] for s in self.simplices(0)]

    def euler_characteristic(self):
        return sum((-1) ** d * self.rank(d) for d in self.by_dim)

    def facets(self):
        """Maximal simplices, sorted within each dimension."""
        out = []
        for d, lst in sorted(self.by_dim.items()):
            if d + 1 not in self.by_dim:
                out.extend(lst)
                continue
            covered = set()
            for s in self.by_dim[d + 1]:
                for i in range(len(s)):
                    covered.add(s[:i] + s[i + 1:])
            out.extend(s for s in lst if s not in covered)
        return out

    def is_pure(self):
        d = self.dim
        return all(len(f) - 1 == d for f in self.facets())

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.vertex_count == other.vertex_count
                and self.by_dim == other.by_dim)

    def __repr__(self):
        return (f"SimplicialComplex(vertices={self.vertex_count}, "
                f"f={self.f_vector()})")

    def validate(self):
        """List of invariant violations (empty when valid)."""
        problems = []
        for d, lst in self.by_dim.items():
            if lst != sorted(set(lst)):
                problems.append(f"dimension {d} basis not sorted/unique")
            for s in lst:
                if len(s) - 1 != d:
                    problems.append(f"simplex {s} filed under dimension {d}")
                if list(s) != sorted(set(s)):
                    problems.append(f"simplex {s} not strictly increasing")
                if s[0] < 0 or s[-1] >= self.vertex_count:
                    problems.append(f"simplex {s} outside vertex universe")
                for i in range(len(s)):
                    if len(s) > 1 and s[:i] + s[i + 1:] not in self:
                        problems.append(f"face {s[:i] + s[i + 1:]} absent")
        return problems

    def boundary_matrix(self, p):
        """Matrix of the degree-p boundary in the canonical bases.

        Rows are (p-1)-simplices, columns p-simplices, and the column
        of s holds (-1)^i at its i-th face.
        """
        if p < 0 or p > self.dim:
            raise ValueError(f"degree {p} out of range 0..{self.dim}")
        if p == 0:
            return SparseIntMatrix(0, self.rank(0), [])
        lows = self._index.get(p - 1, {})
        entries = []
        for j, s in enumerate(self.simplices(p)):
            for i in range(len(s)):
                entries.append((lows[s[:i] + s[i + 1:]], j, (-1) ** i))
        return SparseIntMatrix(len(lows), self.rank(p), entries)

    def chain_complex(self):
        ranks = {d: self.rank(d) for d in range(self.dim + 1)}
        bnds = {p: self.boundary_matrix(p) for p in range(1, self.dim + 1)}
        return ChainComplexZ(ranks, bnds)

    def homology(self, p=None):
        c = self.chain_complex()
        if p is None:
            return c.homology_all()
        return c.homology(p)

    def subcomplex(self, facets):
        """Subcomplex spanned by the given facets, same universe."""
        sub = SimplicialComplex(self.vertex_count, facets)
        for d, lst in sub.by_dim.items():
            for s in lst:
                if s not in self:
                    raise ValueError(f"simplex {s} not in ambient complex")
        return sub

    def to_json(self):
        return {"vertices": self.vertex_count,
                "facets": sorted([list(f) for f in self.facets()])}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["vertices"], obj["facets"])

    def canonical_form(self):
        return json.dumps(self.to_json(), sort_keys=True)


def from_labeled_facets(facets):
    """Relabel arbitrary (sortable, hashable) labels to 0..N-1.

    Returns the complex and the label -> integer map; label order gives
    the integer order, keeping constructions deterministic.
    """
    labels = sorted({v for f in facets for v in f})
    toint = {v: i for i, v in enumerate(labels)}
    cx = SimplicialComplex(len(labels),
                           [[toint[v] for v in f] for f in facets])
    return cx, toint


class SimplicialPair:
    """Pair (total, sub); sub may be empty, sharing total's universe."""

    def __init__(self, total, sub=None):
        self.total = total
        if sub is None:
            sub = SimplicialComplex(total.vertex_count)
        self.sub = sub
        if sub.vertex_count != total.vertex_count:
            raise ValueError("pair members must share a vertex universe")
        for d, lst in sub.by_dim.items():
            for s in lst:
                if s not in total:
                    raise ValueError(f"sub simplex {s} not in total")

    def __repr__(self):
        return f"SimplicialPair({self.total!r}, sub f={self.sub.f_vector()})"

    def relative_basis(self, p):
        """Indices (into total's basis) of p-simplices outside sub."""
        return [i for i, s in enumerate(self.total.simplices(p))
                if s not in self.sub]

    def chain_complex(self, relative=False):
        if not relative:
            return self.total.chain_complex()
        keep = {p: self.relative_basis(p)
                for p in range(self.total.dim + 1)}
        ranks = {p: len(keep[p]) for p in keep}
        bnds = {}
        for p in range(1, self.total.dim + 1):
            if ranks.get(p) and ranks.get(p - 1):
                bnds[p] = self.total.boundary_matrix(p).take(
                    keep[p - 1], keep[p])
        return ChainComplexZ(ranks, bnds)

    def homology(self, p=None, relative=True):
        c = self.chain_complex(relative=relative)
        if p is None:
            return c.homology_all()
        return c.homology(p)

    def to_json(self):
        obj = self.total.to_json()
        obj["sub_facets"] = sorted([list(f) for f in self.sub.facets()])
        return obj

    @classmethod
    def from_json(cls, obj):
        total = SimplicialComplex(obj["vertices"], obj["facets"])
        sub = SimplicialComplex(obj["vertices"], obj.get("sub_facets", []))
        return cls(total, sub)


class SimplicialTriad:
    """Triad (total; sub1, sub2); the couple (sub1, sub2) is excisive."""

    def __init__(self, total, sub1, sub2):
        self.total = total
        self.sub1 = sub1
        self.sub2 = sub2
        SimplicialPair(total, sub1)
        SimplicialPair(total, sub2)

    def union_sub(self):
        return self.total.subcomplex(self.sub1.facets() + self.sub2.facets())

    def intersection_sub(self):
        facets = [s for d in self.sub1.by_dim
                  for s in self.sub1.by_dim[d] if s in self.sub2]
        return self.total.subcomplex(facets)

    def to_json(self):
        obj = self.total.to_json()
        obj["sub1_facets"] = sorted([list(f) for f in self.sub1.facets()])
        obj["sub2_facets"] = sorted([list(f) for f in self.sub2.facets()])
        return obj

    @classmethod
    def from_json(cls, obj):
        n = obj["vertices"]
        return cls(SimplicialComplex(n, obj["facets"]),
                   SimplicialComplex(n, obj.get("sub1_facets", [])),
                   SimplicialComplex(n, obj.get("sub2_facets", [])))


def _sort_sign(values):
    """Permutation sign sorting values, or 0 on a repeat."""
    vals = list(values)
    sign = 1
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if vals[i] == vals[j]:
                return 0
            if vals[i] > vals[j]:
                vals[i], vals[j] = vals[j], vals[i]
                sign = -sign
    return sign


class SimplicialMap:
    """Simplicial map given by its action on vertex ids."""

    def __init__(self, domain, codomain, vertex_images, check=True):
        self.domain = domain
        self.codomain = codomain
        self.vertex_images = dict(vertex_images)
        if check:
            self.validate()

    def validate(self):
        for v in self.domain.vertices():
            if v not in self.vertex_images:
                raise ValueError(f"vertex {v} has no image")
        for d in self.domain.by_dim:
            for s in self.domain.by_dim[d]:
                img = tuple(sorted({self.vertex_images[v] for v in s}))
                if img not in self.codomain:
                    raise ValueError(f"image {img} of {s} is not a simplex")

    def image_simplex(self, s):
        """(sign, image) of an oriented simplex; sign 0 on collapse."""
        imgs = [self.vertex_images[v] for v in s]
        sign = _sort_sign(imgs)
        if sign == 0:
            return 0, None
        return sign, tuple(sorted(imgs))

    def is_isomorphism(self):
        dom_verts = self.domain.vertices()
        img = {self.vertex_images[v] for v in dom_verts}
        if len(img) != len(dom_verts) or \
                sorted(img) != self.codomain.vertices():
            return False
        for d in set(self.domain.by_dim) | set(self.codomain.by_dim):
            got = set()
            for s in self.domain.simplices(d):
                sign, t = self.image_simplex(s)
                if sign == 0:
                    return False
                got.add(t)
            if got != set(self.codomain.simplices(d)):
                return False
        return True

    def compose(self, other):
        """self after other."""
        images = {v: self.vertex_images[w]
                  for v, w in other.vertex_images.items()}
        return SimplicialMap(other.domain, self.codomain, images,
                             check=False)

    def chain_map(self):
        """Induced map of simplicial chain complexes (collapses to 0)."""
        from .chaincomplex import ChainMap
        src = self.domain.chain_complex()
        tgt = self.codomain.chain_complex()
        mats = {}
        for p in range(self.domain.dim + 1):
            entries = []
            for j, s in enumerate(self.domain.simplices(p)):
                sign, t = self.image_simplex(s)
                if sign:
                    entries.append((self.codomain.index(t), j, sign))
            mats[p] = SparseIntMatrix(tgt.rank(p), src.rank(p), entries)
        return ChainMap(src, tgt, mats)


def simplex_complex(n):
    """The full n-simplex as a complex."""
    return SimplicialComplex(n + 1, [range(n + 1)])


def boundary_sphere(n):
    """Boundary complex of the n-simplex, a triangulated (n-1)-sphere."""
    if n < 1:
        raise ValueError("need n >= 1")
    verts = range(n + 1)
    return SimplicialComplex(n + 1, list(combinations(verts, n)))


def cone(cx):
    """Cone on a complex: new apex joined to everything; sub = base."""
    if not cx.by_dim:
        raise ValueError("cone of the empty complex")
    apex = cx.vertex_count
    facets = [f + (apex,) for f in cx.facets()]
    total = SimplicialComplex(cx.vertex_count + 1, facets)
    sub = SimplicialComplex(cx.vertex_count + 1,
                            [list(f) for f in cx.facets()])
    return SimplicialPair(total, sub)


def _staircase_facets(sq, tr):
    """Maximal monotone chains in the grid of a facet pair."""
    q, r = len(sq) - 1, len(tr) - 1
    out = []

    def walk(i, j, path):
        if i == q and j == r:
            out.append(tuple(path))
            return
        if i < q:
            walk(i + 1, j, path + [(sq[i + 1], tr[j])])
        if j < r:
            walk(i, j + 1, path + [(sq[i], tr[j + 1])])

    walk(0, 0, [(sq[0], tr[0])])
    return out


def product(a, b):
    """Product complex triangulated by monotone vertex-pair chains.

    Vertices are pairs (va, vb) in dictionary order, relabeled to
    va * b.vertex_count + vb.
    """
    if not a.by_dim or not b.by_dim:
        raise ValueError("product of an empty complex")
    nb = b.vertex_count
    facets = []
    for sa in a.facets():
        for sb in b.facets():
            for chain in _staircase_facets(sa, sb):
                facets.append([va * nb + vb for va, vb in chain])
    return SimplicialComplex(a.vertex_count * nb, facets)


def product_pair(x, y):
    """Pair product: total x.total*y.total, sub covering either sub."""
    total = product(x.total, y.total)
    nb = y.total.vertex_count
    facets = []
    for sa, sb in [(x.total, y.sub), (x.sub, y.total)]:
        if not sa.by_dim or not sb.by_dim:
            continue
        for fa in sa.facets():
            for fb in sb.facets():
                for chain in _staircase_facets(fa, fb):
                    facets.append([va * nb + vb for va, vb in chain])
    sub = SimplicialComplex(total.vertex_count, facets)
    return SimplicialPair(total, sub)


def glue_needs_subdivision(pair):
    """True when some simplex outside sub has every vertex on sub.

    Gluing such a pair by vertex identification would merge the simplex
    with its mirror, so glue() subdivides first.
    """
    subverts = set(pair.sub.vertices())
    for d, lst in pair.total.by_dim.items():
        for s in lst:
            if s not in pair.sub and all(v in subverts for v in s):
                return True
    return False


def _carry_sd(sub, toint, vertex_count):
    """Subcomplex of a subdivision spanned by a subcomplex's flags."""
    if not sub.by_dim:
        return SimplicialComplex(vertex_count)
    sd, tsub = barycentric_subdivision(sub)
    back = {i: s for s, i in tsub.items()}
    return SimplicialComplex(
        vertex_count, [[toint[back[v]] for v in f] for f in sd.facets()])


def subdivide_pair(pair):
    """Barycentric subdivision of a pair; sub subdivides compatibly.

    Returns the pair and the map original simplex -> new vertex id.
    """
    total, toint = barycentric_subdivision(pair.total)
    sub = _carry_sd(pair.sub, toint, total.vertex_count)
    return SimplicialPair(total, sub), toint


def subdivide_triad(tr):
    """Barycentric subdivision of a triad, all members compatibly."""
    total, toint = barycentric_subdivision(tr.total)
    return SimplicialTriad(total,
                           _carry_sd(tr.sub1, toint, total.vertex_count),
                           _carry_sd(tr.sub2, toint, total.vertex_count))


def _subdivide_for_glue(x1, x2, phi):
    s1, t1 = subdivide_pair(x1)
    s2, t2 = subdivide_pair(x2)
    images = {}
    for d in x1.sub.by_dim:
        for s in x1.sub.by_dim[d]:
            img = tuple(sorted(phi[v] for v in s))
            images[t1[s]] = t2[img]
    return s1, s2, images


def glue(x1, x2, along=None):
    """Amalgamate two pairs along an isomorphism of their subs.

    along maps x1.sub vertices to x2.sub vertices (identity when None).
    Returns (complex, include1, include2). When a simplex outside a sub
    has all its vertices on the gluing locus the naive vertex-labeled
    quotient is not simplicial, so both inputs are barycentrically
    subdivided first (once always suffices).
    """
    if along is None:
        if x1.sub.by_dim != x2.sub.by_dim:
            raise ValueError("subs differ; an identification map is needed")
        phi = {v: v for v in x1.sub.vertices()}
    else:
        phi = {v: along.vertex_images[v] for v in x1.sub.vertices()}
    iso = SimplicialMap(x1.sub, x2.sub, phi, check=False)
    if not iso.is_isomorphism():
        raise ValueError("identification is not an isomorphism of subs")
    if glue_needs_subdivision(x1) or glue_needs_subdivision(x2):
        x1, x2, phi = _subdivide_for_glue(x1, x2, phi)
        assert not (glue_needs_subdivision(x1)
                    or glue_needs_subdivision(x2))
    inv = {w: v for v, w in phi.items()}
    sub2verts = set(phi.values())

    def label2(w):
        return (0, inv[w]) if w in sub2verts else (1, w)

    labeled = [[(0, v) for v in f] for f in x1.total.facets()]
    labeled += [[label2(w) for w in f] for f in x2.total.facets()]
    glued, toint = from_labeled_facets(labeled)
    inc1 = SimplicialMap(x1.total, glued,
                         {v: toint[(0, v)] for v in x1.total.vertices()},
                         check=False)
    inc2 = SimplicialMap(x2.total, glued,
                         {w: toint[label2(w)] for w in x2.total.vertices()},
                         check=False)
    return glued, inc1, inc2


def double(pair, with_maps=False):
    """Two copies of a pair glued along its sub.

    For a triad (X; Y1, Y2) the gluing runs along Y2 and the resulting
    sub is the double of Y1 along Y1 meet Y2; for a plain pair the
    resulting sub is empty.
    """
    if isinstance(pair, SimplicialTriad):
        body = SimplicialPair(pair.total, pair.sub2)
        if glue_needs_subdivision(body):
            pair = subdivide_triad(pair)
            body = SimplicialPair(pair.total, pair.sub2)
        glued, inc1, inc2 = glue(body, body)
        sub_facets = []
        for f in pair.sub1.facets():
            for inc in (inc1, inc2):
                sub_facets.append([inc.vertex_images[v] for v in f])
        out = SimplicialPair(glued, SimplicialComplex(glued.vertex_count,
                                                      sub_facets))
    else:
        if not pair.sub.by_dim:
            raise ValueError("doubling needs a nonempty sub")
        glued, inc1, inc2 = glue(pair, pair)
        out = SimplicialPair(glued)
    if with_maps:
        return out, inc1, inc2
    return out


def double_swap_map(doubled, inc1, inc2):
    """The involution of a double exchanging the copies, fixing the sub."""
    images = {}
    for v, w in inc1.vertex_images.items():
        images[w] = inc2.vertex_images[v]
    for v, w in inc2.vertex_images.items():
        images[w] = inc1.vertex_images[v]
    total = doubled.total if isinstance(doubled, SimplicialPair) else doubled
    return SimplicialMap(total, total, images)


def puncture(cx, facet_index=0):
    """Remove the interior of one facet of a pure complex.

    Keeps every proper face of the deleted facet; the pair's sub is the
    facet's boundary sphere.
    """
    if not cx.is_pure():
        raise ValueError("puncture needs a pure complex")
    facets = cx.facets()
    if not 0 <= facet_index < len(facets):
        raise ValueError("facet index out of range")
    gone = facets[facet_index]
    kept = [f for i, f in enumerate(facets) if i != facet_index]
    d = len(gone) - 1
    bdry = [gone[:i] + gone[i + 1:] for i in range(d + 1)]
    total = SimplicialComplex(cx.vertex_count, kept + bdry)
    sub = SimplicialComplex(cx.vertex_count, bdry)
    return SimplicialPair(total, sub)


def connected_components(cx):
    """Vertex sets of the 1-skeleton's components, each sorted; the
    list is ordered by smallest member."""
    adj = {v: set() for v in cx.vertices()}
    for u, v in cx.simplices(1):
        adj[u].add(v)
        adj[v].add(u)
    seen = set()
    comps = []
    for v in cx.vertices():
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            w = stack.pop()
            comp.append(w)
            for u in adj[w]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def full_subcomplex(cx, vertices):
    """Subcomplex of simplices with every vertex in the given set."""
    keep = set(vertices)
    simplices = [s for d in cx.by_dim for s in cx.by_dim[d]
                 if all(v in keep for v in s)]
    return cx.subcomplex(simplices)


def boundary_subcomplex(cx):
    """Subcomplex of codimension-1 faces lying in exactly one facet."""
    if not cx.is_pure():
        raise ValueError("boundary needs a pure complex")
    d = cx.dim
    if d == 0:
        return SimplicialComplex(cx.vertex_count)
    count = {}
    for s in cx.simplices(d):
        for i in range(d + 1):
            f = s[:i] + s[i + 1:]
            count[f] = count.get(f, 0) + 1
    facets = [f for f, c in count.items() if c == 1]
    return SimplicialComplex(cx.vertex_count, facets)


def barycentric_subdivision(cx):
    """First barycentric subdivision; new vertices are the old simplices
    ordered by (dimension, lexicographic)."""
    alltups = [s for d in sorted(cx.by_dim) for s in cx.by_dim[d]]
    toint = {s: i for i, s in enumerate(alltups)}
    facets = []

    def chains(s, path):
        path = path + [toint[s]]
        proper = [s[:i] + s[i + 1:] for i in range(len(s))] \
            if len(s) > 1 else []
        if not proper:
            facets.append(list(reversed(path)))
            return
        for f in proper:
            chains(f, path)

    for f in cx.facets():
        chains(f, [])
    return SimplicialComplex(len(alltups), facets), toint
