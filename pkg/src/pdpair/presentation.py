"""Edge-path group presentations from complexes, and word utilities.

Words are tuples of nonzero integers: k > 0 is generator k-1, -k its
inverse. The presentation keeps the origin map sending each 1-simplex
to the word of its edge loop (tree edges to the empty word), which is
what lets local systems transport coefficients along edges.
"""

from __future__ import annotations

import hashlib
import json

from .chaincomplex import HomologyGroup
from .intmatrix import SparseIntMatrix, smith_normal_form


def word_inverse(w):
    return tuple(-s for s in reversed(w))


def free_reduce(w):
    out = []
    for s in w:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def cyclic_reduce(w):
    w = free_reduce(w)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def _cyclic_normal(w):
    """Least rotation among the word and its inverse (dedup key)."""
    best = None
    for u in (w, word_inverse(w)):
        for i in range(len(u) or 1):
            r = u[i:] + u[:i]
            if best is None or r < best:
                best = r
    return best if best is not None else ()


class Presentation:
    """Group presentation with an optional simplicial-edge origin map."""

    def __init__(self, ngens, relators, origin=None):
        self.ngens = ngens
        self.relators = [tuple(r) for r in relators]
        self.origin = dict(origin) if origin else {}
        for r in self.relators:
            for s in r:
                if s == 0 or abs(s) > ngens:
                    raise ValueError(f"bad letter {s} in relator {r}")

    def __repr__(self):
        return f"Presentation(gens={self.ngens}, relators={len(self.relators)})"

    def edge_word(self, u, v):
        """Word of the oriented edge u -> v (its loop through the tree)."""
        if u == v:
            return ()
        if u < v:
            return self.origin[(u, v)]
        return word_inverse(self.origin[(v, u)])

    def abelianized_matrix(self):
        """Exponent-sum matrix: rows generators, columns relators."""
        entries = {}
        for j, r in enumerate(self.relators):
            for s in r:
                key = (abs(s) - 1, j)
                entries[key] = entries.get(key, 0) + (1 if s > 0 else -1)
        return SparseIntMatrix(self.ngens, len(self.relators),
                               [(i, j, v) for (i, j), v in entries.items()])

    def abelianization(self):
        m = self.abelianized_matrix()
        snf = smith_normal_form(m, transforms=False)
        torsion = sorted(snf.nonunit_factors)
        return HomologyGroup(self.ngens - snf.rank, torsion)

    def has_finite_abelianization(self):
        return self.abelianization().free_rank == 0

    def to_json(self):
        return {"generators": self.ngens,
                "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["generators"], obj["relators"])

    def presentation_hash(self):
        blob = json.dumps(self.to_json(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def simplify(self):
        """Tietze reduction by length-1/2 relators.

        Returns (smaller presentation, words) where words[i] expresses
        original generator i in the new generators. Only eliminations
        that substitute single letters are used, so words stay short.
        """
        words = [cyclic_reduce(r) for r in self.relators]
        alive = set(range(self.ngens))
        elim = {}

        def substitute(w, g, rep):
            out = []
            for s in w:
                if abs(s) - 1 == g:
                    out.extend(rep if s > 0 else word_inverse(rep))
                else:
                    out.append(s)
            return cyclic_reduce(tuple(out))

        changed = True
        while changed:
            changed = False
            seen = {}
            keep = []
            for w in words:
                if not w:
                    continue
                key = _cyclic_normal(w)
                if key in seen:
                    continue
                seen[key] = True
                keep.append(w)
            words = keep
            for w in words:
                g = rep = None
                if len(w) == 1:
                    g, rep = abs(w[0]) - 1, ()
                elif len(w) == 2 and abs(w[0]) != abs(w[1]):
                    a, b = w
                    # solve the higher-index letter in terms of the other
                    if abs(a) < abs(b):
                        a, b = b, a
                    g = abs(a) - 1
                    rep = word_inverse((b,)) if a > 0 else (b,)
                if g is None:
                    continue
                elim[g] = rep
                alive.discard(g)
                words = [substitute(u, g, rep) for u in words]
                changed = True
                break

        newindex = {g: i for i, g in enumerate(sorted(alive))}

        def expand(w, depth=0):
            if depth > self.ngens + 1:
                raise AssertionError("substitution chain loops")
            out = []
            for s in w:
                g = abs(s) - 1
                if g in newindex:
                    out.append((g, s > 0))
                else:
                    rep = elim[g] if s > 0 else word_inverse(elim[g])
                    out.extend(expand(rep, depth + 1))
            return out

        def renumber(w):
            return free_reduce(tuple(
                (newindex[g] + 1) if pos else -(newindex[g] + 1)
                for g, pos in w))

        relators = []
        seen = set()
        for w in words:
            r = renumber(expand(w))
            r = cyclic_reduce(r)
            key = _cyclic_normal(r)
            if r and key not in seen:
                seen.add(key)
                relators.append(r)
        original = [renumber(expand((g + 1,))) for g in range(self.ngens)]
        return Presentation(len(alive), relators), original


def fundamental_presentation(cx, base=None):
    """Edge-path presentation of a connected complex's fundamental group.

    BFS spanning tree in canonical vertex order; one generator per
    non-tree edge, one relator per triangle.
    """
    verts = cx.vertices()
    if not verts:
        raise ValueError("empty complex has no fundamental group")
    if base is None:
        base = verts[0]
    adj = {v: [] for v in verts}
    for u, v in cx.simplices(1):
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    tree = set()
    seen = {base}
    queue = [base]
    while queue:
        nxt = []
        for u in queue:
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    tree.add((min(u, v), max(u, v)))
                    nxt.append(v)
        queue = sorted(nxt)
    if seen != set(verts):
        raise ValueError("complex is not connected")
    origin = {}
    ngens = 0
    for e in cx.simplices(1):
        if e in tree:
            origin[e] = ()
        else:
            origin[e] = (ngens + 1,)
            ngens += 1
    relators = []
    for a, b, c in cx.simplices(2):
        w = free_reduce(origin[(a, b)] + origin[(b, c)]
                        + word_inverse(origin[(a, c)]))
        if w:
            relators.append(w)
    return Presentation(ngens, relators, origin)


def sign_characters(pres, max_rank=14):
    """All homomorphisms to {+1,-1}, as 0/1 exponent tuples per generator.

    Solves the relator exponent matrix over GF(2); refuses to enumerate
    more than 2^max_rank characters.
    """
    rows = []
    for r in pres.relators:
        row = 0
        for s in r:
            row ^= 1 << (abs(s) - 1)
        if row:
            rows.append(row)
    n = pres.ngens
    pivots = {}
    for row in rows:
        for col in sorted(pivots, reverse=True):
            if row >> col & 1:
                row ^= pivots[col]
        if row:
            top = row.bit_length() - 1
            pivots[top] = row
    free = [c for c in range(n) if c not in pivots]
    if len(free) > max_rank:
        raise ValueError(f"too many characters: 2^{len(free)}")
    out = []
    for mask in range(1 << len(free)):
        x = 0
        for k, c in enumerate(free):
            if mask >> k & 1:
                x |= 1 << c
        for col in sorted(pivots):
            # the pivot row's bits all sit at or below col, so the
            # lower bits of x are final and force the pivot bit
            row = pivots[col]
            if bin(row & x).count("1") % 2:
                x ^= 1 << col
        out.append(tuple(x >> c & 1 for c in range(n)))
    return sorted(out)
