"""Chain and cochain complexes of a simplicial pair with coefficients
in an edge transport system."""

from .chaincomplex import ChainComplexZ
from .intmatrix import SparseIntMatrix
from .simplicial import SimplicialComplex, SimplicialPair


class TwistedComplex:
    """C_*(X, Y; E), or the cochain complex C^*(X, Y; E) stored at
    negated degrees so both are plain chain complexes.

    The fiber of a p-simplex sits at its minimal vertex.  A degree-p
    basis vector is a (kept simplex, fiber coordinate) pair, flattened
    as position * rank + coordinate; positions run over total's
    p-simplices in canonical order, skipping the sub in relative mode.
    Relative cochains are the cochains vanishing on the sub, which
    keeps the same basis rule.

    Boundary of sigma tensor m: face i >= 1 keeps m, face 0 transports
    it from the anchor sigma[0] to the new anchor sigma[1].  The
    coboundary transports the face-0 term back.
    """

    def __init__(self, pair, edges, relative=False, cochain=False):
        if isinstance(pair, SimplicialComplex):
            pair = SimplicialPair(pair)
        self.pair = pair
        self.edges = edges
        self.relative = relative
        self.cochain = cochain
        self.rank = edges.rank
        total = pair.total
        self.kept = {}
        self.pos = {}
        for p in range(total.dim + 1):
            keep = pair.relative_basis(p) if relative \
                else list(range(total.rank(p)))
            self.kept[p] = keep
            self.pos[p] = {idx: k for k, idx in enumerate(keep)}
        r = self.rank
        sgn = -1 if cochain else 1
        ranks = {sgn * p: len(self.kept[p]) * r for p in self.kept}
        bnds = {}
        for p in range(1, total.dim + 1):
            keep = self.kept[p]
            if not keep or not self.kept[p - 1]:
                continue
            simps = total.simplices(p)
            entries = []
            for jpos, jidx in enumerate(keep):
                s = simps[jidx]
                for i in range(p + 1):
                    f = s[:i] + s[i + 1:]
                    kpos = self.pos[p - 1].get(total.index(f))
                    if kpos is None:
                        continue
                    if i == 0:
                        u = edges.transport(s[1], s[0]) if cochain \
                            else edges.transport(s[0], s[1])
                        for a, b, v in u.entries():
                            entries.append((kpos * r + a, jpos * r + b, v)
                                           if not cochain else
                                           (jpos * r + a, kpos * r + b, v))
                    else:
                        sign = -1 if i % 2 else 1
                        for t in range(r):
                            entries.append((kpos * r + t, jpos * r + t, sign)
                                           if not cochain else
                                           (jpos * r + t, kpos * r + t, sign))
            if cochain:
                mat = SparseIntMatrix(len(keep) * r,
                                      len(self.kept[p - 1]) * r, entries)
                bnds[-(p - 1)] = mat
            else:
                mat = SparseIntMatrix(len(self.kept[p - 1]) * r,
                                      len(keep) * r, entries)
                bnds[p] = mat
        self.cc = ChainComplexZ(ranks, bnds)

    def __repr__(self):
        kind = "cochain" if self.cochain else "chain"
        rel = ", relative" if self.relative else ""
        return f"TwistedComplex({kind}, rank {self.rank}{rel}, {self.cc!r})"

    def degree(self, p):
        """Degree of the underlying complex where C_p or C^p lives."""
        return -p if self.cochain else p

    def flat(self, p, total_index, coord):
        return self.pos[p][total_index] * self.rank + coord

    def unflat(self, p, k):
        pos, coord = divmod(k, self.rank)
        return self.kept[p][pos], coord

    def simplex_at(self, p, k):
        idx, coord = self.unflat(p, k)
        return self.pair.total.simplices(p)[idx], coord

    def homology(self, p, data=False):
        return self.cc.homology(self.degree(p), data=data)

    def homology_all(self, data=False):
        return {p: self.homology(p, data=data)
                for p in range(self.pair.total.dim + 1)}

    def boundary_of(self, p, z):
        """Boundary (or coboundary) of a flat chain in geometric
        degree p, as a flat chain in the adjacent geometric degree."""
        return self.cc.boundary(self.degree(p)).mul_vec(z)

    def chain_from_class(self, obj):
        """(degree, flat chain) from {"degree", "coeffs"} JSON, where
        coeffs rows are [total simplex index, fiber coordinate, value]."""
        p = obj["degree"]
        z = {}
        for sidx, coord, val in obj["coeffs"]:
            if not 0 <= coord < self.rank:
                raise ValueError(f"fiber coordinate {coord} out of range")
            k = self.flat(p, sidx, coord)
            z[k] = z.get(k, 0) + val
        return p, {k: v for k, v in z.items() if v}

    def class_to_json(self, p, z):
        coeffs = [[*self.unflat(p, k), v] for k, v in sorted(z.items()) if v]
        return {"degree": p, "coeffs": coeffs}


def twisted_complex(pair, edges, relative=False):
    return TwistedComplex(pair, edges, relative=relative, cochain=False)


def twisted_cochain_complex(pair, edges, relative=False):
    return TwistedComplex(pair, edges, relative=relative, cochain=True)
