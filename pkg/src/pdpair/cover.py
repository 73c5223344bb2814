"""Finite covers of a simplicial pair, built from a coset table over
the base's edge-path presentation, with the chain-level transfer."""

from .chaincomplex import ChainMap
from .intmatrix import SparseIntMatrix
from .simplicial import SimplicialComplex, SimplicialMap, SimplicialPair


class CoverPair:
    """The d-fold cover of a base pair determined by a coset table.

    Vertex (v, sheet) of the cover is labeled v * d + sheet.  A facet
    lift starting on sheet s places vertex v_i on the sheet reached by
    acting with the edge word from the anchor v_0 to v_i; the triangle
    relators make the choice independent of the path taken, so lifted
    facets close up into a simplicial complex.  The sub is the full
    preimage of the base sub.
    """

    def __init__(self, base, pres, table):
        if isinstance(base, SimplicialComplex):
            base = SimplicialPair(base)
        if pres.origin is None:
            raise ValueError("presentation carries no edge words")
        self.base = base
        self.pres = pres
        self.table = table
        d = table.degree
        self.degree = d
        nv = base.total.vertex_count
        total = SimplicialComplex(
            nv * d, [self.lift_simplex(f, s)
                     for f in base.total.facets() for s in range(d)])
        sub = SimplicialComplex(
            nv * d, [self.lift_simplex(f, s)
                     for f in base.sub.facets() for s in range(d)])
        self.pair = SimplicialPair(total, sub)
        self.projection = SimplicialMap(
            total, base.total, {v: v // d for v in total.vertices()})
        assert total.euler_characteristic() == \
            d * base.total.euler_characteristic()
        if base.sub.by_dim:
            assert sub.euler_characteristic() == \
                d * base.sub.euler_characteristic()

    def lift_simplex(self, s, sheet):
        d = self.degree
        return tuple(v * d + self.table.word_act(
            sheet, self.pres.edge_word(s[0], v)) for v in s)

    def lifts(self, s):
        return [self.lift_simplex(s, sheet) for sheet in range(self.degree)]

    def sheet_of(self, cover_vertex):
        return cover_vertex % self.degree

    def base_vertex(self, cover_vertex):
        return cover_vertex // self.degree


def build_cover(base, pres=None, table=None, subgroup_words=(),
                max_cosets=10 ** 6):
    """Cover of a pair for the subgroup generated by the given words
    (the universal cover when none are given and pi_1 is finite)."""
    if isinstance(base, SimplicialComplex):
        base = SimplicialPair(base)
    if pres is None:
        from .presentation import fundamental_presentation
        pres = fundamental_presentation(base.total)
    if table is None:
        from .coset import todd_coxeter
        table = todd_coxeter(pres, subgroup_words, max_cosets=max_cosets)
    return CoverPair(base, pres, table)


def transfer_matrices(cover, tw_base, tw_cover):
    """Per-degree matrices of the transfer: a simplex goes to the sum
    of its lifts, fiber coordinates unchanged."""
    if tw_base.rank != tw_cover.rank:
        raise ValueError("transfer needs equal fiber ranks")
    if tw_base.cochain or tw_cover.cochain:
        raise ValueError("transfer acts on chains, not cochains")
    r = tw_base.rank
    mats = {}
    for p in range(cover.base.total.dim + 1):
        rows = len(tw_cover.kept[p]) * r
        cols = len(tw_base.kept[p]) * r
        if rows == 0 or cols == 0:
            continue
        simps = cover.base.total.simplices(p)
        entries = []
        for jpos, jidx in enumerate(tw_base.kept[p]):
            s = simps[jidx]
            for lift in cover.lifts(s):
                lidx = cover.pair.total.index(lift)
                kpos = tw_cover.pos[p].get(lidx)
                if kpos is None:
                    raise AssertionError("lift of a kept simplex dropped")
                for t in range(r):
                    entries.append((kpos * r + t, jpos * r + t, 1))
        mats[tw_base.degree(p)] = SparseIntMatrix(rows, cols, entries)
    return mats


def transfer_chain_map(cover, tw_base, tw_cover):
    """The transfer as a checked chain map between twisted complexes."""
    return ChainMap(tw_base.cc, tw_cover.cc,
                    transfer_matrices(cover, tw_base, tw_cover))


def transfer_chain(cover, tw_base, tw_cover, p, z):
    """Transfer of one flat chain in geometric degree p."""
    r = tw_base.rank
    out = {}
    simps = cover.base.total.simplices(p)
    for k, val in z.items():
        idx, coord = tw_base.unflat(p, k)
        s = simps[idx]
        for lift in cover.lifts(s):
            kk = tw_cover.flat(p, cover.pair.total.index(lift), coord)
            w = out.get(kk, 0) + val
            if w:
                out[kk] = w
            elif kk in out:
                del out[kk]
    return out
