"""Shared test utilities: random matrices/complexes and independent oracles."""

import random

from pdpair.intmatrix import SparseIntMatrix, smith_normal_form
from pdpair.chaincomplex import ChainComplexZ, ChainMap, HomologyGroup


def random_matrix(rng, rows, cols, density=0.3, lo=-5, hi=5):
    entries = []
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                v = rng.randint(lo, hi)
                if v:
                    entries.append((i, j, v))
    return SparseIntMatrix(rows, cols, entries)


def random_unimodular(rng, n, steps=None):
    """Product of random elementary matrices."""
    m = SparseIntMatrix.identity(n)
    dense = m.to_dense()
    if steps is None:
        steps = 3 * n
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            q = rng.randint(-2, 2)
            for k in range(n):
                dense[i][k] += q * dense[j][k]
        elif kind == 1:
            dense[i], dense[j] = dense[j], dense[i]
        else:
            dense[i] = [-x for x in dense[i]]
    return SparseIntMatrix.from_dense(dense)


def check_snf_postconditions(a, res):
    assert res.U.mul(a).mul(res.V) == res.D
    for i, j, v in res.D.entries():
        assert i == j
    diag = res.diagonal
    prev = None
    for d in diag:
        assert d >= 0
        if prev == 0:
            assert d == 0
        if prev not in (None, 0) and d:
            assert d % prev == 0
        prev = d
    # unimodularity via tracked inverses or via SNF of U itself
    if res.Uinv is not None:
        assert res.U.mul(res.Uinv) == SparseIntMatrix.identity(a.rows)
    else:
        assert smith_normal_form(res.U, transforms=False).diagonal == \
            [1] * a.rows
    if res.Vinv is not None:
        assert res.V.mul(res.Vinv) == SparseIntMatrix.identity(a.cols)
    else:
        assert smith_normal_form(res.V, transforms=False).diagonal == \
            [1] * a.cols


def random_chain_complex(rng, max_deg=3, max_rank=5):
    """Random complex built from a random chain of maps with d.d = 0.

    Construction: pick ranks, then boundaries as products B_p = R_p * S_p
    where S_{p+1} * R_p = 0 by choosing R with zero rows where S has
    nonzero columns. Simpler and fully general enough for tests: build a
    complex from a random simplicial-style bipartition - here we take
    direct sums of elementary complexes [Z -> Z] (multiplication by m),
    shifted, plus free summands, then conjugate by random unimodular
    basis changes. Every complex of free modules decomposes this way.
    """
    degs = range(0, max_deg + 1)
    pieces = []  # (degree p, multiplier m) elementary: C_p = Z -> C_{p-1} = Z
    ranks = {p: 0 for p in range(0, max_deg + 1)}
    for p in degs:
        for _ in range(rng.randrange(max_rank)):
            kind = rng.randrange(3)
            if kind == 0 or p == 0:
                ranks[p] += 1  # free summand in degree p
            else:
                m = rng.choice([1, 1, 2, 3, 4, 6, 0])
                if m == 0:
                    ranks[p] += 1
                else:
                    pieces.append((p, m))
                    ranks[p] += 1
                    ranks[p - 1] += 1
    # assign basis slots; a shared per-degree counter keeps the source
    # slots of one piece disjoint from the target slots of another
    bnd_entries = {p: [] for p in ranks}
    used = {p: 0 for p in ranks}
    for p, m in pieces:
        i = used[p - 1]
        used[p - 1] += 1
        j = used[p]
        used[p] += 1
        bnd_entries[p].append((i, j, m))
    # remaining slots are free summands; shift elementary entries to the
    # front of each degree, free slots fill the rest
    bnds = {}
    for p in ranks:
        if bnd_entries[p]:
            bnds[p] = SparseIntMatrix(ranks[p - 1], ranks[p], bnd_entries[p])
    c = ChainComplexZ(ranks, bnds)
    # conjugate by random unimodular matrices
    base = {p: random_unimodular(rng, ranks[p]) for p in ranks if ranks[p]}
    new_bnds = {}
    for p, d in bnds.items():
        m = d
        if p in base:
            m = m.mul(base[p])
        if p - 1 in base:
            from pdpair.intmatrix import int_inverse
            m = int_inverse(base[p - 1]).mul(m)
        new_bnds[p] = m
    return ChainComplexZ(ranks, new_bnds)


def homology_map_is_iso(f):
    """Brute-force oracle: f induces isomorphisms on homology.

    Independent of mapping cones: computes class coordinates of the
    images of source homology generators and decides surjectivity by
    SNF, then uses equality of isomorphism types (surjection between
    isomorphic finitely generated abelian groups is an isomorphism).
    """
    lo = min(f.source.lo, f.target.lo)
    hi = max(f.source.hi, f.target.hi)
    for p in range(lo, hi + 1):
        hs = f.source.homology(p, data=True)
        ht = f.target.homology(p, data=True)
        if hs.group != ht.group:
            return False
        if ht.kernel_rank == 0:
            continue
        cols = []
        mat = f.mat(p)
        for pos in range(hs.kernel_rank):
            if hs.factors[pos] == 1:
                continue
            img = mat.mul_vec(hs.generator(pos))
            cols.append(ht.coords(img))
        # relation matrix of the target group in reduced coordinates
        entries = []
        ncols = 0
        for c in cols:
            for i, v in enumerate(c):
                if v:
                    entries.append((i, ncols, v))
            ncols += 1
        for i, d in enumerate(ht.factors):
            if d > 1:
                entries.append((i, ncols, d))
                ncols += 1
        live = [i for i, d in enumerate(ht.factors) if d != 1]
        if not live:
            continue
        m = SparseIntMatrix(ht.kernel_rank, ncols, entries)
        m = m.take(live, list(range(ncols)))
        snf = smith_normal_form(m, transforms=False)
        if snf.rank != len(live) or snf.nonunit_factors:
            return False
    return True
