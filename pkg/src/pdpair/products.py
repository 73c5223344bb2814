"""Chain-level products: shuffle cross products, front/back cup and cap
products with twisted coefficients, and the order-reversal involution.

Sign conventions (the ledger in SIGNS.md):
  - boundary: face i carries (-1)^i; coboundary is its twisted dual
  - cross: each staircase carries the shuffle sign (-1)^inversions
  - cup: (phi cup psi)(s) = phi(front) tensor transported psi(back)
  - cap: z cap phi = sum phi(front_m) * back_{n-m}, coefficients
    transported from the anchor to the back face's anchor; the raw
    formula satisfies d(z cap phi) = (-1)^m ((dz) cap phi - z cap dphi)
  - theta: reversal times (-1)^{p(p+1)/2} on ordered tuples
"""

from .chaincomplex import ChainComplexZ, ChainMap, shift
from .intmatrix import SparseIntMatrix


def _accumulate(out, key, val):
    w = out.get(key, 0) + val
    if w:
        out[key] = w
    elif key in out:
        del out[key]


def staircase_sign(chain):
    """Shuffle sign of a monotone grid chain: parity of pairs where a
    second-factor step precedes a first-factor step."""
    inv = 0
    ups = 0
    for (a0, _), (a1, _) in zip(chain, chain[1:]):
        if a1 > a0:
            inv += ups
        else:
            ups += 1
    return -1 if inv % 2 else 1


def _grid_chains(sa, sb):
    """Maximal monotone chains in the vertex grid of two simplices."""
    q, r = len(sa) - 1, len(sb) - 1
    out = []

    def walk(i, j, path):
        if i == q and j == r:
            out.append(path)
            return
        if i < q:
            walk(i + 1, j, path + [(sa[i + 1], sb[j])])
        if j < r:
            walk(i, j + 1, path + [(sa[i], sb[j + 1])])

    walk(0, 0, [(sa[0], sb[0])])
    return out


def product_edge_system(prod_cx, a_cx, b_cx, ea, eb):
    """Tensor transport system on a product complex whose vertex
    (va, vb) is labeled va * b.vertex_count + vb."""
    from .localsystem import EdgeSystem
    nb = b_cx.vertex_count
    transports = {}
    for u, v in prod_cx.simplices(1):
        ua, ub = divmod(u, nb)
        va, vb = divmod(v, nb)
        transports[(u, v)] = ea.transport(ua, va).kron(eb.transport(ub, vb))
    return EdgeSystem(prod_cx, ea.rank * eb.rank, transports, check=True)


def cross_chain(twa, p, za, twb, q, zb, twp):
    """Shuffle cross product of flat chains za (degree p) and zb
    (degree q) into the product's twisted complex twp.

    Anchors multiply: the staircase anchor is the pair of anchors, so
    fiber coordinates tensor without transport."""
    ra, rb = twa.rank, twb.rank
    nb = twb.pair.total.vertex_count
    prod = twp.pair.total
    simpa = twa.pair.total.simplices(p)
    simpb = twb.pair.total.simplices(q)
    out = {}
    pos_pq = twp.pos.get(p + q, {})
    for ka, va in za.items():
        ia, ta = twa.unflat(p, ka)
        sa = simpa[ia]
        for kb, vb in zb.items():
            ib, tb = twb.unflat(q, kb)
            sb = simpb[ib]
            for chain in _grid_chains(sa, sb):
                s = tuple(x * nb + y for x, y in chain)
                pos = pos_pq.get(prod.index(s))
                if pos is None:
                    continue
                key = pos * ra * rb + ta * rb + tb
                _accumulate(out, key, staircase_sign(chain) * va * vb)
    return out


def cross_cochain(twca, p, phi, twcb, q, psi, twcp):
    """Cochain cross product into the product's twisted cochain
    complex: the cup of the two projection pullbacks, evaluating phi
    on the first-factor projection of the front face and psi on the
    second-factor projection of the back face (zero when either
    projection is degenerate), transported to the product anchor."""
    ra, rb = twca.rank, twcb.rank
    nb = twcb.pair.total.vertex_count
    acx = twca.pair.total
    bcx = twcb.pair.total
    prod = twcp.pair.total
    out = {}
    for pos, idx in enumerate(twcp.kept.get(p + q, ())):
        s = prod.simplices(p + q)[idx]
        averts = [x // nb for x in s]
        bverts = [x % nb for x in s]
        front_a = tuple(averts[:p + 1])
        back_b = tuple(bverts[p:])
        if any(x == y for x, y in zip(front_a, front_a[1:])) or \
                any(x == y for x, y in zip(back_b, back_b[1:])):
            continue
        pa = twca.pos[p].get(acx.index(front_a))
        pb = twcb.pos[q].get(bcx.index(back_b))
        if pa is None or pb is None:
            continue
        ub = twcb.edges.transport(back_b[0], bverts[0])
        vals_b = {}
        for t in range(rb):
            x = psi.get(pb * rb + t)
            if x:
                for i, row in ub.col(t).items():
                    _accumulate(vals_b, i, row * x)
        for t in range(ra):
            x = phi.get(pa * ra + t)
            if not x:
                continue
            for tb, y in vals_b.items():
                key = pos * ra * rb + t * rb + tb
                _accumulate(out, key, x * y)
    return out


def cup(twca, p, phi, twcb, q, psi, twcab):
    """Front/back cup product of flat cochains over one complex; the
    target carries the tensor system."""
    ra, rb = twca.rank, twcb.rank
    cx = twca.pair.total
    out = {}
    for pos, idx in enumerate(twcab.kept.get(p + q, ())):
        s = cx.simplices(p + q)[idx]
        front, back = s[:p + 1], s[p:]
        pa = twca.pos[p].get(cx.index(front))
        pb = twcb.pos[q].get(cx.index(back))
        if pa is None or pb is None:
            continue
        ub = twcb.edges.transport(s[p], s[0])
        vals_b = {}
        for t in range(rb):
            x = psi.get(pb * rb + t)
            if x:
                for i, row in ub.col(t).items():
                    _accumulate(vals_b, i, row * x)
        for t in range(ra):
            x = phi.get(pa * ra + t)
            if not x:
                continue
            for tb, y in vals_b.items():
                _accumulate(out, pos * ra * rb + t * rb + tb, x * y)
    return out


def cap_matrices(tw_o, n, z, src, tgt):
    """Matrices of phi -> z cap phi, one per cochain degree m.

    z is a flat degree-n chain on tw_o (system O); src is a twisted
    cochain complex (system B) and tgt a twisted chain complex whose
    system is the tensor O tensor B on the same pair.  The m-th matrix
    maps src degree m to tgt degree n - m; no global signs are applied
    here (normalize_chain_map fixes them per degree)."""
    eo, eb = tw_o.edges, src.edges
    ro, rb = tw_o.rank, src.rank
    if tgt.rank != ro * rb:
        raise ValueError("target fiber is not the tensor of the factors")
    total = tw_o.pair.total
    simps = total.simplices(n)
    mats = {}
    for m in range(n + 1):
        rows = len(tgt.kept[n - m]) * ro * rb
        cols = len(src.kept[m]) * rb
        entries = {}
        for k, zval in z.items():
            sidx, t_o = tw_o.unflat(n, k)
            s = simps[sidx]
            front, back = s[:m + 1], s[m:]
            pa = src.pos[m].get(total.index(front))
            pb = tgt.pos[n - m].get(total.index(back))
            if pa is None or pb is None:
                continue
            uo = eo.transport(s[0], s[m])
            ub = eb.transport(s[0], s[m])
            for a, vo in uo.col(t_o).items():
                for i, j, vb in ub.entries():
                    row = pb * ro * rb + a * rb + i
                    col = pa * rb + j
                    w = entries.get((row, col), 0) + zval * vo * vb
                    if w:
                        entries[(row, col)] = w
                    elif (row, col) in entries:
                        del entries[(row, col)]
        mats[m] = SparseIntMatrix(
            rows, cols, [(i, j, v) for (i, j), v in entries.items()])
    return mats


def cap_eval(tw_o, n, z, src, m, phi, tgt):
    """Single evaluation z cap phi via the degree-m cap matrix."""
    mat = cap_matrices(tw_o, n, z, src, tgt)[m]
    return mat.mul_vec(phi)


def cap_chain_map(tw_o, n, z, src, tgt):
    """The cap with a fixed relative cycle as a checked chain map from
    the n-shifted cochain complex to the chain complex."""
    raw = cap_matrices(tw_o, n, z, src, tgt)
    mats = {n - m: raw[m] for m in raw}
    return normalize_chain_map(shift(src.cc, n), tgt.cc, mats)


def cap_cocycle_matrices(tw_u, k, u, src, tgt):
    """Matrices of z -> z cap u, one per chain degree k + j.

    u is a flat degree-k cochain on tw_u (system O2); src is a twisted
    chain complex (system L) and tgt a twisted chain complex with
    system L tensor O2; the matrix maps src degree k + j to tgt
    degree j."""
    eo2, el = tw_u.edges, src.edges
    ro2, rl = tw_u.rank, src.rank
    if tgt.rank != rl * ro2:
        raise ValueError("target fiber is not the tensor of the factors")
    total = src.pair.total
    mats = {}
    for j in range(total.dim - k + 1):
        rows = len(tgt.kept[j]) * rl * ro2
        cols = len(src.kept[k + j]) * rl
        entries = []
        simps = total.simplices(k + j)
        for jp, idx in enumerate(src.kept[k + j]):
            s = simps[idx]
            front, back = s[:k + 1], s[k:]
            pu = tw_u.pos[k].get(total.index(front))
            pb = tgt.pos[j].get(total.index(back))
            if pu is None or pb is None:
                continue
            uvec = {}
            for t in range(ro2):
                x = u.get(pu * ro2 + t)
                if x:
                    uvec[t] = x
            if not uvec:
                continue
            w = tw_u.edges.transport(s[0], s[k]).mul_vec(uvec)
            ul = el.transport(s[0], s[k])
            for a, b, vl in ul.entries():
                for c, vu in w.items():
                    entries.append((pb * rl * ro2 + a * ro2 + c,
                                    jp * rl + b, vl * vu))
        mats[k + j] = SparseIntMatrix(rows, cols, entries)
    return mats


def cap_cocycle_chain_map(tw_u, k, u, src, tgt):
    """Cap with a fixed degree-k cocycle as a checked chain map from
    the (-k)-shifted source chains to the target chains."""
    raw = cap_cocycle_matrices(tw_u, k, u, src, tgt)
    mats = {d - k: raw[d] for d in raw}
    return normalize_chain_map(shift(src.cc, -k), tgt.cc, mats)


def normalize_chain_map(source, target, mats, check=True):
    """Fix per-degree signs so the matrices commute with boundaries.

    Requires each degree to commute exactly up to sign; signs are
    propagated downward from the top degree.  Raises when no sign
    assignment works."""
    eps = {}
    degs = sorted(set(source.degrees()) | set(mats), reverse=True)
    if not degs:
        return ChainMap(source, target, {}, check=check)
    prev = None
    for p in degs:
        if prev is None:
            eps[p] = 1
        else:
            a = target.boundary(prev).mul(mats.get(prev, _zero(
                target.rank(prev), source.rank(prev))))
            b = mats.get(p, _zero(target.rank(p), source.rank(p))).mul(
                source.boundary(prev))
            if a.is_zero() and b.is_zero():
                eps[p] = 1
            elif a == b:
                eps[p] = eps[prev]
            elif a == b.neg():
                eps[p] = -eps[prev]
            else:
                raise ValueError(
                    f"map does not commute with boundaries at degree {prev}"
                    " even up to sign")
        prev = p
    fixed = {p: (m if eps[p] == 1 else m.neg())
             for p, m in mats.items() if not m.is_zero()}
    return ChainMap(source, target, fixed, check=check)


def _zero(r, c):
    return SparseIntMatrix(r, c)


def ordered_complex(cx, top=None):
    """Ordered chains: basis in degree p is every (p+1)-tuple of
    vertices, repeats allowed, whose distinct vertices span a simplex.

    This model has the complex's homology in degrees up to its
    dimension and the order-reversal map is homotopic to the identity
    there; it is nonzero in every degree, so it is truncated at top
    (default dim + 1, enough for homology through degree dim).

    Returns (complex, tuples) where tuples[p] lists the degree-p basis
    in lexicographic order."""
    from itertools import product as iproduct
    if top is None:
        top = cx.dim + 1
    tuples = {}
    index = {}
    for p in range(top + 1):
        basis = []
        for d in range(min(p, cx.dim) + 1):
            for s in cx.simplices(d):
                want = set(s)
                basis.extend(t for t in iproduct(s, repeat=p + 1)
                             if set(t) == want)
        basis.sort()
        tuples[p] = basis
        index[p] = {t: i for i, t in enumerate(basis)}
    ranks = {p: len(tuples[p]) for p in tuples}
    bnds = {}
    for p in range(1, top + 1):
        entries = {}
        for j, t in enumerate(tuples[p]):
            for i in range(p + 1):
                f = t[:i] + t[i + 1:]
                key = (index[p - 1][f], j)
                w = entries.get(key, 0) + (-1) ** i
                if w:
                    entries[key] = w
                else:
                    del entries[key]
        bnds[p] = SparseIntMatrix(
            len(tuples[p - 1]), len(tuples[p]),
            [(i, j, v) for (i, j), v in entries.items()])
    return ChainComplexZ(ranks, bnds), tuples


def theta_map(cc, tuples):
    """Order reversal with sign (-1)^{p(p+1)/2} on an ordered-tuple
    complex; squares to the identity and acts as the identity on
    homology."""
    index = {p: {t: i for i, t in enumerate(tuples[p])} for p in tuples}
    mats = {}
    for p, basis in tuples.items():
        sign = -1 if (p * (p + 1) // 2) % 2 else 1
        entries = [(index[p][t[::-1]], j, sign)
                   for j, t in enumerate(basis)]
        mats[p] = SparseIntMatrix(len(basis), len(basis), entries)
    return ChainMap(cc, cc, mats)
