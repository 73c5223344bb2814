"""Integer local systems: finite-rank monodromy representations of a
presented fundamental group, and their compilation to parallel
transports on the edges of a fixed complex."""

from .intmatrix import SparseIntMatrix, int_inverse


def _inverse(m):
    """Inverse of a unimodular matrix, with a transpose shortcut for
    signed permutation matrices."""
    if m.nnz == m.rows == m.cols:
        seen_rows = set()
        seen_cols = set()
        signed_perm = True
        for i, j, v in m.entries():
            if v not in (1, -1) or i in seen_rows or j in seen_cols:
                signed_perm = False
                break
            seen_rows.add(i)
            seen_cols.add(j)
        if signed_perm:
            return m.transpose()
    return int_inverse(m)


class LocalSystem:
    """Monodromy representation on Z^rank.

    Generator matrices act on column vectors; a word is a path read
    left to right, so the first letter acts first and
    evaluate((s1, ..., sk)) = M(sk) ... M(s1).
    """

    def __init__(self, pres, matrices, rank=None, check=True):
        self.pres = pres
        self.matrices = list(matrices)
        if len(self.matrices) != pres.ngens:
            raise ValueError("need one matrix per generator")
        if rank is None:
            if not self.matrices:
                raise ValueError("rank required for a free-of-rank-0 group")
            rank = self.matrices[0].rows
        self.rank = rank
        self.table = None
        self._inv = {}
        if check:
            self.validate()

    def validate(self):
        ident = SparseIntMatrix.identity(self.rank)
        for k, m in enumerate(self.matrices):
            if m.rows != self.rank or m.cols != self.rank:
                raise ValueError(f"generator {k + 1} matrix has wrong shape")
            _inverse(m)
        for rel in self.pres.relators:
            if self.evaluate(rel) != ident:
                raise ValueError(f"relator {rel} does not act trivially")

    def mat(self, s):
        """Matrix of a signed generator letter."""
        if s > 0:
            return self.matrices[s - 1]
        if s not in self._inv:
            self._inv[s] = _inverse(self.matrices[-s - 1])
        return self._inv[s]

    def evaluate(self, word):
        out = SparseIntMatrix.identity(self.rank)
        for s in word:
            out = self.mat(s).mul(out)
        return out

    def is_trivial(self):
        ident = SparseIntMatrix.identity(self.rank)
        return all(m == ident for m in self.matrices)

    def tensor(self, other):
        """Kronecker product system over the same presentation."""
        if self.pres is not other.pres and \
                self.pres.presentation_hash() != other.pres.presentation_hash():
            raise ValueError("tensor factors live over different groups")
        mats = [a.kron(b) for a, b in zip(self.matrices, other.matrices)]
        return LocalSystem(self.pres, mats, rank=self.rank * other.rank,
                           check=False)

    def to_json(self):
        return {"rank": self.rank,
                "presentation_hash": self.pres.presentation_hash(),
                "generators": [m.to_dense() for m in self.matrices]}

    @classmethod
    def from_json(cls, obj, pres):
        if obj["presentation_hash"] != pres.presentation_hash():
            raise ValueError("system was defined over a different "
                             "presentation")
        mats = [SparseIntMatrix.from_dense(d) for d in obj["generators"]]
        return cls(pres, mats, rank=obj["rank"])


def trivial_system(pres, rank=1):
    ident = SparseIntMatrix.identity(rank)
    return LocalSystem(pres, [ident] * pres.ngens, rank=rank, check=False)


def sign_system(pres, character):
    """Rank-1 system sending generator k to (-1)**character[k]."""
    if len(character) != pres.ngens:
        raise ValueError("character length must match generator count")
    mats = [SparseIntMatrix(1, 1, [(0, 0, -1 if bit else 1)])
            for bit in character]
    return LocalSystem(pres, mats, rank=1)


def orientation_systems(pres, max_rank=14):
    """All rank-1 systems with values +-1, the trivial one first."""
    from .presentation import sign_characters
    return [sign_system(pres, chi) for chi in sign_characters(pres, max_rank)]


def permutation_system(pres, table):
    """Permutation representation on the cosets of a table.

    Generator g sends basis vector e_j to e_{j.g}, so the matrix has a
    1 in row table.act(j, g), column j.
    """
    mats = []
    for g in range(1, pres.ngens + 1):
        entries = [(table.act(j, g), j, 1) for j in range(table.degree)]
        mats.append(SparseIntMatrix(table.degree, table.degree, entries))
    out = LocalSystem(pres, mats, rank=table.degree)
    out.table = table
    return out


def regular_system(pres, max_cosets=10 ** 6):
    """The group-ring system: permutation action on all group elements."""
    from .coset import todd_coxeter
    table = todd_coxeter(pres, (), max_cosets=max_cosets)
    return permutation_system(pres, table)


class EdgeSystem:
    """Parallel transport on the edges of a fixed complex.

    transports[(u, v)] with u < v carries fiber coordinates at u to
    fiber coordinates at v; the reverse direction uses the cached
    inverse.  Around every triangle (a, b, c) the transports compose:
    U_bc U_ab = U_ac.
    """

    def __init__(self, cx, rank, transports, check=True):
        self.cx = cx
        self.rank = rank
        self.transports = dict(transports)
        self._inv = {}
        self._ident = SparseIntMatrix.identity(rank)
        if check:
            self.validate()

    def validate(self):
        for e in self.cx.simplices(1):
            m = self.transports.get(e)
            if m is None:
                raise ValueError(f"edge {e} has no transport")
            if m.rows != self.rank or m.cols != self.rank:
                raise ValueError(f"transport on {e} has wrong shape")
        for a, b, c in self.cx.simplices(2):
            lhs = self.transport(b, c).mul(self.transport(a, b))
            if lhs != self.transport(a, c):
                raise ValueError(f"transports do not compose around "
                                 f"{(a, b, c)}")

    def transport(self, u, v):
        if u == v:
            return self._ident
        if u < v:
            return self.transports[(u, v)]
        key = (v, u)
        if key not in self._inv:
            self._inv[key] = _inverse(self.transports[key])
        return self._inv[key]

    def tensor(self, other):
        if self.cx is not other.cx and self.cx != other.cx:
            raise ValueError("tensor factors live on different complexes")
        transports = {e: self.transports[e].kron(other.transports[e])
                      for e in self.transports}
        return EdgeSystem(self.cx, self.rank * other.rank, transports,
                          check=False)

    def restrict(self, subcx):
        """The same transports on a subcomplex (same vertex universe)."""
        transports = {}
        for e in subcx.simplices(1):
            if e not in self.transports:
                raise ValueError(f"edge {e} is not in the ambient complex")
            transports[e] = self.transports[e]
        return EdgeSystem(subcx, self.rank, transports, check=False)

    def pullback(self, smap):
        """Transport system induced on the domain of a simplicial map
        into this system's complex; collapsed edges get the identity."""
        if smap.codomain != self.cx:
            raise ValueError("map does not land in the system's complex")
        transports = {}
        for u, v in smap.domain.simplices(1):
            fu, fv = smap.vertex_images[u], smap.vertex_images[v]
            transports[(u, v)] = self.transport(fu, fv)
        return EdgeSystem(smap.domain, self.rank, transports, check=True)


def compile_edge_system(system, cx):
    """Edge transports of a local system over cx's own edge-path
    presentation; the triangle identities are re-checked exactly."""
    pres = system.pres
    if pres.origin is None:
        raise ValueError("presentation carries no edge words")
    transports = {}
    for e in cx.simplices(1):
        if e not in pres.origin:
            raise ValueError(f"edge {e} has no word in the presentation")
        transports[e] = system.evaluate(pres.edge_word(*e))
    return EdgeSystem(cx, system.rank, transports, check=True)


def trivial_edges(cx, rank=1):
    ident = SparseIntMatrix.identity(rank)
    transports = {e: ident for e in cx.simplices(1)}
    return EdgeSystem(cx, rank, transports, check=False)
