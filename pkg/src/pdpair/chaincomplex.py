"""Finitely generated free integer chain complexes.

Homology (with optional cycle-class coordinates and generators), chain
maps, mapping cones, and the quasi-isomorphism decision via cone
acyclicity all live here.
"""

from __future__ import annotations

from .intmatrix import SparseIntMatrix, smith_normal_form


class HomologyGroup:
    """Isomorphism type of a finitely generated abelian group."""

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank, torsion=()):
        self.free_rank = free_rank
        self.torsion = tuple(torsion)
        for d in self.torsion:
            if d <= 1:
                raise ValueError("torsion coefficients must exceed 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion must form a divisibility chain")

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __eq__(self, other):
        if not isinstance(other, HomologyGroup):
            return NotImplemented
        return (self.free_rank, self.torsion) == \
            (other.free_rank, other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["rank"], obj.get("torsion", ()))


class DegreeHomology:
    """Homology in a single degree with cycle-class coordinates.

    Coordinates live in Z^k / (d'_1, ..., d'_k) where k is the kernel
    rank and d'_i are the invariant factors of the boundary-image
    relation matrix (0 marks a free coordinate, 1 a dead one).
    """

    def __init__(self, rank_p, snf_low, rel_snf, factors):
        self._rank_p = rank_p
        self._snf_low = snf_low          # SNF of the outgoing boundary
        self._rel_snf = rel_snf          # SNF of relations in kernel coords
        self.factors = factors           # length-k list, 0 = free slot
        self._r1 = snf_low.rank if snf_low is not None else 0
        self.kernel_rank = len(factors)
        torsion = sorted(d for d in factors if d > 1)
        self.group = HomologyGroup(sum(1 for d in factors if d == 0), torsion)
        self.free_positions = [i for i, d in enumerate(factors) if d == 0]
        self.torsion_positions = [i for i, d in enumerate(factors) if d > 1]

    def _kernel_coords(self, z):
        """Coordinates of a cycle in the kernel basis."""
        if self._snf_low is None:
            return dict(z)
        y = self._snf_low.Vinv.mul_vec(z)
        bad = [i for i in y if i < self._r1]
        if bad:
            raise ValueError("vector is not a cycle")
        return {i - self._r1: v for i, v in y.items()}

    def coords(self, z):
        """Reduced class coordinates of a cycle given as {index: value}."""
        y = self._kernel_coords(z)
        w = self._rel_snf.U.mul_vec(y) if self._rel_snf is not None else y
        out = [0] * self.kernel_rank
        for i, v in w.items():
            d = self.factors[i]
            if d == 1:
                continue
            out[i] = v % d if d else v
        return tuple(out)

    def is_zero_class(self, z):
        return all(c == 0 for c in self.coords(z))

    def same_class(self, z1, z2):
        return self.coords(z1) == self.coords(z2)

    def generator(self, pos):
        """A cycle representing the coordinate-pos generator."""
        if self.factors[pos] == 1:
            raise ValueError("coordinate is trivial in homology")
        if self._rel_snf is not None:
            y = {i: v for i, v in self._rel_snf.Uinv.col(pos).items()}
        else:
            y = {pos: 1}
        if self._snf_low is None:
            return dict(y)
        z = {}
        vcols = self._snf_low.V
        for i, c in y.items():
            for r, v in vcols.col(self._r1 + i).items():
                w = z.get(r, 0) + c * v
                if w:
                    z[r] = w
                else:
                    del z[r]
        return z

    def free_generators(self):
        return [self.generator(p) for p in self.free_positions]

    def generates_free_part(self, z):
        """True when the class of z generates H/torsion (free rank 1 only)."""
        if self.group.free_rank != 1:
            return False
        c = self.coords(z)
        return abs(c[self.free_positions[0]]) == 1


def _zero_matrix(rows, cols):
    return SparseIntMatrix.zero(rows, cols)


class ChainComplexZ:
    """Chain complex of free Z-modules over a finite degree window.

    boundaries[p] is the matrix of d_p: C_p -> C_{p-1}; degrees outside
    the window have rank 0.
    """

    def __init__(self, ranks, boundaries=None, check=True):
        self.ranks = {p: r for p, r in ranks.items() if r or p in ranks}
        if not ranks:
            self.lo, self.hi = 0, -1
        else:
            self.lo, self.hi = min(ranks), max(ranks)
        self.boundaries = dict(boundaries or {})
        self._hom = {}
        for p in list(self.boundaries):
            if self.boundaries[p].is_zero():
                del self.boundaries[p]
        if check:
            self.validate()

    def validate(self):
        for p, d in self.boundaries.items():
            if d.rows != self.rank(p - 1) or d.cols != self.rank(p):
                raise ValueError(
                    f"boundary in degree {p} has shape {d.rows}x{d.cols}, "
                    f"expected {self.rank(p - 1)}x{self.rank(p)}")
        for p in self.boundaries:
            if p + 1 in self.boundaries:
                if not self.boundaries[p].mul(self.boundaries[p + 1]).is_zero():
                    raise ValueError(f"d_{p} . d_{p + 1} != 0")

    def rank(self, p):
        return self.ranks.get(p, 0)

    def boundary(self, p):
        d = self.boundaries.get(p)
        if d is None:
            return _zero_matrix(self.rank(p - 1), self.rank(p))
        return d

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def euler_characteristic(self):
        return sum((-1) ** p * r for p, r in self.ranks.items())

    def __repr__(self):
        ranks = ", ".join(f"{p}:{self.rank(p)}" for p in self.degrees())
        return f"ChainComplexZ({ranks})"

    def homology(self, p, data=False):
        """HomologyGroup in degree p, or DegreeHomology when data=True."""
        if data:
            got = self._hom.get((p, True))
            if got is None:
                got = self._homology_data(p)
                self._hom[(p, True)] = got
            return got
        got = self._hom.get((p, True))
        if got is not None:
            return got.group
        got = self._hom.get((p, False))
        if got is None:
            got = self._homology_group(p)
            self._hom[(p, False)] = got
        return got

    def homology_all(self, data=False):
        return {p: self.homology(p, data=data) for p in self.degrees()}

    def is_acyclic(self, reduced_degree=None):
        """True when all homology vanishes.

        reduced_degree: degree whose homology is compared against Z
        instead of 0 (use 0 for connected-space reduced homology).
        """
        for p in self.degrees():
            h = self.homology(p)
            if p == reduced_degree:
                if h != HomologyGroup(1):
                    return False
            elif not h.is_trivial:
                return False
        return True

    def _homology_group(self, p):
        n = self.rank(p)
        if n == 0:
            return HomologyGroup(0)
        low = self.boundaries.get(p)
        high = self.boundaries.get(p + 1)
        r1 = smith_normal_form(low, transforms=False).rank \
            if low is not None else 0
        if high is None:
            return HomologyGroup(n - r1)
        snf2 = smith_normal_form(high, transforms=False)
        torsion = sorted(snf2.nonunit_factors)
        return HomologyGroup(n - r1 - snf2.rank, torsion)

    def _homology_data(self, p):
        n = self.rank(p)
        low = self.boundaries.get(p)
        high = self.boundaries.get(p + 1)
        if low is not None:
            snf_low = smith_normal_form(low, transforms=True, inverses=True)
            r1 = snf_low.rank
        else:
            snf_low = None
            r1 = 0
        k = n - r1
        if high is not None and k:
            y = (snf_low.Vinv.mul(high) if snf_low is not None else high)
            for i, j, v in y.entries():
                if i < r1:
                    raise AssertionError(
                        "boundary image escapes the cycle space")
            rel = y.take(list(range(r1, n)), list(range(high.cols)))
            rel_snf = smith_normal_form(rel, transforms=True, inverses=True)
            diag = rel_snf.diagonal
            factors = [diag[i] if i < len(diag) and diag[i] else 0
                       for i in range(k)]
        else:
            rel_snf = None
            factors = [0] * k
        return DegreeHomology(n, snf_low, rel_snf, factors)


class ChainMap:
    """Degree-zero chain map between two complexes.

    mats[p]: matrix from source degree p to target degree p; missing
    degrees are zero. Commutation with boundaries is checked exactly.
    """

    def __init__(self, source, target, mats, check=True):
        self.source = source
        self.target = target
        self.mats = {p: m for p, m in mats.items() if not m.is_zero()}
        if check:
            self.validate()

    def validate(self):
        for p, m in self.mats.items():
            if m.rows != self.target.rank(p) or m.cols != self.source.rank(p):
                raise ValueError(
                    f"chain map degree {p}: shape {m.rows}x{m.cols}, "
                    f"expected {self.target.rank(p)}x{self.source.rank(p)}")
        lo = min(self.source.lo, self.target.lo)
        hi = max(self.source.hi, self.target.hi)
        for p in range(lo, hi + 2):
            left = self.target.boundary(p).mul(self.mat(p))
            right = self.mat(p - 1).mul(self.source.boundary(p))
            if left != right:
                raise ValueError(f"chain map does not commute in degree {p}")

    def mat(self, p):
        m = self.mats.get(p)
        if m is None:
            return _zero_matrix(self.target.rank(p), self.source.rank(p))
        return m

    @classmethod
    def identity(cls, c):
        return cls(c, c, {p: SparseIntMatrix.identity(c.rank(p))
                          for p in c.degrees()}, check=False)

    def compose(self, other):
        """self after other (other: A -> B, self: B -> C)."""
        if other.target is not self.source:
            if other.target.ranks != self.source.ranks:
                raise ValueError("composition window mismatch")
        mats = {}
        for p in set(self.mats) | set(other.mats):
            m = self.mat(p).mul(other.mat(p))
            if not m.is_zero():
                mats[p] = m
        return ChainMap(other.source, self.target, mats, check=False)

    def scale(self, k):
        return ChainMap(self.source, self.target,
                        {p: m.scale(k) for p, m in self.mats.items()},
                        check=False)

    def add(self, other):
        mats = {}
        for p in set(self.mats) | set(other.mats):
            m = self.mat(p).add(other.mat(p))
            if not m.is_zero():
                mats[p] = m
        return ChainMap(self.source, self.target, mats, check=False)


def shift(c, k):
    """Complex with degree p holding C_{p-k}; boundaries carried as-is."""
    ranks = {p + k: r for p, r in c.ranks.items()}
    bnds = {p + k: m for p, m in c.boundaries.items()}
    return ChainComplexZ(ranks, bnds, check=False)


def mapping_cone(f):
    """Cone of a chain map: cone_p = target_p (+) source_{p-1}.

    d(t, s) = (d t + f s, -d s): blocks [[dT, F], [0, -dS]].
    """
    src, tgt = f.source, f.target
    lo = min(tgt.lo, src.lo + 1)
    hi = max(tgt.hi, src.hi + 1)
    ranks = {}
    for p in range(lo, hi + 1):
        ranks[p] = tgt.rank(p) + src.rank(p - 1)
    bnds = {}
    for p in range(lo, hi + 1):
        rt, rs = tgt.rank(p), src.rank(p - 1)
        rt1, rs1 = tgt.rank(p - 1), src.rank(p - 2)
        if (rt + rs) == 0 or (rt1 + rs1) == 0:
            continue
        blk = SparseIntMatrix.block(
            [[tgt.boundaries.get(p), f.mats.get(p - 1)],
             [None, src.boundaries.get(p - 1, _zero_matrix(rs1, rs)).neg()
              if p - 1 in src.boundaries else None]],
            [rt1, rs1], [rt, rs])
        if not blk.is_zero():
            bnds[p] = blk
    return ChainComplexZ(ranks, bnds, check=True)


def is_quasi_iso(f, certificate=False):
    """Decide whether f induces isomorphisms on all homology groups.

    True iff the mapping cone is acyclic in every degree. With
    certificate=True returns (verdict, {degree: cone homology}).
    """
    cone = mapping_cone(f)
    cert = {}
    ok = True
    for p in cone.degrees():
        h = cone.homology(p)
        cert[p] = h
        if not h.is_trivial:
            ok = False
    if certificate:
        return ok, cert
    return ok
