"""Sparse arbitrary-precision integer matrices and Smith normal form.

All homology in this package reduces to exact integer elimination here.
Matrices are immutable once built; every operation returns a new matrix.
Entries are Python ints, so there is no overflow path anywhere.
"""

from __future__ import annotations

import heapq

# Matrices strictly smaller than this (both dimensions) go through the
# dense elimination path.
DENSE_CUTOFF = 64

# When True, smith_normal_form re-verifies U*A*V = D (and inverses when
# tracked) by exact multiplication on every call that tracks transforms.
# The test suite switches this on globally.
VERIFY = False


class SparseIntMatrix:
    """Integer matrix stored as a dict of sparse rows."""

    __slots__ = ("rows", "cols", "_rows", "_cols_cache")

    def __init__(self, rows, cols, entries=()):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        data = {}
        for i, j, v in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry ({i},{j}) outside {rows}x{cols}")
            if v == 0:
                continue
            row = data.setdefault(i, {})
            if j in row:
                raise ValueError(f"duplicate entry at ({i},{j})")
            row[j] = v
        self._rows = data
        self._cols_cache = None

    @classmethod
    def _from_rows(cls, rows, cols, rowdata):
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._rows = {i: dict(r) for i, r in rowdata.items() if r}
        m._cols_cache = None
        return m

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, ((i, i, 1) for i in range(n)))

    @classmethod
    def from_dense(cls, dense):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls(rows, cols,
                   ((i, j, v) for i, row in enumerate(dense)
                    for j, v in enumerate(row) if v))

    @classmethod
    def block(cls, grid, row_sizes, col_sizes):
        """Assemble from a grid of optional blocks (None = zero block)."""
        row_off = [0]
        for s in row_sizes:
            row_off.append(row_off[-1] + s)
        col_off = [0]
        for s in col_sizes:
            col_off.append(col_off[-1] + s)
        entries = []
        for bi, brow in enumerate(grid):
            for bj, blk in enumerate(brow):
                if blk is None:
                    continue
                if blk.rows != row_sizes[bi] or blk.cols != col_sizes[bj]:
                    raise ValueError("block shape mismatch")
                ro, co = row_off[bi], col_off[bj]
                entries.extend((ro + i, co + j, v) for i, j, v in blk.entries())
        return cls(row_off[-1], col_off[-1], entries)

    def entries(self):
        for i, row in self._rows.items():
            for j, v in row.items():
                yield i, j, v

    def sorted_entries(self):
        return sorted(self.entries())

    @property
    def nnz(self):
        return sum(len(r) for r in self._rows.values())

    def get(self, i, j):
        return self._rows.get(i, {}).get(j, 0)

    def row(self, i):
        return self._rows.get(i, {})

    def _col_index(self):
        if self._cols_cache is None:
            cols = {}
            for i, row in self._rows.items():
                for j, v in row.items():
                    cols.setdefault(j, {})[i] = v
            self._cols_cache = cols
        return self._cols_cache

    def col(self, j):
        return self._col_index().get(j, {})

    def is_zero(self):
        return not self._rows

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            self._rows == other._rows

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(
            (i, j, v) for i, j, v in self.entries())))

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def transpose(self):
        return SparseIntMatrix(self.cols, self.rows,
                               ((j, i, v) for i, j, v in self.entries()))

    def neg(self):
        return SparseIntMatrix(self.rows, self.cols,
                               ((i, j, -v) for i, j, v in self.entries()))

    def scale(self, k):
        if k == 0:
            return SparseIntMatrix.zero(self.rows, self.cols)
        return SparseIntMatrix(self.rows, self.cols,
                               ((i, j, k * v) for i, j, v in self.entries()))

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        data = {i: dict(r) for i, r in self._rows.items()}
        for i, j, v in other.entries():
            row = data.setdefault(i, {})
            w = row.get(j, 0) + v
            if w:
                row[j] = w
            else:
                row.pop(j, None)
        return SparseIntMatrix._from_rows(self.rows, self.cols, data)

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch in mul: {self.rows}x{self.cols} * "
                f"{other.rows}x{other.cols}")
        data = {}
        for i, row in self._rows.items():
            acc = {}
            for j, v in row.items():
                orow = other._rows.get(j)
                if not orow:
                    continue
                for k, w in orow.items():
                    u = acc.get(k, 0) + v * w
                    if u:
                        acc[k] = u
                    else:
                        del acc[k]
            if acc:
                data[i] = acc
        return SparseIntMatrix._from_rows(self.rows, other.cols, data)

    def mul_vec(self, vec):
        """Multiply by a sparse column vector given as {index: value}."""
        out = {}
        cols = self._col_index()
        for j, x in vec.items():
            if x == 0:
                continue
            for i, v in cols.get(j, {}).items():
                w = out.get(i, 0) + v * x
                if w:
                    out[i] = w
                else:
                    del out[i]
        return out

    def kron(self, other):
        """Kronecker product: block (i,j) of the result is self[i,j] * other."""
        entries = []
        for i, j, v in self.entries():
            for k, l, w in other.entries():
                entries.append((i * other.rows + k, j * other.cols + l, v * w))
        return SparseIntMatrix(self.rows * other.rows, self.cols * other.cols, entries)

    def take(self, row_idx, col_idx):
        """Submatrix on the given index lists (order preserved)."""
        rmap = {r: k for k, r in enumerate(row_idx)}
        cmap = {c: k for k, c in enumerate(col_idx)}
        entries = []
        for i, j, v in self.entries():
            if i in rmap and j in cmap:
                entries.append((rmap[i], cmap[j], v))
        return SparseIntMatrix(len(row_idx), len(col_idx), entries)

    def to_text(self):
        """Coordinate interchange format: 'rows cols nnz' then 'r c v' lines."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        for i, j, v in self.sorted_entries():
            lines.append(f"{i} {j} {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        head = lines[0].split()
        if len(head) != 3:
            raise ValueError("header must be 'rows cols nnz'")
        rows, cols, nnz = (int(x) for x in head)
        if nnz != len(lines) - 1:
            raise ValueError(f"expected {nnz} entries, found {len(lines) - 1}")
        entries = []
        for ln in lines[1:]:
            i, j, v = ln.split()
            entries.append((int(i), int(j), int(v)))
        return cls(rows, cols, entries)


class SNFResult:
    """Smith normal form D = U * A * V with unimodular U, V.

    U/V (and their tracked inverses) are None when the caller requested
    the diagonal only.
    """

    __slots__ = ("D", "U", "V", "Uinv", "Vinv", "shape")

    def __init__(self, D, U=None, V=None, Uinv=None, Vinv=None):
        self.D = D
        self.U = U
        self.V = V
        self.Uinv = Uinv
        self.Vinv = Vinv
        self.shape = (D.rows, D.cols)

    @property
    def diagonal(self):
        n = min(self.D.rows, self.D.cols)
        return [self.D.get(i, i) for i in range(n)]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self):
        return [d for d in self.diagonal if d]

    @property
    def nonunit_factors(self):
        return [d for d in self.diagonal if d > 1]


class _Eliminator:
    """Row/column operation engine behind the sparse SNF."""

    def __init__(self, a, transforms, inverses):
        self.m, self.n = a.rows, a.cols
        self.w = {i: dict(r) for i, r in a._rows.items()}
        self.colidx = {}
        for i, row in self.w.items():
            for j in row:
                self.colidx.setdefault(j, {})[i] = True
        self.track = transforms
        self.track_inv = transforms and inverses
        if self.track:
            self.U = {i: {i: 1} for i in range(self.m)}   # rows
            self.Vc = {j: {j: 1} for j in range(self.n)}  # columns
        if self.track_inv:
            self.Uinvc = {i: {i: 1} for i in range(self.m)}  # columns
            self.Vinvr = {j: {j: 1} for j in range(self.n)}  # rows
        self.col_heap = [(len(c), j) for j, c in sorted(self.colidx.items())]
        heapq.heapify(self.col_heap)
        self.retired_rows = {}
        self.retired_cols = {}

    # -- elementary operations ------------------------------------------

    @staticmethod
    def _axpy(dst, src, q):
        for k, v in src.items():
            w = dst.get(k, 0) + q * v
            if w:
                dst[k] = w
            else:
                del dst[k]

    def row_op(self, i2, q, i1):
        """row i2 += q * row i1"""
        src = self.w.get(i1)
        if src:
            dst = self.w.setdefault(i2, {})
            for j, v in list(src.items()):
                w = dst.get(j, 0) + q * v
                cj = self.colidx.setdefault(j, {})
                if w:
                    dst[j] = w
                    if i2 not in cj:
                        cj[i2] = True
                        heapq.heappush(self.col_heap, (len(cj), j))
                else:
                    del dst[j]
                    cj.pop(i2, None)
                    heapq.heappush(self.col_heap, (len(cj), j))
            if not dst:
                self.w.pop(i2, None)
        if self.track:
            self._axpy(self.U.setdefault(i2, {}), self.U.get(i1, {}), q)
            if not self.U[i2]:
                del self.U[i2]
        if self.track_inv:
            self._axpy(self.Uinvc.setdefault(i1, {}),
                       self.Uinvc.get(i2, {}), -q)
            if not self.Uinvc[i1]:
                del self.Uinvc[i1]

    def col_op(self, j2, q, j1):
        """col j2 += q * col j1"""
        src = self.colidx.get(j1, {})
        cj2 = self.colidx.setdefault(j2, {})
        for i in list(src.keys()):
            v = self.w.get(i, {}).get(j1, 0)
            if v == 0:
                continue
            row = self.w[i]
            wv = row.get(j2, 0) + q * v
            if wv:
                row[j2] = wv
                if i not in cj2:
                    cj2[i] = True
            else:
                row.pop(j2, None)
                cj2.pop(i, None)
            if not row:
                del self.w[i]
        heapq.heappush(self.col_heap, (len(cj2), j2))
        if self.track:
            self._axpy(self.Vc.setdefault(j2, {}), self.Vc.get(j1, {}), q)
            if not self.Vc[j2]:
                del self.Vc[j2]
        if self.track_inv:
            self._axpy(self.Vinvr.setdefault(j1, {}),
                       self.Vinvr.get(j2, {}), -q)
            if not self.Vinvr[j1]:
                del self.Vinvr[j1]

    def negate_row(self, i):
        row = self.w.get(i, {})
        for j in row:
            row[j] = -row[j]
        if self.track and i in self.U:
            self.U[i] = {k: -v for k, v in self.U[i].items()}
        if self.track_inv and i in self.Uinvc:
            self.Uinvc[i] = {k: -v for k, v in self.Uinvc[i].items()}

    def swap_rows(self, i1, i2):
        if i1 == i2:
            return
        r1, r2 = self.w.pop(i1, None), self.w.pop(i2, None)
        if r2 is not None:
            self.w[i1] = r2
        if r1 is not None:
            self.w[i2] = r1
        cols = set()
        if r1:
            cols.update(r1)
        if r2:
            cols.update(r2)
        for j in cols:
            cj = self.colidx.setdefault(j, {})
            has1 = r2 is not None and j in r2
            has2 = r1 is not None and j in r1
            cj.pop(i1, None)
            cj.pop(i2, None)
            if has1:
                cj[i1] = True
            if has2:
                cj[i2] = True
        if self.track:
            u1, u2 = self.U.pop(i1, None), self.U.pop(i2, None)
            if u2 is not None:
                self.U[i1] = u2
            if u1 is not None:
                self.U[i2] = u1
        if self.track_inv:
            c1, c2 = self.Uinvc.pop(i1, None), self.Uinvc.pop(i2, None)
            if c2 is not None:
                self.Uinvc[i1] = c2
            if c1 is not None:
                self.Uinvc[i2] = c1

    def swap_cols(self, j1, j2):
        if j1 == j2:
            return
        c1 = dict(self.colidx.get(j1, {}))
        c2 = dict(self.colidx.get(j2, {}))
        for i in set(c1) | set(c2):
            row = self.w[i]
            v1, v2 = row.pop(j1, None), row.pop(j2, None)
            if v2 is not None:
                row[j1] = v2
            if v1 is not None:
                row[j2] = v1
        self.colidx[j1] = {i: True for i in c2}
        self.colidx[j2] = {i: True for i in c1}
        if self.track:
            v1, v2 = self.Vc.pop(j1, None), self.Vc.pop(j2, None)
            if v2 is not None:
                self.Vc[j1] = v2
            if v1 is not None:
                self.Vc[j2] = v1
        if self.track_inv:
            r1, r2 = self.Vinvr.pop(j1, None), self.Vinvr.pop(j2, None)
            if r2 is not None:
                self.Vinvr[j1] = r2
            if r1 is not None:
                self.Vinvr[j2] = r1

    # -- pivot selection --------------------------------------------------

    def _pick_pivot(self):
        # fast path: sparsest live column holding a unit entry
        probes = []
        found = None
        while self.col_heap:
            nnz, j = heapq.heappop(self.col_heap)
            if self.retired_cols.get(j):
                continue
            cj = self.colidx.get(j, {})
            live = [i for i in cj if not self.retired_rows.get(i)]
            if not live:
                continue
            if len(live) != nnz:
                heapq.heappush(self.col_heap, (len(live), j))
                continue
            probes.append((nnz, j))
            best = None
            for i in live:
                if abs(self.w[i][j]) == 1:
                    key = (len(self.w[i]), i)
                    if best is None or key < best:
                        best = key
            if best is not None:
                found = (best[1], j)
                break
            if len(probes) >= 8:
                break
        for item in probes:
            heapq.heappush(self.col_heap, item)
        if found is not None:
            return found
        # slow path: minimal |value|, fewest nonzeros in row+col, lowest index
        best = None
        for i in sorted(self.w):
            if self.retired_rows.get(i):
                continue
            row = self.w[i]
            rn = len(row)
            for j in sorted(row):
                if self.retired_cols.get(j):
                    continue
                cn = sum(1 for r in self.colidx.get(j, {})
                         if not self.retired_rows.get(r))
                key = (abs(row[j]), rn + cn, i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            return None
        return best[1], best[2]

    # -- main loop ----------------------------------------------------------

    def run(self):
        pivots = []
        while True:
            p = self._pick_pivot()
            if p is None:
                break
            i, j = self._clear(*p)
            self.retired_rows[i] = True
            self.retired_cols[j] = True
            pivots.append((i, j))
        return pivots

    def _clear(self, i, j):
        """Eliminate everything else in row i and column j.

        When a division leaves a remainder, the remainder entry becomes
        the new (strictly smaller) pivot and the loop restarts from it.
        """
        while True:
            pv = self.w[i][j]
            restart = False
            col_snapshot = sorted(self.colidx.get(j, {}).keys())
            for k in col_snapshot:
                if k == i or self.retired_rows.get(k):
                    continue
                v = self.w.get(k, {}).get(j, 0)
                if v == 0:
                    continue
                q = v // pv
                if q:
                    self.row_op(k, -q, i)
                if self.w.get(k, {}).get(j, 0):
                    i = k
                    restart = True
                    break
            if restart:
                continue
            row_snapshot = sorted(self.w.get(i, {}).keys())
            for l in row_snapshot:
                if l == j or self.retired_cols.get(l):
                    continue
                v = self.w.get(i, {}).get(l, 0)
                if v == 0:
                    continue
                q = v // pv
                if q:
                    self.col_op(l, -q, j)
                if self.w.get(i, {}).get(l, 0):
                    j = l
                    restart = True
                    break
            if not restart:
                break
        if self.w[i][j] < 0:
            self.negate_row(i)
        return i, j


def _euclid_pair(el, i1, j1, i2, j2):
    """Rediagonalize the 2x2 block on rows {i1,i2} x cols {j1,j2}.

    Assumes those rows/cols carry no other nonzero entries, as is the
    case for retired pivot rows after elimination.
    """
    while True:
        c = el.w.get(i2, {}).get(j1, 0)
        if c == 0:
            break
        a = el.w.get(i1, {}).get(j1, 0)
        if a == 0:
            el.swap_rows(i1, i2)
            continue
        q = c // a
        if q:
            el.row_op(i2, -q, i1)
        if el.w.get(i2, {}).get(j1, 0):
            el.swap_rows(i1, i2)
    if el.w.get(i1, {}).get(j1, 0) < 0:
        el.negate_row(i1)
    g = el.w[i1][j1]
    b = el.w.get(i1, {}).get(j2, 0)
    if b:
        q, r = divmod(b, g)
        if r:
            raise AssertionError("gcd step left an indivisible entry")
        el.col_op(j2, -q, j1)
    if el.w.get(i2, {}).get(j2, 0) < 0:
        el.negate_row(i2)


def _fix_divisibility(el, pivots):
    """Make the pivot multiset form a divisibility chain via 2x2 repairs."""
    changed = True
    while changed:
        changed = False
        for a in range(len(pivots)):
            ia, ja = pivots[a]
            da = el.w[ia][ja]
            if da == 1:
                continue
            for b in range(a + 1, len(pivots)):
                ib, jb = pivots[b]
                db = el.w[ib][jb]
                if db % da == 0:
                    continue
                el.col_op(ja, 1, jb)
                _euclid_pair(el, ia, ja, ib, jb)
                changed = True
                da = el.w[ia][ja]
                if da == 1:
                    break


def smith_normal_form(a, transforms=True, inverses=False, check=None):
    """Smith normal form of an integer matrix.

    Returns an SNFResult with U*A*V = D, U and V unimodular, D diagonal
    with a divisibility chain d1 | d2 | ... With transforms=False only D
    is computed (much faster on large boundary matrices).
    """
    if check is None:
        check = VERIFY
    if a.rows < DENSE_CUTOFF and a.cols < DENSE_CUTOFF and not inverses:
        res = _snf_dense(a, transforms)
    else:
        res = _snf_sparse(a, transforms, inverses)
    if check and transforms:
        _verify_snf(a, res)
    return res


def _snf_sparse(a, transforms, inverses):
    el = _Eliminator(a, transforms, inverses)
    pivots = el.run()
    _fix_divisibility(el, pivots)
    locs = [(i, j) for _, i, j in
            sorted((el.w[i][j], i, j) for i, j in pivots)]
    for k in range(len(locs)):
        i, j = locs[k]
        el.swap_rows(k, i)
        el.swap_cols(k, j)
        for t in range(k + 1, len(locs)):
            ti, tj = locs[t]
            if ti == k:
                ti = i
            elif ti == i:
                ti = k
            if tj == k:
                tj = j
            elif tj == j:
                tj = k
            locs[t] = (ti, tj)
    D = SparseIntMatrix(a.rows, a.cols,
                        ((i, j, v) for i, row in el.w.items()
                         for j, v in row.items()))
    U = V = Uinv = Vinv = None
    if transforms:
        U = SparseIntMatrix(a.rows, a.rows,
                            ((i, j, v) for i, row in el.U.items()
                             for j, v in row.items()))
        V = SparseIntMatrix(a.cols, a.cols,
                            ((i, j, v) for j, colv in el.Vc.items()
                             for i, v in colv.items()))
    if transforms and inverses:
        Uinv = SparseIntMatrix(a.rows, a.rows,
                               ((i, j, v) for j, colv in el.Uinvc.items()
                                for i, v in colv.items()))
        Vinv = SparseIntMatrix(a.cols, a.cols,
                               ((i, j, v) for i, row in el.Vinvr.items()
                                for j, v in row.items()))
    return SNFResult(D, U, V, Uinv, Vinv)


def _snf_dense(a, transforms):
    """Dense elimination with the literal pivot rule, for small matrices."""
    m, n = a.rows, a.cols
    w = a.to_dense()
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)] \
        if transforms else None
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)] \
        if transforms else None

    def row_op(i2, q, i1):
        wr, wr1 = w[i2], w[i1]
        for j in range(n):
            if wr1[j]:
                wr[j] += q * wr1[j]
        if transforms:
            ur, ur1 = U[i2], U[i1]
            for j in range(m):
                if ur1[j]:
                    ur[j] += q * ur1[j]

    def col_op(j2, q, j1):
        for i in range(m):
            if w[i][j1]:
                w[i][j2] += q * w[i][j1]
        if transforms:
            for i in range(n):
                if V[i][j1]:
                    V[i][j2] += q * V[i][j1]

    def swap_rows(i1, i2):
        if i1 == i2:
            return
        w[i1], w[i2] = w[i2], w[i1]
        if transforms:
            U[i1], U[i2] = U[i2], U[i1]

    def swap_cols(j1, j2):
        if j1 == j2:
            return
        for i in range(m):
            w[i][j1], w[i][j2] = w[i][j2], w[i][j1]
        if transforms:
            for i in range(n):
                V[i][j1], V[i][j2] = V[i][j2], V[i][j1]

    def negate_row(i):
        w[i] = [-x for x in w[i]]
        if transforms:
            U[i] = [-x for x in U[i]]

    t = 0
    limit = min(m, n)
    while t < limit:
        best = None
        rnnz = [sum(1 for j in range(t, n) if w[i][j]) for i in range(m)]
        cnnz = [sum(1 for i in range(t, m) if w[i][j]) for j in range(n)]
        for i in range(t, m):
            for j in range(t, n):
                v = w[i][j]
                if v:
                    key = (abs(v), rnnz[i] + cnnz[j], i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            pv = w[t][t]
            dirty = False
            for i in range(t + 1, m):
                if w[i][t]:
                    q = w[i][t] // pv
                    if q:
                        row_op(i, -q, t)
                    if w[i][t]:
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if w[t][j]:
                    q = w[t][j] // pv
                    if q:
                        col_op(j, -q, t)
                    if w[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if not dirty:
                break
        if w[t][t] < 0:
            negate_row(t)
        t += 1
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            if w[i][i] != 0 and w[i + 1][i + 1] % w[i][i] != 0:
                col_op(i, 1, i + 1)
                while True:
                    c2 = w[i + 1][i]
                    if c2 == 0:
                        break
                    a2 = w[i][i]
                    if a2 == 0:
                        swap_rows(i, i + 1)
                        continue
                    q = c2 // a2
                    if q:
                        row_op(i + 1, -q, i)
                    if w[i + 1][i]:
                        swap_rows(i, i + 1)
                if w[i][i] < 0:
                    negate_row(i)
                while w[i][i + 1]:
                    q, r = divmod(w[i][i + 1], w[i][i])
                    if r:
                        raise AssertionError("dense gcd step failed")
                    col_op(i + 1, -q, i)
                if w[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True
    for pos in range(t):
        sel = min(range(pos, t), key=lambda k: (w[k][k], k))
        swap_rows(pos, sel)
        swap_cols(pos, sel)
    Dm = SparseIntMatrix.from_dense(w)
    Um = SparseIntMatrix.from_dense(U) if transforms else None
    Vm = SparseIntMatrix.from_dense(V) if transforms else None
    return SNFResult(Dm, Um, Vm)


def _verify_snf(a, res):
    d = res.D
    if res.U is not None:
        if res.U.mul(a).mul(res.V) != d:
            raise AssertionError("SNF postcondition U*A*V == D failed")
    if res.Uinv is not None:
        if res.U.mul(res.Uinv) != SparseIntMatrix.identity(a.rows):
            raise AssertionError("SNF U inverse check failed")
    if res.Vinv is not None:
        if res.V.mul(res.Vinv) != SparseIntMatrix.identity(a.cols):
            raise AssertionError("SNF V inverse check failed")
    for i, j, v in d.entries():
        if i != j:
            raise AssertionError("SNF D not diagonal")
    prev = None
    for v in res.diagonal:
        if v < 0:
            raise AssertionError("SNF D has negative entries")
        if prev == 0 and v != 0:
            raise AssertionError("SNF zeros precede nonzeros")
        if prev not in (None, 0) and v != 0 and v % prev != 0:
            raise AssertionError("SNF divisibility chain broken")
        prev = v


def int_inverse(a):
    """Exact inverse of a unimodular integer matrix."""
    if a.rows != a.cols:
        raise ValueError("inverse of a non-square matrix")
    res = smith_normal_form(a, transforms=True, inverses=False, check=False)
    if res.diagonal != [1] * a.rows:
        raise ValueError("matrix is not unimodular over the integers")
    # U A V = I  =>  A^{-1} = V U
    return res.V.mul(res.U)
