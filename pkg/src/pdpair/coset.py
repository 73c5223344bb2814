"""Todd-Coxeter coset enumeration (HLT strategy, deterministic).

The table records the right action of generators on cosets of a
subgroup; column 2i acts by generator i, column 2i+1 by its inverse.
Enumeration beyond the coset cap raises EnumerationOverflow, which
callers treat as "index possibly infinite".
"""

from __future__ import annotations

from collections import deque


class EnumerationOverflow(RuntimeError):
    """Raised when the coset cap is hit before the table closes."""


def _col(signed):
    return 2 * (abs(signed) - 1) + (0 if signed > 0 else 1)


class CosetTable:
    """Complete right-coset action for a finite-index subgroup."""

    def __init__(self, ngens, rows):
        self.ngens = ngens
        self.rows = [list(r) for r in rows]
        for r in self.rows:
            if len(r) != 2 * ngens or any(
                    x is None or not 0 <= x < len(self.rows) for x in r):
                raise ValueError("table is not complete")

    @property
    def degree(self):
        return len(self.rows)

    def act(self, c, signed):
        return self.rows[c][_col(signed)]

    def word_act(self, c, word):
        for s in word:
            c = self.rows[c][_col(s)]
        return c

    def perm(self, gen):
        """Permutation of cosets by generator gen (0-based)."""
        return tuple(r[2 * gen] for r in self.rows)

    def perms(self):
        return [self.perm(g) for g in range(self.ngens)]

    def validate(self, pres, subgroup_words=()):
        """Assert the table invariants; returns quietly when sound."""
        n = self.degree
        for g in range(self.ngens):
            p = self.perm(g)
            if sorted(p) != list(range(n)):
                raise AssertionError(f"generator {g} does not permute")
            for c in range(n):
                if self.rows[p[c]][2 * g + 1] != c:
                    raise AssertionError("inverse column mismatch")
        for r in pres.relators:
            for c in range(n):
                if self.word_act(c, r) != c:
                    raise AssertionError(f"relator {r} acts nontrivially")
        for w in subgroup_words:
            if self.word_act(0, w) != 0:
                raise AssertionError("subgroup word moves coset 0")
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for x in self.rows[c]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        if len(seen) != n:
            raise AssertionError("action is not transitive")

    def to_json(self):
        return {"degree": self.degree,
                "generators": [list(self.perm(g))
                               for g in range(self.ngens)]}

    @classmethod
    def from_json(cls, obj):
        perms = obj["generators"]
        n = obj["degree"]
        rows = []
        for c in range(n):
            row = []
            for p in perms:
                row.append(p[c])
                row.append(p.index(c))
            rows.append(row)
        return cls(len(perms), rows)


def element_words(table):
    """BFS words (coset representatives) for every coset, from coset 0."""
    words = {0: ()}
    queue = [0]
    while queue:
        nxt = []
        for c in queue:
            for g in range(table.ngens):
                for signed in (g + 1, -(g + 1)):
                    d = table.act(c, signed)
                    if d not in words:
                        words[d] = words[c] + (signed,)
                        nxt.append(d)
        queue = nxt
    return [words[c] for c in range(table.degree)]


def find_subgroup_words(pres, table, order, max_gens=2):
    """Words generating a subgroup of the given order, from a regular
    table (degree = group order).

    In the regular action the subgroup generated by elements equals
    the orbit of coset 0 under right multiplication by them, so the
    search needs only orbit computations.  Candidates are taken in BFS
    word order and capped at max_gens generators; returns the first
    generating tuple found, or raises when none exists.
    """
    n = table.degree
    if order == 1:
        return ()
    if n % order:
        raise ValueError("subgroup order must divide the group order")
    words = element_words(table)
    perms = []
    cands = []
    for c in range(1, n):
        p = tuple(table.word_act(x, words[c]) for x in range(n))
        # orbit of 0 under p alone = cyclic subgroup generated
        k, size = p[0], 1
        while k != 0:
            k, size = p[k], size + 1
        if order % size == 0:
            cands.append(c)
            perms.append(p)

    def orbit_size(ps):
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for p in ps:
                y = p[x]
                if y not in seen:
                    if len(seen) >= order:
                        return order + 1
                    seen.add(y)
                    stack.append(y)
        return len(seen)

    def search(chosen, start):
        size = orbit_size([perms[i] for i in chosen]) if chosen else 1
        if size == order:
            return tuple(words[cands[i]] for i in chosen)
        if size > order or len(chosen) == max_gens:
            return None
        for i in range(start, len(cands)):
            got = search(chosen + [i], i + 1)
            if got is not None:
                return got
        return None

    got = search([], 0)
    if got is None:
        raise ValueError(f"no subgroup of order {order} generated by "
                         f"{max_gens} elements")
    return got


def todd_coxeter(pres, subgroup_words=(), max_cosets=10 ** 6):
    """HLT coset enumeration for the subgroup the given words generate.

    Deterministic: cosets are processed in creation order, relators in
    presentation order, rows filled column by column.
    """
    ncols = 2 * pres.ngens
    rel_cols = [[_col(s) for s in r] for r in pres.relators]
    sub_cols = [[_col(s) for s in w] for w in subgroup_words]

    table = [[None] * ncols]
    rep = [0]
    live = 1

    def find(c):
        root = c
        while rep[root] != root:
            root = rep[root]
        while rep[c] != root:
            rep[c], c = root, rep[c]
        return root

    def define(c, x):
        nonlocal live
        if live >= max_cosets:
            raise EnumerationOverflow(
                f"enumeration passed {max_cosets} cosets")
        n = len(table)
        table.append([None] * ncols)
        rep.append(n)
        live += 1
        table[c][x] = n
        table[n][x ^ 1] = c
        return n

    merge_queue = deque()

    def merge(a, b):
        nonlocal live
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        rep[b] = a
        live -= 1
        merge_queue.append(b)

    def coincidence(a, b):
        merge(a, b)
        while merge_queue:
            dead = merge_queue.popleft()
            for x in range(ncols):
                d = table[dead][x]
                if d is None:
                    continue
                table[d][x ^ 1] = None
                u, v = find(dead), find(d)
                if table[u][x] is not None:
                    merge(v, table[u][x])
                elif table[v][x ^ 1] is not None:
                    merge(u, table[v][x ^ 1])
                else:
                    table[u][x] = v
                    table[v][x ^ 1] = u

    def scan_and_fill(c, cols):
        f, i = c, 0
        b, j = c, len(cols) - 1
        while True:
            while i <= j and table[f][cols[i]] is not None:
                f = find(table[f][cols[i]])
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][cols[j] ^ 1] is not None:
                b = find(table[b][cols[j] ^ 1])
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][cols[i]] = b
                table[b][cols[i] ^ 1] = f
                return
            define(f, cols[i])

    for cols in sub_cols:
        if cols:
            scan_and_fill(0, cols)
    c = 0
    while c < len(table):
        if find(c) != c:
            c += 1
            continue
        for cols in rel_cols:
            if not cols:
                continue
            scan_and_fill(c, cols)
            if find(c) != c:
                break
        if find(c) == c:
            for x in range(ncols):
                if table[c][x] is None:
                    define(c, x)
        c += 1

    # compress to live cosets, renumbered in BFS order from coset 0
    order = []
    number = {find(0): 0}
    queue = deque([find(0)])
    while queue:
        cur = queue.popleft()
        order.append(cur)
        for x in range(ncols):
            val = table[cur][x]
            assert val is not None, "live row incomplete after enumeration"
            d = find(val)
            if d not in number:
                number[d] = len(number)
                queue.append(d)
    rows = []
    for cur in order:
        rows.append([number[find(table[cur][x])] for x in range(ncols)])
    assert len(rows) == live, "unreachable live coset"
    out = CosetTable(pres.ngens, rows)
    out.validate(pres, subgroup_words)
    return out
