"""Verdict procedures for duality of finite simplicial pairs.

A pair (X, Y) with orientation system O and class z in H_n(X, Y; O)
is tested through three cap-product conditions:

  (1) z cap -: H^m(X; B)    -> H_{n-m}(X, Y; O tensor B)
  (2) z cap -: H^m(X, Y; B) -> H_{n-m}(X; O tensor B)
  (3) the boundary of z splits over the path components of Y and each
      piece satisfies (1) on its component in dimension n - 1.

Each condition must hold for every local system B.  For finite pi_1
it is enough to check B = the regular permutation system of the whole
group (the group-ring criterion), which is what certification means
here.  When the group is infinite, or too large for the budget, the
engine only reports certified failures (a necessary check failed) or
"undecided"; it never upgrades integer-coefficient success to a yes.
"""

from .chaincomplex import is_quasi_iso
from .coset import EnumerationOverflow, find_subgroup_words, todd_coxeter
from .localsystem import (compile_edge_system, orientation_systems,
                          permutation_system, trivial_edges)
from .presentation import fundamental_presentation
from .products import cap_chain_map, cap_cocycle_chain_map
from .simplicial import (SimplicialComplex, SimplicialPair,
                         connected_components, full_subcomplex)
from .twisted import twisted_complex, twisted_cochain_complex

DEFAULT_MAX_COSETS = 20000
DEFAULT_CELL_BUDGET = 6000
WITNESS_INDICES = (2, 3, 4, 5, 6)


class GroupData:
    """Finiteness data for the fundamental group of one complex."""

    def __init__(self, cx, max_cosets=DEFAULT_MAX_COSETS):
        self.pres = fundamental_presentation(cx)
        self.table = None
        self.order = None
        if not self.pres.has_finite_abelianization():
            self.finite = False
            return
        try:
            self.table = todd_coxeter(self.pres, (), max_cosets=max_cosets)
            self.order = self.table.degree
            self.finite = True
        except EnumerationOverflow:
            self.finite = None  # unknown; treated as uncertifiable


class ConditionVerdict:
    """Outcome of one condition: True, False, or None (undecided)."""

    def __init__(self, holds, integer_only=False, witness=None, notes=()):
        self.holds = holds
        self.integer_only = integer_only
        self.witness = witness
        self.notes = list(notes)

    def __repr__(self):
        word = {True: "holds", False: "fails", None: "undecided"}[self.holds]
        extra = ", integer-only" if self.integer_only else ""
        return f"ConditionVerdict({word}{extra})"

    def to_json(self):
        return {"holds": self.holds, "integer_only": self.integer_only,
                "witness": self.witness, "notes": self.notes}


def _describe_system(system):
    """Short human-readable description of a rank-1 system."""
    if system.rank != 1:
        return f"rank {system.rank}"
    neg = [i + 1 for i, m in enumerate(system.matrices)
           if m.to_dense()[0][0] < 0]
    if not neg:
        return "trivial (all generators +1)"
    if len(neg) <= 10:
        return f"rank 1, generators {neg} negated"
    return f"rank 1, {len(neg)} of {len(system.matrices)} generators negated"


def _cone_witness(cert, **extra):
    """JSON witness from a nonzero quasi-isomorphism certificate."""
    bad = {p: h.to_json() for p, h in sorted(cert.items())
           if not h.is_trivial}
    out = {"cone_homology": {str(p): v for p, v in bad.items()}}
    out.update(extra)
    return out


def _cap_verdict(eo, z, n, src_relative, pair, eb, label):
    """is_quasi_iso of cap with z for one coefficient system's edges."""
    tw_o = twisted_complex(pair, eo, relative=True)
    src = twisted_cochain_complex(pair, eb, relative=src_relative)
    tgt = twisted_complex(pair, eo.tensor(eb), relative=not src_relative)
    f = cap_chain_map(tw_o, n, z, src, tgt)
    ok, cert = is_quasi_iso(f, certificate=True)
    if ok:
        return True, None
    return False, _cone_witness(cert, coefficients=label)


def _witness_systems(gd, max_cosets):
    """Small-index permutation systems usable as refutation witnesses."""
    out = []
    if not gd.finite:
        return out
    for index in WITNESS_INDICES:
        if gd.order % index:
            continue
        if index == gd.order:
            continue
        try:
            words = find_subgroup_words(gd.pres, gd.table, gd.order // index)
        except ValueError:
            continue
        try:
            table = todd_coxeter(gd.pres, words, max_cosets=max_cosets)
        except EnumerationOverflow:
            continue
        if table.degree == index:
            out.append((index, permutation_system(gd.pres, table)))
    return out


def _cells(pair, relative):
    basis = pair.relative_basis if relative else \
        (lambda p: range(pair.total.rank(p)))
    return max((len(list(basis(p))) for p in range(pair.total.dim + 1)),
               default=0)


def _certify_duality(pair, eo, z, n, src_relative, gd,
                     max_cosets=DEFAULT_MAX_COSETS,
                     cell_budget=DEFAULT_CELL_BUDGET):
    """Run the certification ladder for one cap-duality condition.

    Integer coefficients first (a cheap necessary check), then either
    the full regular system of a small enough finite group (decides
    the condition outright) or small-index permutation witnesses
    (enough for a certified no)."""
    total = pair.total
    ok, witness = _cap_verdict(eo, z, n, src_relative, pair,
                               trivial_edges(total), "integer")
    if not ok:
        return ConditionVerdict(False, integer_only=not gd.finite,
                                witness=witness)
    if gd.finite:
        if gd.order == 1:
            return ConditionVerdict(
                True, notes=["trivial fundamental group: the integer "
                             "check is the group-ring check"])
        cells = max(_cells(pair, True), _cells(pair, False))
        if gd.order * cells <= cell_budget:
            reg = permutation_system(gd.pres, gd.table)
            ereg = compile_edge_system(reg, total)
            ok, witness = _cap_verdict(eo, z, n, src_relative, pair, ereg,
                                       f"group-ring, order {gd.order}")
            return ConditionVerdict(ok, witness=witness)
        notes = [f"group order {gd.order} exceeds the certification budget"]
        for index, system in _witness_systems(gd, max_cosets):
            esys = compile_edge_system(system, total)
            ok, witness = _cap_verdict(eo, z, n, src_relative, pair, esys,
                                       f"index-{index} permutation system")
            if not ok:
                return ConditionVerdict(False, witness=witness, notes=notes)
            notes.append(f"index-{index} witness passed")
        return ConditionVerdict(None, integer_only=True, notes=notes)
    word = "infinite" if gd.finite is False else "of unresolved order"
    return ConditionVerdict(None, integer_only=True,
                            notes=[f"fundamental group {word}; "
                                   "integer checks passed"])


def _reindex_chain(tw_src, p, z, tw_dst, drop=False):
    """Re-flatten a chain across complexes sharing a vertex universe."""
    src_total = tw_src.pair.total
    dst_total = tw_dst.pair.total
    out = {}
    for k, v in z.items():
        idx, coord = tw_src.unflat(p, k)
        s = src_total.simplices(p)[idx]
        pos = tw_dst.pos[p].get(dst_total.index(s)) \
            if s in dst_total else None
        if pos is None:
            if drop:
                continue
            raise ValueError(f"simplex {s} has no slot in the target")
        out[pos * tw_dst.rank + coord] = v
    return out


def boundary_pieces(pair, eo, z, n):
    """Boundary of a relative cycle, split over the components of the
    sub.  Returns (components, pieces): full subcomplexes and flat
    (n-1)-chains on matching twisted complexes with restricted edges."""
    tw_rel = twisted_complex(pair, eo, relative=True)
    tw_abs = twisted_complex(pair.total, eo)
    z_abs = _reindex_chain(tw_rel, n, z, tw_abs)
    dz = tw_abs.boundary_of(n, z_abs)
    comps = connected_components(pair.sub)
    out = []
    for verts in comps:
        zcx = full_subcomplex(pair.sub, verts)
        vset = set(verts)
        tw_z = twisted_complex(zcx, eo.restrict(zcx))
        piece = {}
        for k, v in dz.items():
            idx, coord = tw_abs.unflat(n - 1, k)
            s = pair.total.simplices(n - 1)[idx]
            if s[0] in vset:
                piece[tw_z.flat(n - 1, zcx.index(s), coord)] = v
        out.append((zcx, tw_z, piece))
    leftover = sum(len(p) for _, _, p in out)
    if leftover != len(dz):
        raise ValueError("boundary not supported on the sub")
    return out


def find_fundamental_classes(pair, system, n):
    """Candidate classes in H_n(X, Y; system).

    Returns (classes, status): the two generators of a free rank-1
    part and "unique"; ([], "none") when the rank is 0; ([],
    "ambiguous") when it is 2 or more and a class must be supplied."""
    edges = system if hasattr(system, "transport") \
        else compile_edge_system(system, pair.total)
    tw = twisted_complex(pair, edges, relative=True)
    H = tw.homology(n, data=True)
    free = H.free_positions
    if len(free) == 1:
        g = H.generator(free[0])
        return [g, {k: -v for k, v in g.items()}], "unique"
    if not free:
        return [], "none"
    return [], "ambiguous"


def check_condition(pair, system, z, which, n=None,
                    max_cosets=DEFAULT_MAX_COSETS,
                    cell_budget=DEFAULT_CELL_BUDGET):
    """Decide one duality condition (1, 2, or 3) for the class z.

    z is a flat chain on the relative twisted chain complex of the
    pair with the given rank-1 orientation system, either a dict or a
    {"degree", "coeffs"} mapping; n is its degree (required for the
    dict form)."""
    if isinstance(pair, SimplicialComplex):
        pair = SimplicialPair(pair)
    eo = compile_edge_system(system, pair.total)
    tw_rel = twisted_complex(pair, eo, relative=True)
    if isinstance(z, dict) and "coeffs" in z:
        n, z = tw_rel.chain_from_class(z)
    if n is None:
        raise ValueError("degree n is required with a flat chain")
    if tw_rel.boundary_of(n, z):
        raise ValueError("z is not a relative cycle")
    if which not in (1, 2, 3):
        raise ValueError("condition must be 1, 2, or 3")
    gd = GroupData(pair.total, max_cosets=max_cosets)
    if which in (1, 2):
        return _certify_duality(pair, eo, z, n, which == 2, gd,
                                max_cosets, cell_budget)
    return _check_condition3(pair, eo, z, n, max_cosets, cell_budget)


def _check_condition3(pair, eo, z, n, max_cosets, cell_budget):
    """Condition (3): each boundary piece is a fundamental class of
    its component of the sub in dimension n - 1, for all systems."""
    if pair.sub.size() == 0:
        return ConditionVerdict(True, notes=["empty sub"])
    verdicts = []
    for c, (zcx, tw_z, piece) in enumerate(boundary_pieces(pair, eo, z, n)):
        gd = GroupData(zcx, max_cosets=max_cosets)
        v = _certify_duality(SimplicialPair(zcx), tw_z.edges, piece, n - 1,
                             False, gd, max_cosets, cell_budget)
        v.notes.insert(0, f"component {c}")
        if v.witness is not None:
            v.witness["component"] = c
        verdicts.append(v)
    notes = [note for v in verdicts for note in v.notes]
    integer_only = any(v.integer_only for v in verdicts)
    for v in verdicts:
        if v.holds is False:
            return ConditionVerdict(False, integer_only=v.integer_only,
                                    witness=v.witness, notes=notes)
    if any(v.holds is None for v in verdicts):
        return ConditionVerdict(None, integer_only=integer_only, notes=notes)
    return ConditionVerdict(True, integer_only=integer_only, notes=notes)


class DualityReport:
    """Full verdict for one pair: conditions, class, and orientation."""

    def __init__(self, pair):
        self.pair = pair
        self.verdict = "undecided"
        self.formal_dimension = None
        self.orientation = None      # LocalSystem
        self.fundamental_class = None  # flat dict on the relative complex
        self.conditions = {}         # {1,2,3} -> ConditionVerdict
        self.integer_only = False
        self.notes = []
        self.components = []         # sub-reports when total is disconnected

    @property
    def is_poincare(self):
        return self.verdict == "poincare-pair"

    def condition(self, which):
        return self.conditions.get(which)

    def class_json(self):
        if self.fundamental_class is None or self.orientation is None:
            return None
        eo = compile_edge_system(self.orientation, self.pair.total)
        tw = twisted_complex(self.pair, eo, relative=True)
        return tw.class_to_json(self.formal_dimension,
                                self.fundamental_class)

    def to_json(self):
        out = {
            "verdict": self.verdict,
            "formal_dimension": self.formal_dimension,
            "orientation_system": self.orientation.to_json()
            if self.orientation is not None else None,
            "fundamental_class": self.class_json(),
            "integer_only": self.integer_only,
            "conditions": {str(k): v.to_json()
                           for k, v in sorted(self.conditions.items())},
            "notes": self.notes,
        }
        if self.components:
            out["components"] = [r.to_json() for r in self.components]
        return out

    def summary(self):
        lines = [f"verdict            {self.verdict}"]
        if self.formal_dimension is not None:
            lines.append(f"formal dimension   {self.formal_dimension}")
        if self.orientation is not None:
            lines.append(f"orientation        {_describe_system(self.orientation)}")
        for k in sorted(self.conditions):
            v = self.conditions[k]
            word = {True: "holds", False: "fails",
                    None: "undecided"}[v.holds]
            extra = " (integer only)" if v.integer_only else ""
            lines.append(f"condition ({k})      {word}{extra}")
        if self.integer_only:
            lines.append("certification      integer coefficients only")
        for note in self.notes:
            lines.append(f"note               {note}")
        for i, r in enumerate(self.components):
            lines.append(f"-- component {i} --")
            lines.extend("  " + ln for ln in r.summary().splitlines())
        return "\n".join(lines)


def _split_pair(pair):
    """Component pairs of a disconnected total, in canonical order."""
    out = []
    for verts in connected_components(pair.total):
        total = full_subcomplex(pair.total, verts)
        sub = full_subcomplex(pair.sub, verts)
        out.append(SimplicialPair(total, sub))
    return out


def verify_pair(pair, max_cosets=DEFAULT_MAX_COSETS,
                cell_budget=DEFAULT_CELL_BUDGET):
    """Search for an orientation system, degree, and class satisfying
    all three conditions; report the first full success or the best
    partial verdict."""
    if isinstance(pair, SimplicialComplex):
        pair = SimplicialPair(pair)
    report = DualityReport(pair)
    if pair.total.size() == 0:
        report.verdict = "not-poincare-pair"
        report.notes.append("empty complex")
        return report
    comps = connected_components(pair.total)
    if len(comps) > 1:
        report.components = [verify_pair(p, max_cosets, cell_budget)
                             for p in _split_pair(pair)]
        dims = {r.formal_dimension for r in report.components}
        if all(r.is_poincare for r in report.components) and len(dims) == 1:
            report.verdict = "poincare-pair"
            report.formal_dimension = dims.pop()
        elif any(r.verdict == "undecided" for r in report.components) and \
                not any(r.verdict == "not-poincare-pair"
                        for r in report.components):
            report.verdict = "undecided"
        else:
            report.verdict = "not-poincare-pair"
        if all(r.is_poincare for r in report.components) and len(dims) > 1:
            report.notes.append("components have different dimensions")
        report.integer_only = any(r.integer_only for r in report.components)
        report.notes.append(f"{len(comps)} components verified separately")
        return report
    gd = GroupData(pair.total, max_cosets=max_cosets)
    best = None
    ambiguous = []
    for system in orientation_systems(gd.pres):
        eo = compile_edge_system(system, pair.total)
        tw = twisted_complex(pair, eo, relative=True)
        for n in range(pair.total.dim + 1):
            classes, status = find_fundamental_classes(pair, eo, n)
            if status == "ambiguous":
                ambiguous.append((system, n))
            if status != "unique":
                continue
            z = classes[0]
            cand = DualityReport(pair)
            cand.formal_dimension = n
            cand.orientation = system
            cand.fundamental_class = z
            cand.conditions[1] = _certify_duality(
                pair, eo, z, n, False, gd, max_cosets, cell_budget)
            cand.conditions[2] = _certify_duality(
                pair, eo, z, n, True, gd, max_cosets, cell_budget)
            cand.conditions[3] = _check_condition3(
                pair, eo, z, n, max_cosets, cell_budget)
            states = [cand.conditions[k].holds for k in (1, 2, 3)]
            cand.integer_only = any(cand.conditions[k].integer_only
                                    for k in (1, 2, 3))
            if all(s is True for s in states):
                cand.verdict = "poincare-pair"
                return cand
            cand.verdict = "not-poincare-pair" if False in states \
                else "undecided"
            if states[0] is True and states[1] is True and \
                    states[2] is False:
                cand.notes.append("duality holds absolutely and relatively "
                                  "but the boundary is not a duality "
                                  "space: Browder-style only")
            if _better(cand, best):
                best = cand
    if best is not None:
        return best
    report.verdict = "not-poincare-pair"
    report.notes.append("no orientation system gives free rank-1 "
                        "relative homology in any degree")
    for system, n in ambiguous:
        report.notes.append(f"rank >= 2 in degree {n}: a class must "
                            "be supplied by hand")
    return report


def _score(report):
    states = [report.conditions[k].holds for k in (1, 2, 3)]
    return (sum(s is True for s in states),
            sum(s is None for s in states))


def _better(cand, best):
    return best is None or _score(cand) > _score(best)


class TriadReport:
    """Verdict for (X; Y1, Y2): the pair, both halves, and gluing."""

    def __init__(self):
        self.verdict = "undecided"
        self.pair_report = None
        self.half_reports = []
        self.piece_signs = None
        self.notes = []

    def to_json(self):
        return {
            "verdict": self.verdict,
            "pair": self.pair_report.to_json() if self.pair_report else None,
            "halves": [r.to_json() for r in self.half_reports],
            "piece_signs": self.piece_signs,
            "notes": self.notes,
        }

    def summary(self):
        lines = [f"triad verdict      {self.verdict}"]
        for note in self.notes:
            lines.append(f"note               {note}")
        if self.pair_report is not None:
            lines.append("-- pair (X, Y1 u Y2) --")
            lines.extend("  " + ln
                         for ln in self.pair_report.summary().splitlines())
        for i, r in enumerate(self.half_reports):
            lines.append(f"-- half {i + 1} --")
            lines.extend("  " + ln for ln in r.summary().splitlines())
        if self.piece_signs is not None:
            lines.append(f"boundary signs     {self.piece_signs}")
        return "\n".join(lines)


def verify_triad(triad, max_cosets=DEFAULT_MAX_COSETS,
                 cell_budget=DEFAULT_CELL_BUDGET):
    """Triad verdict: the pair (X, Y1 u Y2) must be a duality pair,
    both (Yi, Y0) must be duality pairs one dimension down, and the
    boundary of the fundamental class must split by excision into
    generators of the halves (either global sign accepted)."""
    report = TriadReport()
    union = triad.union_sub()
    pair = SimplicialPair(triad.total, union)
    report.pair_report = verify_pair(pair, max_cosets, cell_budget)
    if not report.pair_report.is_poincare:
        report.verdict = report.pair_report.verdict
        word = "is undecided" \
            if report.pair_report.verdict == "undecided" else "already fails"
        report.notes.append(f"the underlying pair {word}")
        return report
    n = report.pair_report.formal_dimension
    eo = compile_edge_system(report.pair_report.orientation, triad.total)
    z = report.pair_report.fundamental_class
    y0 = triad.intersection_sub()
    signs = []
    ok = True
    undecided = False
    for side, ycx in enumerate((triad.sub1, triad.sub2)):
        if ycx.size() == 0:
            report.half_reports.append(None)
            signs.append(None)
            report.notes.append(f"side {side + 1} empty")
            continue
        half = SimplicialPair(ycx, y0)
        rep = verify_pair(half, max_cosets, cell_budget)
        report.half_reports.append(rep)
        if rep.verdict == "undecided":
            undecided = True
        elif not rep.is_poincare or rep.formal_dimension != n - 1:
            ok = False
            report.notes.append(f"side {side + 1} is not a duality pair "
                                f"in dimension {n - 1}")
            signs.append(None)
            continue
        sign = _piece_sign(pair, eo, z, n, ycx, y0)
        signs.append(sign)
        if sign is None:
            ok = False
            report.notes.append(f"boundary piece {side + 1} does not "
                                "generate the half's relative homology")
    report.half_reports = [r for r in report.half_reports if r is not None]
    report.piece_signs = signs
    if ok and not undecided:
        report.verdict = "poincare-triad"
    elif ok and undecided:
        report.verdict = "undecided"
    else:
        report.verdict = "not-poincare-triad"
    return report


def _piece_sign(pair, eo, z, n, ycx, y0):
    """Sign relating one excision piece of the boundary of z to the
    canonical generator of H_{n-1}(Yi, Y0; O restricted); None when
    the piece fails to generate."""
    tw_rel = twisted_complex(pair, eo, relative=True)
    tw_abs = twisted_complex(pair.total, eo)
    z_abs = _reindex_chain(tw_rel, n, z, tw_abs)
    dz = tw_abs.boundary_of(n, z_abs)
    half = SimplicialPair(ycx, y0)
    tw_half = twisted_complex(half, eo.restrict(ycx), relative=True)
    piece = {}
    for k, v in dz.items():
        idx, coord = tw_abs.unflat(n - 1, k)
        s = pair.total.simplices(n - 1)[idx]
        if s in ycx and s not in y0:
            piece[tw_half.flat(n - 1, ycx.index(s), coord)] = v
    H = tw_half.homology(n - 1, data=True)
    if len(H.free_positions) != 1:
        return None
    coords = H.coords(piece)
    c = coords[H.free_positions[0]]
    if abs(c) != 1:
        return None
    if tw_half.boundary_of(n - 1, piece):
        return None
    return c


class ThomVerdict:
    """Outcome of a Thom-class check at one degree."""

    def __init__(self, holds, k, integer_only=False, witness=None,
                 notes=()):
        self.holds = holds
        self.k = k
        self.integer_only = integer_only
        self.witness = witness
        self.notes = list(notes)

    def to_json(self):
        return {"holds": self.holds, "degree": self.k,
                "integer_only": self.integer_only,
                "witness": self.witness, "notes": self.notes}


def verify_thom_class(pair, system2, u, k, max_cosets=DEFAULT_MAX_COSETS,
                      cell_budget=DEFAULT_CELL_BUDGET):
    """Decide whether the degree-k relative cocycle u is a Thom class:
    capping with u must send relative chains with group-ring
    coefficients to absolute chains, inducing isomorphisms in every
    degree (integer fallback flagged for infinite groups)."""
    if isinstance(pair, SimplicialComplex):
        pair = SimplicialPair(pair)
    eo2 = system2 if hasattr(system2, "transport") \
        else compile_edge_system(system2, pair.total)
    tw_u = twisted_cochain_complex(pair, eo2, relative=True)
    if tw_u.boundary_of(k, u):
        raise ValueError("u is not a relative cocycle")
    gd = GroupData(pair.total, max_cosets=max_cosets)

    def run(eb, label):
        src = twisted_complex(pair, eb, relative=True)
        tgt = twisted_complex(pair.total, eb.tensor(eo2))
        f = cap_cocycle_chain_map(tw_u, k, u, src, tgt)
        ok, cert = is_quasi_iso(f, certificate=True)
        return (True, None) if ok else \
            (False, _cone_witness(cert, coefficients=label))

    ok, witness = run(trivial_edges(pair.total), "integer")
    if not ok:
        return ThomVerdict(False, k, integer_only=not gd.finite,
                           witness=witness)
    if gd.finite:
        if gd.order == 1:
            return ThomVerdict(
                True, k, notes=["trivial fundamental group: the integer "
                                "check is the group-ring check"])
        cells = max(_cells(pair, True), _cells(pair, False))
        if gd.order * cells <= cell_budget:
            reg = compile_edge_system(
                permutation_system(gd.pres, gd.table), pair.total)
            ok, witness = run(reg, f"group-ring, order {gd.order}")
            return ThomVerdict(ok, k, witness=witness)
        notes = [f"group order {gd.order} exceeds the certification budget"]
        for index, system in _witness_systems(gd, max_cosets):
            esys = compile_edge_system(system, pair.total)
            ok, witness = run(esys, f"index-{index} permutation system")
            if not ok:
                return ThomVerdict(False, k, witness=witness, notes=notes)
            notes.append(f"index-{index} witness passed")
        return ThomVerdict(None, k, integer_only=True, notes=notes)
    return ThomVerdict(None, k, integer_only=True,
                       notes=["fundamental group infinite; integer "
                              "checks passed"])


def find_thom_class(pair, k, max_cosets=DEFAULT_MAX_COSETS,
                    cell_budget=DEFAULT_CELL_BUDGET):
    """Search the rank-1 orientation systems for a certified Thom
    class of degree k.  Returns (system, u, verdict) for the first
    success, or (None, None, best-failure) when none verifies."""
    if isinstance(pair, SimplicialComplex):
        pair = SimplicialPair(pair)
    gd = GroupData(pair.total, max_cosets=max_cosets)
    best = None
    for system in orientation_systems(gd.pres):
        eo2 = compile_edge_system(system, pair.total)
        tw_u = twisted_cochain_complex(pair, eo2, relative=True)
        H = tw_u.homology(k, data=True)
        if len(H.free_positions) != 1:
            continue
        g = H.generator(H.free_positions[0])
        for u in (g, {key: -v for key, v in g.items()}):
            verdict = verify_thom_class(pair, eo2, u, k,
                                        max_cosets, cell_budget)
            if verdict.holds:
                return system, u, verdict
            if best is None or (verdict.holds is None and
                                best[2].holds is False):
                best = (None, None, verdict)
    if best is None:
        best = (None, None,
                ThomVerdict(False, k,
                            notes=["no rank-1 candidate cocycle"]))
    return best
