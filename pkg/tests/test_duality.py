"""Duality verdicts end to end: smoke values on a small corpus, the
counterexample pair, equivalence and redundancy of the three
conditions, Thom classes, and the translation between Thom classes
and degree-zero duality."""

import pytest

from pdpair.duality import (check_condition, find_fundamental_classes,
                            find_thom_class, verify_pair, verify_thom_class)
from pdpair.localsystem import compile_edge_system, trivial_edges
from pdpair.presentation import fundamental_presentation
from pdpair.products import cap_cocycle_chain_map
from pdpair.scenarios import theorem_a_pair
from pdpair.simplicial import (SimplicialComplex, SimplicialPair,
                               boundary_sphere, cone, from_labeled_facets,
                               simplex_complex)
from pdpair.spaces import (circle, interval_pair, mobius_band, rp2,
                           wedge_circle_interval)
from pdpair.twisted import twisted_cochain_complex, twisted_complex


def disk_pair(k):
    return SimplicialPair(simplex_complex(k), boundary_sphere(k))


def wedge_spheres_pair():
    """Two 2-spheres joined at a vertex, relative to that vertex."""
    s = boundary_sphere(3)
    one = [tuple("w" if v == 0 else f"a{v}" for v in f) for f in s.facets()]
    two = [tuple("w" if v == 0 else f"b{v}" for v in f) for f in s.facets()]
    cx, toint = from_labeled_facets(one + two)
    pt = SimplicialComplex(cx.vertex_count, [(toint["w"],)])
    return SimplicialPair(cx, pt)


@pytest.fixture(scope="module")
def corpus_reports():
    corpus = {
        "interval": interval_pair(),
        "rp2": rp2(),
        "sphere2": boundary_sphere(3),
        "disk2": disk_pair(2),
        "disk3": disk_pair(3),
        "mobius": mobius_band(),
        "circle": circle(3),
        "wedge-ci": wedge_circle_interval(),
        "counterexample": theorem_a_pair(1)[0],
    }
    return {name: verify_pair(obj) for name, obj in corpus.items()}


class TestSmokeVerdicts:
    def test_positive_pairs(self, corpus_reports):
        expected = {"interval": 1, "rp2": 2, "sphere2": 2, "disk3": 3}
        for name, n in expected.items():
            rep = corpus_reports[name]
            assert rep.verdict == "poincare-pair", name
            assert rep.formal_dimension == n, name
            assert all(rep.conditions[k].holds for k in (1, 2, 3)), name

    def test_disk2_boundary_circle_undecided(self, corpus_reports):
        rep = corpus_reports["disk2"]
        assert rep.verdict == "undecided"
        assert rep.conditions[1].holds is True
        assert rep.conditions[2].holds is True
        assert rep.conditions[3].holds is None

    def test_rp2_orientation_nontrivial(self, corpus_reports):
        sysm = corpus_reports["rp2"].orientation
        assert any(sysm.mat(g) != sysm.mat(g).identity(1)
                   for g in range(1, sysm.pres.ngens + 1))

    def test_negative_pair(self, corpus_reports):
        rep = corpus_reports["wedge-ci"]
        assert rep.verdict == "not-poincare-pair"
        assert False in [rep.conditions[k].holds for k in (1, 2, 3)]

    def test_infinite_groups_stay_undecided(self, corpus_reports):
        for name in ("mobius", "circle"):
            rep = corpus_reports[name]
            assert rep.verdict == "undecided", name
            assert rep.integer_only, name
            assert rep.conditions[1].holds is None, name

    def test_circle_boundary_condition_vacuous(self, corpus_reports):
        assert corpus_reports["circle"].conditions[3].holds is True


class TestCounterexamplePair:
    """Cone on (acyclic complex with perfect fundamental group) x S^0:
    interior duality holds but the boundary is not a duality space."""

    def test_full_report(self, corpus_reports):
        rep = corpus_reports["counterexample"]
        assert rep.verdict == "not-poincare-pair"
        assert rep.formal_dimension == 1
        assert rep.conditions[1].holds is True
        assert rep.conditions[2].holds is True
        assert rep.conditions[3].holds is False
        assert not rep.integer_only

    def test_witness_names_refuting_coefficients(self, corpus_reports):
        w = corpus_reports["counterexample"].conditions[3].witness
        assert w["coefficients"] == "index-5 permutation system"
        assert w["component"] == 0

    def test_browder_note(self, corpus_reports):
        assert any("Browder" in t
                   for t in corpus_reports["counterexample"].notes)


class TestConditionRelations:
    """Conditions (1) and (2) always agree, and either of them
    together with (3) forces the other, on every corpus report."""

    def test_one_iff_two(self, corpus_reports):
        for name, rep in corpus_reports.items():
            assert rep.conditions[1].holds == rep.conditions[2].holds, name

    def test_redundancy(self, corpus_reports):
        for name, rep in corpus_reports.items():
            c1, c2, c3 = (rep.conditions[k].holds for k in (1, 2, 3))
            if c1 is True and c3 is True:
                assert c2 is True, name
            if c2 is True and c3 is True:
                assert c1 is True, name


class TestSuppliedClasses:
    def test_ambiguous_rank_two_needs_hand_class(self):
        rep = verify_pair(wedge_spheres_pair())
        assert rep.verdict == "not-poincare-pair"
        assert any("a class must be supplied by hand" in t
                   for t in rep.notes)

    def test_hand_supplied_class_fails_honestly(self):
        pair = wedge_spheres_pair()
        pres = fundamental_presentation(pair.total)
        from pdpair.localsystem import trivial_system
        sysm = trivial_system(pres)
        eo = compile_edge_system(sysm, pair.total)
        classes, status = find_fundamental_classes(pair, eo, 2)
        assert status == "ambiguous" and classes == []
        tw = twisted_complex(pair, eo, relative=True)
        h = tw.homology(2, data=True)
        assert h.group.free_rank == 2
        g = h.generator(h.free_positions[0])
        assert check_condition(pair, sysm, g, 1, n=2).holds is False

    def test_non_cycle_rejected(self):
        cx = rp2()
        pres = fundamental_presentation(cx)
        from pdpair.localsystem import trivial_system
        with pytest.raises(ValueError):
            check_condition(cx, trivial_system(pres), {0: 1}, 1, n=1)


class TestThomClasses:
    def test_disks_have_thom_class_at_top(self):
        for k in (1, 2, 3):
            _, u, verdict = find_thom_class(disk_pair(k), k)
            assert verdict.holds is True, k
            assert u

    def test_disk2_no_thom_class_off_top(self):
        pair = disk_pair(2)
        for j in (0, 1):
            _, _, verdict = find_thom_class(pair, j)
            assert verdict.holds is False, j

    def test_thom_class_unique_up_to_sign(self):
        pair = disk_pair(2)
        sysm, u, _ = find_thom_class(pair, 2)
        eo2 = compile_edge_system(sysm, pair.total)
        neg = {k: -v for k, v in u.items()}
        dbl = {k: 2 * v for k, v in u.items()}
        assert verify_thom_class(pair, eo2, neg, 2).holds is True
        assert verify_thom_class(pair, eo2, dbl, 2).holds is False

    def test_degree_zero_iff_empty_sub(self):
        closed = SimplicialPair(rp2())
        _, _, v0 = find_thom_class(closed, 0)
        assert v0.holds is True
        for k in (1, 2):
            _, _, v = find_thom_class(closed, k)
            assert v.holds is False, k
        _, _, vd = find_thom_class(disk_pair(2), 0)
        assert vd.holds is False

    def test_counterexample_cone_has_thom_class(self):
        pair, _, _ = theorem_a_pair(1)
        _, _, verdict = find_thom_class(pair, 1)
        assert verdict.holds is True
        assert not verdict.integer_only


class TestThomDualityTranslation:
    """Capping the relative fundamental class with a Thom class gives
    a degree-zero duality class; capping with a non-class gives a
    chain failing degree-zero duality."""

    def cap_with(self, pair, sysm, u, k):
        eo2 = compile_edge_system(sysm, pair.total)
        classes, status = find_fundamental_classes(pair, eo2, k)
        assert status == "unique"
        tw_u = twisted_cochain_complex(pair, eo2, relative=True)
        eb = trivial_edges(pair.total)
        src = twisted_complex(pair, eb, relative=True)
        tgt = twisted_complex(pair.total, eb.tensor(eo2))
        f = cap_cocycle_chain_map(tw_u, k, u, src, tgt)
        return f.mat(0).mul_vec(classes[0])

    def test_positive_direction(self):
        for k in (2, 3):
            pair = disk_pair(k)
            sysm, u, verdict = find_thom_class(pair, k)
            assert verdict.holds
            xi = self.cap_with(pair, sysm, u, k)
            assert check_condition(pair.total, sysm, xi, 1, n=0).holds

    def test_negative_direction_coboundary(self):
        pair = cone(circle(4))
        sysm, u, verdict = find_thom_class(pair, 2)
        assert verdict.holds
        eo2 = compile_edge_system(sysm, pair.total)
        tw_u = twisted_cochain_complex(pair, eo2, relative=True)
        du = tw_u.boundary_of(1, {0: 1})
        assert du
        assert verify_thom_class(pair, eo2, du, 2).holds is False
        xi = self.cap_with(pair, sysm, du, 2)
        assert check_condition(pair.total, sysm, xi, 1, n=0).holds is False

    def test_negative_direction_doubled_class(self):
        pair = disk_pair(2)
        sysm, u, _ = find_thom_class(pair, 2)
        eo2 = compile_edge_system(sysm, pair.total)
        dbl = {k: 2 * v for k, v in u.items()}
        assert verify_thom_class(pair, eo2, dbl, 2).holds is False
        xi = self.cap_with(pair, sysm, dbl, 2)
        assert check_condition(pair.total, sysm, xi, 1, n=0).holds is False
