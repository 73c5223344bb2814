import math

import pytest

from pdpair.chaincomplex import HomologyGroup
from pdpair.intmatrix import smith_normal_form
from pdpair.simplicial import (
    SimplicialComplex, SimplicialMap, SimplicialPair, SimplicialTriad,
    barycentric_subdivision, boundary_sphere, boundary_subcomplex,
    cone, connected_components, double, double_swap_map, full_subcomplex,
    glue, glue_needs_subdivision, product, product_pair, puncture,
    simplex_complex, subdivide_pair,
)

MOBIUS_FACETS = [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)]


def mobius():
    return SimplicialComplex(5, MOBIUS_FACETS)


class TestComplexBasics:
    def test_face_closure(self):
        cx = SimplicialComplex(3, [[0, 1, 2]])
        assert cx.f_vector() == (3, 3, 1)
        assert (0, 1) in cx and (2,) in cx

    def test_validate_full_simplex(self):
        assert simplex_complex(3).validate() == []

    def test_validate_detects_missing_face(self):
        cx = SimplicialComplex(3, [[0, 1], [1, 2]])
        del cx.by_dim[0]
        cx._index.pop(0)
        problems = cx.validate()
        assert any("absent" in p for p in problems)

    def test_boundary_sphere_counts(self):
        assert boundary_sphere(1).f_vector() == (2,)
        assert boundary_sphere(2).f_vector() == (3, 3)
        cx = boundary_sphere(3)
        assert cx.size() == 14
        assert cx.f_vector() == (4, 6, 4)

    def test_sphere_homology(self):
        h = boundary_sphere(4).homology()
        assert h[0] == HomologyGroup(1)
        assert h[1] == HomologyGroup(0)
        assert h[2] == HomologyGroup(0)
        assert h[3] == HomologyGroup(1)

    def test_vertex_outside_universe_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex(2, [[0, 2]])

    def test_repeated_vertex_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex(3, [[0, 0, 1]])

    def test_facets_mixed_dimensions(self):
        cx = SimplicialComplex(4, [[0, 1, 2], [3]])
        assert cx.facets() == [(3,), (0, 1, 2)]
        assert not cx.is_pure()

    def test_json_roundtrip(self):
        cx = mobius()
        again = SimplicialComplex.from_json(cx.to_json())
        assert again == cx
        assert again.canonical_form() == cx.canonical_form()


class TestBoundaryMatrix:
    def test_edge_column(self):
        cx = SimplicialComplex(2, [[0, 1]])
        assert cx.boundary_matrix(1).to_dense() == [[-1], [1]]

    def test_degree_zero(self):
        cx = simplex_complex(2)
        d0 = cx.boundary_matrix(0)
        assert d0.rows == 0 and d0.cols == 3

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            simplex_complex(1).boundary_matrix(2)

    def test_dd_zero(self):
        for cx in (simplex_complex(3), boundary_sphere(4), mobius()):
            for p in range(2, cx.dim + 1):
                prod = cx.boundary_matrix(p - 1).mul(cx.boundary_matrix(p))
                assert prod.is_zero()

    def test_sphere_rank(self):
        d2 = boundary_sphere(3).boundary_matrix(2)
        assert d2.rows == 6 and d2.cols == 4
        assert smith_normal_form(d2, transforms=False).rank == 3


class TestCone:
    def test_point(self):
        pair = cone(SimplicialComplex(1, [[0]]))
        assert pair.total.f_vector() == (2, 1)
        assert pair.sub.f_vector() == (1,)

    def test_contractible(self):
        pair = cone(boundary_sphere(3))
        c = pair.total.chain_complex()
        assert c.is_acyclic(reduced_degree=0)

    def test_simplex_count(self):
        base = mobius()
        pair = cone(base)
        assert pair.total.size() == 2 * base.size() + 1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            cone(SimplicialComplex(0))


class TestProduct:
    def test_square(self):
        sq = product(simplex_complex(1), simplex_complex(1))
        assert sq.f_vector() == (4, 5, 2)

    def test_identity_with_point(self):
        x = mobius()
        assert product(x, SimplicialComplex(1, [[0]])) == x

    def test_torus_homology(self):
        t = product(boundary_sphere(2), boundary_sphere(2))
        h = t.homology()
        assert h[0] == HomologyGroup(1)
        assert h[1] == HomologyGroup(2)
        assert h[2] == HomologyGroup(1)

    def test_top_count(self):
        a, b = boundary_sphere(3), simplex_complex(2)
        prod = product(a, b)
        q, r = a.dim, b.dim
        expect = len(a.facets()) * len(b.facets()) * math.comb(q + r, q)
        assert prod.rank(q + r) == expect

    def test_pair_with_trivial_factor(self):
        seg = SimplicialPair(simplex_complex(1),
                             boundary_sphere(1))
        pt = SimplicialPair(SimplicialComplex(1, [[0]]))
        out = product_pair(seg, pt)
        assert out.total == seg.total
        assert out.sub == seg.sub

    def test_pair_empty_subs(self):
        x = SimplicialPair(boundary_sphere(2))
        out = product_pair(x, x)
        assert not out.sub.by_dim

    def test_square_rel_boundary(self):
        seg = SimplicialPair(simplex_complex(1), boundary_sphere(1))
        sq = product_pair(seg, seg)
        h = sq.homology()
        assert h[2] == HomologyGroup(1)
        assert h[1] == HomologyGroup(0)
        assert h[0] == HomologyGroup(0)


class TestGlue:
    def test_two_segments_make_circle(self):
        seg = simplex_complex(1)
        ends = SimplicialComplex(2, [[0], [1]])
        pair = SimplicialPair(seg, ends)
        glued, inc1, inc2 = glue(pair, pair)
        assert glued.f_vector() == (4, 4)
        h = glued.homology()
        assert h[0] == HomologyGroup(1) and h[1] == HomologyGroup(1)

    def test_two_solid_tetrahedra_make_s3(self):
        pair = SimplicialPair(simplex_complex(3), boundary_sphere(3))
        glued, _, _ = glue(pair, pair)
        h = glued.homology()
        assert h[0] == HomologyGroup(1)
        assert h[1] == HomologyGroup(0)
        assert h[2] == HomologyGroup(0)
        assert h[3] == HomologyGroup(1)

    def test_no_subdivision_when_unneeded(self):
        tri = simplex_complex(2)
        edge = SimplicialComplex(3, [[0, 1]])
        pair = SimplicialPair(tri, edge)
        assert not glue_needs_subdivision(pair)
        glued, inc1, inc2 = glue(pair, pair)
        assert glued.f_vector() == (4, 5, 2)

    def test_mismatched_subs_rejected(self):
        p1 = SimplicialPair(simplex_complex(1),
                            SimplicialComplex(2, [[0]]))
        p2 = SimplicialPair(simplex_complex(1),
                            SimplicialComplex(2, [[0], [1]]))
        with pytest.raises(ValueError):
            glue(p1, p2)

    def test_explicit_identification(self):
        tri = simplex_complex(2)
        e1 = SimplicialComplex(3, [[0, 1]])
        e2 = SimplicialComplex(3, [[1, 2]])
        m = SimplicialMap(e1, e2, {0: 1, 1: 2})
        glued, _, _ = glue(SimplicialPair(tri, e1),
                           SimplicialPair(tri, e2), along=m)
        assert glued.f_vector() == (4, 5, 2)

    def test_inclusions_are_simplicial(self):
        seg = simplex_complex(1)
        ends = SimplicialComplex(2, [[0], [1]])
        pair = SimplicialPair(seg, ends)
        glued, inc1, inc2 = glue(pair, pair)
        # inputs were subdivided, so inclusion domains are subdivided
        assert inc1.domain.f_vector() == (3, 2)
        inc1.validate()
        inc2.validate()


class TestDouble:
    def test_segment_doubles_to_circle(self):
        pair = SimplicialPair(simplex_complex(1), boundary_sphere(1))
        out = double(pair)
        assert out.total.f_vector() == (4, 4)
        assert not out.sub.by_dim

    def test_triangle_along_edge_is_disk(self):
        pair = SimplicialPair(simplex_complex(2),
                              SimplicialComplex(3, [[0, 1]]))
        out = double(pair)
        assert out.total.chain_complex().is_acyclic(reduced_degree=0)
        assert out.total.f_vector() == (4, 5, 2)

    def test_mobius_doubles_to_klein_bottle(self):
        band = mobius()
        pair = SimplicialPair(band, boundary_subcomplex(band))
        out = double(pair)
        h = out.total.homology()
        assert h[0] == HomologyGroup(1)
        assert h[1] == HomologyGroup(1, (2,))
        assert h[2] == HomologyGroup(0)

    def test_swap_involution(self):
        pair = SimplicialPair(simplex_complex(2),
                              SimplicialComplex(3, [[0, 1]]))
        out, inc1, inc2 = double(pair, with_maps=True)
        swap = double_swap_map(out, inc1, inc2)
        assert swap.is_isomorphism()
        twice = swap.compose(swap)
        assert all(twice.vertex_images[v] == v
                   for v in out.total.vertices())
        # fixes the gluing locus
        for v in pair.sub.vertices():
            w = inc1.vertex_images[v]
            assert swap.vertex_images[w] == w

    def test_empty_sub_rejected(self):
        with pytest.raises(ValueError):
            double(SimplicialPair(simplex_complex(1)))

    def test_triad_double(self):
        # square disk: triangles on a square, sub1/sub2 = two half
        # boundaries meeting in two points
        total = SimplicialComplex(4, [[0, 1, 2], [1, 2, 3]])
        sub1 = SimplicialComplex(4, [[0, 1], [1, 3]])
        sub2 = SimplicialComplex(4, [[0, 2], [2, 3]])
        triad = SimplicialTriad(total, sub1, sub2)
        out = double(triad)
        # doubling a disk along half its boundary is again a disk
        assert out.total.chain_complex().is_acyclic(reduced_degree=0)
        # the new sub is the double of sub1 along its endpoints: a circle
        h = out.sub.chain_complex()
        assert h.homology(0) == HomologyGroup(1)
        assert h.homology(1) == HomologyGroup(1)


class TestPuncture:
    def test_sphere_becomes_disk(self):
        out = puncture(boundary_sphere(3))
        assert out.total.chain_complex().is_acyclic(reduced_degree=0)
        assert out.sub.f_vector() == (3, 3)

    def test_full_simplex(self):
        out = puncture(simplex_complex(3))
        assert out.total == boundary_sphere(4 - 1)
        assert out.sub == boundary_sphere(3)

    def test_non_pure_rejected(self):
        with pytest.raises(ValueError):
            puncture(SimplicialComplex(4, [[0, 1, 2], [3]]))

    def test_reassembly(self):
        m = boundary_sphere(3)
        out = puncture(m, facet_index=2)
        gone = m.facets()[2]
        rebuilt = SimplicialComplex(
            m.vertex_count, [list(f) for f in out.total.facets()]
            + [list(gone)])
        assert rebuilt.canonical_form() == m.canonical_form()

    def test_relative_homology(self):
        out = puncture(boundary_sphere(3))
        h = out.homology()
        assert h[2] == HomologyGroup(1)
        assert h[1] == HomologyGroup(0)


class TestSubdivisionAndComponents:
    def test_sd_counts(self):
        sd, _ = barycentric_subdivision(simplex_complex(2))
        assert sd.f_vector() == (7, 12, 6)

    def test_sd_homology_preserved(self):
        sd, _ = barycentric_subdivision(boundary_sphere(3))
        h = sd.homology()
        assert h[0] == HomologyGroup(1)
        assert h[2] == HomologyGroup(1)

    def test_subdivide_pair(self):
        pair = SimplicialPair(simplex_complex(1), boundary_sphere(1))
        out, toint = subdivide_pair(pair)
        assert out.total.f_vector() == (3, 2)
        assert out.sub.f_vector() == (2,)
        assert toint[(0, 1)] == 2

    def test_components(self):
        cx = SimplicialComplex(5, [[0, 1], [2, 3], [4]])
        assert connected_components(cx) == [[0, 1], [2, 3], [4]]

    def test_full_subcomplex(self):
        cx = simplex_complex(2)
        sub = full_subcomplex(cx, [0, 1])
        assert sub.f_vector() == (2, 1)

    def test_mobius_boundary_is_circle(self):
        b = boundary_subcomplex(mobius())
        assert b.f_vector() == (5, 5)
        h = b.homology()
        assert h[0] == HomologyGroup(1) and h[1] == HomologyGroup(1)

    def test_mobius_homology(self):
        h = mobius().homology()
        assert h[0] == HomologyGroup(1)
        assert h[1] == HomologyGroup(1)
        assert h[2] == HomologyGroup(0)


class TestSimplicialMap:
    def test_chain_map_commutes(self):
        cx = simplex_complex(2)
        m = SimplicialMap(cx, cx, {0: 1, 1: 2, 2: 0})
        f = m.chain_map()  # validation checks commutation
        assert f.mat(2).to_dense() == [[1]]

    def test_orientation_sign(self):
        cx = simplex_complex(1)
        m = SimplicialMap(cx, cx, {0: 1, 1: 0})
        assert m.image_simplex((0, 1)) == (-1, (0, 1))

    def test_collapse_to_zero(self):
        seg = simplex_complex(1)
        pt = SimplicialComplex(1, [[0]])
        m = SimplicialMap(seg, pt, {0: 0, 1: 0})
        f = m.chain_map()
        assert f.mat(1).is_zero()

    def test_non_simplicial_rejected(self):
        seg = simplex_complex(1)
        two = SimplicialComplex(2, [[0], [1]])
        with pytest.raises(ValueError):
            SimplicialMap(seg, two, {0: 0, 1: 1})

    def test_triad_union_intersection(self):
        total = SimplicialComplex(4, [[0, 1, 2], [1, 2, 3]])
        t = SimplicialTriad(total,
                            SimplicialComplex(4, [[0, 1], [1, 3]]),
                            SimplicialComplex(4, [[0, 2], [2, 3], [1, 3]]))
        u = t.union_sub()
        assert u.rank(1) == 4
        i = t.intersection_sub()
        assert i.f_vector() == (3, 1)


class TestRelativePair:
    def test_relative_complex_ranks(self):
        pair = SimplicialPair(simplex_complex(2),
                              SimplicialComplex(3, [[0, 1]]))
        rel = pair.chain_complex(relative=True)
        assert rel.rank(0) == 1
        assert rel.rank(1) == 2
        assert rel.rank(2) == 1

    def test_pair_json_roundtrip(self):
        band = mobius()
        pair = SimplicialPair(band, boundary_subcomplex(band))
        again = SimplicialPair.from_json(pair.to_json())
        assert again.total == pair.total
        assert again.sub == pair.sub

    def test_sub_not_in_total_rejected(self):
        with pytest.raises(ValueError):
            SimplicialPair(boundary_sphere(2),
                           SimplicialComplex(3, [[0, 1, 2]]))
