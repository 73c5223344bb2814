"""Canned complexes: circles, surfaces, projective spaces, the Poincare
homology 3-sphere, and the small pairs used by the verification scenarios."""

import json
import os

from .chaincomplex import HomologyGroup
from .simplicial import (SimplicialComplex, SimplicialPair,
                         barycentric_subdivision, boundary_subcomplex,
                         double, product)

_DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

RP2_FACETS = [(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
              (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5)]

MOBIUS_FACETS = [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)]


def circle(k=3):
    """Cyclic triangulation of the circle on k >= 3 vertices."""
    if k < 3:
        raise ValueError("a triangulated circle needs at least 3 vertices")
    return SimplicialComplex(k, [(i, (i + 1) % k) for i in range(k)])


def interval_pair():
    """The 1-simplex relative to its two endpoints."""
    total = SimplicialComplex(2, [(0, 1)])
    return SimplicialPair(total, SimplicialComplex(2, [(0,), (1,)]))


def rp2():
    """Six-vertex projective plane."""
    return SimplicialComplex(6, RP2_FACETS)


def mobius_band():
    """Five-vertex Mobius band relative to its boundary circle."""
    total = SimplicialComplex(5, MOBIUS_FACETS)
    return SimplicialPair(total, boundary_subcomplex(total))


def klein_bottle():
    """Klein bottle, realized as the double of the Mobius band."""
    return double(mobius_band()).total


def torus():
    """Product of two triangle circles, 18 triangles."""
    return product(circle(3), circle(3))


def wedge_circle_interval():
    """A circle with a whisker edge, relative to the whisker's free end."""
    total = SimplicialComplex(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    return SimplicialPair(total, SimplicialComplex(4, [(3,)]))


_rp3 = None


def rp3():
    """Projective 3-space: antipodal quotient of the subdivided boundary
    of the 4-dimensional cross polytope.

    Vertices i and i+4 of the cross polytope are antipodal; the quotient
    of the barycentric subdivision is simplicial because no chain of
    faces can contain a face together with its antipode.
    """
    global _rp3
    if _rp3 is not None:
        return _rp3
    facets = [(c0, c1, c2, c3) for c0 in (0, 4) for c1 in (1, 5)
              for c2 in (2, 6) for c3 in (3, 7)]
    cross = SimplicialComplex(8, facets)
    sd, toint = barycentric_subdivision(cross)
    back = {i: s for s, i in toint.items()}

    def antipode(i):
        return toint[tuple(sorted((v + 4) % 8 for v in back[i]))]

    reps = [i for i in range(sd.vertex_count) if i <= antipode(i)]
    orbit = {}
    for k, i in enumerate(reps):
        orbit[i] = k
        orbit[antipode(i)] = k
    quot = sorted({tuple(sorted(orbit[v] for v in f)) for f in sd.facets()})
    out = SimplicialComplex(len(reps), quot)
    assert out.f_vector() == (40, 232, 384, 192)
    assert out.homology() == {0: HomologyGroup(1), 1: HomologyGroup(0, (2,)),
                              2: HomologyGroup(0), 3: HomologyGroup(1)}
    _rp3 = out
    return out


_poincare = None


def poincare_sphere():
    """A 16-vertex triangulation of the Poincare homology 3-sphere,
    loaded from a shipped facet list and checked on first use."""
    global _poincare
    if _poincare is not None:
        return _poincare
    with open(os.path.join(_DATA_DIR, "poincare_sphere_facets.json")) as fh:
        obj = json.load(fh)
    out = SimplicialComplex.from_json(obj)
    out.validate()
    assert out.is_pure() and out.dim == 3
    assert out.f_vector() == (16, 106, 180, 90)
    assert out.homology() == {0: HomologyGroup(1), 1: HomologyGroup(0),
                              2: HomologyGroup(0), 3: HomologyGroup(1)}
    from .presentation import fundamental_presentation
    pres = fundamental_presentation(out)
    assert pres.abelianization() == HomologyGroup(0)
    _poincare = out
    return out
