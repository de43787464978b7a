import itertools

import pytest

from weaksys import (
    InputError,
    PreconditionError,
    check_strict_contraction,
    check_thin_bigons,
    export_boundary_system,
    find_flat_triangle,
    project,
)
from weaksys.hyperbolic import triangle_coords, triangle_dist
from weaksys.corpus import (
    flag_torus_complex,
    hexpatch_complex,
    hyp7patch_complex,
    klein_quartic_complex,
    path_complex,
    star_complex,
)

import oracles


# -- bigons ------------------------------------------------------------------

def test_trees_have_unique_geodesics():
    for X in (path_complex(7), star_complex(6)):
        v, worst = check_thin_bigons(X, X.diameter())
        assert v.holds and worst is None


def test_hexpatch_has_wide_bigons():
    X = hexpatch_complex(4)
    v, worst = check_thin_bigons(X, 4)
    assert not v.holds
    assert worst.max_width >= 2
    assert worst.revalidate(X)


def test_hexpatch_thin_below_four():
    X = hexpatch_complex(4)
    v, _ = check_thin_bigons(X, 3)
    assert v.holds


def test_hyp7patch_bigons_thin_at_diameter():
    X = hyp7patch_complex(2)
    v, worst = check_thin_bigons(X, X.diameter())
    assert v.holds
    assert worst is not None and worst.max_width <= 1


def test_klein_surface_has_wide_bigons():
    # the locally 7-large surface quotient is not simply connected, and
    # its short systoles produce width-2 bigons already at distance 3
    X = klein_quartic_complex()
    v, worst = check_thin_bigons(X, X.diameter())
    assert not v.holds and worst.max_width == 2


# -- strict contraction ---------------------------------------------------------

def test_contraction_holds_on_order7_patch():
    X = hyp7patch_complex(3)
    for v in (0, 1):
        assert check_strict_contraction(X, v).holds


def test_contraction_fails_on_flat_patch():
    X = hexpatch_complex(3)
    v = check_strict_contraction(X, 0)
    assert not v.holds
    w1, w2, n = v.certificate
    assert n >= 3
    assert X.dist(0, w1) == X.dist(0, w2) == n and X.has_edge(w1, w2)


def test_contraction_trivial_at_radius_two():
    X = hexpatch_complex(2)
    dist = X.dist_from(0)
    from weaksys.hyperbolic import _project_set
    for w in X.vertices:
        if dist[w] == 2:
            p2 = _project_set(X, _project_set(X, (w,), dist, 1), dist, 0)
            assert p2 == (0,)


# -- flat triangles ---------------------------------------------------------------

def test_triangle_metric_table():
    coords = triangle_coords(3)
    assert len(coords) == 10
    assert triangle_dist((0, 0), (3, 0)) == 3
    assert triangle_dist((0, 0), (0, 3)) == 3
    assert triangle_dist((3, 0), (0, 3)) == 3
    assert triangle_dist((1, 1), (0, 0)) == 2


def test_hexpatch_contains_flats():
    X = hexpatch_complex(6)
    for side in (2, 3):
        tri = find_flat_triangle(X, side)
        assert tri is not None and tri.revalidate(X)


def test_side_one_is_any_triangle():
    X = hexpatch_complex(1)
    tri = find_flat_triangle(X, 1)
    assert tri is not None and tri.revalidate(X)


def test_order7_patch_has_no_side3_flat():
    X = hyp7patch_complex(3)
    assert find_flat_triangle(X, 3) is None


def test_order7_patch_does_contain_side2_flat():
    # the side-2 triangle has no interior vertex, so order-7 links do not
    # obstruct it: a fan of three triangles plus the opposite apex of the
    # middle edge embeds isometrically
    X = hyp7patch_complex(2)
    tri = find_flat_triangle(X, 2)
    assert tri is not None and tri.revalidate(X)


def test_flat_triangle_found_implies_interior_six_cycle_obstruction():
    # a side-3 embedding would force an induced 6-cycle in the link of the
    # image of its interior vertex; verify the obstruction logic on the
    # flat patch where the embedding exists
    X = hexpatch_complex(4)
    tri = find_flat_triangle(X, 3)
    center = tri.vertex(1, 1)
    ring = [tri.vertex(*c)
            for c in [(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]]
    for a, bb in zip(ring, ring[1:] + ring[:1]):
        assert X.has_edge(a, bb)
    for v in ring:
        assert X.has_edge(center, v)


# -- boundary system ----------------------------------------------------------

def test_boundary_system_on_order7_patch():
    X = hyp7patch_complex(4)
    system = export_boundary_system(X, 0, 2)
    assert [lvl.radius for lvl in system.levels] == [2, 4]
    # spheres in the patch are induced cycles: simplices are vertices+edges
    assert system.levels[0].size == 21 + 21
    mapping = system.maps[0]
    dist = X.dist_from(0)
    for s, img in mapping.items():
        assert all(dist[v] == 4 for v in s)
        assert all(dist[v] == 2 for v in img)
        assert X.skeleton.is_clique(img)


def test_boundary_system_functoriality():
    X = hyp7patch_complex(6)
    system = export_boundary_system(X, 0, 3)
    dist = X.dist_from(0)
    from weaksys.hyperbolic import _double_projection
    m32, m21 = system.maps[1], system.maps[0]
    for s in system.levels[2].simplices:
        composed = m21[m32[s]]
        _, once = _double_projection(X, s, dist, 6)
        _, direct = _double_projection(X, once, dist, 4)
        assert composed == direct


def test_boundary_cone_is_trivial():
    # spheres beyond radius 1 around a cone apex are empty, so every level
    # is empty and every map is trivially simplicial
    X = star_complex(5)
    system = export_boundary_system(X, 0, 2, check_precondition=False)
    assert all(lvl.size == 0 for lvl in system.levels)
    assert all(not m for m in system.maps)


def test_boundary_precondition_on_flat_patch():
    X = hexpatch_complex(4)
    with pytest.raises(PreconditionError):
        export_boundary_system(X, 0, 2)


def test_boundary_image_guard_on_torus():
    # without the wheel-condition precheck, the torus (not simply
    # connected) produces a non-simplex projection image at wrap radius
    X = flag_torus_complex(7, 7)
    with pytest.raises(PreconditionError):
        export_boundary_system(X, 0, 2, check_precondition=False)
