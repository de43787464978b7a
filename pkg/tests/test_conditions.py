import pytest

from weaksys import (
    InputError,
    PreconditionError,
    check_locally_k_large,
    check_sd2_star,
    check_sd2_star_k,
    check_sd2_star_links,
    check_simple_descent,
    check_weak_descent,
    collapse_schedule,
    enumerate_wheels,
    is_weakly_bridged,
    is_weakly_systolic,
    project,
    replay_collapse,
    span,
)
from weaksys.conditions import all_simplices, render_certificate
from weaksys.corpus import (
    cycle_complex,
    flag_torus_complex,
    hexpatch_complex,
    hyp7patch_complex,
    icosahedron_complex,
    octahedron_complex,
    path_complex,
    simplex_complex,
    two_triangles_complex,
    wheel_complex,
)

import oracles


# -- project ---------------------------------------------------------------

def test_project_wheel_rim_to_hub():
    X = wheel_complex(5)
    p = project(X, 0, (1,))
    assert p.vertices == (0,) and p.is_simplex


def test_project_octahedron_antipode_not_simplex():
    X = octahedron_complex()
    p = project(X, 0, (3,))  # antipode of vertex 0
    assert p.nonempty and not p.is_simplex
    assert set(p.vertices) == set(X.neighbors(0)) & set(X.neighbors(3))


def test_project_hexpatch_distance_two():
    X = hexpatch_complex(3)
    for v in X.vertices:
        if X.dist(0, v) == 2:
            p = project(X, 0, (v,))
            assert p.is_simplex and 1 <= len(p.vertices) <= 2


def test_project_rejects_mixed_sphere():
    X = wheel_complex(5)
    with pytest.raises(InputError):
        project(X, 1, (0, 3))  # hub at distance 1, far rim at distance 2


# -- descent conditions ------------------------------------------------------

def test_sd_wheel_hub():
    X = wheel_complex(5)
    assert check_simple_descent(X, 0, 1).holds


def test_sd_octahedron_fails_with_antipode():
    X = octahedron_complex()
    v = check_simple_descent(X, 0, 1)
    assert not v.holds
    assert v.certificate.simplex == (3,)
    assert v.certificate.revalidate(X)


def test_sd_fails_on_small_cycles_at_every_vertex():
    for k in (4, 5):
        X = cycle_complex(k)
        for v in X.vertices:
            assert not check_simple_descent(X, v, 2).holds


def test_weak_descent_hexagon():
    X = cycle_complex(6)
    assert check_weak_descent(X, 0, 1).holds
    # the antipode has two non-adjacent inward neighbors at radius 2
    v = check_weak_descent(X, 0, 2)
    assert not v.holds and v.certificate.simplex == (3,)


def test_weak_descent_octahedron_fails_vertex_condition():
    X = octahedron_complex()
    v = check_weak_descent(X, 0, 1)
    assert not v.holds and v.certificate.kind == "not-simplex"


def test_weak_descent_single_simplex_vacuous():
    X = simplex_complex(3)
    assert check_weak_descent(X, 0, 5).holds


def test_weakly_systolic_verdicts():
    assert is_weakly_systolic(wheel_complex(5)).holds
    assert not is_weakly_systolic(octahedron_complex()).holds
    assert is_weakly_systolic(hexpatch_complex(2)).holds
    v = is_weakly_systolic(flag_torus_complex(7, 7))
    assert not v.holds and v.certificate.revalidate(flag_torus_complex(7, 7))


def test_weakly_systolic_threads_agree():
    X = flag_torus_complex(7, 7)
    a = is_weakly_systolic(X)
    b = is_weakly_systolic(X, threads=4)
    assert a.holds == b.holds
    assert a.certificate.simplex == b.certificate.simplex


def test_weakly_bridged():
    assert is_weakly_bridged(hexpatch_complex(2).skeleton).holds
    assert not is_weakly_bridged(cycle_complex(4).skeleton).holds
    assert is_weakly_bridged(simplex_complex(4).skeleton).holds  # diameter 1
    with pytest.raises(InputError):
        is_weakly_bridged(simplex_complex(8).skeleton, max_clique=5)


# -- wheels ------------------------------------------------------------------

def test_octahedron_has_six_4wheels():
    X = octahedron_complex()
    wheels = list(enumerate_wheels(X, 4))
    assert len(wheels) == 6
    assert all(w.revalidate(X) for w in wheels)
    hubs = sorted(w.hub for w in wheels)
    assert hubs == [0, 1, 2, 3, 4, 5]


def test_wheel5_is_its_own_wheel():
    X = wheel_complex(5)
    wheels = list(enumerate_wheels(X, 5))
    assert len(wheels) == 1 and wheels[0].hub == 0


def test_hexpatch_has_no_4wheels():
    X = hexpatch_complex(2)
    assert list(enumerate_wheels(X, 4)) == []


def test_pendant_wheels_in_icosahedron():
    X = icosahedron_complex()
    pend = list(enumerate_wheels(X, 5, with_pendant=True))
    assert pend and all(p.revalidate(X) for p in pend)


# -- wheel conditions ----------------------------------------------------------

def test_sd2_star_on_small_cycles():
    assert check_sd2_star(cycle_complex(4)).holds
    assert check_sd2_star(cycle_complex(5)).holds


def test_sd2_star_octahedron_certificate():
    X = octahedron_complex()
    v = check_sd2_star(X)
    assert not v.holds and v.certificate.k == 4
    assert v.certificate.revalidate(X)
    assert "4-wheel" in render_certificate(v.certificate, X)


def test_sd2_star_icosahedron_fails_domination():
    X = icosahedron_complex()
    v = check_sd2_star(X)
    assert not v.holds
    assert v.certificate.revalidate(X)


def test_sd2_star_k_on_torus():
    # locally 6-large gives the order-6 wheel condition, but the flat
    # torus has undominated 6-wheels with pendants (the hexagon around a
    # vertex plus an apex over a rim edge), so order 7 must fail
    X = flag_torus_complex(7, 7)
    assert check_sd2_star_k(X, 6).holds
    v = check_sd2_star_k(X, 7)
    assert not v.holds
    assert v.certificate.wheel.k == 6
    assert v.certificate.revalidate(X)


def test_sd2_star_k_hexpatch_fails_7():
    X = hexpatch_complex(2)
    assert check_sd2_star(X).holds
    v = check_sd2_star_k(X, 7)
    assert not v.holds and v.certificate.wheel.k == 6


def test_locally_k_large():
    X = flag_torus_complex(7, 7)
    assert check_locally_k_large(X, 6).holds
    assert not check_locally_k_large(X, 7).holds
    oct_ = octahedron_complex()
    assert check_locally_k_large(oct_, 4).holds
    v = check_locally_k_large(oct_, 5)
    assert not v.holds
    w5 = wheel_complex(5)
    assert check_locally_k_large(w5, 5).holds
    assert not check_locally_k_large(w5, 6).holds


def test_locally_k_large_matches_all_simplex_links():
    # vertex links suffice: re-derive by scanning links of every simplex
    from weaksys import link
    from weaksys.core import FlagComplex

    for X in (octahedron_complex(), wheel_complex(6), two_triangles_complex()):
        for k in (5, 6, 7):
            direct = check_locally_k_large(X, k).holds
            over_all_simplices = True
            for s in oracles.cliques_brute(X):
                g, _ = link(X, s).induced_graph()
                short = [c for c in oracles.induced_cycles_brute(FlagComplex(g))
                         if len(c) < k]
                if short:
                    over_all_simplices = False
            assert direct == over_all_simplices


def test_sd2_star_links():
    X = flag_torus_complex(7, 7)
    assert check_sd2_star_links(X, 6).holds
    assert not check_sd2_star_links(octahedron_complex(), 6).holds


def test_sd2_star_links_full_witness():
    # a full 5-wheel with pendant (apex sees only its rim edge) must fail
    X = wheel_complex(5)
    from weaksys.core import Graph, FlagComplex
    edges = list(X.skeleton.edges()) + [(1, 6), (2, 6)]
    Y = FlagComplex(Graph(7, edges))
    v = check_sd2_star_links(Y, 6)
    assert not v.holds
    assert v.certificate.pendant == 6
    assert v.certificate.is_full(Y)
    # but the plain wheel condition also fails here (no dominating vertex)
    assert not check_sd2_star(Y).holds


# -- degenerate inputs ---------------------------------------------------------

def test_tiny_complexes_pass_vacuously():
    X = path_complex(2)
    for verdict in (check_sd2_star(X), check_sd2_star_links(X, 6),
                    is_weakly_systolic(X)):
        assert verdict.holds and verdict.stats.get("vacuous")


# -- collapse schedules ---------------------------------------------------------

def test_collapse_schedule_wheel():
    X = wheel_complex(5)
    sched = collapse_schedule(X, 0)
    assert all(step.radius == 0 for step in sched.steps)
    dims = [step.dim for step in sched.steps]
    assert dims == sorted(dims, reverse=True)
    assert replay_collapse(X, sched)


def test_collapse_schedule_edge():
    X = path_complex(2)
    sched = collapse_schedule(X, 0)
    assert len(sched.steps) == 1
    assert replay_collapse(X, sched)


def test_collapse_schedule_hexpatch_step_count():
    X = hexpatch_complex(2)
    sched = collapse_schedule(X, 0)
    # one step per simplex of the two spheres around the center
    outside = [s for s in all_simplices(X)
               if all(X.dist(0, v) >= 1 for v in s)
               and len({X.dist(0, v) for v in s}) == 1]
    assert len(sched.steps) == len(outside)
    assert replay_collapse(X, sched)


def test_collapse_schedule_needs_descent():
    with pytest.raises(PreconditionError):
        collapse_schedule(octahedron_complex(), 0)


def test_collapse_schedule_hyp7patch():
    X = hyp7patch_complex(2)
    assert replay_collapse(X, collapse_schedule(X, 0))
