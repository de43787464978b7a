"""Local and descent conditions on flag complexes.

This module decides the combinatorial curvature conditions: simple descent
on balls around a base (and its weaker edge/vertex variant), weak
systolicity, weak bridgedness of graphs, wheel conditions (no 4-wheels,
dominated wheels with pendant triangles), local largeness of links, and
the link-flavored wheel condition equivalent to all full subcomplexes
being well behaved.  It also emits collapse schedules that witness
contractibility by replayable elementary retractions.

All checkers return a ``Verdict`` whose certificate, if present,
re-validates against the input complex.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field

from .core import (
    FlagComplex,
    Graph,
    Simplex,
    bits_list,
    cliques_in_mask,
    induced_cycles,
    iter_bits,
    mask_of,
    normalize_vertex_set,
)
from .errors import Budget, InputError, PreconditionError, ensure_budget

# ---------------------------------------------------------------------------
# verdicts and certificates
# ---------------------------------------------------------------------------


@dataclass
class Verdict:
    """Outcome of a named condition check.

    ``holds`` is meaningful only when ``inconclusive`` is False.  A failing
    verdict always carries a certificate that re-validates against the
    input complex.  ``stats`` holds cheap counters (wheels enumerated,
    radii checked, budget used) for reporting.
    """

    condition: str
    holds: bool
    certificate: object | None = None
    stats: dict = field(default_factory=dict)
    inconclusive: bool = False

    def __bool__(self) -> bool:
        return (not self.inconclusive) and self.holds

    def describe(self, X: FlagComplex | None = None) -> str:
        if self.inconclusive:
            return f"{self.condition}: inconclusive (budget)"
        tail = ""
        if self.certificate is not None and X is not None:
            tail = f" [{render_certificate(self.certificate, X)}]"
        return f"{self.condition}: {'holds' if self.holds else 'fails'}{tail}"


@dataclass(frozen=True)
class Wheel:
    """A hub joined to every vertex of an induced rim cycle."""

    hub: int
    rim: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.rim)

    def vertex_set(self) -> frozenset[int]:
        return frozenset((self.hub,) + self.rim)

    def revalidate(self, X: FlagComplex) -> bool:
        k = len(self.rim)
        if k < 4 or self.hub in self.rim or len(set(self.rim)) != k:
            return False
        for i, u in enumerate(self.rim):
            if not X.has_edge(self.hub, u):
                return False
            for j in range(i + 1, k):
                w = self.rim[j]
                consecutive = (j == i + 1) or (i == 0 and j == k - 1)
                if X.has_edge(u, w) != consecutive:
                    return False
        return True


@dataclass(frozen=True)
class WheelWithPendant:
    """A wheel plus a triangle on its first rim edge with an outside apex.

    The rim is rotated so that the pendant triangle sits on
    ``(rim[0], rim[1])``.
    """

    wheel: Wheel
    pendant: int

    def vertex_set(self) -> frozenset[int]:
        return self.wheel.vertex_set() | {self.pendant}

    def revalidate(self, X: FlagComplex) -> bool:
        if not self.wheel.revalidate(X):
            return False
        t = self.pendant
        if t in self.wheel.vertex_set():
            return False
        r = self.wheel.rim
        return X.has_edge(t, r[0]) and X.has_edge(t, r[1])

    def is_full(self, X: FlagComplex) -> bool:
        """True when the induced subcomplex on its vertices is exactly the
        wheel with one pendant triangle (the apex sees only the rim edge)."""
        if not self.revalidate(X):
            return False
        t = self.pendant
        if X.has_edge(t, self.wheel.hub):
            return False
        for u in self.wheel.rim[2:]:
            if X.has_edge(t, u):
                return False
        return True


@dataclass(frozen=True)
class FailedProjection:
    """Witness of a descent failure: a sphere simplex whose inward
    projection is empty or not a simplex."""

    base: tuple[int, ...]
    radius: int            # the simplex lives on the sphere of this radius
    simplex: Simplex
    projection: tuple[int, ...]
    kind: str              # "empty" | "not-simplex"

    def revalidate(self, X: FlagComplex) -> bool:
        dist = X.dist_to_set(self.base)
        if any(dist[v] != self.radius for v in self.simplex):
            return False
        if not X.is_simplex(self.simplex):
            return False
        proj = project(X, self.base, self.simplex)
        if tuple(proj.vertices) != tuple(self.projection):
            return False
        if self.kind == "empty":
            return not proj.nonempty
        return proj.nonempty and not proj.is_simplex


@dataclass(frozen=True)
class Projection:
    """Result of projecting a sphere simplex one ball inward."""

    vertices: tuple[int, ...]
    inner_radius: int
    is_simplex: bool

    @property
    def nonempty(self) -> bool:
        return bool(self.vertices)


def render_certificate(cert, X: FlagComplex) -> str:
    lab = X.label
    if hasattr(cert, "render") and callable(cert.render):
        return cert.render(X)
    if isinstance(cert, Wheel):
        return (f"{cert.k}-wheel hub={lab(cert.hub)} "
                f"rim={','.join(lab(v) for v in cert.rim)}")
    if isinstance(cert, WheelWithPendant):
        w = cert.wheel
        return (f"{w.k}-wheel-with-pendant hub={lab(w.hub)} "
                f"rim={','.join(lab(v) for v in w.rim)} apex={lab(cert.pendant)}")
    if isinstance(cert, FailedProjection):
        return (f"simplex {','.join(lab(v) for v in cert.simplex)} on sphere "
                f"{cert.radius} projects to "
                f"{{{','.join(lab(v) for v in cert.projection)}}} ({cert.kind})")
    if isinstance(cert, tuple) and cert and all(isinstance(v, int) for v in cert):
        return ",".join(lab(v) for v in cert)
    if isinstance(cert, tuple) and cert and all(
            isinstance(t, tuple) and all(isinstance(v, int) for v in t)
            for t in cert):
        return "; ".join(",".join(lab(v) for v in t) for t in cert)
    return repr(cert)


# ---------------------------------------------------------------------------
# projections and descent conditions
# ---------------------------------------------------------------------------


def project(X: FlagComplex, A, s) -> Projection:
    """Intersect the link of a sphere simplex with the next ball inward.

    ``s`` must lie on a single sphere around ``A``; the result records the
    vertex set, whether it is nonempty, and whether it spans a simplex.
    An empty or non-simplex projection is exactly a descent failure
    witness for the radius in question.
    """
    base = sorted(normalize_vertex_set(X, A))
    simplex = X.as_simplex(s)
    dist = X.dist_to_set(base)
    radii = {dist[v] for v in simplex}
    if len(radii) != 1:
        raise InputError(
            f"simplex {X.label_set(simplex)} does not lie on a single sphere "
            f"around {X.label_set(base)} (distances {sorted(radii)})")
    r = radii.pop()
    if r < 1:
        raise InputError("simplex must be outside the base subcomplex")
    m = X.common_neighbors_mask(simplex)
    inner = [v for v in iter_bits(m) if 0 <= dist[v] <= r - 1]
    verts = tuple(inner)
    return Projection(verts, r - 1, is_simplex=bool(verts) and X.skeleton.is_clique(verts))


def _sphere_masks(X: FlagComplex, base, up_to: int) -> list[int]:
    dist = X.dist_to_set(base)
    masks = [0] * (up_to + 1)
    for v, d in enumerate(dist):
        if 0 <= d <= up_to:
            masks[d] |= 1 << v
    return masks


def check_simple_descent(X: FlagComplex, A, n: int,
                         budget: Budget | None = None) -> Verdict:
    """Simple descent on balls of radii up to ``n`` around ``A``.

    For every radius i in 1..n, every simplex on the sphere of radius i+1
    must have a nonempty simplex as its projection into the ball of
    radius i.  The first failing simplex is the certificate.
    """
    b = ensure_budget(budget)
    base = sorted(normalize_vertex_set(X, A))
    if not base:
        raise InputError("descent around the empty set")
    name = f"SD_{n}({','.join(X.label_set(base))})"
    dist = X.dist_to_set(base)
    masks = _sphere_masks(X, base, n + 1)
    stats = {"radii": 0, "simplices": 0}
    if X.n <= 2:
        stats["vacuous"] = True
    adj = X.skeleton.masks
    for i in range(1, n + 1):
        sphere_mask = masks[i + 1] if i + 1 < len(masks) else 0
        if not sphere_mask:
            continue
        stats["radii"] += 1
        for simp in cliques_in_mask(X, sphere_mask, b):
            stats["simplices"] += 1
            m = (1 << X.n) - 1
            for v in simp:
                m &= adj[v]
            proj = tuple(v for v in iter_bits(m) if 0 <= dist[v] <= i)
            if not proj or not X.skeleton.is_clique(proj):
                kind = "empty" if not proj else "not-simplex"
                cert = FailedProjection(tuple(base), i + 1, simp, proj, kind)
                stats["budget"] = b.used
                return Verdict(name, False, cert, stats)
    stats["budget"] = b.used
    return Verdict(name, True, None, stats)


def check_weak_descent(X: FlagComplex, A, n: int,
                       budget: Budget | None = None) -> Verdict:
    """Edge/vertex descent around ``A`` up to radius ``n``.

    For every radius i in 1..n: (E) every edge on the sphere of radius i+1
    has a common neighbor in the ball of radius i, and (V) the inward
    neighbors of every sphere vertex span a single simplex.
    """
    b = ensure_budget(budget)
    base = sorted(normalize_vertex_set(X, A))
    if not base:
        raise InputError("descent around the empty set")
    name = f"SDtilde_{n}({','.join(X.label_set(base))})"
    masks = _sphere_masks(X, base, n + 1)
    adj = X.skeleton.masks
    stats = {"radii": 0, "vertices": 0, "edges": 0}
    if X.n <= 2:
        stats["vacuous"] = True
    ball_masks = [0] * (n + 2)
    acc = 0
    for i, m in enumerate(masks):
        acc |= m
        ball_masks[i] = acc
    for i in range(1, n + 1):
        sphere_mask = masks[i + 1] if i + 1 < len(masks) else 0
        if not sphere_mask:
            continue
        stats["radii"] += 1
        ball = ball_masks[i]
        verts = bits_list(sphere_mask)
        for w in verts:
            b.tick()
            stats["vertices"] += 1
            down = adj[w] & ball
            if not down or not X.skeleton.is_clique_mask(down):
                cert = FailedProjection(tuple(base), i + 1, (w,),
                                        tuple(iter_bits(down)),
                                        "empty" if not down else "not-simplex")
                stats["budget"] = b.used
                return Verdict(name, False, cert, stats)
        for w in verts:
            for u in iter_bits(adj[w] & sphere_mask):
                if u <= w:
                    continue
                b.tick()
                stats["edges"] += 1
                down = adj[w] & adj[u] & ball
                if not down:
                    cert = FailedProjection(tuple(base), i + 1, (w, u), (), "empty")
                    stats["budget"] = b.used
                    return Verdict(name, False, cert, stats)
    stats["budget"] = b.used
    return Verdict(name, True, None, stats)


def is_weakly_systolic(X: FlagComplex, budget: Budget | None = None,
                       threads: int = 1) -> Verdict:
    """Edge/vertex descent around every vertex at every radius.

    Radii are truncated at the eccentricity of each base vertex, which is
    exact for finite complexes (larger spheres are empty).
    """
    if X.n and not X.connected():
        raise InputError("complex is not connected")
    b = ensure_budget(budget)
    stats = {"vertices": X.n}
    if X.n <= 2:
        stats["vacuous"] = True
        return Verdict("weakly-systolic", True, None, stats)

    if threads > 1:
        # per-vertex budgets keep the used-node count deterministic (a
        # shared counter would race); each worker gets the full limit and
        # the sum is charged to the caller's budget afterwards
        def one(v: int) -> Verdict:
            return check_weak_descent(X, v, X.ecc(v), Budget(b.limit - b.used))

        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, X.vertices))
        b.tick(sum(sub.stats.get("budget", 0) for sub in results))
        for v, sub in zip(X.vertices, results):
            if not sub.holds:
                stats["budget"] = b.used
                return Verdict("weakly-systolic", False, sub.certificate, stats)
    else:
        for v in X.vertices:
            sub = check_weak_descent(X, v, X.ecc(v), b)
            if not sub.holds:
                stats["budget"] = b.used
                return Verdict("weakly-systolic", False, sub.certificate, stats)
    stats["budget"] = b.used
    return Verdict("weakly-systolic", True, None, stats)


def max_clique_size(X: FlagComplex, budget: Budget | None = None) -> int:
    return X.dim(budget) + 1


def is_weakly_bridged(G: Graph, max_clique: int = 20,
                      budget: Budget | None = None) -> Verdict:
    """Decide whether the clique complex of a graph is weakly systolic."""
    X = FlagComplex(G)
    if G.n and not G.connected():
        raise InputError("graph is not connected")
    size = max_clique_size(X, budget)
    if size > max_clique:
        raise InputError(f"clique bound exceeded: found a {size}-clique "
                         f"(bound {max_clique})")
    v = is_weakly_systolic(X, budget)
    return Verdict("weakly-bridged", v.holds, v.certificate, v.stats)


# ---------------------------------------------------------------------------
# wheels
# ---------------------------------------------------------------------------


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic tuple to start at its minimum, smaller
    neighbor second."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    bwd = tuple(cycle[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def enumerate_wheels(X: FlagComplex, k: int, with_pendant: bool = False,
                     budget: Budget | None = None):
    """Yield every k-wheel (hub plus induced rim k-cycle in the hub's link).

    With ``with_pendant`` every wheel is extended by every triangle over
    every rim edge whose apex lies outside the wheel; the rim is rotated
    so the pendant edge comes first.  Enumeration is exhaustive and
    deterministic (hubs ascending, rims in canonical order).
    """
    if k < 4:
        raise InputError("wheels need k >= 4")
    b = ensure_budget(budget)
    adj = X.skeleton.masks
    for hub in X.vertices:
        link_mask = adj[hub]
        for rim in induced_cycles(X, link_mask, k, k, b):
            wheel = Wheel(hub, _canonical_cycle(rim))
            if not with_pendant:
                yield wheel
                continue
            wheel_mask = mask_of(wheel.vertex_set())
            r = wheel.rim
            for i in range(k):
                a, c = r[i], r[(i + 1) % k]
                outside = adj[a] & adj[c] & ~wheel_mask
                for t in iter_bits(outside):
                    b.tick()
                    rot = tuple(r[(i + j) % k] for j in range(k))
                    yield WheelWithPendant(Wheel(hub, rot), t)


def _dominating_mask(X: FlagComplex, vertices) -> int:
    """Vertices whose closed ball of radius 1 contains all of ``vertices``."""
    m = (1 << X.n) - 1
    for v in vertices:
        m &= X.skeleton.masks[v] | (1 << v)
    return m


def check_sd2_star_k(X: FlagComplex, k: int,
                     budget: Budget | None = None) -> Verdict:
    """No 4-wheels, and every l-wheel with a pendant triangle (5 <= l < k)
    lies in the radius-1 ball of some vertex.

    The certificate is a 4-wheel or an undominated wheel with pendant.
    """
    if k < 5:
        raise InputError("k must be at least 5")
    b = ensure_budget(budget)
    name = f"SD2*({k})" if k != 6 else "SD2*"
    stats = {"wheels": 0, "pendants": 0}
    if X.n <= 2:
        stats["vacuous"] = True
        return Verdict(name, True, None, stats)
    for w in enumerate_wheels(X, 4, with_pendant=False, budget=b):
        stats["wheels"] += 1
        stats["budget"] = b.used
        return Verdict(name, False, w, stats)
    for l in range(5, k):
        for wp in enumerate_wheels(X, l, with_pendant=True, budget=b):
            stats["pendants"] += 1
            if not _dominating_mask(X, wp.vertex_set()):
                stats["budget"] = b.used
                return Verdict(name, False, wp, stats)
    stats["budget"] = b.used
    return Verdict(name, True, None, stats)


def check_sd2_star(X: FlagComplex, budget: Budget | None = None) -> Verdict:
    return check_sd2_star_k(X, 6, budget)


def check_sd2_star_links(X: FlagComplex, k: int = 6,
                         budget: Budget | None = None) -> Verdict:
    """No 4-wheels and no full l-wheel with pendant triangle for l < k.

    Fullness asks the apex to see only its rim edge, which is exactly
    what makes the configuration survive inside every full subcomplex
    and every link.
    """
    if k < 6:
        raise InputError("k must be at least 6")
    b = ensure_budget(budget)
    name = f"SD2*-links({k})"
    stats = {"wheels": 0, "pendants": 0}
    if X.n <= 2:
        stats["vacuous"] = True
        return Verdict(name, True, None, stats)
    for w in enumerate_wheels(X, 4, with_pendant=False, budget=b):
        stats["wheels"] += 1
        stats["budget"] = b.used
        return Verdict(name, False, w, stats)
    for l in range(5, k):
        for wp in enumerate_wheels(X, l, with_pendant=True, budget=b):
            stats["pendants"] += 1
            if wp.is_full(X):
                stats["budget"] = b.used
                return Verdict(name, False, wp, stats)
    stats["budget"] = b.used
    return Verdict(name, True, None, stats)


def check_locally_k_large(X: FlagComplex, k: int,
                          budget: Budget | None = None) -> Verdict:
    """No vertex link contains a chordless cycle shorter than ``k``.

    Checking vertex links suffices: a chordless cycle in the link of a
    bigger simplex is a chordless cycle in the link of each of its
    vertices (links of links are links, and fullness passes down).  The
    certificate is (vertex, cycle).
    """
    if k < 4:
        raise InputError("k must be at least 4")
    b = ensure_budget(budget)
    name = f"locally-{k}-large"
    stats = {"links": 0}
    adj = X.skeleton.masks
    for v in X.vertices:
        stats["links"] += 1
        for cyc in induced_cycles(X, adj[v], 4, k - 1, b):
            stats["budget"] = b.used
            return Verdict(name, False, ((v,), cyc), stats)
    stats["budget"] = b.used
    return Verdict(name, True, None, stats)


# ---------------------------------------------------------------------------
# collapse schedules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CollapseStep:
    radius: int
    dim: int
    simplex: Simplex
    projection: tuple[int, ...]


@dataclass
class CollapseSchedule:
    """Retraction schedule collapsing a complex to a single vertex.

    Steps are ordered outermost radius first; within a radius, sphere
    simplices are listed by decreasing dimension.  Replaying each step as
    the elementary retraction that pushes ``simplex`` onto its inward
    projection shrinks the ball of radius i+1 onto the ball of radius i.
    """

    base: int
    steps: list[CollapseStep]


def collapse_schedule(X: FlagComplex, v: int,
                      budget: Budget | None = None) -> CollapseSchedule:
    """Schedule of elementary retractions collapsing ``X`` to ``v``.

    Requires simple descent around ``v`` at every radius; raises
    ``PreconditionError`` otherwise.
    """
    b = ensure_budget(budget)
    ecc = X.ecc(v)
    pre = check_simple_descent(X, v, ecc, b)
    if not pre.holds:
        raise PreconditionError(
            f"simple descent fails around {X.label(v)}", pre.certificate)
    dist = X.dist_from(v)
    masks = _sphere_masks(X, (v,), ecc)
    adj = X.skeleton.masks
    steps: list[CollapseStep] = []
    for i in range(ecc - 1, -1, -1):
        sphere_mask = masks[i + 1]
        by_dim: dict[int, list[Simplex]] = {}
        for simp in cliques_in_mask(X, sphere_mask, b):
            by_dim.setdefault(len(simp) - 1, []).append(simp)
        for dim in sorted(by_dim, reverse=True):
            for simp in sorted(by_dim[dim]):
                m = (1 << X.n) - 1
                for u in simp:
                    m &= adj[u]
                proj = tuple(w for w in iter_bits(m) if 0 <= dist[w] <= i)
                steps.append(CollapseStep(i, dim, simp, proj))
    return CollapseSchedule(v, steps)


def all_simplices(X: FlagComplex, budget: Budget | None = None) -> set[Simplex]:
    return set(cliques_in_mask(X, X.full_mask(), budget))


def replay_collapse(X: FlagComplex, schedule: CollapseSchedule,
                    budget: Budget | None = None) -> bool:
    """Replay a schedule and verify each step is an elementary retraction.

    Checks, per step, that the removed simplices are exactly those wedged
    between the sphere simplex and its projection cone, that after all
    steps of radius i only the ball of radius i remains, and that the
    final complex is the base vertex alone.
    """
    b = ensure_budget(budget)
    current = all_simplices(X, b)
    dist = X.dist_from(schedule.base)
    radius = None
    for step in schedule.steps:
        if radius is not None and step.radius > radius:
            raise InputError("schedule not ordered outermost-first")
        if radius is not None and step.radius < radius:
            _assert_ball_state(X, current, dist, radius)
        radius = step.radius
        simp = step.simplex
        cone = set(simp) | set(step.projection)
        if simp not in current:
            return False
        removed = {t for t in current if set(simp) <= set(t)}
        for t in removed:
            b.tick()
            if not set(t) <= cone:
                return False
        current -= removed
    if radius is not None:
        _assert_ball_state(X, current, dist, radius)
    return current == {(schedule.base,)}


def _assert_ball_state(X: FlagComplex, current: set[Simplex], dist, i: int):
    expected_mask = 0
    for v, d in enumerate(dist):
        if 0 <= d <= i:
            expected_mask |= 1 << v
    expected = set(cliques_in_mask(X, expected_mask))
    if current != expected:
        raise InputError(f"replay does not match the ball of radius {i}")
