"""weaksys: verification and construction toolkit for flag simplicial
complexes with combinatorial nonpositive-curvature conditions.

The package decides local descent/wheel conditions on finite flag
complexes, builds truncated universal covers with validated covering
data, certifies convexity of balls, thickens cubical cell complexes,
generates Davis complexes of right-angled Coxeter systems from nerve
graphs, and runs negative-curvature diagnostics (thin bigons, flat
triangles, sphere projection systems).
"""

__version__ = "0.1.0"

from .core import (
    CycleWitness,
    FlagComplex,
    Graph,
    Simplex,
    SubcomplexHandle,
    ball,
    distance,
    find_chordless_cycle,
    is_full,
    link,
    span,
    sphere,
)
from .errors import (
    Budget,
    BudgetExceeded,
    InputError,
    InvariantViolation,
    PreconditionError,
    WeaksysError,
)
from .conditions import (
    CollapseSchedule,
    Verdict,
    Wheel,
    WheelWithPendant,
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
)
from .cover import PartialCover, build_cover, detect_nontrivial_pi1, \
    validate_cover
from .convexity import (
    check_ball_convexity,
    check_edge_descent,
    find_convex_neighborhood,
    geodesics_between,
    is_3convex,
    is_convex,
    is_locally_3convex,
    quasiconvexity_constant,
)
from .thickening import (
    CellComplex,
    CoxeterNerve,
    DavisBall,
    SimplicialComplex,
    check_locally_k_large_cell,
    check_no_delta,
    davis_complex,
    euler_characteristic,
    face_complex,
    moussong_check,
    normal_form,
    thicken,
)
from .hyperbolic import (
    BigonReport,
    FlatTriangle,
    SphereProjectionSystem,
    check_strict_contraction,
    check_thin_bigons,
    export_boundary_system,
    find_flat_triangle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
