"""Weyl group combinatorics of spherical conjugacy classes.

Subpackages: root systems (rootsys), exact Weyl arithmetic (weyl), the
0-Hecke monoid and involution steps (demazure), admissible fixed-root subsets
and the dimension formula (spherical), exclusion-certificate checking (certs),
and a command line surface (cli).
"""

from .rootsys import (
    RootSystem,
    RootSystemType,
    build,
    build_named,
    cartan_pairing,
    depth,
    highest_root,
    is_root,
    root_sum,
    subsystem_positive_roots,
)
from .weyl import (
    WeylElement,
    apply,
    bruhat_leq,
    fixed_simples,
    from_word,
    identity,
    inverse,
    inversions,
    is_involution,
    longest_element,
    multiply,
    rank_one_minus,
    reduced_word,
    reflection,
    simple_reflection,
    theta,
    w0,
)
from .demazure import (
    StepOutcome,
    demazure_mul,
    involution_reachability,
    involution_step,
    weyl_group_order,
)
from .spherical import (
    SphericalDatum,
    dimension,
    enumerate_pi,
    is_admissible,
    is_dominant,
    is_theta_symmetric,
    neg_eigenlattice_basis,
    passes_quali_no,
    spherical_datum,
    toro1_rank,
    type_a_cascade,
)
from .certs import (
    CertError,
    CertReport,
    ExclusionCert,
    VerifySummary,
    make_cert,
    mutate_sigma,
    parse_certs,
    verify,
    verify_all,
)

__version__ = "0.1.0"
