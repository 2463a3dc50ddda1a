"""Frobenius numbers of two- and three-generator numerical semigroups.

The closed forms are computed from the coloured lattice strip of the first
two generators and cross-checked against a brute-force residue-table oracle.
"""

from .arith import CongruenceSolution, CoprimePair, frobenius_two, gcd_ext, mod_inverse, solve_congruence
from .engine import (
    CandidateCase,
    CandidateKind,
    CandidatePoint,
    CaseLabel,
    Decomposition,
    Evaluation,
    candidate_points,
    closed_form_g3,
    decompose,
    dispatch,
    evaluate,
    explain_candidate,
    johnson_reduce,
    selmer_g,
    uv_to_xy,
)
from .errors import DomainError, FrobeniusError, InvariantViolation, ResourceError
from .oracle import GeneratorSet, RepresentationWitness, apery_table, frobenius_oracle, gaps, is_representable
from .region import (
    BrauerForm,
    FormKind,
    LatticePoint,
    PointColor,
    RegionCensus,
    brauer_form,
    classify_point,
    count_exceptional,
    enumerate_exceptional,
    enumerate_region,
    is_exceptional,
    linear_form,
    mirror_point,
)

__version__ = "0.1.0"
