"""Exact computations on simple games: extremal coalitions, duals,
weightedness, and dimension/codimension with witness representations."""

from .core import (
    ARBITRARY_WINNING,
    EXPLICIT,
    FORMS,
    INTERSECTION,
    MINIMAL_GIVEN,
    N_MAX,
    UNION,
    WEIGHTED,
    Coalition,
    InvalidGameError,
    SimpleGame,
    SizeLimitError,
    WeightedGame,
    combine,
    make_explicit,
    make_weighted,
)
from .dimsolver import (
    COVER_MAX,
    DimensionWitness,
    SeparabilityOracleCache,
    canonical_intersection,
    canonical_union,
    co_realizable,
    codimension,
    convert,
    dimension,
    is_weighted,
    realizable,
)
from .gamefile import GameParseError, parse_game, serialize_game
from .generators import (
    SSPInstance,
    gen_example1,
    gen_random_monotone,
    gen_ssp,
    gen_unanimity_composition,
    splitmix64,
)
from .lp import (
    GE,
    LE,
    CertificateError,
    Constraint,
    FarkasWitness,
    FeasibilityResult,
    LinearProgram,
    rational,
    record_certificates,
    solve_feasibility,
    verify_certificate,
)
from .structure import (
    ExtremalSets,
    dual,
    dual_weighted,
    equivalent,
    extremal_sets,
    is_self_dual,
    maximal_losing,
    minimal_winning,
)

__version__ = "0.1.0"

__all__ = [
    "ARBITRARY_WINNING",
    "CertificateError",
    "Coalition",
    "Constraint",
    "COVER_MAX",
    "DimensionWitness",
    "EXPLICIT",
    "ExtremalSets",
    "FarkasWitness",
    "FeasibilityResult",
    "FORMS",
    "GameParseError",
    "GE",
    "INTERSECTION",
    "InvalidGameError",
    "LE",
    "LinearProgram",
    "MINIMAL_GIVEN",
    "N_MAX",
    "SSPInstance",
    "SeparabilityOracleCache",
    "SimpleGame",
    "SizeLimitError",
    "UNION",
    "WEIGHTED",
    "WeightedGame",
    "canonical_intersection",
    "canonical_union",
    "co_realizable",
    "codimension",
    "combine",
    "convert",
    "dimension",
    "dual",
    "dual_weighted",
    "equivalent",
    "extremal_sets",
    "gen_example1",
    "gen_random_monotone",
    "gen_ssp",
    "gen_unanimity_composition",
    "is_self_dual",
    "is_weighted",
    "make_explicit",
    "make_weighted",
    "maximal_losing",
    "minimal_winning",
    "parse_game",
    "rational",
    "realizable",
    "record_certificates",
    "serialize_game",
    "solve_feasibility",
    "splitmix64",
    "verify_certificate",
]
