"""Exact zeta functions of periodic-finite-type shifts."""

from .exactalg import IntPoly, PowerSeries, RationalFn, det_identity_minus_tA, periodic_counts_from_zeta, series_expand
from .graph import Matrix, Wbg, adjacency, build_gz, build_ms_presentation, condensed_matrix
from .model import Alphabet, PftSpec, SpecError, StandardPft, derived_pft, expand_shifted_word, normalize, standard
from .necklace import NecklaceRep, beta, enumerate_omega, j_set, mobius, primitive_root
from .oracle import count_periodic_bruteforce, count_via_cycles, is_member_periodic, verify_counts
from .zeta import ZetaResult, count_periodic_via_traces, odd_T_zeta, zeta_pft, zeta_sft

__version__ = "0.1.0"
