"""Exact combinatorics of toroidal compactifications of GL(n) and its classical subgroups."""

from .errors import (LogfanError, NotPointed, OutOfRange, PivotNotOne, RankDeficient, RankMismatch,
                     TooLarge)
from .polyhedra import (Cone, Fan, SubspaceEmbedding, VerificationReport, cone_from_halfspaces,
                        cone_from_rays, cone_is_smooth, fan_verify, restrict_cone)
from .linalg import lattice_index, smith_invariants
from .glfan import (ChartPermutation, SplitPermutation, anti_dominant_chamber, build_gl_fan,
                    chart_completions, chart_of_split_permutation, cone_of_split_permutation,
                    enumerate_split_permutations, has_limit, limit_exponents)
from .poly import MonomialMap, PolyMatrix, SparsePoly
from .blowup import (blowup_substitution, boundary_determinant, composite_substitution, matrix_of_p,
                     pivot_monomial, schur_rank_identity, verify_minor_divisibility)
from .strata import (CensusTable, OrbitInvariant, SubspaceBasis, census, in_stratum,
                     intersection_dims, is_graph_of_isomorphism)
from .fixed_points import GroupEmbedding, make_embedding, restricted_fan, verify_fixed

__version__ = "0.1.0"
