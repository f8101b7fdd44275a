"""Size guards for the exponential kernels.

All limits are plain module constants; guarded functions accept
``allow_large=True`` to run past them anyway (at the caller's own cost).
"""

# Ryser permanent: 2^side subset sums.
RYSER_MAX_SIDE = 24

# Polynomial by interpolation: side+1 Ryser evaluations.
INTERP_MAX_N = 14

# Polynomial / nullity / maximum subgraph by Sachs-subgraph enumeration.
SACHS_MAX_N = 20

# Brute-force maximum-matching enumeration (M-statistic oracle).
MSTAT_ORACLE_MAX_N = 14

# Exhaustive labeled-graph enumeration: 2^(n(n-1)/2) graphs.
ENUM_LABELED_MAX_N = 7

# Exhaustive non-isomorphic connected enumeration (canonical dedup).
ENUM_NONISO_MAX_N = 10

# graph6 single-byte size encoding; also the fixed-width bitset limit of the
# compiled kernels (pure kernels have no width limit).
GRAPH6_MAX_N = 62
