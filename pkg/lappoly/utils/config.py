"""Default tolerances and sweep limits."""

# comparison tolerance between root lists, three orders above ROOT_TOL
DEFAULT_TOL = 1e-7
# isolating-interval width for real_roots
ROOT_TOL = 1e-10

TOL_ENV_VAR = "LAPPOLY_TOL"

# batch --all-n enumerates all 2^(n choose 2) labeled graphs
ALL_N_LIMIT = 7
# verify sweeps every vertex subset up to this order, else only V(G)
SUBSET_SWEEP_LIMIT = 8
# enumeration-heavy checks refuse anything larger
MAX_ENUMERATION_ORDER = 20
MAX_GRAPH6_ORDER = 62
