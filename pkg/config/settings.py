# config/settings.py

# Logging
LOG_LEVEL = "WARNING"

# Shipped data files (resolved inside the config directory)
CUSPIDAL_TABLE_FILE = "cuspidal_table.yml"
GOLDEN_EXAMPLES_FILE = "golden_examples.yml"

# Enumeration budgets
GROUP_ENUMERATION_CAP = 200_000  # elements kept by any BFS over a group
PRODUCT_ORDER_CAP = 12  # m(s,t) beyond this is declared infinite
ELEMENT_ORDER_CAP = 60

# Relative Weyl group checks
SEMIDIRECT_WORD_LENGTH = 8

# Series
DEFAULT_SERIES_ORDER = 8
MOLIEN_CHECK_ORDER = 20

# Irreducible parameters
DEFAULT_DENOMINATOR_BOUND = 1
HOM_VANISHING_BOUND = 6

# Homology certificates
HOMOLOGY_TRUNCATIONS = (4, 6, 8)
COLIMIT_CHECK_LENGTH = 10

# Types covered by the golden and invariant suites
GOLDEN_TYPES = ("A1", "A2", "B2", "G2", "A3", "B3", "C3")
LEMMA_CHECK_TYPES = ("A1", "A2", "B2", "G2", "A3", "B3", "C3")
ROOT_CLOSURE_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2")

# CLI exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_DOMAIN_ERROR = 2
EXIT_UNCLASSIFIED = 3
