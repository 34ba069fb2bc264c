# Enable debug mode (forces DEBUG logging).
DEBUG = False

# Logging
LOG_LEVEL = 'WARNING'
LOG_FILE = None

# Where `generate` and `bench` write when no explicit path is given.
OUTPUT_DIR = '.'

# Floyd-Warshall is O(n^3): `verify` refuses larger graphs.
ORACLE_MAX_N = 2048
# Benchmarks only run the Floyd-Warshall oracle up to this size.
VERIFY_CUTOFF = 512
# `run --out-dist/--out-parents` needs --force above this size.
MATRIX_CSV_MAX_N = 1024

# Bench defaults, overridden by a config file and then by CLI flags.
FAMILY = 'hypercube'
SIZES = (64, 256, 1024, 4096)
ALGORITHMS = ('pst', 'bfs')
REPETITIONS = 1
SEED = 1
VERIFY = False
FORMAT = 'markdown-table'
