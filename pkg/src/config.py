# geometry

SCALE = 1

COORD_BITS = 63

# solvers

NODE_BUDGET = 10**8

# awvd diagnostics

TOLERANCE = 1e-9

AWVD_TRIALS = 100_000

AWVD_CHUNK = 8_192

# generation

DEFAULT_WINDOW = 1_000

DEFAULT_EXTENT = (40, 160)

EMBED_RADIUS = 10**7

EMBED_ARC_DEGREES = 10.0

# bench

CSV_PRECISION = 6

BENCH_WORKERS = 4

# LOGS
LOG_LEVEL = "INFO"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
