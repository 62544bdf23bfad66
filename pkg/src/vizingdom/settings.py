"""
Solver defaults. Values are read from the process environment or a settings.ini/.env file
found next to the working directory.
"""
from decouple import config

PRODUCT_CAP = config('VIZINGDOM_PRODUCT_CAP', default=1024, cast=int)
NODE_BUDGET = config('VIZINGDOM_NODE_BUDGET', default=5_000_000, cast=int)
ENUMERATION_CAP = config('VIZINGDOM_ENUMERATION_CAP', default=1_000_000, cast=int)
R_MAX = config('VIZINGDOM_R_MAX', default=6, cast=int)

# Exact fair domination numbers are only computed for factors up to this many vertices
FAIR_MAX_VERTICES = config('VIZINGDOM_FAIR_MAX_VERTICES', default=5, cast=int)
FAIR_HARD_LIMIT = 7

WORKERS = config('VIZINGDOM_WORKERS', default=1, cast=int)
