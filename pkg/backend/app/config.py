# backend/app/config.py
import os
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = os.path.dirname(os.path.abspath(__file__))
REPORTS_DIR = os.getenv("PDOM_REPORTS_DIR", os.path.join(BASE_DIR, "reports"))

LOG_LEVEL = os.getenv("PDOM_LOG_LEVEL", "INFO").upper()

# Caps are configuration; exceeding one raises ResourceLimitError.
MAX_EXPAND_VERTICES = int(os.getenv("PDOM_MAX_EXPAND_VERTICES", "10000"))
MAX_COUNT_STATES = int(os.getenv("PDOM_MAX_COUNT_STATES", "100000000"))
MAX_GENERIC_VERTICES = int(os.getenv("PDOM_MAX_GENERIC_VERTICES", "24"))

# Up to this many parts s1/s2 are found by plain enumeration (canonical witnesses);
# above it the subset-sum DP paths take over.
EXHAUSTIVE_MAX_PARTS = int(os.getenv("PDOM_EXHAUSTIVE_MAX_PARTS", "20"))

# All counts and sums must fit an unsigned 64-bit word.
MAX_U64 = 2**64 - 1
