# backend/app/models/enums.py
from enum import Enum


class GammaCase(str, Enum):
    ALL_VERTICES = "all-vertices"
    FULL_PARTS = "full-parts"
    BALANCED = "balanced"


class TableFormat(str, Enum):
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


class OracleEngine(str, Enum):
    COUNTS = "counts"
    GENERIC = "generic"
