import os
import sys
from dotenv import load_dotenv

load_dotenv()

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


class Config:
    """Configuration management for the arithmetic permutation toolkit

    Note: The main entry point for the CLI is main.py
    """

    # Number theory
    SIEVE_LIMIT = int(os.getenv("ARITHPERM_SIEVE_LIMIT", "1000001"))
    DECIMAL_PRECISION = 50  # digits for Mertens products and the ratio constant

    # Permanent engines
    BRUTEFORCE_CEILING = 12
    AUTO_BRUTEFORCE_MAX = 10  # auto engine uses the oracle up to this size
    RYSER_CEILING = int(os.getenv("ARITHPERM_RYSER_CEILING", "34"))
    THREADS = int(os.getenv("ARITHPERM_THREADS", "0"))  # 0 means hardware parallelism
    RYSER_CHUNKS_PER_THREAD = 4

    # Bound constants
    SERIES_TOLERANCE = 1e-15
    EMPIRICAL_N = 10**6
    EMPIRICAL_N_MIN = 10**4
    EMPIRICAL_N_MAX = 10**8
    LOWER_BOUND_MAX_TAU = 24
    DEFAULT_K = 30
    X0_MAX_K = 10**4  # top-interval density sums are O(k^2)
    X0_EXACT_MAX_K = 200  # same, as a dict of Fractions

    # Regression tiers
    FAST_TIER_MAX_N = 20
    SLOW_TIER_MAX_N = 24
    NIGHTLY_TIER_MAX_N = 32
    SLOW_TABLE2_TAU = 24  # lower-bound rows with tau(b) at or above this need the slow tier
    RUN_SLOW = os.getenv("ARITHPERM_SLOW", "0") == "1"
    RUN_NIGHTLY = os.getenv("ARITHPERM_NIGHTLY", "0") == "1"

    # Logging
    LOG_LEVEL = os.getenv("ARITHPERM_LOG_LEVEL", "WARNING").upper()

    # File Paths
    DATA_DIR = os.path.join(PROJECT_ROOT, "data")
    TABLE1_FILE = os.path.join(DATA_DIR, "table1.json")
    TABLE2_FILE = os.path.join(DATA_DIR, "table2.json")
    CONSTANTS_FILE = os.path.join(DATA_DIR, "constants.json")

    # Constraint kinds accepted on the command line
    KIND_NAMES = ["lcm", "div", "anticoprime", "coprime"]
    ENGINE_NAMES = ["auto", "bruteforce", "ryser"]
    OUTPUT_FORMATS = ["text", "json", "csv"]

    @classmethod
    def thread_count(cls) -> int:
        """Worker threads for the Ryser engine (0 resolves to the CPU count)"""
        if cls.THREADS > 0:
            return cls.THREADS
        return os.cpu_count() or 1

    @classmethod
    def validate(cls):
        """Validate that the configuration is usable"""
        if cls.SIEVE_LIMIT < 2:
            raise ValueError("ARITHPERM_SIEVE_LIMIT must be at least 2")
        if cls.RYSER_CEILING < 1:
            raise ValueError("ARITHPERM_RYSER_CEILING must be positive")
        if cls.RYSER_CEILING > 62:
            raise ValueError("ARITHPERM_RYSER_CEILING cannot exceed 62 (subset index is a 64-bit word)")
        if cls.THREADS < 0:
            raise ValueError("ARITHPERM_THREADS must be zero or positive")
        if cls.EMPIRICAL_N_MIN > cls.EMPIRICAL_N_MAX:
            raise ValueError("EMPIRICAL_N_MIN exceeds EMPIRICAL_N_MAX")
        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            print(f"[WARNING] Unknown ARITHPERM_LOG_LEVEL {cls.LOG_LEVEL!r} - falling back to WARNING", file=sys.stderr)
            cls.LOG_LEVEL = "WARNING"
