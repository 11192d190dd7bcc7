from os import getenv
from dotenv import load_dotenv

load_dotenv()

# Defaults
DEFAULT_SUPPORT_CAP = 2 ** 22
DEFAULT_PRUNE_TOL = 1e-12
DEFAULT_EXHAUSTIVE_BITS = 22
BILINEAR_READINGS = ("slice", "complement")


def support_cap():
    """Maximum number of stored amplitudes before the sparse engine gives up."""
    return int(getenv("QARITH_SUPPORT_CAP", DEFAULT_SUPPORT_CAP))


def prune_tol():
    return float(getenv("QARITH_PRUNE_TOL", DEFAULT_PRUNE_TOL))


def bilinear_reading():
    """Coordinate reading used by the scale-up interpolation circuit."""
    reading = getenv("QARITH_BILINEAR_READING", "slice").strip().lower()
    if reading not in BILINEAR_READINGS:
        raise ValueError(f"QARITH_BILINEAR_READING must be one of {BILINEAR_READINGS}, got {reading!r}")
    return reading


def verify_workers():
    return max(1, int(getenv("QARITH_VERIFY_WORKERS", 1)))


def exhaustive_bits():
    """Widest total input, in bits, that exhaustive verification will enumerate."""
    return int(getenv("QARITH_EXHAUSTIVE_BITS", DEFAULT_EXHAUSTIVE_BITS))


def database_url():
    return getenv("DATABASE_URL", "sqlite://")


def frontend_url():
    return getenv("FRONTEND_URL", "http://localhost:5173")
