import os

from .errors import ResourceCap

DEFAULT_MAX_N = 9


def max_n():
    """Largest n the exhaustive generators accept (``PARKSTAT_CAP`` overrides)."""
    raw = os.environ.get("PARKSTAT_CAP")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ResourceCap(f"PARKSTAT_CAP must be an integer, got {raw!r}") from None


def check_n(n, cap=None):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    limit = max_n() if cap is None else cap
    if limit is not False and n > limit:
        raise ResourceCap(f"n={n} exceeds enumeration cap {limit}")
