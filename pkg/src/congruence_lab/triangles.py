"""Memoized exact triangles: unsigned first-kind Stirling, second-kind
Stirling, and Eulerian numbers, with an optional on-disk cache.

Conventions
-----------
* s(n, k) is UNSIGNED (cycle counts): sum(s(n,k) x**k) = x(x+1)...(x+n-1).
* Rows are ragged.  Stirling row n holds k = 0..n.  Eulerian row n holds
  k = 0..n-1 for n >= 1 (row 0 is the single seed entry, so the recurrence
  has a base).
* A Triangle is immutable after construction and safe for concurrent reads.

Cache file format (UTF-8)
-------------------------
Line 1 is a JSON header ``{"format_version": 1, "family": ..., "max_n": ...}``;
each following line is one row, entries space-separated decimal strings.
One file per (family, max_n).  Writes go to a temp file in the same directory
followed by an atomic rename.  On load, rows are re-validated through row-sum
invariants (factorials for the Stirling-1 and Eulerian triangles, Bell numbers
for Stirling-2); a file that fails any check is rebuilt with a warning.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
import warnings
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from . import kernels
from .errors import CacheError, CapacityError, ParameterError

FORMAT_VERSION = 1

#: Default hard limit for the shared in-process tables.
DEFAULT_ROW_LIMIT = 200


class Family(str, Enum):
    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"
    EULERIAN = "eulerian"


_BUILDERS = {
    Family.STIRLING1: kernels.stirling1_rows,
    Family.STIRLING2: kernels.stirling2_rows,
    Family.EULERIAN: kernels.eulerian_rows,
}


@dataclass(frozen=True)
class Triangle:
    """One number family tabulated up to row ``max_n``."""

    family: Family
    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ParameterError(f"row index must be >= 0, got {n}")
        if n > self.max_n:
            raise CapacityError(
                f"row {n} exceeds this {self.family.value} triangle (max_n={self.max_n})"
            )
        return self.rows[n]

    def value(self, n: int, k: int) -> int:
        """Entry (n, k); zero outside the row's support."""
        row = self.row(n)
        if 0 <= k < len(row):
            return row[k]
        return 0

    def verify_invariants(self, sample_points: tuple[int, ...] = (1, 2, 3)) -> None:
        """Debug verification: row sums, plus the generating identity for the
        Stirling-1 family at a few sample points per row.  Raises on failure."""
        _check_row_sums(self)
        if self.family is Family.STIRLING1:
            for n in range(self.max_n + 1):
                row = self.rows[n]
                for x in sample_points:
                    rising = 1
                    for i in range(n):
                        rising *= x + i
                    value = sum(c * x**k for k, c in enumerate(row))
                    if value != rising:
                        raise CacheError(
                            f"stirling1 row {n} violates the rising-factorial identity at x={x}"
                        )


def build(family: Family, max_n: int) -> Triangle:
    """Construct a triangle of rows 0..max_n from the recurrences."""
    family = Family(family)
    if max_n < 0:
        raise ParameterError(f"max_n must be >= 0, got {max_n}")
    rows = _BUILDERS[family](max_n)
    return Triangle(family, max_n, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# Row-sum validation helpers
# ---------------------------------------------------------------------------


def _bell_numbers(count: int) -> list[int]:
    """B_0..B_count via the Bell triangle (additions only)."""
    out = [1]
    row = [1]
    for _ in range(count):
        new_row = [row[-1]]
        for v in row:
            new_row.append(new_row[-1] + v)
        row = new_row
        out.append(row[0])
    return out


def _check_row_sums(tri: Triangle) -> None:
    if tri.family is Family.STIRLING2:
        bells = _bell_numbers(tri.max_n)
        for n, row in enumerate(tri.rows):
            if sum(row) != bells[n]:
                raise CacheError(f"stirling2 row {n} fails the Bell-number row sum")
        return
    factorial = 1
    for n, row in enumerate(tri.rows):
        if n >= 1:
            factorial *= n
        if sum(row) != factorial:
            raise CacheError(f"{tri.family.value} row {n} fails the factorial row sum")


# ---------------------------------------------------------------------------
# On-disk cache
# ---------------------------------------------------------------------------


def write_cache(tri: Triangle, path: str | Path) -> Path:
    """Write a triangle in the cache format (temp file + atomic rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {
        "format_version": FORMAT_VERSION,
        "family": tri.family.value,
        "max_n": tri.max_n,
    }
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(json.dumps(header, sort_keys=True) + "\n")
            for row in tri.rows:
                fh.write(" ".join(str(v) for v in row) + "\n")
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
    return path


def _read_cache(path: Path, family: Family, max_n: int) -> Triangle | None:
    """Parse and validate a cache file.

    Returns None for a clean incompatibility (other family/max_n/version);
    raises CacheError for a corrupt file.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CacheError(f"unreadable cache file: {exc}") from exc
    lines = text.splitlines()
    if not lines:
        raise CacheError("empty cache file")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise CacheError(f"bad cache header: {exc}") from exc
    if not isinstance(header, dict):
        raise CacheError("bad cache header: not an object")
    if (
        header.get("format_version") != FORMAT_VERSION
        or header.get("family") != family.value
        or header.get("max_n") != max_n
    ):
        return None
    if len(lines) != max_n + 2:
        raise CacheError(f"expected {max_n + 1} rows, found {len(lines) - 1}")
    rows = []
    for n, line in enumerate(lines[1:]):
        parts = line.split()
        expected = _row_length(family, n)
        if len(parts) != expected:
            raise CacheError(f"row {n} has {len(parts)} entries, expected {expected}")
        try:
            rows.append(tuple(int(v) for v in parts))
        except ValueError as exc:
            raise CacheError(f"row {n} holds a non-integer entry") from exc
    tri = Triangle(family, max_n, tuple(rows))
    _check_row_sums(tri)
    return tri


def _row_length(family: Family, n: int) -> int:
    if family is Family.EULERIAN:
        return max(n, 1)
    return n + 1


def load_or_build(family: Family, max_n: int, cache_path: str | Path | None) -> Triangle:
    """Return a triangle, reading ``cache_path`` when it holds a compatible
    copy, otherwise building from scratch and (re)writing the cache.

    A corrupt cache file is never trusted: it triggers a rebuild with a
    warning.  With ``cache_path=None`` this is just :func:`build`.
    """
    family = Family(family)
    if cache_path is None:
        return build(family, max_n)
    path = Path(cache_path)
    if path.exists():
        try:
            tri = _read_cache(path, family, max_n)
            if tri is not None:
                return tri
        except CacheError as exc:
            warnings.warn(
                f"triangle cache {path} is unusable ({exc}); rebuilding",
                RuntimeWarning,
                stacklevel=2,
            )
    tri = build(family, max_n)
    write_cache(tri, path)
    return tri


def cache_file_name(family: Family, max_n: int) -> str:
    return f"{Family(family).value}-{max_n}.tri"


# ---------------------------------------------------------------------------
# Shared in-process tables
# ---------------------------------------------------------------------------

_lock = threading.Lock()
_shared: dict[Family, Triangle] = {}
_row_limit = DEFAULT_ROW_LIMIT


def row_limit() -> int:
    return _row_limit


def set_row_limit(limit: int) -> None:
    """Raise or lower the shared-table capacity (affects new growth only)."""
    global _row_limit
    if limit < 0:
        raise ParameterError(f"row limit must be >= 0, got {limit}")
    with _lock:
        _row_limit = limit


def reset_shared() -> None:
    """Drop the shared tables and restore the default row limit (tests)."""
    global _row_limit
    with _lock:
        _shared.clear()
        _row_limit = DEFAULT_ROW_LIMIT


def install_shared(tri: Triangle) -> None:
    """Adopt a prebuilt (e.g. cache-loaded) triangle as the shared table if it
    is larger than the current one."""
    with _lock:
        cur = _shared.get(tri.family)
        if cur is None or cur.max_n < tri.max_n:
            _shared[tri.family] = tri


def ensure_rows(family: Family, n: int) -> Triangle:
    """Shared triangle with row ``n`` available; grows geometrically up to the
    configured row limit, then raises :class:`CapacityError`."""
    family = Family(family)
    if n < 0:
        raise ParameterError(f"row index must be >= 0, got {n}")
    if n > _row_limit:
        raise CapacityError(f"row {n} exceeds the configured row limit {_row_limit}")
    tri = _shared.get(family)
    if tri is not None and tri.max_n >= n:
        return tri
    with _lock:
        tri = _shared.get(family)
        if tri is None or tri.max_n < n:
            grown = max(n, 16, 2 * tri.max_n if tri is not None else 0)
            tri = build(family, min(grown, _row_limit))
            _shared[family] = tri
        return tri


def stirling1(n: int, k: int) -> int:
    """Unsigned first-kind Stirling number (permutations of n with k cycles)."""
    return ensure_rows(Family.STIRLING1, n).value(n, k)


def stirling2(n: int, k: int) -> int:
    """Second-kind Stirling number (partitions of an n-set into k blocks)."""
    return ensure_rows(Family.STIRLING2, n).value(n, k)


def eulerian(n: int, k: int) -> int:
    """Eulerian number (permutations of n with k ascents); requires n >= 1."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    return ensure_rows(Family.EULERIAN, n).value(n, k)


def stirling1_row(n: int) -> tuple[int, ...]:
    return ensure_rows(Family.STIRLING1, n).row(n)


def stirling2_row(n: int) -> tuple[int, ...]:
    return ensure_rows(Family.STIRLING2, n).row(n)


def eulerian_row(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    return ensure_rows(Family.EULERIAN, n).row(n)
