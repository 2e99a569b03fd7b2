"""Arithmetic on paths (elements of A*)."""

Path = tuple[int, ...]


def path_power(path: Path, exponent: int) -> Path:
    return path * exponent


def primitive_root(path: Path) -> tuple[Path, int]:
    """Return (root, m) with path = root^m and root not a proper power.

    Raises:
        ValueError: On the empty path.
    """
    if not path:
        raise ValueError("the empty path has no primitive root")
    length = len(path)
    for period in range(1, length + 1):
        if length % period == 0 and path[:period] * (length // period) == path:
            return path[:period], length // period
    raise AssertionError("unreachable")


def strip_prefix_powers(path: Path, prefix: Path) -> tuple[int, Path]:
    """Return (k, rest) with path = prefix^k rest and rest not starting with prefix."""
    count = 0
    size = len(prefix)
    while size and path[:size] == prefix:
        path = path[size:]
        count += 1
    return count, path


def paths_of_length(n: int, length: int) -> list[Path]:
    """All paths of the given length in forest order."""
    paths: list[Path] = [()]
    for _ in range(length):
        paths = [p + (i,) for p in paths for i in range(1, n + 1)]
    return paths


def format_path(path: Path) -> str:
    return " ".join(f"a{letter}" for letter in path) if path else "ε"
