"""Deterministic seed splitting."""

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def child_seed(master: int, *indices: int) -> int:
    """64-bit seed for (master, index, ...); distinct index tuples give independent-looking streams."""
    x = splitmix64(master & MASK64)
    for i in indices:
        x = splitmix64(x ^ (i & MASK64))
    return x
