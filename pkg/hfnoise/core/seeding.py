"""Child-seed derivation for replicated simulations.

Replication ``r`` of a batch draws from ``numpy.random.default_rng`` seeded
with ``child_seed(master, r)``, a splitmix64 mix of the two integers. The
mix uses only 64-bit integer arithmetic so it is identical on every
platform, and it does not depend on how replications are scheduled.
"""

_MASK64 = (1 << 64) - 1


def splitmix64(state: int) -> int:
    """Return the splitmix64 output for a 64-bit state.

    Parameters
    ----------
    state : int
        Input state; reduced modulo 2**64.

    Returns
    -------
    int
        Mixed 64-bit value.
    """
    z = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def child_seed(master: int, index: int) -> int:
    """Derive the seed of replication ``index`` from a master seed.

    Parameters
    ----------
    master : int
        Master seed of the batch (non-negative).
    index : int
        Replication index (non-negative).

    Returns
    -------
    int
        A 64-bit seed suitable for ``numpy.random.default_rng``.

    Examples
    --------
    >>> child_seed(7, 0) == child_seed(7, 0)
    True
    >>> child_seed(7, 0) != child_seed(7, 1)
    True
    """
    if master < 0 or index < 0:
        raise ValueError("master seed and index must be non-negative")
    return splitmix64(splitmix64(master & _MASK64) ^ (index & _MASK64))
