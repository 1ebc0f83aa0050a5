"""Coset enumeration for cyclic translation actions on products of cyclic groups.

A preimage fibre is indexed by tuples b in Z_{e_1} x ... x Z_{e_k}; the
residual symmetry translates b by integer multiples of a fixed shift vector
w, so the fibre's points are the cosets of the cyclic subgroup <w>.  This
module enumerates one lexicographically minimal representative per coset.

Tuples are encoded as mixed-radix integers with the first factor most
significant, so lexicographic order on tuples is numeric order on codes and
the whole enumeration runs on flat int64 arrays.  Two strategies keep the
cost linear-ish in the fibre size N:

* small subgroup (order L <= 64): one vectorized pass per subgroup element,
  keeping the element-wise minimum; a code is a representative iff it equals
  the minimum over its own orbit.  O(N * L) element operations, chunked to
  bound memory.
* large subgroup: walk codes in increasing order, and for each unseen code
  mark its whole coset as seen; the first unseen code of a coset is its
  minimum.  O(N) marks plus N/L vectorized coset expansions.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import EnumerationCapExceededError

_SMALL_SUBGROUP = 64
_CHUNK = 1 << 20


def shift_order(moduli: tuple[int, ...], shift: tuple[int, ...]) -> int:
    """Order of the shift vector in Z_{e_1} x ... x Z_{e_k}."""
    return math.lcm(*(e // math.gcd(e, v % e) for e, v in zip(moduli, shift)))


def _places(moduli: tuple[int, ...]) -> np.ndarray:
    places = np.ones(len(moduli), dtype=np.int64)
    for i in range(len(moduli) - 2, -1, -1):
        places[i] = places[i + 1] * moduli[i + 1]
    return places


def decode(codes: np.ndarray, moduli: tuple[int, ...]) -> np.ndarray:
    """Mixed-radix digits of shape (len(codes), k)."""
    places = _places(moduli)
    return (np.asarray(codes, dtype=np.int64)[:, None] // places) % np.asarray(moduli)


def encode(digits: np.ndarray, moduli: tuple[int, ...]) -> np.ndarray:
    return np.asarray(digits, dtype=np.int64) @ _places(moduli)


def subgroup_digits(moduli: tuple[int, ...], shift: tuple[int, ...]) -> np.ndarray:
    """All elements t*shift of the cyclic subgroup, as an (L, k) digit array."""
    order = shift_order(moduli, shift)
    t = np.arange(order, dtype=np.int64)[:, None]
    return (t * np.asarray(shift, dtype=np.int64)) % np.asarray(moduli)


def coset_minima(
    moduli: tuple[int, ...], shift: tuple[int, ...], cap: int | None = None
) -> np.ndarray:
    """Sorted codes of the lexicographically minimal element of every coset of <shift>.

    Raises EnumerationCapExceededError when the fibre size prod(moduli)
    exceeds ``cap``.
    """
    size = math.prod(moduli)
    if cap is not None and size > cap:
        raise EnumerationCapExceededError(f"fibre needs {size} tuples, cap is {cap}")
    mods = np.asarray(moduli, dtype=np.int64)
    places = _places(moduli)
    sub = subgroup_digits(moduli, shift)
    order = len(sub)
    if order == 1:
        return np.arange(size, dtype=np.int64)

    if order <= _SMALL_SUBGROUP:
        reps = []
        for start in range(0, size, _CHUNK):
            codes = np.arange(start, min(start + _CHUNK, size), dtype=np.int64)
            digits = (codes[:, None] // places) % mods
            minima = codes.copy()
            for row in sub[1:]:
                shifted = ((digits + row) % mods) @ places
                np.minimum(minima, shifted, out=minima)
            reps.append(codes[minima == codes])
        out = np.concatenate(reps)
    else:
        seen = bytearray(size)
        reps_list: list[int] = []
        for code in range(size):
            if seen[code]:
                continue
            digits = (np.int64(code) // places) % mods
            coset = ((digits + sub) % mods) @ places
            for c in coset.tolist():
                seen[c] = 1
            reps_list.append(code)
        out = np.asarray(reps_list, dtype=np.int64)

    # every coset has exactly |<shift>| elements, so the counts must tile
    assert len(out) * order == size
    return out
