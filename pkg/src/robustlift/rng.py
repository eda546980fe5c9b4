"""Deterministic, cross-platform random number generation.

Every random quantity in this package is derived from 64-bit keys through a
single counter-based generator so that results are reproducible bit-for-bit
across platforms, execution orders, and (in principle) language ports:

* Key derivation: a splitmix64 chain.  ``derive_key(v0, v1, ...)`` folds each
  64-bit value into the state with ``state = mix64(state + GOLDEN + v)``,
  starting from a fixed constant.
* Raw stream: word ``k`` of the stream for key ``K`` is
  ``mix64(K + (k + 1) * GOLDEN)`` where ``GOLDEN = 0x9E3779B97F4A7C15`` and
  ``mix64`` is the splitmix64 finalizer (xor-shift/multiply, constants
  0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).
* Uniforms: ``(word >> 11) * 2^-53`` in [0, 1).
* Normals: Box-Muller on consecutive word pairs, with the radius uniform
  shifted to (0, 1] so the logarithm is always finite:
  ``z0 = sqrt(-2 ln u1) cos(2 pi u2)``, ``z1 = sqrt(-2 ln u1) sin(2 pi u2)``.

All functions are pure; a (key, index) pair fully determines each output, so
streams can be generated in any order or in parallel.
"""

from __future__ import annotations

import numpy as np

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_INIT = np.uint64(0x243F6A8885A308D3)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

_U64_MASK = (1 << 64) - 1


def mix64(z):
    """splitmix64 finalizer; accepts uint64 scalars or arrays, wraps mod 2^64."""
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))


def derive_key(*values) -> int:
    """Fold integers into a single 64-bit key via a splitmix64 chain."""
    state = _INIT
    with np.errstate(over="ignore"):
        for v in values:
            state = mix64(state + GOLDEN + np.uint64(int(v) & _U64_MASK))
    return int(state)


def raw_words(key, count: int, offset: int = 0) -> np.ndarray:
    """Words ``offset .. offset+count-1`` of the stream for ``key`` (uint64)."""
    idx = np.arange(offset, offset + count, dtype=np.uint64)
    with np.errstate(over="ignore"):
        return mix64(np.uint64(int(key) & _U64_MASK) + (idx + np.uint64(1)) * GOLDEN)


def uniforms(key, count: int) -> np.ndarray:
    """``count`` i.i.d. uniforms in [0, 1) drawn from 53-bit words."""
    return (raw_words(key, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def standard_normals(key, count: int) -> np.ndarray:
    """``count`` i.i.d. standard normals via Box-Muller on the key's stream."""
    pairs = (count + 1) // 2
    raws = raw_words(key, 2 * pairs)
    u1 = ((raws[0::2] >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53
    u2 = (raws[1::2] >> np.uint64(11)).astype(np.float64) * 2.0**-53
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = 2.0 * np.pi * u2
    out = np.empty(2 * pairs)
    out[0::2] = radius * np.cos(angle)
    out[1::2] = radius * np.sin(angle)
    return out[:count]


def normal_block(key, rows: int, cols: int) -> np.ndarray:
    """(rows, cols) standard-normal block; row ``i`` depends only on (key, i).

    Row ``i`` is ``standard_normals(mix-chain(key, i), cols)``, so individual
    rows can be regenerated or produced in parallel without the others.
    """
    with np.errstate(over="ignore"):
        row_keys = mix64(
            np.uint64(int(key) & _U64_MASK)
            + GOLDEN
            + np.arange(rows, dtype=np.uint64)
        )
    pairs = (cols + 1) // 2
    idx = np.arange(2 * pairs, dtype=np.uint64)
    with np.errstate(over="ignore"):
        raws = mix64(row_keys[:, None] + (idx + np.uint64(1))[None, :] * GOLDEN)
    u1 = ((raws[:, 0::2] >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53
    u2 = (raws[:, 1::2] >> np.uint64(11)).astype(np.float64) * 2.0**-53
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = 2.0 * np.pi * u2
    out = np.empty((rows, 2 * pairs))
    out[:, 0::2] = radius * np.cos(angle)
    out[:, 1::2] = radius * np.sin(angle)
    return out[:, :cols]


def permutation(key, count: int) -> np.ndarray:
    """Deterministic permutation of range(count), Fisher-Yates on the stream."""
    perm = np.arange(count)
    if count < 2:
        return perm
    words = raw_words(key, count - 1)
    for i in range(count - 1, 0, -1):
        j = int(words[count - 1 - i] % np.uint64(i + 1))
        perm[i], perm[j] = perm[j], perm[i]
    return perm
