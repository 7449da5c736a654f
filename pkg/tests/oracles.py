"""Brute-force reference computations, deliberately independent of the library paths."""
from __future__ import annotations

import cmath
import random


def partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conj(parts):
    return tuple(sum(1 for x in parts if x >= i) for i in range(1, (parts[0] if parts else 0) + 1))


def hooks(parts):
    c = conj(parts)
    return [parts[i] - (j + 1) + c[j] - (i + 1) + 1 for i in range(len(parts)) for j in range(parts[i])]


def is_core(parts, t):
    return all(h % t for h in hooks(parts))


def remove_rim_hook(parts, i, j):
    """Remove the rim hook running from the end of row i to the bottom of column j (0-based)."""
    c = conj(parts)
    last = c[j] - 1
    new = list(parts)
    for r in range(i, last):
        new[r] = parts[r + 1] - 1
    new[last] = j
    return tuple(x for x in new if x > 0)


def strip_core(parts, t, rng=None):
    """Strip t-rim-hooks one at a time, picking among candidates at random."""
    parts = tuple(parts)
    while True:
        c = conj(parts)
        cand = [(i, j) for i in range(len(parts)) for j in range(parts[i])
                if parts[i] - (j + 1) + c[j] - (i + 1) + 1 == t]
        if not cand:
            return parts
        i, j = (rng or random).choice(cand)
        parts = remove_rim_hook(parts, i, j)


def residue_counts(parts, s):
    r = [0] * s
    for i, lam in enumerate(parts, start=1):
        for j in range(1, lam + 1):
            r[(j - i) % s] += 1
    return r


def omega(s, k=1):
    return cmath.exp(2j * cmath.pi * k / s)


def cyc_value(v):
    """Numerical value of a CycInt (test-only; the library never does this)."""
    return sum(c * omega(v.s, k) for k, c in enumerate(v.coeffs))


def gbg_numeric(parts, s):
    return sum(c * omega(s, i) for i, c in enumerate(residue_counts(parts, s)))


def pentagonal_euler(n):
    """Coefficients of prod (1 - q^j) below q^n via the pentagonal number expansion."""
    out = [0] * n
    k = 0
    while True:
        hit = False
        for m in ((k * (3 * k - 1)) // 2, (k * (3 * k + 1)) // 2) if k else (0,):
            if m < n:
                out[m] = (-1) ** k
                hit = True
        if not hit and k:
            break
        k += 1
    return out


def partition_numbers(n):
    return [sum(1 for _ in partitions(k)) for k in range(n)]
