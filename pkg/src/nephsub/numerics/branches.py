"""Principal-branch elementary functions with a fixed convention on the cuts.

numpy already returns principal values; the only extra work is to make
points lying exactly on a cut resolve to the limit from the upper
half-plane (``+0.0`` imaginary part) instead of depending on the sign of a
zero, and to turn genuine singularities into :class:`BranchError`.
"""

from __future__ import annotations

import numpy as np

from ..errors import BranchError


def _upper(w):
    w = np.asarray(w, dtype=complex)
    # x + 0j normalises a negative-zero imaginary part to +0.0
    return np.where(w.imag == 0.0, w.real + 0j, w)


def csqrt(w):
    return np.sqrt(_upper(w))


def clog(w):
    w = _upper(w)
    if np.any(w == 0):
        raise BranchError("logarithm of zero")
    return np.log(w)


def catan(w):
    w = np.asarray(w, dtype=complex)
    if np.any((w.real == 0.0) & (np.abs(w.imag) == 1.0)):
        raise BranchError("arctangent at a logarithmic branch point (+-i)")
    # cuts run along the imaginary axis; approach them from Re > 0
    w = np.where(w.real == 0.0, 0.0 + 1j * w.imag, w)
    return np.arctan(w)
