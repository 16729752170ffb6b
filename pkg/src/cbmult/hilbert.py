"""Discrete Hilbert transform on a midpoint-offset grid.

Output samples sit half a spacing to the right of the input nodes, so the
convolution kernel 1/(pi (m + 1/2)) never sees a vanishing denominator.
The doubly infinite version of this operator has symbol of modulus one,
hence every finite section has operator norm <= 1; applying it twice
equals minus a one-sample shift up to boundary effects.
"""
import numpy as np

from .errors import DomainError
from .grid import GridFunction


def hilbert_kernel(n):
    m = np.arange(-(n - 1), n)
    return 1.0 / (np.pi * (m + 0.5))


def discrete_hilbert(f):
    if not isinstance(f, GridFunction) or f.dim != 1:
        raise DomainError("discrete_hilbert expects a 1D GridFunction")
    n = f.values.size
    if n < 64:
        raise DomainError("grid must have at least 64 points")
    h = f.spacing[0]
    ker = hilbert_kernel(n)
    # linear convolution out[j] = sum_k f[k] ker[j - k + (n-1)]
    size = 1
    while size < 2 * n - 1:
        size *= 2
    F = np.fft.fft(f.values, size)
    K = np.fft.fft(ker, size)
    conv = np.fft.ifft(F * K)[n - 1:2 * n - 1]
    return GridFunction._raw((f.origin[0] + 0.5 * h,), (h,), conv,
                             f.support_radius)


def hilbert_matrix(n):
    """Dense n x n section, rows indexed by output nodes: 1/(pi (j-k+1/2))."""
    j = np.arange(n)
    return 1.0 / (np.pi * (j[:, None] - j[None, :] + 0.5))
