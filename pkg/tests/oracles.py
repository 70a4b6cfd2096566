"""Reference computations that share no code with the package.

Matrix exponentials go through mpmath at 30 significant digits.
"""

import mpmath as mp
import numpy as np

mp.mp.dps = 30


def expm_ref(a, scale=1.0):
    m = mp.matrix([[complex(z) for z in row] for row in np.asarray(a) * scale])
    e = mp.expm(m)
    return np.array([[complex(e[i, j]) for j in range(e.cols)] for i in range(e.rows)])


def kron_ref(a, b):
    a, b = np.asarray(a), np.asarray(b)
    out = np.zeros((a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]), dtype=complex)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            for k in range(b.shape[0]):
                for l in range(b.shape[1]):
                    out[i * b.shape[0] + k, j * b.shape[1] + l] = a[i, j] * b[k, l]
    return out


def central_difference(f, times, j, step=None):
    times = list(map(float, times))
    h = 1e-5 * (1 + abs(times[j])) if step is None else step
    up, dn = list(times), list(times)
    up[j] += h
    dn[j] -= h
    return (f(up) - f(dn)) / (2 * h)


# pinned with expm_ref; see test_oracles.py for the recomputation
DIAG_GAP_SX_SZ = 0.7992141739660587583880645604553823828618
ENTROPY_SXSX_PI_4 = 0.4908345050128027915532610277061872749351


def expm_taylor(a, scale=1.0, terms=30):
    """Truncated Taylor series after scaling by 2**-s, then squaring."""
    m = np.asarray(a, dtype=complex) * scale
    norm = np.abs(m).sum(axis=0).max()
    s = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0 else 0
    m = m / 2**s
    out = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ m / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out
