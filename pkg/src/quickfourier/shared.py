"""Real-field drivers shared by both fast transform variants.

A real DFT folds into one even-symmetric (cosine) and one odd-symmetric
(sine) problem; a complex DFT runs one real DFT per component and then
recombines mirrored harmonics.  These two reductions are the same for
the classical and the improved recursion, so one implementation serves
both, parameterized by the cosine/sine transform callables.

Buffer conventions (one signal per column when batched):
  * real input: cell n holds s(n), n = 0..N-1.
  * packed half spectrum: [Re(0), Re(1), Im(1), Re(2), Im(2), ..., Re(N/2)],
    N real cells for the N/2+1 reported harmonics.
  * interleaved complex: cell 2n holds Re, cell 2n+1 holds Im.
"""

import numpy as np

from .counting import cadd, csub, rows_like


def rdft_packed(x, N, dct_fn, dst_fn, table, counter):
    """Packed half spectrum of a real signal via one cosine and one sine transform."""
    if N == 2:
        out = rows_like(x, 2)
        out[0] = cadd(counter, x[0], x[1])
        out[1] = csub(counter, x[0], x[1])
        return out
    m = N // 2
    head = x[1:m]
    tail = x[N - 1:m:-1]
    dc = rows_like(x, m + 1)
    dc[0] = x[0]
    dc[m] = x[m]
    dc[1:m] = cadd(counter, head, tail)  # even-symmetric part
    ds = csub(counter, head, tail)       # odd-symmetric part
    spec_c = dct_fn(dc, N, table, counter)
    spec_s = dst_fn(ds, N, table, counter)
    out = rows_like(x, N)
    out[0] = spec_c[0]
    out[N - 1] = spec_c[m]
    out[1:N - 1:2] = spec_c[1:m]
    out[2:N - 1:2] = -spec_s  # Im(k) = -sine spectrum; the sign flip is free
    return out


def cdft_interleaved(x, N, dct_fn, dst_fn, table, counter):
    """Interleaved complex spectrum from one real DFT per component."""
    if N == 2:
        out = rows_like(x, 4)
        out[0] = cadd(counter, x[0], x[2])
        out[1] = cadd(counter, x[1], x[3])
        out[2] = csub(counter, x[0], x[2])
        out[3] = csub(counter, x[1], x[3])
        return out
    m = N // 2
    r1 = rdft_packed(x[0::2], N, dct_fn, dst_fn, table, counter)
    r2 = rdft_packed(x[1::2], N, dct_fn, dst_fn, table, counter)
    out = rows_like(x, 2 * N)
    # harmonics 0 and N/2 are real in each half-spectrum: plain copies
    out[0] = r1[0]
    out[1] = r2[0]
    out[N] = r1[N - 1]
    out[N + 1] = r2[N - 1]
    a = r1[1:N - 1:2]  # Re of component-1 spectrum, k = 1..N/2-1
    b = r1[2:N - 1:2]  # Im of component-1 spectrum
    c = r2[1:N - 1:2]  # Re of component-2 spectrum
    d = r2[2:N - 1:2]  # Im of component-2 spectrum
    out[2:N - 1:2] = csub(counter, a, d)        # Re S(k)
    out[2 * N - 2:N:-2] = cadd(counter, a, d)   # Re S(N-k)
    out[3:N:2] = cadd(counter, b, c)            # Im S(k)
    out[2 * N - 1:N + 1:-2] = csub(counter, c, b)  # Im S(N-k)
    return out


# -- uncounted boundary packing ---------------------------------------------

def interleave_complex(z, dtype):
    """Interleaved real buffer from a complex signal (vector or columns)."""
    z = np.asarray(z)
    buf = np.empty((2 * z.shape[0],) + z.shape[1:], dtype=dtype)
    buf[0::2] = z.real
    buf[1::2] = z.imag
    return buf


def complex_from_interleaved(buf):
    cdtype = np.complex64 if buf.dtype == np.float32 else np.complex128
    out = np.empty((buf.shape[0] // 2,) + buf.shape[1:], dtype=cdtype)
    out.real = buf[0::2]
    out.imag = buf[1::2]
    return out


def complex_from_packed(buf, N):
    cdtype = np.complex64 if buf.dtype == np.float32 else np.complex128
    out = np.zeros((N // 2 + 1,) + buf.shape[1:], dtype=cdtype)
    out.real[0] = buf[0]
    out.real[N // 2] = buf[N - 1]
    out.real[1:N // 2] = buf[1:N - 1:2]
    out.imag[1:N // 2] = buf[2:N - 1:2]
    return out
