"""Index-set elaborations: the splitting steps behind both fast algorithms.

Four reversible steps relate a signal to smaller ones:

  * time-parity split: route even-index and odd-index samples to two
    children (no arithmetic); recombining the child spectra costs two
    adds per mirrored harmonic pair.
  * harmonic-parity split: form sum and difference children so that one
    child carries the even harmonics and the other the odd harmonics
    (two adds per paired time index); recombining is a free interleave.
  * even-harmonic halving: a signal whose stored harmonics are all even
    is reread at half the periodization (free, same buffer).
  * even-time halving: a signal whose stored samples sit at even indices
    is reread at half the periodization (free, same buffer).

Array kernels below work on buffers in stored-slot order, either one
signal (rows,) or a batch (rows, signals).  For sine-kind signals the
sum child is the odd-harmonic child; for cosine-kind signals it is the
even-harmonic child.  The dc_t1t mother stores nothing at index N/2, so
its n = 0 pairing adds an explicit zero; those adds are still charged.
"""

import numpy as np

from .counting import cadd, csub, rows_like
from .taxonomy import SignalView

TIME_SPLIT_CHILDREN = {
    "dc_tt": ("dc_et", "dc_ot"),
    "ds_tt": ("ds_et", "ds_ot"),
    "dc_t1t": ("dc_et", "dc_ot"),
}

HARMONIC_SPLIT_CHILDREN = {
    "dc_tt": ("dc_te", "dc_to"),
    "dc_ot": ("dc_oe", "dc_oo"),
    "ds_tt": ("ds_te", "ds_to"),
    "ds_ot": ("ds_oe", "ds_oo"),
    "dc_t1t": ("dc_te", "dc_to"),
}

HALVE_HARMONICS_CHILD = {
    "dc_te": "dc_tt",
    "dc_oe": "dc_ot",
    "ds_te": "ds_tt",
    "ds_oe": "ds_ot",
    "dc_t1e": "dc_t1t",
}

HALVE_TIME_CHILD = {
    "dc_et": "dc_tt",
    "ds_et": "ds_tt",
}


def split_time_parity_forward(sig_type, N, x):
    """Route samples by index parity; returns (even child, odd child) buffers."""
    if sig_type == "dc_tt":
        return x[0::2], x[1::2]
    if sig_type == "ds_tt":
        # slots are n-1, so even indices live in the odd slots
        return x[1::2], x[0::2]
    if sig_type == "dc_t1t":
        even = rows_like(x, N // 4 + 1)
        even[:-1] = x[0::2]
        even[-1] = 0.0  # index N/2 is not stored by the mother
        return even, x[1::2]
    raise ValueError(f"time-parity split undefined for {sig_type}")


def split_time_parity_backward(sig_type, N, spec_even, spec_odd, counter):
    """Combine child spectra into the mother spectrum.

    Each harmonic pair (k, N/2-k) costs two adds; the middle harmonic
    N/4 is a free copy from the child whose spectrum reaches it.
    """
    q = N // 4
    if sig_type in ("dc_tt", "dc_t1t"):
        out = rows_like(spec_even, N // 2 + 1)
        out[0:q] = cadd(counter, spec_even[0:q], spec_odd)
        out[N // 2:q:-1] = csub(counter, spec_even[0:q], spec_odd)
        out[q] = spec_even[q]
        return out
    if sig_type == "ds_tt":
        out = rows_like(spec_odd, N // 2 - 1)
        out[0:q - 1] = cadd(counter, spec_odd[0:q - 1], spec_even)
        out[N // 2 - 2:q - 1:-1] = csub(counter, spec_odd[0:q - 1], spec_even)
        out[q - 1] = spec_odd[q - 1]
        return out
    raise ValueError(f"time-parity split undefined for {sig_type}")


def split_harmonic_parity_forward(sig_type, N, x, counter):
    """Fold mirrored sample pairs; returns (even-harmonic, odd-harmonic) buffers."""
    q, m = N // 4, N // 2
    if sig_type == "dc_tt":
        a, b = x[0:q], x[m:q:-1]
        even = rows_like(x, q + 1)
        even[:q] = cadd(counter, a, b)
        even[q] = x[q]
        return even, csub(counter, a, b)
    if sig_type == "dc_t1t":
        a = x[1:q]
        b = x[m - 1:m - q:-1]
        even = rows_like(x, q + 1)
        odd = rows_like(x, q)
        even[0] = cadd(counter, x[0], 0.0)
        odd[0] = csub(counter, x[0], 0.0)
        even[1:q] = cadd(counter, a, b)
        odd[1:q] = csub(counter, a, b)
        even[q] = x[q]
        return even, odd
    if sig_type == "dc_ot":
        h = N // 8
        a, b = x[0:h], x[q - 1:q - h - 1:-1]
        return cadd(counter, a, b), csub(counter, a, b)
    if sig_type == "ds_tt":
        a, b = x[0:q - 1], x[m - 2:q - 1:-1]
        odd = rows_like(x, q)
        odd[:q - 1] = cadd(counter, a, b)
        odd[q - 1] = x[q - 1]  # the N/4 sample only feeds odd harmonics
        return csub(counter, a, b), odd
    if sig_type == "ds_ot":
        h = N // 8
        a, b = x[0:h], x[q - 1:q - h - 1:-1]
        return csub(counter, a, b), cadd(counter, a, b)
    raise ValueError(f"harmonic-parity split undefined for {sig_type}")


def split_harmonic_parity_backward(sig_type, N, spec_even, spec_odd):
    """Interleave child spectra into the mother spectrum; no arithmetic."""
    q, m = N // 4, N // 2
    if sig_type in ("dc_tt", "dc_t1t"):
        out = rows_like(spec_even, m + 1)
        out[0::2], out[1::2] = spec_even, spec_odd
        return out
    if sig_type == "dc_ot":
        out = rows_like(spec_even, q)
        out[0::2], out[1::2] = spec_even, spec_odd
        return out
    if sig_type == "ds_tt":
        out = rows_like(spec_odd, m - 1)
        out[1::2], out[0::2] = spec_even, spec_odd
        return out
    if sig_type == "ds_ot":
        out = rows_like(spec_odd, q)
        out[1::2], out[0::2] = spec_even, spec_odd
        return out
    raise ValueError(f"harmonic-parity split undefined for {sig_type}")


def halve_even_harmonics(sig_type, N):
    """Reread an even-harmonic signal at half periodization; buffer unchanged."""
    return HALVE_HARMONICS_CHILD[sig_type], N // 2


def halve_even_times(sig_type, N):
    """Reread an even-time signal at half periodization; buffer unchanged."""
    return HALVE_TIME_CHILD[sig_type], N // 2


# -- SignalView wrappers ----------------------------------------------------

def split_time_parity(view):
    even, odd = split_time_parity_forward(view.type, view.N, view.buffer)
    et, ot = TIME_SPLIT_CHILDREN[view.type]
    return SignalView(et, view.N, even), SignalView(ot, view.N, odd)


def split_harmonic_parity(view, counter):
    even, odd = split_harmonic_parity_forward(view.type, view.N, view.buffer, counter)
    et, ot = HARMONIC_SPLIT_CHILDREN[view.type]
    return SignalView(et, view.N, even), SignalView(ot, view.N, odd)


def halve_view_harmonics(view):
    child_type, half_n = halve_even_harmonics(view.type, view.N)
    return SignalView(child_type, half_n, view.buffer)


def halve_view_times(view):
    child_type, half_n = halve_even_times(view.type, view.N)
    # even-time halving keeps the values and reindexes n -> n/2
    return SignalView(child_type, half_n, view.buffer)
