"""Scalar series kernels, written to compile under numba and to run unchanged in pure Python.

Every kernel returns plain tuples of floats/ints with an integer status code
(0 ok, 1 tolerance unmet at max_terms, 2 divergent/invalid region) instead of
raising, so the same code works jitted and unjitted; the public wrappers in
specfun/aef/akf translate statuses into exceptions or converged flags.

Magnitudes are carried as (ln|value|, sign) pairs wherever gamma-function
growth can overflow doubles: the composite-fading expressions multiply very
large Gamma terms by very small powers, and only the combination is
representable.
"""
from __future__ import annotations

import math

import numpy as np

from .backend import jit

_LN_RESCALE = 645.0  # e^645 is close to the overflow edge; rescale margin below it
_CF_TINY = 1e-300
_CF_EPS = 3e-15
_CF_MAX_ITER = 2000


@jit
def _is_nonpos_int(x):
    return x <= 0.0 and x == math.floor(x)


@jit
def _lgamma_sign(x):
    """(ln|Gamma(x)|, sign of Gamma(x)); sign 0.0 marks a pole."""
    if x > 0.0:
        return math.lgamma(x), 1.0
    if x == math.floor(x):
        return math.inf, 0.0
    # lgamma already returns ln|Gamma| for negative non-integers; Gamma alternates
    # sign on successive unit intervals below zero.
    if int(math.floor(x)) % 2 == 0:
        return math.lgamma(x), 1.0
    return math.lgamma(x), -1.0


@jit
def _lbeta(a, b):
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


@jit
def _betacf(a, b, x):
    """Lentz continued fraction for the regularized incomplete beta."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h, 0
    return h, 1


@jit
def reg_inc_beta(a, b, x, cx, lnx, lncx):
    """Regularized incomplete beta I_x(a,b) given x, 1-x and their logs.

    Passing both halves keeps full precision when x is within an ulp of 0 or 1
    (the CDF mixtures hit both ends). Returns (value, status).
    """
    if x <= 0.0:
        return 0.0, 0
    if cx <= 0.0:
        return 1.0, 0
    if x < (a + 1.0) / (a + b + 2.0):
        cf, st = _betacf(a, b, x)
        ln_bt = a * lnx + b * lncx - _lbeta(a, b)
        return math.exp(ln_bt) * cf / a, st
    cf, st = _betacf(b, a, cx)
    ln_bt = a * lnx + b * lncx - _lbeta(a, b)
    return 1.0 - math.exp(ln_bt) * cf / b, st


@jit
def _logaddexp(la, lb):
    if la == -math.inf:
        return lb
    if lb == -math.inf:
        return la
    if la > lb:
        return la + math.log1p(math.exp(lb - la))
    return lb + math.log1p(math.exp(la - lb))


@jit
def _ln_sigmoid_pair(ln_y):
    """For w = y/(1+y) with y = exp(ln_y): returns (ln w, ln(1-w))."""
    if ln_y > 0.0:
        t = math.log1p(math.exp(-ln_y))
        return -t, -ln_y - t
    t = math.log1p(math.exp(ln_y))
    return ln_y - t, -t


@jit
def _gauss_2f1_direct(a, b, c, z, rel_tol, abs_tol, max_terms):
    """Taylor series of 2F1 at |z| < 1. Returns (ln_abs, sign, terms, est_rel, status)."""
    t = 1.0
    s = 1.0
    ln_scale = 0.0
    small = 0
    n = 0
    est = 0.0
    while n < max_terms:
        t *= (a + n) * (b + n) / (c + n) * z / (n + 1.0)
        s += t
        n += 1
        at = abs(t)
        if t == 0.0:
            # numerator hit a non-positive integer: the series terminated exactly
            est = 0.0
            small = 2
            break
        est = at
        if at <= max(rel_tol * abs(s), abs_tol):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        if abs(s) > 1e290 or at > 1e290:
            s *= 1e-290
            t *= 1e-290
            ln_scale += math.log(1e290)
    status = 0 if small >= 2 else 1
    terms = min(n + 1, max_terms)
    if s == 0.0:
        return -math.inf, 0.0, terms, est, status
    sgn = 1.0 if s > 0.0 else -1.0
    return math.log(abs(s)) + ln_scale, sgn, terms, est / abs(s), status


@jit
def gauss_2f1_ln(a, b, c, z, rel_tol, abs_tol, max_terms, path):
    """Gauss 2F1 dispatch. path: 0 auto, 1 force direct series, 2 force Pfaff
    map, 3 force the same-argument Euler map.

    Returns (ln_abs, sign, terms, est_rel, status).
    """
    # terminating numerator: exact polynomial, any z
    a_term = _is_nonpos_int(a)
    b_term = _is_nonpos_int(b)
    if a_term or b_term:
        if a_term and b_term:
            nmax = int(-max(a, b))
        elif a_term:
            nmax = int(-a)
        else:
            nmax = int(-b)
        if _is_nonpos_int(c) and -c <= nmax - 1:
            return 0.0, 0.0, 0, 0.0, 2  # pole before termination
        t = 1.0
        s = 1.0
        ln_scale = 0.0
        for n in range(nmax):
            t *= (a + n) * (b + n) / (c + n) * z / (n + 1.0)
            s += t
            if abs(s) > 1e290 or abs(t) > 1e290:
                s *= 1e-290
                t *= 1e-290
                ln_scale += math.log(1e290)
        terms = min(nmax + 1, max_terms)
        if s == 0.0:
            return -math.inf, 0.0, terms, 0.0, 0
        sgn = 1.0 if s > 0.0 else -1.0
        return math.log(abs(s)) + ln_scale, sgn, terms, 0.0, 0
    if _is_nonpos_int(c):
        return 0.0, 0.0, 0, 0.0, 2
    if z == 0.0:
        return 0.0, 1.0, 1, 0.0, 0
    if path == 1:
        if abs(z) >= 1.0:
            return 0.0, 0.0, 0, 0.0, 2
        return _gauss_2f1_direct(a, b, c, z, rel_tol, abs_tol, max_terms)
    if path == 3:
        if z <= 0.0 or z >= 1.0:
            return 0.0, 0.0, 0, 0.0, 2
        ln_pref = (c - a - b) * math.log1p(-z)
        ln_f, sgn, terms, est, st = _gauss_2f1_direct(
            c - a, c - b, c, z, rel_tol, abs_tol, max_terms
        )
        return ln_pref + ln_f, sgn, terms, est, st
    if z < 0.0 or path == 2:
        if z >= 0.0:
            return 0.0, 0.0, 0, 0.0, 2  # Pfaff forced but z not negative
        # Pfaff map w = z/(z-1) in (0,1); pick the variant whose transformed
        # parameter sum is smaller (faster coefficient decay near w=1).
        w = z / (z - 1.0)
        if a <= b:
            ln_pref = -a * math.log1p(-z)
            ln_f, sgn, terms, est, st = _gauss_2f1_direct(
                a, c - b, c, w, rel_tol, abs_tol, max_terms
            )
        else:
            ln_pref = -b * math.log1p(-z)
            ln_f, sgn, terms, est, st = _gauss_2f1_direct(
                c - a, b, c, w, rel_tol, abs_tol, max_terms
            )
        return ln_pref + ln_f, sgn, terms, est, st
    if z < 1.0:
        if z <= 0.5 or c - a - b >= 0.0:
            return _gauss_2f1_direct(a, b, c, z, rel_tol, abs_tol, max_terms)
        # Euler map keeps the argument but flips the decay exponent positive
        ln_pref = (c - a - b) * math.log1p(-z)
        ln_f, sgn, terms, est, st = _gauss_2f1_direct(
            c - a, c - b, c, z, rel_tol, abs_tol, max_terms
        )
        return ln_pref + ln_f, sgn, terms, est, st
    if z == 1.0 and c - a - b > 0.0:
        # Gauss summation theorem
        ln1, s1 = _lgamma_sign(c)
        ln2, s2 = _lgamma_sign(c - a - b)
        ln3, s3 = _lgamma_sign(c - a)
        ln4, s4 = _lgamma_sign(c - b)
        if s3 == 0.0 or s4 == 0.0:
            return 0.0, 0.0, 0, 0.0, 2
        return ln1 + ln2 - ln3 - ln4, s1 * s2 * s3 * s4, 1, 0.0, 0
    return 0.0, 0.0, 0, 0.0, 2


@jit
def kummer_1f1_ln(a, b, z, rel_tol, abs_tol, max_terms):
    """Confluent 1F1. Returns (ln_abs, sign, terms, est_rel, status).

    z >= 0 is summed directly (all terms positive for a,b > 0); z < 0 goes
    through Kummer's transform e^z 1F1(b-a; b; -z) so the transformed series
    is again cancellation-free in the b > a cases this package produces.
    """
    if _is_nonpos_int(b) and not (_is_nonpos_int(a) and a > b):
        return 0.0, 0.0, 0, 0.0, 2
    ln_pref = 0.0
    if z < 0.0 and not _is_nonpos_int(a):
        ln_pref = z
        a = b - a
        z = -z
    t = 1.0
    s = 1.0
    ln_scale = 0.0
    small = 0
    n = 0
    est = 0.0
    while n < max_terms:
        t *= (a + n) / (b + n) * z / (n + 1.0)
        s += t
        n += 1
        at = abs(t)
        if t == 0.0:
            est = 0.0
            small = 2
            break
        est = at
        if at <= max(rel_tol * abs(s), abs_tol):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        if abs(s) > 1e290 or at > 1e290:
            s *= 1e-290
            t *= 1e-290
            ln_scale += math.log(1e290)
    status = 0 if small >= 2 else 1
    terms = min(n + 1, max_terms)
    if s == 0.0:
        return -math.inf, 0.0, terms, est, status
    sgn = 1.0 if s > 0.0 else -1.0
    return ln_pref + math.log(abs(s)) + ln_scale, sgn, terms, est / abs(s), status


@jit
def humbert_psi1_ln(a, b, c, cp, x, y, rel_tol, abs_tol, max_terms):
    """Humbert Psi1 double series summed over expanding anti-diagonals.

    Psi1(a;b;c,c';x,y) = sum_{m,n} (a)_{m+n} (b)_m / ((c)_m (c')_n) x^m y^n / (m! n!).
    Column m keeps its own running term T(m,n) advanced one n-step per
    diagonal, so no division by x or y ever happens (stable when either is
    tiny). b a non-positive integer truncates the m-range and lifts the
    |x| < 1 requirement. Negative x with non-terminating b is rewritten
    through Psi1(a,b;c,c';x,y) = (1-x)^(-a) Psi1(a,c-b;c,c';x/(x-1),y/(1-x)),
    whose terms do not alternate in m; without it the raw series cancels
    catastrophically once y is large. Returns (ln_abs, sign, diagonals,
    est_rel, status).
    """
    if _is_nonpos_int(cp):
        return 0.0, 0.0, 0, 0.0, 2
    ln_pref = 0.0
    if x < 0.0 and not _is_nonpos_int(b):
        ln_pref = -a * math.log1p(-x)
        b = c - b
        y = y / (1.0 - x)
        x = x / (x - 1.0)
    b_term = _is_nonpos_int(b)
    m_cap = max_terms + 1
    if b_term:
        m_cap = int(-b) + 1
    if not b_term and abs(x) >= 1.0:
        return 0.0, 0.0, 0, 0.0, 2
    if _is_nonpos_int(c) and not (b_term and int(-b) < int(-c) + 1):
        return 0.0, 0.0, 0, 0.0, 2
    cap = 4096
    if cap > max_terms + 2:
        cap = max_terms + 2
    col = np.zeros(cap)
    col[0] = 1.0
    ncols = 1  # columns m = 0..ncols-1 are live
    row_base = 1.0  # T(m,0) of the newest column
    s = 1.0  # running double sum (includes diagonal 0)
    ln_scale = 0.0
    small = 0
    diag = 0
    est = 0.0
    status = 1
    while diag < max_terms:
        diag += 1
        # advance every live column one step in n, accumulating the diagonal
        d_sum = 0.0
        for m in range(ncols):
            n = diag - m
            col[m] *= (a + diag - 1.0) * y / ((cp + n - 1.0) * n)
            d_sum += col[m]
        # open column m = diag (enters at n = 0)
        if diag < m_cap:
            row_base *= (a + diag - 1.0) * (b + diag - 1.0) * x / (
                (c + diag - 1.0) * diag
            )
            if diag >= cap:
                cap2 = cap * 2
                if cap2 > max_terms + 2:
                    cap2 = max_terms + 2
                col2 = np.zeros(cap2)
                for i in range(cap):
                    col2[i] = col[i]
                col = col2
                cap = cap2
            col[diag] = row_base
            ncols = diag + 1
            d_sum += row_base
        s += d_sum
        ad = abs(d_sum)
        est = ad
        if ad <= max(rel_tol * abs(s), abs_tol):
            small += 1
            if small >= 2:
                status = 0
                break
        else:
            small = 0
        peak = abs(s)
        for m in range(ncols):
            am = abs(col[m])
            if am > peak:
                peak = am
        if peak > 1e290:
            inv = 1e-290
            s *= inv
            row_base *= inv
            for m in range(ncols):
                col[m] *= inv
            ln_scale += math.log(1e290)
    terms = min(diag + 1, max_terms)
    if s == 0.0:
        return -math.inf, 0.0, terms, est, status
    sgn = 1.0 if s > 0.0 else -1.0
    return ln_pref + math.log(abs(s)) + ln_scale, sgn, terms, est / abs(s), status


@jit
def kdf_2_1_ln(a1, a2, b1, c1, x, y, rel_tol, abs_tol, max_terms):
    """Kampe de Feriet F^{2:0;0}_{1:1;0}[a1,a2; b1: c1; x, y], iterated summation.

    Outer sum over m in x (coefficients by recurrence), inner 2F1(a1+m, a2+m;
    b1+m; y) through the gauss dispatch. Converges for y < 1 and any x. For
    x >= 0 every outer term shares one sign and the sum is well conditioned
    (the composite-CDF usage); negative x alternates in m and relative
    accuracy degrades by the usual cancellation factor once the rows grow
    before decaying.

    When b1 = a2 + 1 with a1 > a2 > 0, x >= 0 and y < 0 (the contiguous
    structure the composite CDF produces), each row reduces to an incomplete
    beta with positive arguments, 2F1(A, B; B+1; y) =
    B |y|^(-B) B_w(B, A-B) at w = |y|/(1+|y|), so the rows are evaluated
    through the continued fraction instead of a power series. The series
    rows lose digits to internal cancellation once x |y| grows; the beta
    route keeps every factor positive at any magnitude.

    Returns (ln_abs, sign, terms, est_rel, status).
    """
    if _is_nonpos_int(b1) or _is_nonpos_int(c1):
        return 0.0, 0.0, 0, 0.0, 2
    # structural test up to a few ulps: b1 built as a2 + 1 in floating point
    # can sit one ulp off the exact offset, and snapping it changes the
    # function by far less than the row-evaluation error it avoids
    if (
        y < 0.0
        and x >= 0.0
        and abs(b1 - a2 - 1.0) <= 64.0 * 2.220446049250313e-16 * max(1.0, abs(b1))
        and a1 > a2 > 0.0
    ):
        ay = -y
        w = ay / (1.0 + ay)
        cw = 1.0 / (1.0 + ay)
        lnw = math.log(ay) - math.log1p(ay)
        lncw = -math.log1p(ay)
        ams = a1 - a2
        ln_y = math.log(ay)
        s = 0.0
        ln_scale = 0.0
        ln_coef = 0.0
        small = 0
        m = 0
        est = 0.0
        status = 1
        worst_inner = 0
        while m < max_terms:
            bm = a2 + m
            iw, ist = reg_inc_beta(bm, ams, w, cw, lnw, lncw)
            if ist != 0:
                worst_inner = 1
            term = 0.0
            if iw > 0.0:
                ln_row = math.log(bm) - bm * ln_y + _lbeta(bm, ams) + math.log(iw)
                e = ln_coef + ln_row - ln_scale
                if e > _LN_RESCALE:
                    shift = e - 600.0
                    s *= math.exp(-shift)
                    ln_scale += shift
                    e = 600.0
                term = math.exp(e)
            s += term
            m += 1
            est = term
            if term <= max(rel_tol * s, abs_tol):
                small += 1
                if small >= 2:
                    status = 0
                    break
            else:
                small = 0
            ratio = (a1 + m - 1.0) * (a2 + m - 1.0) * x / (
                (b1 + m - 1.0) * (c1 + m - 1.0) * m
            )
            if ratio == 0.0:
                est = 0.0
                status = 0
                break
            ln_coef += math.log(ratio)
        if worst_inner == 1 and status == 0:
            status = 1
        if s == 0.0:
            return -math.inf, 0.0, m, est, status
        return math.log(s) + ln_scale, 1.0, m, est / s, status
    s = 0.0
    ln_scale = 0.0
    ln_coef = 0.0  # ln |(a1)_m (a2)_m / ((b1)_m (c1)_m m!) x^m|
    sgn_coef = 1.0
    small = 0
    m = 0
    est = 0.0
    status = 1
    worst_inner = 0
    while m < max_terms:
        ln_f, sgn_f, in_terms, in_est, in_st = gauss_2f1_ln(
            a1 + m, a2 + m, b1 + m, y, rel_tol, abs_tol, max_terms, 0
        )
        if in_st == 2:
            return 0.0, 0.0, m, 0.0, 2
        if in_st == 1:
            worst_inner = 1
        e = ln_coef + ln_f - ln_scale
        if e > _LN_RESCALE:
            shift = e - 600.0
            s *= math.exp(-shift)
            ln_scale += shift
            e = 600.0
        term = sgn_coef * sgn_f * math.exp(e)
        s += term
        m += 1
        at = abs(term)
        est = at
        if at <= max(rel_tol * abs(s), abs_tol):
            small += 1
            if small >= 2:
                status = 0
                break
        else:
            small = 0
        ratio = (a1 + m - 1.0) * (a2 + m - 1.0) * x / (
            (b1 + m - 1.0) * (c1 + m - 1.0) * m
        )
        # m starts the *next* coefficient here: advance from m-1 to m
        if ratio == 0.0:
            est = 0.0
            status = 0
            break
        ln_coef += math.log(abs(ratio))
        if ratio < 0.0:
            sgn_coef = -sgn_coef
    if worst_inner == 1 and status == 0:
        status = 1
    if s == 0.0:
        return -math.inf, 0.0, m, est, status
    sgn = 1.0 if s > 0.0 else -1.0
    return math.log(abs(s)) + ln_scale, sgn, m, est / abs(s), status


# --- composite-distribution kernels -----------------------------------------


@jit
def aef_snr_pdf_kernel(alpha, mu, ms, h, hsq, ln_lam, g, rel_tol, abs_tol, max_terms):
    """Density of the alpha-eta-F instantaneous SNR at g > 0. Returns (value, status)."""
    ln_g = math.log(g)
    gexp = 0.5 * alpha * ln_g
    ln_den = _logaddexp(math.log(2.0 * mu * h) + gexp, ln_lam)
    z = hsq * math.exp(2.0 * (math.log(2.0 * mu) + gexp) - 2.0 * ln_den)
    ln_f, sgn_f, _, _, st = gauss_2f1_ln(
        mu + 0.5 * ms, mu + 0.5 * (ms + 1.0), mu + 0.5, z, rel_tol, abs_tol, max_terms, 0
    )
    if st != 0:
        return 0.0, st
    ln_pdf = (
        math.log(alpha)
        + (2.0 * mu - 1.0) * math.log(2.0)
        + 2.0 * mu * math.log(mu)
        + mu * math.log(h)
        + ms * ln_lam
        + (alpha * mu - 1.0) * ln_g
        - _lbeta(2.0 * mu, ms)
        - (2.0 * mu + ms) * ln_den
        + ln_f
    )
    return sgn_f * math.exp(ln_pdf), 0


@jit
def aef_envelope_pdf_kernel(alpha, mu, ms, h, hsq, ln_lam, r, rel_tol, abs_tol, max_terms):
    """Envelope density of the alpha-eta-F model at r > 0, Lambda built from Omega."""
    ln_r = math.log(r)
    rexp = alpha * ln_r
    ln_den = _logaddexp(math.log(2.0 * mu * h) + rexp, ln_lam)
    z = hsq * math.exp(2.0 * (math.log(2.0 * mu) + rexp) - 2.0 * ln_den)
    ln_f, sgn_f, _, _, st = gauss_2f1_ln(
        mu + 0.5 * ms, mu + 0.5 * (ms + 1.0), mu + 0.5, z, rel_tol, abs_tol, max_terms, 0
    )
    if st != 0:
        return 0.0, st
    ln_pdf = (
        math.log(alpha)
        + 2.0 * mu * math.log(2.0)
        + 2.0 * mu * math.log(mu)
        + mu * math.log(h)
        + ms * ln_lam
        + (2.0 * alpha * mu - 1.0) * ln_r
        - _lbeta(2.0 * mu, ms)
        - (2.0 * mu + ms) * ln_den
        + ln_f
    )
    return sgn_f * math.exp(ln_pdf), 0


@jit
def aef_snr_cdf_kernel(alpha, mu, ms, h, hsq, ln_lam, g, rel_tol, abs_tol, max_terms):
    """CDF of the alpha-eta-F SNR as a mixture over k of regularized incomplete betas.

    The k-th series term of the CDF equals c_k I_w(2mu+2k, ms) with
    w = y/(1+y), y = 2 mu h g^(alpha/2) / Lambda, and c_k = h^-mu (mu)_k /
    k! (H/h)^(2k); this is the exact identity 2F1(B+ms, B; B+1; -y) =
    B y^-B Beta(B,ms) I_w(B, ms) applied term by term, so no transformed
    series is needed at large y. The c_k sum to 1 because h^2 - H^2 = h in
    both geometry formats. Returns (raw_value, terms, est_error_abs, status).
    """
    ln_y = math.log(2.0 * mu * h) + 0.5 * alpha * math.log(g) - ln_lam
    lnw, lncw = _ln_sigmoid_pair(ln_y)
    w = math.exp(lnw)
    cw = math.exp(lncw)
    i0, st0 = reg_inc_beta(2.0 * mu, ms, w, cw, lnw, lncw)
    if st0 != 0:
        return 0.0, 1, 0.0, 1
    if hsq == 0.0:
        # eta = 1: only the k = 0 term survives
        return i0, 1, 0.0, 0
    ln_q = math.log(abs(hsq)) - 2.0 * math.log(h)
    sgn_h = 1.0 if hsq > 0.0 else -1.0
    ln_coef = -mu * math.log(h)
    sgn = 1.0
    term = sgn * math.exp(ln_coef) * i0
    s = term
    small = 0
    k = 0
    bk = 2.0 * mu
    est = abs(term)
    status = 1
    while k + 1 < max_terms:
        ln_coef += ln_q + math.log(mu + k) - math.log(k + 1.0)
        sgn *= sgn_h
        bk += 2.0
        k += 1
        ik, stk = reg_inc_beta(bk, ms, w, cw, lnw, lncw)
        if stk != 0:
            return s, k + 1, est, 1
        term = sgn * math.exp(ln_coef) * ik
        s += term
        est = abs(term)
        if est <= max(rel_tol * abs(s), abs_tol):
            small += 1
            if small >= 2:
                status = 0
                break
        else:
            small = 0
    return s, k + 1, est, status


@jit
def aef_cdf_bound_kernel(alpha, mu, ms, h, hsq, ln_lam, g, k0, rel_tol, abs_tol, max_terms):
    """Closed-form upper bound on the CDF-series remainder after K0-1 terms.

    Includes the series' common prefactor 2^(2mu-1) h^mu / (Gamma(2mu)Gamma(ms)).
    The bounding 2F1 argument is w = (2 mu H g^(alpha/2)/Lambda)^2; for w >= 1
    that series has no convergent real form and status 2 is returned.
    Returns (value, status).
    """
    gexp = 0.5 * alpha * math.log(g)
    w = 0.0
    if hsq != 0.0:
        ln_w = 2.0 * (math.log(2.0 * mu) + gexp) + math.log(abs(hsq)) - 2.0 * ln_lam
        w = math.copysign(math.exp(ln_w), hsq)
    if w >= 1.0:
        return 0.0, 2
    ln_f2, sgn_f2, _, _, st2 = gauss_2f1_ln(
        0.5 * (2.0 * mu + ms),
        0.5 * (2.0 * mu + ms + 1.0),
        mu + 0.5,
        w,
        rel_tol,
        abs_tol,
        max_terms,
        0,
    )
    if st2 != 0:
        return 0.0, st2
    # leading 2F1(-y) factor through the incomplete-beta identity
    b0 = 2.0 * mu + 2.0 * k0
    ln_y = math.log(2.0 * mu * h) + gexp - ln_lam
    lnw1, lncw1 = _ln_sigmoid_pair(ln_y)
    iw, sti = reg_inc_beta(b0, ms, math.exp(lnw1), math.exp(lncw1), lnw1, lncw1)
    if sti != 0:
        return 0.0, 1
    if iw <= 0.0:
        return 0.0, 0
    ln_f1 = math.log(b0) - b0 * ln_y + _lbeta(b0, ms) + math.log(iw)
    ln_x = math.log(mu) + gexp - ln_lam
    ln_t = (
        (2.0 * mu - 1.0) * math.log(2.0)
        + mu * math.log(h)
        - math.lgamma(2.0 * mu)
        - math.lgamma(ms)
        + ln_f1
        + 2.0 * mu * ln_x
        + math.lgamma(ms + 2.0 * mu)
        - math.log(mu + k0)
        + ln_f2
    )
    return sgn_f2 * math.exp(ln_t), 0


@jit
def akf_snr_pdf_kernel(alpha, mu, ms, kappa, ln_lam, g, rel_tol, abs_tol, max_terms):
    """Density of the alpha-kappa-F instantaneous SNR at g > 0. Returns (value, status).

    kappa below 1e-10 routes through the exact kappa -> 0 limit (alpha-F form).
    """
    ln_g = math.log(g)
    gexp = 0.5 * alpha * ln_g
    if kappa < 1e-10:
        ln_den = _logaddexp(math.log(mu) + gexp, ln_lam)
        ln_pdf = (
            math.log(alpha)
            + mu * math.log(mu)
            + ms * ln_lam
            - math.log(2.0)
            - _lbeta(mu, ms)
            - (mu + ms) * ln_den
            + (0.5 * alpha * mu - 1.0) * ln_g
        )
        return math.exp(ln_pdf), 0
    ln_den = _logaddexp(math.log(mu * (1.0 + kappa)) + gexp, ln_lam)
    x = mu * kappa * math.exp(math.log(mu * (1.0 + kappa)) + gexp - ln_den)
    ln_f, sgn_f, _, _, st = kummer_1f1_ln(mu + ms, mu, x, rel_tol, abs_tol, max_terms)
    if st != 0:
        return 0.0, st
    ln_pdf = (
        math.log(alpha)
        + mu * math.log(mu)
        + mu * math.log1p(kappa)
        + ms * ln_lam
        - mu * kappa
        - math.log(2.0)
        - _lbeta(mu, ms)
        - (mu + ms) * ln_den
        + (0.5 * alpha * mu - 1.0) * ln_g
        + ln_f
    )
    return sgn_f * math.exp(ln_pdf), 0


@jit
def akf_envelope_pdf_kernel(alpha, mu, ms, kappa, ln_lam, r, rel_tol, abs_tol, max_terms):
    """Envelope density of the alpha-kappa-F model at r > 0, Lambda built from Omega."""
    ln_r = math.log(r)
    rexp = alpha * ln_r
    if kappa < 1e-10:
        ln_den = _logaddexp(math.log(mu) + rexp, ln_lam)
        ln_pdf = (
            math.log(alpha)
            + mu * math.log(mu)
            + ms * ln_lam
            - _lbeta(mu, ms)
            - (mu + ms) * ln_den
            + (alpha * mu - 1.0) * ln_r
        )
        return math.exp(ln_pdf), 0
    ln_den = _logaddexp(math.log(mu * (1.0 + kappa)) + rexp, ln_lam)
    x = mu * kappa * math.exp(math.log(mu * (1.0 + kappa)) + rexp - ln_den)
    ln_f, sgn_f, _, _, st = kummer_1f1_ln(mu + ms, mu, x, rel_tol, abs_tol, max_terms)
    if st != 0:
        return 0.0, st
    ln_pdf = (
        math.log(alpha)
        + mu * math.log(mu)
        + mu * math.log1p(kappa)
        + ms * ln_lam
        - mu * kappa
        - _lbeta(mu, ms)
        - (mu + ms) * ln_den
        + (alpha * mu - 1.0) * ln_r
        + ln_f
    )
    return sgn_f * math.exp(ln_pdf), 0


@jit
def akf_snr_cdf_kernel(alpha, mu, ms, kappa, ln_lam, g, rel_tol, abs_tol, max_terms):
    """CDF of the alpha-kappa-F SNR: Poisson mixture of regularized incomplete betas.

    The t-th series term equals e^(-mu kappa)(mu kappa)^t/t! I_w1(mu+t, ms)
    with w1 = X1/(1+X1), X1 = mu(1+kappa) g^(alpha/2)/Lambda (same incomplete
    beta identity as the alpha-eta-F CDF). Returns (raw, terms, est, status).
    """
    ln_x1 = math.log(mu * (1.0 + kappa)) + 0.5 * alpha * math.log(g) - ln_lam
    lnw, lncw = _ln_sigmoid_pair(ln_x1)
    w = math.exp(lnw)
    cw = math.exp(lncw)
    i0, st0 = reg_inc_beta(mu, ms, w, cw, lnw, lncw)
    if st0 != 0:
        return 0.0, 1, 0.0, 1
    mk = mu * kappa
    if kappa < 1e-10:
        return i0, 1, 0.0, 0
    ln_p = -mk  # ln of the Poisson weight, t = 0
    term = math.exp(ln_p) * i0
    s = term
    small = 0
    t = 0
    est = term
    status = 1
    while t + 1 < max_terms:
        t += 1
        ln_p += math.log(mk) - math.log(t)
        it, stt = reg_inc_beta(mu + t, ms, w, cw, lnw, lncw)
        if stt != 0:
            return s, t + 1, est, 1
        term = math.exp(ln_p) * it
        s += term
        est = term
        if term <= max(rel_tol * s, abs_tol):
            small += 1
            if small >= 2:
                status = 0
                break
        else:
            small = 0
    return s, t + 1, est, status
