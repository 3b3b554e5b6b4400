# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: catalog fields and their contour integrals.

Same API and field codes as ``_pykernels``; complex arithmetic is spelled
out on (re, im) pairs so the module needs nothing beyond libm.
"""

from libc.math cimport atan2, cos, cosh, exp, hypot, isfinite, log, sin, sinh, fabs
from libc.stdlib cimport free, malloc, qsort, realloc

from ..errors import BDomainError, QuadratureError

BACKEND = "compiled"

cdef enum:
    MAX_EVALS = 2000000

cdef double XGK[8]
cdef double WGK[8]
cdef double WG[4]
XGK[:] = [0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
          0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
          0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
          0.207784955007898467600689403773245, 0.0]
WGK[:] = [0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
          0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
          0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
          0.204432940075298892414161999234649, 0.209482141084727828012999174891714]
WG[:] = [0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
         0.381830050505118944950369775488975, 0.417959183673469387755102040816327]


cdef struct Field:
    int code
    bint star
    double pre
    double pim
    double r0
    double th0
    double dr
    double dth


cdef inline int field_value(int code, bint star, double pre, double pim,
                            double r, double th, double* hre, double* him) nogil:
    """Writes ln R + i Theta of the field; returns 1 at a singular point."""
    cdef double x = log(r), y = th
    cdef double gre, gim, dre, dim, e, m, c, s
    if code == 0:
        gre, gim, dre, dim = pre, pim, 0.0, 0.0
    elif code == 1:
        gre, gim, dre, dim = x, y, 1.0, 0.0
    elif code == 2:
        gre = pre * x - pim * y
        gim = pre * y + pim * x
        dre, dim = pre, pim
    elif code == 3:
        e = exp(x)
        gre = e * cos(y)
        gim = e * sin(y)
        dre, dim = gre, gim
    elif code == 4:
        m = x * x + y * y
        if m == 0.0:
            return 1
        gre = log(hypot(x, y))
        gim = atan2(y, x)
        dre = x / m
        dim = -y / m
    elif code == 5:
        gre = cosh(x) * cos(y)
        gim = sinh(x) * sin(y)
        dre = sinh(x) * cos(y)
        dim = cosh(x) * sin(y)
    elif code == 6:
        gre = sinh(x) * cos(y)
        gim = cosh(x) * sin(y)
        dre = cosh(x) * cos(y)
        dim = sinh(x) * sin(y)
    elif code == 7:
        gre = cos(x) * cosh(y)
        gim = -sin(x) * sinh(y)
        dre = -sin(x) * cosh(y)
        dim = -cos(x) * sinh(y)
    elif code == 8:
        gre = sin(x) * cosh(y)
        gim = cos(x) * sinh(y)
        dre = cos(x) * cosh(y)
        dim = -sin(x) * sinh(y)
    else:
        return 2
    if star:
        c = cos(th)
        s = sin(th)
        hre[0] = (dre * c + dim * s) / r
        him[0] = (dim * c - dre * s) / r
    else:
        hre[0] = gre
        him[0] = gim
    return 0


cdef inline int integrand(Field* f, double t, double* out_re, double* out_im) nogil:
    cdef double r = f.r0 + t * f.dr
    cdef double th = f.th0 + t * f.dth
    cdef double a, b, c, s, P, M
    cdef int status = field_value(f.code, f.star, f.pre, f.pim, r, th, &a, &b)
    if status:
        return status
    c = cos(th)
    s = sin(th)
    P = a * c - b * s
    M = a * s + b * c
    # Q = r M, N = r P
    out_re[0] = P * f.dr - r * M * f.dth
    out_im[0] = M * f.dr + r * P * f.dth
    return 0


cdef int panel(Field* f, double lo, double hi, double* k, double* err) nogil:
    cdef double c = 0.5 * (lo + hi)
    cdef double h = 0.5 * (hi - lo)
    cdef double f1r, f1i, f2r, f2i, fcr, fci
    cdef double kr, ki, gr, gi, sr, si, dx
    cdef int i, status
    status = integrand(f, c, &fcr, &fci)
    if status:
        return status
    kr = WGK[7] * fcr
    ki = WGK[7] * fci
    gr = WG[3] * fcr
    gi = WG[3] * fci
    for i in range(7):
        dx = h * XGK[i]
        status = integrand(f, c - dx, &f1r, &f1i)
        if status:
            return status
        status = integrand(f, c + dx, &f2r, &f2i)
        if status:
            return status
        sr = f1r + f2r
        si = f1i + f2i
        kr += WGK[i] * sr
        ki += WGK[i] * si
        if i % 2 == 1:
            gr += WG[i // 2] * sr
            gi += WG[i // 2] * si
    k[0] = h * kr
    k[1] = h * ki
    err[0] = fabs(h * (kr - gr))
    err[1] = fabs(h * (ki - gi))
    return 0


def log_value(int code, bint star, double pre, double pim, double r, double theta):
    """``ln R + i*Theta`` of the addressed field at ``(r, theta)``."""
    cdef double a, b
    cdef int status = field_value(code, star, pre, pim, r, theta, &a, &b)
    if status == 1:
        raise BDomainError("log field is singular at (1, 0)")
    if status:
        raise BDomainError(f"unknown kernel code {code}")
    return complex(a, b)


cdef struct Panel:
    double lo
    double hi
    double k[2]
    double err[2]
    double key
    long seq
    int depth


cdef inline bint worse(Panel* a, Panel* b) nogil:
    # max-heap on error, oldest first on ties (matches the Python heap)
    if a.key != b.key:
        return a.key > b.key
    return a.seq < b.seq


cdef void sift_up(Panel* h, long i) nogil:
    cdef Panel tmp
    cdef long parent
    while i > 0:
        parent = (i - 1) // 2
        if not worse(&h[i], &h[parent]):
            break
        tmp = h[i]
        h[i] = h[parent]
        h[parent] = tmp
        i = parent


cdef void sift_down(Panel* h, long n, long i) nogil:
    cdef Panel tmp
    cdef long l, best
    while True:
        l = 2 * i + 1
        best = i
        if l < n and worse(&h[l], &h[best]):
            best = l
        if l + 1 < n and worse(&h[l + 1], &h[best]):
            best = l + 1
        if best == i:
            break
        tmp = h[i]
        h[i] = h[best]
        h[best] = tmp
        i = best


cdef int by_lo(const void* a, const void* b) noexcept nogil:
    cdef double x = (<Panel*>a).lo, y = (<Panel*>b).lo
    return (x > y) - (x < y)


cdef double kahan_total(Panel* h, long n, int which, int comp) nogil:
    # which: 0 = value, 1 = error
    cdef double s = 0.0, c = 0.0, y, t, v
    cdef long i
    for i in range(n):
        v = h[i].k[comp] if which == 0 else h[i].err[comp]
        y = v - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


cdef int make_panel(Field* f, Panel* p, double lo, double hi, int depth, long seq) nogil:
    cdef int status = panel(f, lo, hi, p.k, p.err)
    if status:
        return status
    if not (isfinite(p.k[0]) and isfinite(p.k[1])):
        return 3
    p.lo = lo
    p.hi = hi
    p.depth = depth
    p.seq = seq
    p.key = p.err[0] if p.err[0] > p.err[1] else p.err[1]
    return 0


def integrate_linear(int code, bint star, double pre, double pim,
                     double r0, double th0, double r1, double th1,
                     double tol, int max_depth=48):
    """Line integrals of ``P dr - Q dtheta`` and ``M dr + N dtheta``.

    Same contract and refinement order as the pure-Python kernel.
    """
    cdef Field f
    cdef Panel* h
    cdef Panel* grown
    cdef Panel worst
    cdef long n = 0, cap = 64, seq = 0, nev = 0
    cdef int status = 0
    cdef double run0 = 0.0, run1 = 0.0, e0, e1, re, im, mid
    if not tol > 0:
        raise QuadratureError("tolerance must be positive")
    f.code = code
    f.star = star
    f.pre = pre
    f.pim = pim
    f.r0 = r0
    f.th0 = th0
    f.dr = r1 - r0
    f.dth = th1 - th0
    h = <Panel*>malloc(cap * sizeof(Panel))
    if h == NULL:
        raise MemoryError()
    try:
        with nogil:
            status = make_panel(&f, &h[0], 0.0, 1.0, 0, seq)
            nev = 15
            seq = 1
            n = 1
            if status == 0:
                run0 = h[0].err[0]
                run1 = h[0].err[1]
            while status == 0:
                if run0 <= tol and run1 <= tol:
                    e0 = kahan_total(h, n, 1, 0)
                    e1 = kahan_total(h, n, 1, 1)
                    if e0 <= tol and e1 <= tol:
                        break
                    run0 = e0
                    run1 = e1
                worst = h[0]
                if worst.depth >= max_depth:
                    status = 4
                    break
                if nev + 30 > MAX_EVALS:
                    status = 5
                    break
                if n + 1 > cap:
                    grown = <Panel*>realloc(h, 2 * cap * sizeof(Panel))
                    if grown == NULL:
                        status = 6
                        break
                    h = grown
                    cap *= 2
                # pop the worst panel, then push its two halves
                n -= 1
                h[0] = h[n]
                sift_down(h, n, 0)
                run0 -= worst.err[0]
                run1 -= worst.err[1]
                mid = 0.5 * (worst.lo + worst.hi)
                status = make_panel(&f, &h[n], worst.lo, mid, worst.depth + 1, seq)
                if status:
                    break
                run0 += h[n].err[0]
                run1 += h[n].err[1]
                sift_up(h, n)
                n += 1
                seq += 1
                status = make_panel(&f, &h[n], mid, worst.hi, worst.depth + 1, seq)
                if status:
                    break
                run0 += h[n].err[0]
                run1 += h[n].err[1]
                sift_up(h, n)
                n += 1
                seq += 1
                nev += 30
            if status == 0:
                qsort(h, n, sizeof(Panel), by_lo)
                re = kahan_total(h, n, 0, 0)
                im = kahan_total(h, n, 0, 1)
    finally:
        free(h)
    if status == 1:
        raise BDomainError("log field is singular at (1, 0) on the contour")
    if status == 2:
        raise BDomainError(f"unknown kernel code {code}")
    if status == 3:
        raise QuadratureError("non-finite integrand on the contour")
    if status == 4:
        raise QuadratureError(f"no convergence on [{worst.lo}, {worst.hi}] after {worst.depth} bisections")
    if status == 5:
        raise QuadratureError(f"evaluation budget of {MAX_EVALS} exhausted")
    if status == 6:
        raise MemoryError()
    return re, im, max(e0, e1), nev
