"""Dense univariate polynomials over the integers.

A polynomial is a list of Python ints, lowest degree first, with no
trailing zeros; the zero polynomial is the empty list.  Everything here
is exact and allocation-light because the root machinery leans on it.
"""

from fractions import Fraction
from math import gcd

_KRONECKER_MIN = 24


def trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n] if n != len(a) else a


def deg(a):
    return len(a) - 1


def lc(a):
    return a[-1] if a else 0


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def neg(a):
    return [-c for c in a]


def scale(a, c):
    if c == 0:
        return []
    return [c * v for v in a]


def shift(a, k):
    """Multiply by t^k."""
    return [0] * k + list(a) if a else []


def _pack(a, nbytes):
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in a), "little")


def _unpack(v, nbytes, n):
    raw = v.to_bytes(nbytes * n, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") for i in range(n)]


def _mul_nonneg(a, b, nbytes):
    if not any(a) or not any(b):
        return [0] * (len(a) + len(b) - 1)
    return _unpack(_pack(a, nbytes) * _pack(b, nbytes), nbytes, len(a) + len(b) - 1)


def mul(a, b):
    if not a or not b:
        return []
    if len(a) < _KRONECKER_MIN or len(b) < _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return trim(out)
    # Kronecker substitution on the nonnegative and negative parts
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    nbytes = ((ma * mb * min(len(a), len(b))).bit_length() + 8) // 8
    ap = [c if c > 0 else 0 for c in a]
    an = [-c if c < 0 else 0 for c in a]
    bp = [c if c > 0 else 0 for c in b]
    bn = [-c if c < 0 else 0 for c in b]
    pp = _mul_nonneg(ap, bp, nbytes)
    nn = _mul_nonneg(an, bn, nbytes)
    pn = _mul_nonneg(ap, bn, nbytes)
    np_ = _mul_nonneg(an, bp, nbytes)
    return trim([w + x - y - z for w, x, y, z in zip(pp, nn, pn, np_)])


def power(a, e):
    out = [1]
    base = a
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out


def divmod_exact_lc(a, b):
    """Division when lc(b) divides everything that shows up; returns (q, r)."""
    r = list(a)
    db = deg(b)
    lb = b[-1]
    if deg(r) < db:
        return [], trim(r)
    q = [0] * (deg(r) - db + 1)
    for i in range(deg(r) - db, -1, -1):
        c = r[i + db]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[i] = qc
        for j, bc in enumerate(b):
            r[i + j] -= qc * bc
    return trim(q), trim(r)


def divexact(a, b):
    q, r = divmod_exact_lc(a, b)
    if r:
        raise ArithmeticError("polynomial division not exact")
    return q


def prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    da, db = deg(a), deg(b)
    if da < db:
        return list(a)
    lb = b[-1]
    r = list(a)
    e = da - db + 1
    for i in range(da - db, -1, -1):
        c = r[i + db]
        r = [lb * v for v in r]
        if c:
            for j, bc in enumerate(b):
                r[i + j] -= c * bc
        r.pop()
        e -= 1
    r = trim(r)
    if e:
        r = scale(r, lb ** e)
    return r


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return list(a)
    return [c // g for c in a]


def deriv(a):
    return trim([i * a[i] for i in range(1, len(a))])


_PRIMES = (2305843009213693951, 4611686018427387847, 9223372036854775783)


def _rem_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift_ = len(a) - 1 - db
        for j, bc in enumerate(b):
            a[shift_ + j] = (a[shift_ + j] - c * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def gcd_degree_mod(a, b, p):
    """Degree of gcd(a mod p, b mod p).  When p divides neither leading
    coefficient this bounds the degree of the integer gcd from above."""
    a = trim([c % p for c in a])
    b = trim([c % p for c in b])
    while b:
        a, b = b, _rem_mod(a, b, p)
    return len(a) - 1


def coprime_by_modular_test(a, b):
    """True only when gcd(a, b) is certainly constant."""
    for p in _PRIMES:
        if a[-1] % p and b[-1] % p:
            return gcd_degree_mod(a, b, p) == 0
    return False


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(q, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE = []


def _gcd_primes():
    k = 0
    while True:
        if k == len(_PRIME_CACHE):
            n = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else (1 << 61) - 1
            while not _is_prime(n):
                n -= 2
            _PRIME_CACHE.append(n)
        yield _PRIME_CACHE[k]
        k += 1


def _monic_gcd_mod(a, b, p):
    a = trim([c % p for c in a])
    b = trim([c % p for c in b])
    while b:
        a, b = b, _rem_mod(a, b, p)
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _divides(b, a):
    try:
        return not divmod_exact_lc(a, b)[1]
    except ArithmeticError:
        return False


def gcd_poly(a, b):
    """Primitive gcd, by Chinese remaindering of gcds modulo large primes."""
    a, b = primitive(a), primitive(b)
    if not a:
        return b
    if not b:
        return a
    if deg(a) < 1 or deg(b) < 1:
        return [1]
    lc = gcd(a[-1], b[-1])
    G, M, d, last = None, 1, None, None
    for p in _gcd_primes():
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        g = _monic_gcd_mod(a, b, p)
        if len(g) == 1:
            return [1]
        h = [lc * c % p for c in g]
        if d is None or len(g) < d:
            G, M, d, last = h, p, len(g), None
        elif len(g) > d:
            continue
        else:
            inv = pow(M, -1, p)
            G = [x + M * ((y - x) * inv % p) for x, y in zip(G, h)]
            M *= p
        half = M // 2
        cand = primitive([x - M if x > half else x for x in G])
        if cand == last and _divides(cand, a) and _divides(cand, b):
            return cand
        last = cand


def squarefree(a):
    if deg(a) < 1:
        return primitive(a) if a else []
    g = gcd_poly(a, deriv(a))
    if deg(g) == 0:
        return primitive(a)
    return primitive(divexact(primitive(a), g))


def from_fractions(coeffs):
    """Clear denominators; returns (int poly, positive denominator)."""
    den = 1
    for c in coeffs:
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    out = [int(Fraction(c) * den) for c in coeffs]
    return trim(out), den


def eval_int(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def sign_at(a, x):
    """Sign of a at a rational x."""
    x = Fraction(x)
    if not a:
        return 0
    n = len(a) - 1
    p, q = x.numerator, x.denominator
    acc = a[n]
    qp = 1
    for i in range(n - 1, -1, -1):
        qp *= q
        acc = acc * p + a[i] * qp
    return (acc > 0) - (acc < 0)


def value_at(a, x):
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def taylor_shift(a, s=1):
    """Coefficients of a(t + s)."""
    out = list(a)
    n = len(out)
    if s == 0 or n < 2:
        return out
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += s * out[j + 1]
    return out


def reverse(a):
    return trim(list(reversed(a)))


def variations(a):
    v = 0
    last = 0
    for c in a:
        if c:
            if last and (c > 0) != (last > 0):
                v += 1
            last = c
    return v


def halve(a):
    """2^n * a(t/2)."""
    n = len(a) - 1
    return [c << (n - i) for i, c in enumerate(a)]


def scale_var(a, s):
    """a(s*t) for an integer s."""
    out = []
    p = 1
    for c in a:
        out.append(c * p)
        p *= s
    return out


def on_interval(a, lo, hi):
    """Integer polynomial P(t) with P(t) > 0 iff a(lo + (hi-lo) t) > 0."""
    lo, hi = Fraction(lo), Fraction(hi)
    d = lo.denominator * hi.denominator // gcd(lo.denominator, hi.denominator)
    an = int(lo * d)
    wn = int((hi - lo) * d)
    n = len(a) - 1
    b = [c * d ** (n - i) for i, c in enumerate(a)]
    b = taylor_shift(b, an)
    return scale_var(b, wn)


def descartes_bound(a, lo, hi):
    """Sign variations bounding the number of roots in the open interval (lo, hi)."""
    if not a:
        raise ValueError("zero polynomial")
    p = on_interval(a, lo, hi)
    return variations(taylor_shift(reverse(p), 1))


def cauchy_bound_log2(a):
    """k such that every root of a lies strictly inside (-2^k, 2^k)."""
    top = abs(a[-1])
    m = max(abs(c) for c in a[:-1]) if len(a) > 1 else 0
    # 1 + m/top < 2^k
    k = 0
    while (1 << k) * top <= top + m:
        k += 1
    return k


def _positive_roots(p):
    """Roots of a squarefree p in (0, 2^k).  Returns list of
    ('pt', Fraction) and ('iv', lo, hi) in no particular order."""
    if not p or deg(p) < 1:
        return []
    k = cauchy_bound_log2(p)
    scale_ = 1 << k
    base = scale_var(p, scale_)
    g = content(base)
    if g > 1:
        base = [c // g for c in base]
    out = []
    stack = [(base, 0, 0)]
    while stack:
        q, c, j = stack.pop()
        if q[0] == 0:
            # exact root at the left end can only arise from a split point,
            # which the parent already recorded
            q = q[1:]
        if deg(q) < 1:
            continue
        v = variations(taylor_shift(reverse(q), 1))
        if v == 0:
            continue
        if v == 1:
            out.append(("iv", Fraction(c * scale_, 1 << j), Fraction((c + 1) * scale_, 1 << j)))
            continue
        left = halve(q)
        right = taylor_shift(left, 1)
        if right[0] == 0:
            out.append(("pt", Fraction((2 * c + 1) * scale_, 1 << (j + 1))))
        gl = content(left)
        if gl > 1:
            left = [x // gl for x in left]
            right = [x // gl for x in right]
        stack.append((right, 2 * c + 1, j + 1))
        stack.append((left, 2 * c, j + 1))
    return out


def _shrink_endpoint(p, lo, hi, which):
    """Move a root endpoint inward until it is neither a root nor shadows one."""
    width = (hi - lo) / 2
    while True:
        if which == "hi":
            cand = hi - width
            if sign_at(p, cand) != 0 and descartes_bound(p, cand, hi) == 0:
                return lo, cand
        else:
            cand = lo + width
            if sign_at(p, cand) != 0 and descartes_bound(p, lo, cand) == 0:
                return cand, hi
        width /= 2


def _around_point(p, r, cap):
    width = cap
    while True:
        a, b = r - width, r + width
        if (sign_at(p, a) != 0 and sign_at(p, b) != 0
                and descartes_bound(p, a, r) == 0 and descartes_bound(p, r, b) == 0):
            return a, b
        width /= 2


def isolate(a):
    """Isolating intervals (lo, hi, exact_point_or_None) for the distinct real
    roots of a, sorted.  Endpoints are never roots of a."""
    if not a:
        raise ValueError("zero polynomial")
    p = squarefree(a)
    if deg(p) < 1:
        return []
    items = []
    if p[0] == 0:
        items.append(("pt", Fraction(0)))
        p0 = p[1:]
    else:
        p0 = p
    items += _positive_roots(p0)
    negp = [c if i % 2 == 0 else -c for i, c in enumerate(p0)]
    for it in _positive_roots(negp):
        if it[0] == "pt":
            items.append(("pt", -it[1]))
        else:
            items.append(("iv", -it[2], -it[1]))
    keyed = []
    for it in items:
        if it[0] == "pt":
            keyed.append((it[1], it))
        else:
            keyed.append(((it[1] + it[2]) / 2, it))
    keyed.sort(key=lambda t: t[0])
    out = []
    for idx, (_, it) in enumerate(keyed):
        if it[0] == "pt":
            r = it[1]
            cap = Fraction(1)
            for nb in (idx - 1, idx + 1):
                if 0 <= nb < len(keyed):
                    o = keyed[nb][1]
                    ends = [o[1]] if o[0] == "pt" else [o[1], o[2]]
                    for e in ends:
                        if e != r:
                            cap = min(cap, abs(e - r) / 2)
            lo, hi = _around_point(p, r, cap)
            out.append((lo, hi, r))
        else:
            lo, hi = it[1], it[2]
            if sign_at(p, hi) == 0:
                lo, hi = _shrink_endpoint(p, lo, hi, "hi")
            if sign_at(p, lo) == 0:
                lo, hi = _shrink_endpoint(p, lo, hi, "lo")
            out.append((lo, hi, None))
    return out


def refine(p, lo, hi, width):
    """Bisect (lo, hi), known to isolate a root of the squarefree p, down to
    the requested width.  Returns (lo, hi, exact_point_or_None)."""
    slo, shi = sign_at(p, lo), sign_at(p, hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise ValueError("interval does not isolate a simple sign change")
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = sign_at(p, m)
        if sm == 0:
            half = min(width, hi - lo) / 4
            return m - half, m + half, m
        if sm == slo:
            lo = m
        else:
            hi = m
    return lo, hi, None


def count_roots_in(p, lo, hi):
    """Exact number of roots of the squarefree p in (lo, hi) by recursive Descartes."""
    lo, hi = Fraction(lo), Fraction(hi)
    total = 0
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        v = descartes_bound(p, a, b)
        if v == 0:
            continue
        if v == 1:
            total += 1
            continue
        m = (a + b) / 2
        if sign_at(p, m) == 0:
            total += 1
        stack.append((a, m))
        stack.append((m, b))
    return total
