"""Pure-Python backend for the GF(p) hot kernels.

Same contract as the compiled `_speedups` module; selected by `core` when the
extension is unavailable (or forced via NILEXT_FORCE_PURE=1).  Fine for small
searches and for cross-checking the compiled backend; the large brute-force
scans want the compiled twin.

Conventions shared by both backends:

* an algebra over GF(p) is a flat tuple of n**3 ints in [0, p), row-major
  (index i*n*n + j*n + k);
* vectors are tuples of n ints; matrices are flat n*n tuples, entry (r, c)
  at r*n + c, column c holding the image of basis vector c;
* table/vector enumeration order is big-endian base-p, so increasing index
  means lexicographically increasing digit tuple.

All search routines assume one-generated nilpotent inputs where documented;
word bases are built breadth-first by degree with left-factors-first
tie-breaking.
"""

from __future__ import annotations

BACKEND = "pure"


def _mul_vec(sc, n, p, x, y):
    out = [0] * n
    for i in range(n):
        xi = x[i]
        if not xi:
            continue
        base_i = i * n * n
        for j in range(n):
            yj = y[j]
            if not yj:
                continue
            c = xi * yj
            base = base_i + j * n
            for k in range(n):
                v = sc[base + k]
                if v:
                    out[k] = (out[k] + c * v) % p
    return out


def _rank(rows, p):
    m = [list(r) for r in rows]
    cols = len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(inv * x) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def _rref(rows, p):
    m = [list(r) for r in rows]
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(inv * x) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _inverse(mat_cols, n, p):
    """Invert a matrix given as list of n column vectors; returns rows or None."""
    aug = []
    for r in range(n):
        row = [mat_cols[c][r] for c in range(n)] + [1 if t == r else 0 for t in range(n)]
        aug.append(row)
    red, pivots = _rref(aug, p)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red]


def _decode(index, n_digits, p):
    digits = [0] * n_digits
    for pos in range(n_digits - 1, -1, -1):
        digits[pos] = index % p
        index //= p
    return digits


def _square_rows(sc, n, p):
    rows = [[sc[i * n * n + j * n + k] for k in range(n)] for i in range(n) for j in range(n)]
    red, pivots = _rref(rows, p)
    return red, pivots


def _reduce_against(red_rows, pivots, vec, p):
    v = list(vec)
    for row, piv in zip(red_rows, pivots):
        if v[piv]:
            c = v[piv]
            v = [(x - c * y) % p for x, y in zip(v, row)]
    return v


def _is_bicommutative(sc, n, p):
    for i in range(n):
        for j in range(n):
            ij = sc[i * n * n + j * n : i * n * n + j * n + n]
            for k in range(n):
                ik = sc[i * n * n + k * n : i * n * n + k * n + n]
                if _mul_vec(sc, n, p, ij, _unit(n, k)) != _mul_vec(sc, n, p, ik, _unit(n, j)):
                    return False
                jk = sc[j * n * n + k * n : j * n * n + k * n + n]
                if _mul_vec(sc, n, p, _unit(n, i), jk) != _mul_vec(sc, n, p, _unit(n, j), ik):
                    return False
    return True


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _power_dims(sc, n, p):
    powers = [[_unit(n, i) for i in range(n)]]
    dims = [n]
    while True:
        k = len(powers) + 1
        vecs = []
        for a in range(1, k):
            b = k - a
            if a > len(powers) or b > len(powers) or b < 1:
                continue
            for u in powers[a - 1]:
                for v in powers[b - 1]:
                    vecs.append(_mul_vec(sc, n, p, u, v))
        red, _ = _rref(vecs, p) if vecs else ([], [])
        if len(red) == dims[-1]:
            return dims
        powers.append(red if red else [])
        dims.append(len(red))
        if dims[-1] == 0:
            return dims


def _is_nilpotent(sc, n, p):
    return _power_dims(sc, n, p)[-1] == 0


def _closure_dim(sc, n, p, v):
    span, pivots = _rref([v], p)
    while True:
        vecs = [list(r) for r in span]
        for u in span:
            for w in span:
                vecs.append(_mul_vec(sc, n, p, u, w))
        red, piv = _rref(vecs, p)
        if len(red) == len(span):
            return len(span)
        span, pivots = red, piv


def _is_one_generated(sc, n, p):
    sq, _ = _square_rows(sc, n, p)
    if n - len(sq) > 1:
        return False
    for idx in range(1, p**n):
        v = _decode(idx, n, p)
        if _closure_dim(sc, n, p, v) == n:
            return True
    return False


def scan_tables(n, p, start, end, req_bicomm, req_nilpotent, req_one_generated):
    """Indices in [start, end) whose decoded tables satisfy the predicates."""
    survivors = []
    n3 = n * n * n
    for idx in range(start, end):
        sc = _decode(idx, n3, p)
        if req_bicomm and not _is_bicommutative(sc, n, p):
            continue
        if req_nilpotent and not _is_nilpotent(sc, n, p):
            continue
        if req_one_generated and not _is_one_generated(sc, n, p):
            continue
        survivors.append(idx)
    return survivors


def decode_table(idx, n, p):
    return tuple(_decode(idx, n * n * n, p))


def _word_plan_greedy(sc, n, p, v):
    """Greedy breadth-first word basis at generator v.

    Returns (basis columns, degrees, plan pairs) or None if v does not
    generate.  Words of degree d are products of accepted lower-degree words,
    scanned left factor first; a candidate is accepted iff its value is
    independent of the accepted span.
    """
    if not any(v):
        return None
    words = [list(v)]
    degs = [1]
    plan = []
    span = [list(v)]
    span_red, span_piv = _rref(span, p)
    if len(words) == n:
        return words, degs, plan
    for d in range(2, n + 1):
        cnt_before = len(words)
        for ia in range(cnt_before):
            for ib in range(cnt_before):
                if degs[ia] + degs[ib] != d:
                    continue
                w = _mul_vec(sc, n, p, words[ia], words[ib])
                resid = _reduce_against(span_red, span_piv, w, p)
                if any(resid):
                    words.append(w)
                    degs.append(d)
                    plan.append((ia, ib))
                    span_red, span_piv = _rref(span_red + [w], p)
                    if len(words) == n:
                        return words, degs, plan
    return None


def _tensor_in_basis(sc, n, p, words):
    """Structure constants in the basis `words` (columns), flat tuple."""
    winv = _inverse(words, n, p)
    if winv is None:
        return None
    flat = []
    for a in range(n):
        for b in range(n):
            prod = _mul_vec(sc, n, p, words[a], words[b])
            for c in range(n):
                s = 0
                for k in range(n):
                    s += winv[c][k] * prod[k]
                flat.append(s % p)
    return tuple(flat)


def canonical_form(n, p, sc):
    """Minimal word-basis tensor over all generators, with the achieving
    generator.  None if the algebra is not one-generated (no v generates).

    Precondition: nilpotent input (generator candidates outside A^2).
    Scalar rescalings of a generator are folded in arithmetically, so only
    monic vectors are scanned.
    """
    sq_red, sq_piv = _square_rows(sc, n, p)
    best = None
    best_v = None
    for idx in range(1, p**n):
        v = _decode(idx, n, p)
        first = next((i for i in range(n) if v[i]), None)
        if first is None or v[first] != 1:
            continue  # monic representatives only
        if not any(_reduce_against(sq_red, sq_piv, v, p)):
            continue  # inside A^2: cannot generate
        built = _word_plan_greedy(sc, n, p, v)
        if built is None:
            continue
        words, degs, _ = built
        base = _tensor_in_basis(sc, n, p, words)
        if base is None:
            continue
        for c in range(1, p):
            if c == 1:
                cand = base
            else:
                cand = tuple(
                    (base[(a * n + b) * n + k] * pow(c, (degs[a] + degs[b] - degs[k]) % (p - 1), p)) % p
                    if base[(a * n + b) * n + k]
                    else 0
                    for a in range(n)
                    for b in range(n)
                    for k in range(n)
                )
            if best is None or cand < best:
                best = cand
                best_v = tuple((c * x) % p for x in v)
    if best is None:
        return None
    return best, best_v


def _fixed_plan(sc, n, p):
    """Word plan at the canonical generator: first standard basis vector
    outside A^2."""
    sq_red, sq_piv = _square_rows(sc, n, p)
    g = None
    for i in range(n):
        e = _unit(n, i)
        if any(_reduce_against(sq_red, sq_piv, e, p)):
            g = e
            break
    if g is None:
        return None
    built = _word_plan_greedy(sc, n, p, g)
    if built is None:
        return None
    words, degs, plan = built
    winv = _inverse(words, n, p)
    return g, words, winv, degs, plan


def _images_by_plan(scB, n, p, v, plan):
    imgs = [list(v)]
    for (ia, ib) in plan:
        imgs.append(_mul_vec(scB, n, p, imgs[ia], imgs[ib]))
    return imgs


def _matrix_from_images(winv, imgs, n, p):
    """phi with phi(word_k) = img_k: phi = U * W^{-1}, flat row-major."""
    flat = [0] * (n * n)
    for r in range(n):
        for c in range(n):
            s = 0
            for k in range(n):
                s += imgs[k][r] * winv[k][c]
            flat[r * n + c] = s % p
    return flat


def _is_hom(scA, scB, n, p, phi):
    cols = [[phi[r * n + c] for r in range(n)] for c in range(n)]
    for i in range(n):
        for j in range(n):
            prod = scA[i * n * n + j * n : i * n * n + j * n + n]
            lhs = [0] * n
            for k in range(n):
                if prod[k]:
                    for r in range(n):
                        lhs[r] = (lhs[r] + prod[k] * cols[k][r]) % p
            rhs = _mul_vec(scB, n, p, cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def iso_search(n, p, scA, scB):
    """Exhaustive generator-image isomorphism search A -> B.

    Returns a flat row-major matrix (columns = images of basis vectors) or
    None.  Preconditions: both algebras one-generated nilpotent over GF(p).
    """
    fixed = _fixed_plan(scA, n, p)
    if fixed is None:
        return None
    _, words, winv, _, plan = fixed
    for idx in range(1, p**n):
        v = _decode(idx, n, p)
        imgs = _images_by_plan(scB, n, p, v, plan)
        phi = _matrix_from_images(winv, imgs, n, p)
        if _rank([[phi[r * n + c] for c in range(n)] for r in range(n)], p) != n:
            continue
        if _is_hom(scA, scB, n, p, phi):
            return tuple(phi)
    return None


def automorphisms(n, p, sc):
    """All automorphisms, in lexicographic order of the generator image."""
    fixed = _fixed_plan(sc, n, p)
    if fixed is None:
        return []
    _, words, winv, _, plan = fixed
    out = []
    for idx in range(1, p**n):
        v = _decode(idx, n, p)
        imgs = _images_by_plan(sc, n, p, v, plan)
        phi = _matrix_from_images(winv, imgs, n, p)
        if _rank([[phi[r * n + c] for c in range(n)] for r in range(n)], p) != n:
            continue
        if _is_hom(sc, sc, n, p, phi):
            out.append(tuple(phi))
    return out


def hom_from_generator(nA, nB, p, scA, scB, v):
    """extend_generator_image over GF(p): the induced map as a flat nB x nA
    matrix if it is a homomorphism, else None."""
    fixed = _fixed_plan(scA, nA, p)
    if fixed is None:
        return None
    _, words, winv, _, plan = fixed
    imgs = _images_by_plan(scB, nB, p, list(v), plan)
    flat = [0] * (nB * nA)
    for r in range(nB):
        for c in range(nA):
            s = 0
            for k in range(nA):
                s += imgs[k][r] * winv[k][c]
            flat[r * nA + c] = s % p
    cols = [[flat[r * nA + c] for r in range(nB)] for c in range(nA)]
    for i in range(nA):
        for j in range(nA):
            prod = scA[i * nA * nA + j * nA : i * nA * nA + j * nA + nA]
            lhs = [0] * nB
            for k in range(nA):
                if prod[k]:
                    for r in range(nB):
                        lhs[r] = (lhs[r] + prod[k] * cols[k][r]) % p
            rhs = _mul_vec(scB, nB, p, cols[i], cols[j])
            if lhs != rhs:
                return None
    return tuple(flat)


def _gl_matrices(n, p):
    out = []
    for idx in range(p ** (n * n)):
        flat = _decode(idx, n * n, p)
        rows = [[flat[r * n + c] for c in range(n)] for r in range(n)]
        if _rank(rows, p) == n:
            out.append(flat)
    return out


_gl_cache = {}


def canonical_form_gl(n, p, sc):
    """Minimal tensor over the full GL_n(GF(p)) orbit.  Exact for any
    algebra; only sensible for tiny n and p."""
    key = (n, p)
    if key not in _gl_cache:
        _gl_cache[key] = _gl_matrices(n, p)
    best = None
    for g in _gl_cache[key]:
        cols = [[g[r * n + c] for r in range(n)] for c in range(n)]
        ginv = _inverse(cols, n, p)
        if ginv is None:
            continue
        flat = []
        for a in range(n):
            for b in range(n):
                prod = _mul_vec(sc, n, p, cols[a], cols[b])
                for c in range(n):
                    s = 0
                    for k in range(n):
                        s += ginv[c][k] * prod[k]
                    flat.append(s % p)
        cand = tuple(flat)
        if best is None or cand < best:
            best = cand
    return best
