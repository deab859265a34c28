# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the GF(p) hot kernels.

Mirrors `_pyfallback` exactly (same functions, same conventions, same
deterministic orders); see that module's docstring for the contract.
Inner loops run with the GIL released so range-partitioned scans can use
real threads.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy, memset

BACKEND = "compiled"

DEF MAXN = 8
DEF MAXN2 = 64
DEF MAXN3 = 512


cdef inline long long c_mod(long long a, long long p) noexcept nogil:
    cdef long long r = a % p
    if r < 0:
        r += p
    return r


cdef long long c_inv(long long a, long long p) noexcept nogil:
    # extended Euclid; a != 0 mod p
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt; t = newt; newt = tmp
        tmp = r - q * newr; r = newr; newr = tmp
    return c_mod(t, p)


cdef long long c_pow(long long b, long long e, long long p) noexcept nogil:
    cdef long long r = 1 % p
    b = c_mod(b, p)
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef void c_mul_vec(long long* sc, int n, long long p, long long* x, long long* y,
                    long long* out) noexcept nogil:
    cdef int i, j, k
    cdef long long xi, yj, c
    for k in range(n):
        out[k] = 0
    for i in range(n):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(n):
            yj = y[j]
            if yj == 0:
                continue
            c = (xi * yj) % p
            for k in range(n):
                if sc[(i * n + j) * n + k] != 0:
                    out[k] = (out[k] + c * sc[(i * n + j) * n + k]) % p


cdef int c_rref(long long* m, int nrows, int ncols, long long p, int* pivots) noexcept nogil:
    # in-place reduced row echelon form; returns rank, fills pivot columns
    cdef int r = 0, c, i, piv, k
    cdef long long inv, f, tmp
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(ncols):
                tmp = m[r * ncols + k]
                m[r * ncols + k] = m[piv * ncols + k]
                m[piv * ncols + k] = tmp
        inv = c_inv(m[r * ncols + c], p)
        for k in range(ncols):
            m[r * ncols + k] = (m[r * ncols + k] * inv) % p
        for i in range(nrows):
            if i != r and m[i * ncols + c] != 0:
                f = m[i * ncols + c]
                for k in range(ncols):
                    m[i * ncols + k] = c_mod(m[i * ncols + k] - f * m[r * ncols + k], p)
        pivots[r] = c
        r += 1
        if r == nrows:
            break
    return r


cdef void c_reduce_against(long long* red, int nred, int* pivots, int ncols,
                           long long p, long long* v) noexcept nogil:
    cdef int r, k
    cdef long long c
    for r in range(nred):
        c = v[pivots[r]]
        if c != 0:
            for k in range(ncols):
                v[k] = c_mod(v[k] - c * red[r * ncols + k], p)


cdef bint c_any(long long* v, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if v[i] != 0:
            return True
    return False


cdef void c_right_mul(long long* sc, int n, long long p, long long* x, int j,
                      long long* out) noexcept nogil:
    # out = x * e_j
    cdef int i, k
    for k in range(n):
        out[k] = 0
    for i in range(n):
        if x[i] != 0:
            for k in range(n):
                if sc[(i * n + j) * n + k] != 0:
                    out[k] = (out[k] + x[i] * sc[(i * n + j) * n + k]) % p


cdef void c_left_mul(long long* sc, int n, long long p, int i, long long* y,
                     long long* out) noexcept nogil:
    # out = e_i * y
    cdef int j, k
    for k in range(n):
        out[k] = 0
    for j in range(n):
        if y[j] != 0:
            for k in range(n):
                if sc[(i * n + j) * n + k] != 0:
                    out[k] = (out[k] + y[j] * sc[(i * n + j) * n + k]) % p


cdef bint c_is_bicommutative(long long* sc, int n, long long p) noexcept nogil:
    cdef int i, j, k, t
    cdef long long lhs[MAXN]
    cdef long long rhs[MAXN]
    cdef long long u[MAXN]
    cdef long long w[MAXN]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # (e_i e_j) e_k vs (e_i e_k) e_j
                for t in range(n):
                    u[t] = sc[(i * n + j) * n + t]
                    w[t] = sc[(i * n + k) * n + t]
                c_right_mul(sc, n, p, u, k, lhs)
                c_right_mul(sc, n, p, w, j, rhs)
                for t in range(n):
                    if lhs[t] != rhs[t]:
                        return False
                # e_i (e_j e_k) vs e_j (e_i e_k)
                for t in range(n):
                    u[t] = sc[(j * n + k) * n + t]
                    w[t] = sc[(i * n + k) * n + t]
                c_left_mul(sc, n, p, i, u, lhs)
                c_left_mul(sc, n, p, j, w, rhs)
                for t in range(n):
                    if lhs[t] != rhs[t]:
                        return False
    return True


cdef int c_power_dims_last(long long* sc, int n, long long p) noexcept nogil:
    # dimension at which the power filtration stabilizes (0 iff nilpotent)
    cdef long long powers[MAXN + 1][MAXN * MAXN]
    cdef int dims[MAXN + 2]
    cdef int npow = 1, a, b, i, j, k, cnt, rank
    cdef long long vecs[MAXN * MAXN2 * MAXN]
    cdef long long prod[MAXN]
    cdef int pivots[MAXN2]
    for i in range(n):
        for j in range(n):
            powers[0][i * n + j] = 1 if i == j else 0
    dims[0] = n
    while True:
        k = npow + 1
        cnt = 0
        for a in range(1, k):
            b = k - a
            if a > npow or b > npow or b < 1:
                continue
            for i in range(dims[a - 1]):
                for j in range(dims[b - 1]):
                    c_mul_vec(sc, n, p, &powers[a - 1][i * n], &powers[b - 1][j * n], prod)
                    memcpy(&vecs[cnt * n], prod, n * sizeof(long long))
                    cnt += 1
        rank = c_rref(vecs, cnt, n, p, pivots) if cnt > 0 else 0
        if rank == dims[npow - 1]:
            return rank
        if npow > MAXN:
            return rank
        memcpy(&powers[npow][0], vecs, rank * n * sizeof(long long))
        dims[npow] = rank
        npow += 1
        if rank == 0:
            return 0


cdef bint c_is_nilpotent(long long* sc, int n, long long p) noexcept nogil:
    return c_power_dims_last(sc, n, p) == 0


cdef int c_closure_dim(long long* sc, int n, long long p, long long* v) noexcept nogil:
    cdef long long span[MAXN * MAXN]
    cdef long long vecs[(MAXN * MAXN + MAXN) * MAXN]
    cdef long long prod[MAXN]
    cdef int pivots[MAXN * MAXN + MAXN]
    cdef int dim = 1, cnt, i, j, newdim
    memcpy(span, v, n * sizeof(long long))
    while True:
        cnt = 0
        for i in range(dim):
            memcpy(&vecs[cnt * n], &span[i * n], n * sizeof(long long))
            cnt += 1
        for i in range(dim):
            for j in range(dim):
                c_mul_vec(sc, n, p, &span[i * n], &span[j * n], prod)
                memcpy(&vecs[cnt * n], prod, n * sizeof(long long))
                cnt += 1
        newdim = c_rref(vecs, cnt, n, p, pivots)
        if newdim == dim:
            return dim
        memcpy(span, vecs, newdim * n * sizeof(long long))
        dim = newdim


cdef int c_square_rows(long long* sc, int n, long long p, long long* out, int* pivots) noexcept nogil:
    cdef int i, j, k, cnt = 0
    cdef long long rows[MAXN2 * MAXN]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                rows[cnt * n + k] = sc[(i * n + j) * n + k]
            cnt += 1
    cdef int rank = c_rref(rows, cnt, n, p, pivots)
    memcpy(out, rows, rank * n * sizeof(long long))
    return rank


cdef bint c_is_one_generated(long long* sc, int n, long long p) noexcept nogil:
    cdef long long sq[MAXN * MAXN]
    cdef int pivots[MAXN]
    cdef long long v[MAXN]
    cdef int rank = c_square_rows(sc, n, p, sq, pivots)
    if n - rank > 1:
        return False
    cdef unsigned long long idx, total = 1
    cdef int i, pos
    for i in range(n):
        total *= <unsigned long long>p
    for idx in range(1, total):
        c_decode_vec(idx, n, p, v)
        if c_closure_dim(sc, n, p, v) == n:
            return True
    return False


cdef void c_decode_vec(unsigned long long idx, int n, long long p, long long* v) noexcept nogil:
    cdef int pos
    for pos in range(n - 1, -1, -1):
        v[pos] = <long long>(idx % <unsigned long long>p)
        idx //= <unsigned long long>p


cdef void c_decode_table(unsigned long long idx, int n3, long long p, long long* sc) noexcept nogil:
    cdef int pos
    for pos in range(n3 - 1, -1, -1):
        sc[pos] = <long long>(idx % <unsigned long long>p)
        idx //= <unsigned long long>p


def scan_tables(int n, int p, unsigned long long start, unsigned long long end,
                bint req_bicomm, bint req_nilpotent, bint req_one_generated):
    """Indices in [start, end) whose decoded tables satisfy the predicates."""
    cdef int n3 = n * n * n
    cdef long long sc[MAXN3]
    cdef unsigned long long idx
    cdef unsigned long long* buf = <unsigned long long*>malloc(1024 * sizeof(unsigned long long))
    cdef unsigned long long* grown
    cdef size_t cap = 1024, cnt = 0
    cdef long long pp = p
    cdef bint oom = False
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            for idx in range(start, end):
                c_decode_table(idx, n3, pp, sc)
                if req_bicomm and not c_is_bicommutative(sc, n, pp):
                    continue
                if req_nilpotent and not c_is_nilpotent(sc, n, pp):
                    continue
                if req_one_generated and not c_is_one_generated(sc, n, pp):
                    continue
                if cnt == cap:
                    grown = <unsigned long long*>realloc(buf, 2 * cap * sizeof(unsigned long long))
                    if grown == NULL:
                        oom = True
                        break
                    buf = grown
                    cap *= 2
                buf[cnt] = idx
                cnt += 1
        if oom:
            raise MemoryError()
        return [buf[i] for i in range(cnt)]
    finally:
        free(buf)


def decode_table(unsigned long long idx, int n, int p):
    cdef long long sc[MAXN3]
    c_decode_table(idx, n * n * n, p, sc)
    return tuple(sc[i] for i in range(n * n * n))


cdef struct PlanResult:
    int ok
    int nwords
    long long words[MAXN * MAXN]   # row w = word vector
    int degs[MAXN]
    int plan_l[MAXN]
    int plan_r[MAXN]


cdef void c_word_plan_greedy(long long* sc, int n, long long p, long long* v,
                             PlanResult* res) noexcept nogil:
    # breadth-first by degree, left factor first; accept iff independent
    cdef long long span[MAXN * MAXN]
    cdef int pivots[MAXN]
    cdef long long w[MAXN]
    cdef long long resid[MAXN]
    cdef int nspan, d, ia, ib, cnt_before, k
    res.ok = 0
    res.nwords = 0
    if not c_any(v, n):
        return
    memcpy(&res.words[0], v, n * sizeof(long long))
    res.degs[0] = 1
    res.nwords = 1
    memcpy(span, v, n * sizeof(long long))
    nspan = c_rref(span, 1, n, p, pivots)
    if res.nwords == n:
        res.ok = 1
        return
    for d in range(2, n + 1):
        cnt_before = res.nwords
        for ia in range(cnt_before):
            for ib in range(cnt_before):
                if res.degs[ia] + res.degs[ib] != d:
                    continue
                c_mul_vec(sc, n, p, &res.words[ia * n], &res.words[ib * n], w)
                memcpy(resid, w, n * sizeof(long long))
                c_reduce_against(span, nspan, pivots, n, p, resid)
                if c_any(resid, n):
                    memcpy(&res.words[res.nwords * n], w, n * sizeof(long long))
                    res.degs[res.nwords] = d
                    res.plan_l[res.nwords - 1] = ia
                    res.plan_r[res.nwords - 1] = ib
                    res.nwords += 1
                    memcpy(&span[nspan * n], w, n * sizeof(long long))
                    nspan = c_rref(span, nspan + 1, n, p, pivots)
                    if res.nwords == n:
                        res.ok = 1
                        return
    res.ok = 0


cdef int c_invert_cols(long long* cols, int n, long long p, long long* inv_rows) noexcept nogil:
    # cols: n columns of length n (cols[c*n + r]); inv_rows row-major; 1 ok, 0 singular
    cdef long long aug[MAXN * (2 * MAXN)]
    cdef int pivots[2 * MAXN]
    cdef int r, c, rank
    cdef int w = 2 * n
    for r in range(n):
        for c in range(n):
            aug[r * w + c] = cols[c * n + r]
            aug[r * w + n + c] = 1 if r == c else 0
    rank = c_rref(aug, n, w, p, pivots)
    if rank != n:
        return 0
    for r in range(n):
        if pivots[r] != r:
            return 0
        for c in range(n):
            inv_rows[r * n + c] = aug[r * w + n + c]
    return 1


cdef int c_tensor_in_basis(long long* sc, int n, long long p, long long* words,
                           long long* out) noexcept nogil:
    # words: row w = word vector; out: flat tensor in that basis
    cdef long long cols[MAXN * MAXN]
    cdef long long winv[MAXN * MAXN]
    cdef long long prod[MAXN]
    cdef int a, b, c, k
    cdef long long s
    for a in range(n):
        for k in range(n):
            cols[a * n + k] = words[a * n + k]
    if not c_invert_cols(cols, n, p, winv):
        return 0
    for a in range(n):
        for b in range(n):
            c_mul_vec(sc, n, p, &words[a * n], &words[b * n], prod)
            for c in range(n):
                s = 0
                for k in range(n):
                    s = (s + winv[c * n + k] * prod[k]) % p
                out[(a * n + b) * n + c] = s
    return 1


def canonical_form(int n, int p, sc_flat):
    """Minimal word-basis tensor over all generators (nilpotent one-generated
    inputs); returns (tensor tuple, generator tuple) or None."""
    cdef long long sc[MAXN3]
    cdef long long sq[MAXN * MAXN]
    cdef int sq_pivots[MAXN]
    cdef long long best[MAXN3]
    cdef long long best_v[MAXN]
    cdef long long base[MAXN3]
    cdef long long cand[MAXN3]
    cdef long long v[MAXN]
    cdef long long resid[MAXN]
    cdef PlanResult plan
    cdef int i, a, b, c2, first, sq_rank, e
    cdef long long cc, scale
    cdef bint have_best = False, smaller
    cdef unsigned long long idx, total = 1
    cdef long long pp = p
    cdef int n3 = n * n * n
    for i in range(n3):
        sc[i] = sc_flat[i]
    for i in range(n):
        total *= <unsigned long long>p
    with nogil:
        sq_rank = c_square_rows(sc, n, pp, sq, sq_pivots)
        for idx in range(1, total):
            c_decode_vec(idx, n, pp, v)
            first = -1
            for i in range(n):
                if v[i] != 0:
                    first = i
                    break
            if first < 0 or v[first] != 1:
                continue
            memcpy(resid, v, n * sizeof(long long))
            c_reduce_against(sq, sq_rank, sq_pivots, n, pp, resid)
            if not c_any(resid, n):
                continue
            c_word_plan_greedy(sc, n, pp, v, &plan)
            if not plan.ok:
                continue
            if not c_tensor_in_basis(sc, n, pp, plan.words, base):
                continue
            for cc in range(1, pp):
                if cc == 1:
                    memcpy(cand, base, n3 * sizeof(long long))
                else:
                    for a in range(n):
                        for b in range(n):
                            for c2 in range(n):
                                if base[(a * n + b) * n + c2] == 0:
                                    cand[(a * n + b) * n + c2] = 0
                                else:
                                    e = plan.degs[a] + plan.degs[b] - plan.degs[c2]
                                    e = e % (p - 1) if p > 2 else 0
                                    if e < 0:
                                        e += p - 1
                                    scale = c_pow(cc, e, pp)
                                    cand[(a * n + b) * n + c2] = (base[(a * n + b) * n + c2] * scale) % pp
                if not have_best:
                    smaller = True
                else:
                    smaller = False
                    for i in range(n3):
                        if cand[i] != best[i]:
                            smaller = cand[i] < best[i]
                            break
                if smaller:
                    memcpy(best, cand, n3 * sizeof(long long))
                    for i in range(n):
                        best_v[i] = (cc * v[i]) % pp
                    have_best = True
    if not have_best:
        return None
    return tuple(best[i] for i in range(n3)), tuple(best_v[i] for i in range(n))


cdef int c_fixed_plan(long long* sc, int n, long long p, PlanResult* plan,
                      long long* winv) noexcept nogil:
    cdef long long sq[MAXN * MAXN]
    cdef int sq_pivots[MAXN]
    cdef long long e[MAXN]
    cdef long long resid[MAXN]
    cdef long long cols[MAXN * MAXN]
    cdef int sq_rank, i, k, g = -1
    sq_rank = c_square_rows(sc, n, p, sq, sq_pivots)
    for i in range(n):
        for k in range(n):
            e[k] = 1 if k == i else 0
        memcpy(resid, e, n * sizeof(long long))
        c_reduce_against(sq, sq_rank, sq_pivots, n, p, resid)
        if c_any(resid, n):
            g = i
            break
    if g < 0:
        return 0
    for k in range(n):
        e[k] = 1 if k == g else 0
    c_word_plan_greedy(sc, n, p, e, plan)
    if not plan.ok:
        return 0
    for i in range(n):
        for k in range(n):
            cols[i * n + k] = plan.words[i * n + k]
    return c_invert_cols(cols, n, p, winv)


cdef void c_images_by_plan(long long* scB, int nB, long long p, long long* v,
                           PlanResult* plan, int nwords, long long* imgs) noexcept nogil:
    cdef int k
    memcpy(&imgs[0], v, nB * sizeof(long long))
    for k in range(1, nwords):
        c_mul_vec(scB, nB, p, &imgs[plan.plan_l[k - 1] * nB], &imgs[plan.plan_r[k - 1] * nB],
                  &imgs[k * nB])


cdef void c_phi_from_images(long long* winv, long long* imgs, int nB, int nA,
                            long long p, long long* phi) noexcept nogil:
    # phi[r * nA + c] with columns = images of source basis vectors
    cdef int r, c, k
    cdef long long s
    for r in range(nB):
        for c in range(nA):
            s = 0
            for k in range(nA):
                s = (s + imgs[k * nB + r] * winv[k * nA + c]) % p
            phi[r * nA + c] = s


cdef bint c_is_hom(long long* scA, long long* scB, int nA, int nB, long long p,
                   long long* phi) noexcept nogil:
    cdef long long coli[MAXN]
    cdef long long colj[MAXN]
    cdef long long lhs[MAXN]
    cdef long long rhs[MAXN]
    cdef int i, j, k, r
    for i in range(nA):
        for r in range(nB):
            coli[r] = phi[r * nA + i]
        for j in range(nA):
            for r in range(nB):
                colj[r] = phi[r * nA + j]
            for r in range(nB):
                lhs[r] = 0
            for k in range(nA):
                if scA[(i * nA + j) * nA + k] != 0:
                    for r in range(nB):
                        lhs[r] = (lhs[r] + scA[(i * nA + j) * nA + k] * phi[r * nA + k]) % p
            c_mul_vec(scB, nB, p, coli, colj, rhs)
            for r in range(nB):
                if lhs[r] != rhs[r]:
                    return False
    return True


cdef bint c_full_rank(long long* phi, int n, long long p) noexcept nogil:
    cdef long long m[MAXN * MAXN]
    cdef int pivots[MAXN]
    memcpy(m, phi, n * n * sizeof(long long))
    return c_rref(m, n, n, p, pivots) == n


def iso_search(int n, int p, scA_flat, scB_flat):
    """First generator image making A -> B an isomorphism (lex order), as a
    flat row-major matrix; None if the algebras are not isomorphic."""
    cdef long long scA[MAXN3]
    cdef long long scB[MAXN3]
    cdef long long winv[MAXN * MAXN]
    cdef long long imgs[MAXN * MAXN]
    cdef long long phi[MAXN * MAXN]
    cdef long long v[MAXN]
    cdef PlanResult plan
    cdef unsigned long long idx, total = 1
    cdef int i, found = 0
    cdef long long pp = p
    for i in range(n * n * n):
        scA[i] = scA_flat[i]
        scB[i] = scB_flat[i]
    for i in range(n):
        total *= <unsigned long long>p
    with nogil:
        if c_fixed_plan(scA, n, pp, &plan, winv):
            for idx in range(1, total):
                c_decode_vec(idx, n, pp, v)
                c_images_by_plan(scB, n, pp, v, &plan, n, imgs)
                c_phi_from_images(winv, imgs, n, n, pp, phi)
                if not c_full_rank(phi, n, pp):
                    continue
                if c_is_hom(scA, scB, n, n, pp, phi):
                    found = 1
                    break
    if not found:
        return None
    return tuple(phi[i] for i in range(n * n))


def automorphisms(int n, int p, sc_flat):
    """All automorphisms, ordered lexicographically by generator image."""
    cdef long long sc[MAXN3]
    cdef long long winv[MAXN * MAXN]
    cdef long long imgs[MAXN * MAXN]
    cdef long long phi[MAXN * MAXN]
    cdef long long v[MAXN]
    cdef PlanResult plan
    cdef unsigned long long idx, total = 1
    cdef int i
    cdef long long pp = p
    for i in range(n * n * n):
        sc[i] = sc_flat[i]
    for i in range(n):
        total *= <unsigned long long>p
    out = []
    if not c_fixed_plan(sc, n, pp, &plan, winv):
        return out
    for idx in range(1, total):
        c_decode_vec(idx, n, pp, v)
        c_images_by_plan(sc, n, pp, v, &plan, n, imgs)
        c_phi_from_images(winv, imgs, n, n, pp, phi)
        if not c_full_rank(phi, n, pp):
            continue
        if c_is_hom(sc, sc, n, n, pp, phi):
            out.append(tuple(phi[i] for i in range(n * n)))
    return out


def hom_from_generator(int nA, int nB, int p, scA_flat, scB_flat, v_tuple):
    """Induced map from a generator image if it is a homomorphism, else None."""
    cdef long long scA[MAXN3]
    cdef long long scB[MAXN3]
    cdef long long winv[MAXN * MAXN]
    cdef long long imgs[MAXN * MAXN]
    cdef long long phi[MAXN * MAXN]
    cdef long long v[MAXN]
    cdef PlanResult plan
    cdef int i
    cdef long long pp = p
    for i in range(nA * nA * nA):
        scA[i] = scA_flat[i]
    for i in range(nB * nB * nB):
        scB[i] = scB_flat[i]
    for i in range(nB):
        v[i] = v_tuple[i]
    if not c_fixed_plan(scA, nA, pp, &plan, winv):
        return None
    c_images_by_plan(scB, nB, pp, v, &plan, nA, imgs)
    c_phi_from_images(winv, imgs, nB, nA, pp, phi)
    if not c_is_hom(scA, scB, nA, nB, pp, phi):
        return None
    return tuple(phi[i] for i in range(nB * nA))


def canonical_form_gl(int n, int p, sc_flat):
    """Minimal tensor over the full GL_n orbit; exact for any algebra, meant
    for tiny n and p only."""
    cdef long long sc[MAXN3]
    cdef long long g[MAXN * MAXN]
    cdef long long cols[MAXN * MAXN]
    cdef long long ginv[MAXN * MAXN]
    cdef long long prod[MAXN]
    cdef long long cand[MAXN3]
    cdef long long best[MAXN3]
    cdef bint have_best = False, smaller
    cdef unsigned long long idx, total = 1
    cdef int i, a, b, c, k, n3 = n * n * n
    cdef long long s, pp = p
    for i in range(n3):
        sc[i] = sc_flat[i]
    for i in range(n * n):
        total *= <unsigned long long>p
    with nogil:
        for idx in range(total):
            c_decode_vec(idx, n * n, pp, g)
            for a in range(n):
                for k in range(n):
                    cols[a * n + k] = g[k * n + a]
            if not c_invert_cols(cols, n, pp, ginv):
                continue
            for a in range(n):
                for b in range(n):
                    c_mul_vec(sc, n, pp, &cols[a * n], &cols[b * n], prod)
                    for c in range(n):
                        s = 0
                        for k in range(n):
                            s = (s + ginv[c * n + k] * prod[k]) % pp
                        cand[(a * n + b) * n + c] = s
            if not have_best:
                smaller = True
            else:
                smaller = False
                for i in range(n3):
                    if cand[i] != best[i]:
                        smaller = cand[i] < best[i]
                        break
            if smaller:
                memcpy(best, cand, n3 * sizeof(long long))
                have_best = True
    if not have_best:
        return None
    return tuple(best[i] for i in range(n3))
