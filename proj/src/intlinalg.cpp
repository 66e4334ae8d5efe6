#include "exlat/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace exlat {

imat::imat(std::initializer_list<std::initializer_list<i64>> rws) {
    rows = int(rws.size());
    cols = rows ? int(rws.begin()->size()) : 0;
    a.reserve(std::size_t(rows) * cols);
    for (const auto& r : rws) {
        if (int(r.size()) != cols) fail(errc::bad_input, "ragged matrix literal");
        for (i64 x : r) a.push_back(chk(x));
    }
}

ivec imat::row(int r) const {
    return ivec(a.begin() + std::size_t(r) * cols, a.begin() + std::size_t(r + 1) * cols);
}

void imat::set_row(int r, const ivec& v) {
    std::copy(v.begin(), v.end(), a.begin() + std::size_t(r) * cols);
}

imat imat::identity(int n) {
    imat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

rmat rmat::identity(int n) {
    rmat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = rat(1);
    return m;
}

rmat rmat::from(const imat& m) {
    rmat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = rat(m.a[i]);
    return r;
}

bool rmat::is_integral() const {
    for (const rat& x : a)
        if (!x.is_integer()) return false;
    return true;
}

imat rmat::to_imat() const {
    if (!is_integral()) fail(errc::bad_input, "matrix is not integral");
    imat m(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i].num;
    return m;
}

imat transpose(const imat& m) {
    imat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

rmat transpose(const rmat& m) {
    rmat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

imat matmul(const imat& x, const imat& y) {
    if (x.cols != y.rows) fail(errc::bad_input, "matmul dimension mismatch");
    imat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            i64 v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = add(z.at(i, j), mul(v, y.at(k, j)));
        }
    return z;
}

rmat matmul(const rmat& x, const rmat& y) {
    if (x.cols != y.rows) fail(errc::bad_input, "matmul dimension mismatch");
    rmat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const rat& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

ivec vecmat(const ivec& x, const imat& m) {
    if (int(x.size()) != m.rows) fail(errc::bad_input, "vecmat dimension mismatch");
    ivec z(m.cols, 0);
    for (int i = 0; i < m.rows; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < m.cols; ++j) z[j] = add(z[j], mul(x[i], m.at(i, j)));
    }
    return z;
}

rvec vecmat(const rvec& x, const rmat& m) {
    if (int(x.size()) != m.rows) fail(errc::bad_input, "vecmat dimension mismatch");
    rvec z(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < m.cols; ++j) z[j] += x[i] * m.at(i, j);
    }
    return z;
}

imat matadd(const imat& x, const imat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::bad_input, "matadd shape mismatch");
    imat z(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = add(x.a[i], y.a[i]);
    return z;
}

imat matsub(const imat& x, const imat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::bad_input, "matsub shape mismatch");
    imat z(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = sub(x.a[i], y.a[i]);
    return z;
}

rmat matsub(const rmat& x, const rmat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::bad_input, "matsub shape mismatch");
    rmat z(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

imat scale(const imat& m, i64 s) {
    imat z(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) z.a[i] = mul(m.a[i], s);
    return z;
}

bool is_symmetric(const imat& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

i64 det(const imat& m) {
    if (m.rows != m.cols) fail(errc::bad_input, "determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    imat w = m;
    i64 sign = 1;
    i64 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                i64 t = sub(mul(w.at(i, j), w.at(k, k)), mul(w.at(i, k), w.at(k, j)));
                w.at(i, j) = t / prev; // exact by Bareiss
            }
        prev = w.at(k, k);
    }
    return mul(sign, w.at(n - 1, n - 1));
}

rat det(const rmat& m) {
    if (m.rows != m.cols) fail(errc::bad_input, "determinant of non-square matrix");
    rmat w = m;
    int n = m.rows;
    rat d(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!w.at(i, k).is_zero()) { p = i; break; }
        if (p < 0) return rat(0);
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            d = -d;
        }
        d *= w.at(k, k);
        rat inv = rat(1) / w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            rat f = w.at(i, k) * inv;
            if (f.is_zero()) continue;
            for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return d;
}

namespace {

void swap_rows(imat& m, int i, int j) {
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void addmul_row(imat& m, int dst, int src, i64 f) {
    if (f == 0) return;
    for (int c = 0; c < m.cols; ++c)
        m.at(dst, c) = add(m.at(dst, c), mul(f, m.at(src, c)));
}

void negate_row(imat& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = neg(m.at(i, c));
}

} // namespace

hnf_result hnf(const imat& m) {
    imat h = m;
    imat u = imat::identity(m.rows);
    int r = 0;
    for (int c = 0; c < h.cols && r < h.rows; ++c) {
        // Euclid in column c among rows >= r, keeping the smallest pivot on top.
        for (;;) {
            int p = -1;
            for (int i = r; i < h.rows; ++i)
                if (h.at(i, c) != 0 && (p < 0 || std::abs(h.at(i, c)) < std::abs(h.at(p, c))))
                    p = i;
            if (p < 0) break;
            if (p != r) { swap_rows(h, r, p); swap_rows(u, r, p); }
            bool clean = true;
            for (int i = r + 1; i < h.rows; ++i) {
                if (h.at(i, c) == 0) continue;
                i64 q = h.at(i, c) / h.at(r, c);
                addmul_row(h, i, r, neg(q));
                addmul_row(u, i, r, neg(q));
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) { negate_row(h, r); negate_row(u, r); }
        for (int i = 0; i < r; ++i) {
            i64 q = fdiv(h.at(i, c), h.at(r, c));
            addmul_row(h, i, r, neg(q));
            addmul_row(u, i, r, neg(q));
        }
        ++r;
    }
    return {h, u};
}

namespace {

void swap_cols(imat& m, int i, int j) {
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void addmul_col(imat& m, int dst, int src, i64 f) {
    if (f == 0) return;
    for (int r = 0; r < m.rows; ++r)
        m.at(r, dst) = add(m.at(r, dst), mul(f, m.at(r, src)));
}

void negate_col(imat& m, int i) {
    for (int r = 0; r < m.rows; ++r) m.at(r, i) = neg(m.at(r, i));
}

} // namespace

snf_result snf(const imat& m) {
    imat s = m;
    imat u = imat::identity(m.rows);
    imat v = imat::identity(m.cols);
    int n = std::min(s.rows, s.cols);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block to (t,t)
            int pi = -1, pj = -1;
            for (int i = t; i < s.rows; ++i)
                for (int j = t; j < s.cols; ++j)
                    if (s.at(i, j) != 0 &&
                        (pi < 0 || std::abs(s.at(i, j)) < std::abs(s.at(pi, pj)))) {
                        pi = i; pj = j;
                    }
            if (pi < 0) { pi = pj = t; break; }
            if (pi != t) { swap_rows(s, t, pi); swap_rows(u, t, pi); }
            if (pj != t) { swap_cols(s, t, pj); swap_cols(v, t, pj); }
            bool dirty = false;
            for (int i = t + 1; i < s.rows; ++i) {
                if (s.at(i, t) == 0) continue;
                i64 q = s.at(i, t) / s.at(t, t);
                addmul_row(s, i, t, neg(q));
                addmul_row(u, i, t, neg(q));
                if (s.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < s.cols; ++j) {
                if (s.at(t, j) == 0) continue;
                i64 q = s.at(t, j) / s.at(t, t);
                addmul_col(s, j, t, neg(q));
                addmul_col(v, j, t, neg(q));
                if (s.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // pivot must divide the whole trailing block
            bool divides = true;
            for (int i = t + 1; i < s.rows && divides; ++i)
                for (int j = t + 1; j < s.cols && divides; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        addmul_row(s, t, i, 1);
                        addmul_row(u, t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (s.at(t, t) < 0) { negate_row(s, t); negate_row(u, t); }
    }
    return {s, u, v};
}

imat integer_kernel(const imat& m) {
    hnf_result r = hnf(m);
    int zero_from = r.h.rows;
    for (int i = r.h.rows - 1; i >= 0; --i) {
        bool z = true;
        for (int c = 0; c < r.h.cols; ++c)
            if (r.h.at(i, c) != 0) { z = false; break; }
        if (!z) break;
        zero_from = i;
    }
    imat k(r.h.rows - zero_from, m.rows);
    for (int i = zero_from; i < r.h.rows; ++i)
        for (int c = 0; c < m.rows; ++c) k.at(i - zero_from, c) = r.u.at(i, c);
    return k;
}

imat saturate_rowspace(const imat& m, int ambient_rank) {
    if (m.cols != ambient_rank) fail(errc::bad_input, "saturate_rowspace: wrong ambient rank");
    imat ker = integer_kernel(transpose(m)); // rows span right-kernel of m
    if (ker.rows == 0) return imat::identity(ambient_rank);
    return integer_kernel(transpose(ker));
}

rmat rational_inverse(const rmat& m) {
    if (m.rows != m.cols) fail(errc::singular, "inverse of non-square matrix");
    int n = m.rows;
    rmat w = m;
    rmat inv = rmat::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!w.at(i, k).is_zero()) { p = i; break; }
        if (p < 0) fail(errc::singular, "matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        rat piv = rat(1) / w.at(k, k);
        for (int j = 0; j < n; ++j) { w.at(k, j) *= piv; inv.at(k, j) *= piv; }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k).is_zero()) continue;
            rat f = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

int rank_of(const imat& m) {
    hnf_result r = hnf(m);
    int rk = 0;
    for (int i = 0; i < r.h.rows; ++i)
        for (int c = 0; c < r.h.cols; ++c)
            if (r.h.at(i, c) != 0) { ++rk; break; }
    return rk;
}

rvec solve_left(const imat& m, const rvec& target) {
    // x * m = target  <=>  m^T * x^T = target^T; Gaussian elimination.
    if (int(target.size()) != m.cols) fail(errc::bad_input, "solve_left dimension mismatch");
    int n = m.rows, c = m.cols;
    rmat w(c, n + 1);
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = rat(m.at(j, i));
        w.at(i, n) = target[i];
    }
    int r = 0;
    std::vector<int> pivot_col(c, -1);
    for (int col = 0; col < n && r < c; ++col) {
        int p = -1;
        for (int i = r; i < c; ++i)
            if (!w.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j <= n; ++j) std::swap(w.at(r, j), w.at(p, j));
        rat inv = rat(1) / w.at(r, col);
        for (int j = 0; j <= n; ++j) w.at(r, j) *= inv;
        for (int i = 0; i < c; ++i) {
            if (i == r || w.at(i, col).is_zero()) continue;
            rat f = w.at(i, col);
            for (int j = 0; j <= n; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        pivot_col[r] = col;
        ++r;
    }
    for (int i = r; i < c; ++i)
        if (!w.at(i, n).is_zero()) return {}; // inconsistent
    rvec x(n);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = w.at(i, n);
    return x;
}

rat parse_rat(const std::string& s) {
    auto parse_int = [](const std::string& t) -> i64 {
        if (t.empty()) fail(errc::bad_input, "empty integer literal");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception&) {
            fail(errc::bad_input, "malformed integer literal: " + t);
        }
        if (pos != t.size()) fail(errc::bad_input, "malformed integer literal: " + t);
        return chk(v);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return rat(parse_int(s));
    return rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

} // namespace exlat
