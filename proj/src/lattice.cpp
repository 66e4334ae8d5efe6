#include "exlat/lattice.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

namespace exlat {

lattice make_lattice(const imat& gram) {
    if (gram.rows != gram.cols || !is_symmetric(gram))
        fail(errc::not_symmetric, "lattice gram matrix must be symmetric");
    i64 d = det(gram);
    if (d == 0) fail(errc::degenerate, "lattice gram matrix must be nondegenerate");
    bool even = true;
    for (int i = 0; i < gram.rows; ++i)
        if (gram.at(i, i) % 2 != 0) { even = false; break; }
    return lattice{gram, gram.rows, even, d};
}

lattice lat_U() { return make_lattice(imat{{0, 1}, {1, 0}}); }
lattice lat_A1() { return make_lattice(imat{{2}}); }
lattice lat_A2() { return make_lattice(imat{{2, -1}, {-1, 2}}); }

lattice span_lattice(const ivec& diag) {
    imat g(int(diag.size()), int(diag.size()));
    for (int i = 0; i < int(diag.size()); ++i) g.at(i, i) = diag[i];
    return make_lattice(g);
}

lattice rescale(const lattice& l, i64 m) {
    if (m == 0) fail(errc::degenerate, "rescale by zero");
    return make_lattice(scale(l.gram, m));
}

lattice direct_sum(const lattice& a, const lattice& b) {
    imat g(a.rank + b.rank, a.rank + b.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) g.at(i, j) = a.gram.at(i, j);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) g.at(a.rank + i, a.rank + j) = b.gram.at(i, j);
    return make_lattice(g);
}

lattice kummer_lattice(i64 n) {
    if (n < 2) fail(errc::out_of_range, "kummer lattice requires n >= 2");
    lattice u = lat_U();
    lattice l = direct_sum(direct_sum(u, u), u);
    return direct_sum(l, span_lattice({neg(add(2, mul(2, n)))}));
}

lattice mukai_lattice() {
    lattice u = lat_U();
    return direct_sum(direct_sum(u, u), direct_sum(u, u));
}

i64 pairing(const lattice& l, const ivec& x, const ivec& y) {
    if (int(x.size()) != l.rank || int(y.size()) != l.rank)
        fail(errc::bad_input, "pairing dimension mismatch");
    i64 s = 0;
    for (int i = 0; i < l.rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < l.rank; ++j)
            s = add(s, mul(x[i], mul(l.gram.at(i, j), y[j])));
    }
    return s;
}

i64 norm_of(const lattice& l, const ivec& x) { return pairing(l, x, x); }

rat pairing(const lattice& l, const rvec& x, const rvec& y) {
    rat s;
    for (int i = 0; i < l.rank; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < l.rank; ++j)
            s += x[i] * rat(l.gram.at(i, j)) * y[j];
    }
    return s;
}

lattice induced_lattice(const lattice& l, const sublattice& s) {
    return make_lattice(matmul(matmul(s.basis, l.gram), transpose(s.basis)));
}

discriminant_group compute_discriminant_group(const lattice& l) {
    snf_result r = snf(l.gram);
    discriminant_group g;
    for (int i = 0; i < l.rank; ++i) {
        i64 d = r.s.at(i, i);
        g.order = mul(g.order, d);
        if (d <= 1) continue;
        g.invariant_factors.push_back(d);
        rvec gen(l.rank);
        for (int c = 0; c < l.rank; ++c) gen[c] = rat(r.u.at(i, c), d);
        g.generators.push_back(std::move(gen));
    }
    if (g.order != std::abs(l.determinant))
        fail(errc::bad_input, "discriminant order mismatch"); // internal consistency
    return g;
}

rat discriminant_form_value(const lattice& l, const rvec& x) {
    if (!l.even) fail(errc::not_even, "discriminant form needs an even lattice");
    if (int(x.size()) != l.rank) fail(errc::bad_input, "dual vector dimension mismatch");
    // membership in the dual: x*G integral
    for (int j = 0; j < l.rank; ++j) {
        rat s;
        for (int i = 0; i < l.rank; ++i) s += x[i] * rat(l.gram.at(i, j));
        if (!s.is_integer()) fail(errc::not_in_dual, "vector is not in the dual lattice");
    }
    rat q = pairing(l, x, x);
    // canonical representative in [0, 2)
    i64 k = fdiv(q.num, mul(2, q.den));
    return q - rat(mul(2, k));
}

i64 divisibility(const lattice& l, const ivec& v) {
    bool nonzero = false;
    for (i64 c : v)
        if (c != 0) { nonzero = true; break; }
    if (!nonzero) fail(errc::zero_vector, "divisibility of zero vector");
    ivec w = vecmat(v, l.gram);
    i64 g = 0;
    for (i64 c : w) g = gcd_nonneg(g, c);
    return g;
}

bool is_primitive_vector(const ivec& v) {
    i64 g = 0;
    for (i64 c : v) g = gcd_nonneg(g, c);
    if (g == 0) fail(errc::zero_vector, "primitivity of zero vector");
    return g == 1;
}

ivec primitive_part(const ivec& v) {
    i64 g = 0;
    for (i64 c : v) g = gcd_nonneg(g, c);
    if (g == 0) fail(errc::zero_vector, "primitive part of zero vector");
    ivec w = v;
    for (i64& c : w) c /= g;
    return w;
}

sublattice orthogonal_complement(const lattice& l, const sublattice& s) {
    // x with x * (G * B^t) = 0
    return sublattice{integer_kernel(matmul(l.gram, transpose(s.basis)))};
}

sublattice saturation(const lattice& l, const sublattice& s) {
    return sublattice{saturate_rowspace(s.basis, l.rank)};
}

rmat reflection_matrix(const lattice& l, const ivec& v) {
    i64 v2 = norm_of(l, v);
    if (v2 == 0) fail(errc::isotropic_vector, "reflection in isotropic vector");
    ivec vg = vecmat(v, l.gram);
    rmat r = rmat::identity(l.rank);
    for (int i = 0; i < l.rank; ++i)
        for (int j = 0; j < l.rank; ++j)
            r.at(i, j) -= rat(mul(2, mul(v[i], vg[j])), v2);
    return r;
}

bool is_root(const lattice& l, const ivec& v) {
    return reflection_matrix(l, v).is_integral();
}

bool is_isometry(const lattice& l, const imat& m) {
    if (m.rows != l.rank || m.cols != l.rank) return false;
    return matmul(matmul(transpose(m), l.gram), m) == l.gram;
}

i64 isometry_det(const imat& m) { return det(m); }

ivec apply_isometry(const imat& m, const ivec& x) {
    // column convention: image of column x^T is M x^T, i.e. row x * M^t
    return vecmat(x, transpose(m));
}

bool is_orientation_preserving(const lattice& l, const imat& m) {
    if (!is_isometry(l, m)) fail(errc::not_isometry, "matrix is not an isometry");
    diagonalization d = diagonalize(rmat::from(l.gram));
    std::vector<int> pos;
    for (int i = 0; i < l.rank; ++i)
        if (d.form.coeffs[i].sign() > 0) pos.push_back(i);
    int p = int(pos.size());
    if (p == 0) fail(errc::bad_input, "orientation needs a positive part");
    rmat pm(l.rank, p);
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < l.rank; ++i) pm.at(i, j) = d.transform.at(i, pos[j]);
    rmat g = rmat::from(l.gram);
    rmat ptg = matmul(transpose(pm), g);          // p x n
    rmat gramp = matmul(ptg, pm);                 // P^t G P, invertible
    rmat mp = matmul(rmat::from(m), pm);          // images of the positive basis
    rmat c = matmul(rational_inverse(gramp), matmul(ptg, mp));
    return det(c).sign() > 0;
}

discriminant_action acts_on_discriminant_as(const lattice& l, const imat& m) {
    if (!is_isometry(l, m)) fail(errc::not_isometry, "matrix is not an isometry");
    rmat ginv = rational_inverse(rmat::from(l.gram));
    imat id = imat::identity(l.rank);
    if (matmul(rmat::from(matsub(m, id)), ginv).is_integral()) return discriminant_action::plus_id;
    if (matmul(rmat::from(matadd(m, id)), ginv).is_integral()) return discriminant_action::minus_id;
    return discriminant_action::other;
}

std::pair<sublattice, sublattice> fixed_and_coinvariant(const lattice& l, const imat& m) {
    if (!is_isometry(l, m)) fail(errc::not_isometry, "matrix is not an isometry");
    imat mt = transpose(m);
    sublattice fixed{integer_kernel(matsub(mt, imat::identity(l.rank)))};
    sublattice coinv = orthogonal_complement(l, fixed);
    return {fixed, coinv};
}

namespace {

// LDL^t data of a positive definite rational matrix: q(x) = sum_i d_i
// (x_i + sum_{j>i} u_ij x_j)^2.
struct ldl {
    std::vector<rat> d;
    rmat u;
};

ldl ldl_decompose(const rmat& g) {
    int n = g.rows;
    rmat a = g;
    ldl out;
    out.d.resize(n);
    out.u = rmat::identity(n);
    for (int i = 0; i < n; ++i) {
        out.d[i] = a.at(i, i);
        if (out.d[i].sign() <= 0) fail(errc::not_definite, "matrix is not positive definite");
        for (int j = i + 1; j < n; ++j) out.u.at(i, j) = a.at(i, j) / out.d[i];
        for (int j = i + 1; j < n; ++j)
            for (int k = j; k < n; ++k) {
                rat t = a.at(j, k) - out.u.at(i, j) * a.at(i, k);
                a.at(j, k) = t;
                a.at(k, j) = t;
            }
    }
    return out;
}

void enumerate_norm(const ldl& q, i64 target, int i, rvec& shift, ivec& x,
                    rat remaining, std::vector<ivec>& out) {
    if (i < 0) {
        if (remaining.is_zero()) {
            bool zero = std::all_of(x.begin(), x.end(), [](i64 c) { return c == 0; });
            if (!zero) out.push_back(x);
        }
        return;
    }
    // d_i (x_i + c_i)^2 <= remaining
    rat c = shift[i];
    rat bound2 = remaining / q.d[i];
    i64 approx = isqrt(floor_rat(bound2)) + 2;
    i64 lo = ceil_rat(-c) - approx;
    i64 hi = floor_rat(-c) + approx;
    for (i64 v = lo; v <= hi; ++v) {
        rat term = (rat(v) + c);
        rat used = q.d[i] * term * term;
        if (used > remaining) continue;
        x[i] = v;
        rvec saved = shift;
        for (int j = 0; j < i; ++j) shift[j] += q.u.at(j, i) * rat(v);
        enumerate_norm(q, target, i - 1, shift, x, remaining - used, out);
        shift = saved;
        x[i] = 0;
    }
}

} // namespace

std::vector<ivec> vectors_of_norm(const lattice& l, i64 t) {
    if (l.rank > 4) fail(errc::rank_too_large, "vectors_of_norm limited to rank <= 4");
    diagonalization d = diagonalize(rmat::from(l.gram));
    form_signature s = signature(d.form);
    if (s.pos != 0 && s.neg != 0) fail(errc::not_definite, "vectors_of_norm needs a definite lattice");
    bool negative = s.pos == 0;
    rmat g = rmat::from(negative ? scale(l.gram, -1) : l.gram);
    i64 target = negative ? neg(t) : t;
    if (target <= 0) return {};
    ldl q = ldl_decompose(g);
    std::vector<ivec> out;
    rvec shift(l.rank);
    ivec x(l.rank, 0);
    enumerate_norm(q, target, l.rank - 1, shift, x, rat(target), out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Canonical Lagrange-Gauss reduced (a, b, c) of a positive definite binary
// form under GL_2(Z): 0 <= 2b <= a <= c.
std::array<i64, 3> gauss_reduce(i64 a, i64 b, i64 c) {
    for (;;) {
        if (a > c) std::swap(a, c);
        // shear b into (-a/2, a/2]: t is the unique integer with b - t*a there
        i64 t = fdiv(sub(add(mul(2, b), a), 1), mul(2, a));
        if (t != 0) {
            c = add(sub(c, mul(2, mul(b, t))), mul(a, mul(t, t)));
            b = sub(b, mul(a, t));
        }
        if (a > c) continue;
        break;
    }
    if (b < 0) b = -b; // improper change of basis
    return {a, b, c};
}

} // namespace

bool is_isometric_definite(const lattice& l1, const lattice& l2) {
    if (l1.rank != l2.rank) return false;
    if (l1.rank > 3) fail(errc::rank_too_large, "is_isometric_definite limited to rank <= 3");
    auto sig = [](const lattice& l) {
        return signature(diagonalize(rmat::from(l.gram)).form);
    };
    form_signature s1 = sig(l1), s2 = sig(l2);
    if ((s1.pos != 0 && s1.neg != 0) || (s2.pos != 0 && s2.neg != 0))
        fail(errc::not_definite, "is_isometric_definite needs definite lattices");
    if (s1.pos != s2.pos) return false;
    if (l1.determinant != l2.determinant) return false;
    if (l1.even != l2.even) return false;
    if (l1.rank == 1) return l1.gram == l2.gram;
    if (l1.rank == 2) {
        bool neg_def = s1.pos == 0;
        imat g1 = neg_def ? scale(l1.gram, -1) : l1.gram;
        imat g2 = neg_def ? scale(l2.gram, -1) : l2.gram;
        return gauss_reduce(g1.at(0, 0), g1.at(0, 1), g1.at(1, 1)) ==
               gauss_reduce(g2.at(0, 0), g2.at(0, 1), g2.at(1, 1));
    }
    // rank 3: try to realize the first basis as vectors of matching norms
    std::map<i64, std::vector<ivec>> cache;
    auto candidates = [&](i64 norm) -> const std::vector<ivec>& {
        auto it = cache.find(norm);
        if (it == cache.end()) it = cache.emplace(norm, vectors_of_norm(l2, norm)).first;
        return it->second;
    };
    std::array<i64, 3> norms{l1.gram.at(0, 0), l1.gram.at(1, 1), l1.gram.at(2, 2)};
    for (const ivec& b0 : candidates(norms[0])) {
        for (const ivec& b1 : candidates(norms[1])) {
            if (pairing(l2, b0, b1) != l1.gram.at(0, 1)) continue;
            for (const ivec& b2 : candidates(norms[2])) {
                if (pairing(l2, b0, b2) != l1.gram.at(0, 2)) continue;
                if (pairing(l2, b1, b2) != l1.gram.at(1, 2)) continue;
                // gram matches and |det| matches, so the images are a basis
                return true;
            }
        }
    }
    return false;
}

std::vector<isotropic_class> isotropic_profile_rank2(const lattice& l, const ivec& v) {
    if (l.rank != 2) fail(errc::wrong_rank, "isotropic profile needs a rank-2 lattice");
    if (int(v.size()) != 2) fail(errc::vector_not_in_lattice, "vector has wrong length");
    i64 a = l.gram.at(0, 0), b = l.gram.at(0, 1), c = l.gram.at(1, 1);
    i64 disc = sub(mul(b, b), mul(a, c)); // -det
    if (disc <= 0 || !is_perfect_square(disc)) return {};
    i64 s = isqrt(disc);
    std::vector<ivec> rays;
    if (a != 0) {
        rays.push_back({sub(s, b), a});
        rays.push_back({sub(neg(s), b), a});
    } else if (c != 0) {
        rays.push_back({1, 0});
        rays.push_back({c, mul(-2, b)});
    } else {
        rays.push_back({1, 0});
        rays.push_back({0, 1});
    }
    std::vector<isotropic_class> out;
    for (ivec r : rays) {
        r = primitive_part(r);
        i64 p = pairing(l, r, v);
        if (p < 0) { r[0] = neg(r[0]); r[1] = neg(r[1]); p = neg(p); }
        bool dup = false;
        for (const auto& o : out)
            if (o.vec == r) { dup = true; break; }
        if (!dup) out.push_back({std::move(r), p});
    }
    return out;
}

namespace {

// integer polynomials, coefficient of x^k at index k
using ipoly = std::vector<i64>;

ipoly char_poly(const imat& m) {
    // Faddeev-LeVerrier over exact rationals; result is integral.
    int n = m.rows;
    rmat a = rmat::from(m);
    rmat mk = a;
    std::vector<rat> coeff(n + 1);
    coeff[n] = rat(1);
    rmat id = rmat::identity(n);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) mk = matmul(a, mk);
        rat tr;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        rat ck = -(tr / rat(k));
        coeff[n - k] = ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
        }
    }
    ipoly p(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (!coeff[i].is_integer()) fail(errc::bad_input, "characteristic polynomial not integral");
        p[i] = coeff[i].num;
    }
    return p;
}

// exact division of integer polynomials; returns empty when not divisible
ipoly poly_divide(const ipoly& num, const ipoly& den) {
    ipoly r = num;
    int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
    if (dd > dn) return {};
    ipoly q(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        i64 lead = r[k + dd];
        if (lead % den[dd] != 0) return {};
        i64 f = lead / den[dd];
        q[k] = f;
        for (int j = 0; j <= dd; ++j) r[k + j] = sub(r[k + j], mul(f, den[j]));
    }
    for (i64 cfc : r)
        if (cfc != 0) return {};
    return q;
}

ipoly cyclotomic(int k, std::map<int, ipoly>& cache) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    ipoly p(k + 1, 0);
    p[0] = -1;
    p[k] = 1; // x^k - 1
    for (int d = 1; d < k; ++d)
        if (k % d == 0) p = poly_divide(p, cyclotomic(d, cache));
    cache[k] = p;
    return p;
}

} // namespace

order_info finite_order(const imat& m, i64 cap) {
    if (m.rows != m.cols) fail(errc::bad_input, "finite order of non-square matrix");
    ipoly p = char_poly(m);
    std::map<int, ipoly> cache;
    // phi(k) <= 8 covers every rank-<=8 case
    static const int ks[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 24, 30};
    i64 lcm_order = 1;
    bool progress = true;
    while (int(p.size()) > 1 && progress) {
        progress = false;
        for (int k : ks) {
            ipoly phi = cyclotomic(k, cache);
            if (phi.size() > p.size()) continue;
            ipoly q = poly_divide(p, phi);
            if (!q.empty()) {
                p = q;
                lcm_order = std::lcm(lcm_order, i64(k));
                progress = true;
                break;
            }
        }
    }
    if (int(p.size()) > 1) return {false, 0};
    if (lcm_order > cap) return {false, 0};
    imat acc = imat::identity(m.rows);
    for (i64 i = 0; i < lcm_order; ++i) acc = matmul(acc, m);
    if (acc == imat::identity(m.rows)) return {true, lcm_order};
    return {false, 0};
}

} // namespace exlat
