#include "exlat/kummer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <numeric>

namespace exlat {

wieneck_embedding standard_wieneck(i64 n) {
    if (n < 2) fail(errc::out_of_range, "wieneck embedding requires n >= 2");
    imat e(7, 8);
    for (int i = 0; i < 6; ++i) e.at(i, i) = 1;
    e.at(6, 6) = add(n, 1);
    e.at(6, 7) = -1;
    ivec v(8, 0);
    v[6] = add(n, 1);
    v[7] = 1;
    return {n, e, v};
}

bool is_monodromy(i64 n, const imat& f) {
    lattice l = kummer_lattice(n);
    if (!is_isometry(l, f)) fail(errc::not_isometry, "not an isometry of the kummer lattice");
    if (!is_orientation_preserving(l, f)) return false;
    discriminant_action a = acts_on_discriminant_as(l, f);
    i64 d = isometry_det(f);
    return d == 1 ? a == discriminant_action::plus_id : a == discriminant_action::minus_id;
}

bool reflection_monodromy_criterion(i64 n, const ivec& e) {
    lattice l = kummer_lattice(n);
    if (!is_primitive_vector(e)) fail(errc::not_primitive, "criterion requires a primitive vector");
    i64 e2 = norm_of(l, e);
    if (e2 >= 0) fail(errc::not_negative, "criterion requires a negative vector");
    if (e2 != neg(mul(2, add(n, 1)))) return false;
    return divisibility(l, e) % add(n, 1) == 0;
}

std::optional<extension> extend_isometry(const wieneck_embedding& emb, const imat& g) {
    lattice ln = kummer_lattice(emb.n);
    if (!is_isometry(ln, g)) fail(errc::not_isometry, "not an isometry of the kummer lattice");
    discriminant_action a = acts_on_discriminant_as(ln, g);
    if (a == discriminant_action::other) return std::nullopt;
    int eps = a == discriminant_action::plus_id ? 1 : -1;
    // Solve A * gt^T = B with A = [E; v], B = [g^T E; eps v].
    int nn = 8;
    imat amat(nn, nn), bmat(nn, nn);
    imat ge = matmul(transpose(g), emb.map);
    for (int j = 0; j < nn; ++j) {
        for (int i = 0; i < 7; ++i) {
            amat.at(i, j) = emb.map.at(i, j);
            bmat.at(i, j) = ge.at(i, j);
        }
        amat.at(7, j) = emb.v[j];
        bmat.at(7, j) = mul(eps, emb.v[j]);
    }
    rmat gt = matmul(rational_inverse(rmat::from(amat)), rmat::from(bmat));
    if (!gt.is_integral()) return std::nullopt; // cannot happen for eps-actions; kept as a guard
    imat gtilde = transpose(gt.to_imat());
    lattice big = mukai_lattice();
    if (!is_isometry(big, gtilde)) fail(errc::not_isometry, "extension failed isometry check");
    return extension{gtilde, isometry_det(gtilde), eps};
}

bool is_twisted_modular(i64 n, const imat& ns_gram) {
    if (n < 2) fail(errc::out_of_range, "twisted modularity requires n >= 2");
    diagonalization d = diagonalize(rmat::from(ns_gram));
    form_signature s = signature(d.form);
    if (s.pos != 1) fail(errc::wrong_signature, "NS gram must have signature (1, rho-1)");
    std::vector<rat> coeffs{rat(add(mul(2, n), 2))};
    coeffs.insert(coeffs.end(), d.form.coeffs.begin(), d.form.coeffs.end());
    return is_isotropic_rational(make_form(std::move(coeffs)));
}

bool is_pex(const ivec& v, const ivec& w) {
    lattice big = mukai_lattice();
    if (!is_primitive_vector(v)) fail(errc::not_primitive, "pex test requires primitive v");
    i64 v2 = norm_of(big, v);
    i64 w2 = norm_of(big, w);
    if (v2 <= 0 || w2 >= 0) fail(errc::wrong_signs, "pex test requires v^2 > 0 > w^2");
    if (pairing(big, v, w) != 0) fail(errc::not_orthogonal, "pex test requires w orthogonal to v");
    imat span(2, 8);
    span.set_row(0, v);
    span.set_row(1, w);
    sublattice t = saturation(big, sublattice{span});
    lattice lt = induced_lattice(big, t);
    rvec coords = solve_left(t.basis, rvec(v.begin(), v.end()));
    ivec vt(2);
    for (int i = 0; i < 2; ++i) {
        if (!coords[i].is_integer()) fail(errc::vector_not_in_lattice, "v not in saturation");
        vt[i] = coords[i].num;
    }
    for (const isotropic_class& cls : isotropic_profile_rank2(lt, vt))
        if (cls.pairing == 1 || cls.pairing == 2) return true;
    return false;
}

namespace {

bool all_zero(const ivec& v) {
    return std::all_of(v.begin(), v.end(), [](i64 c) { return c == 0; });
}

} // namespace

effective_verdict symplectic_effective(const imat& g, const ivec& v) {
    lattice big = mukai_lattice();
    if (!is_isometry(big, g)) fail(errc::not_isometry, "not an isometry of the mukai lattice");
    if (isometry_det(g) != 1) fail(errc::not_so, "symplectic effectiveness needs det +1");
    if (!is_primitive_vector(v)) fail(errc::not_primitive, "v must be primitive");
    i64 v2 = norm_of(big, v);
    if (v2 < 6) fail(errc::square_too_small, "v^2 >= 6 required");
    order_info oi = finite_order(g);
    if (!oi.finite) fail(errc::infinite_order, "isometry has infinite order");

    ivec gv = apply_isometry(g, v);
    ivec mgv(8);
    for (int i = 0; i < 8; ++i) mgv[i] = neg(gv[i]);
    if (gv != v && mgv != v) return {false, "g does not preserve v up to sign"};

    auto [fixed, coinv] = fixed_and_coinvariant(big, g);

    // T = Sat(coinvariant + Zv); for g(v) = -v the coinvariant already
    // contains v and is saturated.
    imat gen(coinv.basis.rows + 1, 8);
    for (int i = 0; i < coinv.basis.rows; ++i) gen.set_row(i, coinv.basis.row(i));
    gen.set_row(coinv.basis.rows, v);
    sublattice t = saturation(big, sublattice{gen});

    // C = v-perp inside T
    imat pairings(t.basis.rows, 1);
    for (int i = 0; i < t.basis.rows; ++i)
        pairings.at(i, 0) = pairing(big, t.basis.row(i), v);
    imat c_in_t = integer_kernel(pairings);
    imat c_basis = matmul(c_in_t, t.basis);
    if (c_basis.rows > 0) {
        lattice c_lat = induced_lattice(big, sublattice{c_basis});
        form_signature cs = signature(diagonalize(rmat::from(c_lat.gram)).form);
        if (cs.pos != 0) return {false, "coinvariant not negative definite"};
    }

    // Glue enumeration: isotropic u in T with (u,v) = k in {1,2} decomposes
    // as u = (k/v^2) v + c with c in the projection of T to v-perp and
    // c^2 = -k^2/v^2; scale by v^2 to enumerate integrally.
    imat proj(t.basis.rows, 8);
    for (int i = 0; i < t.basis.rows; ++i) {
        ivec row = t.basis.row(i);
        i64 pv = pairing(big, row, v);
        for (int j = 0; j < 8; ++j)
            proj.at(i, j) = sub(mul(v2, row[j]), mul(pv, v[j]));
    }
    hnf_result ph = hnf(proj);
    int prank = 0;
    for (int i = 0; i < ph.h.rows; ++i)
        if (!all_zero(ph.h.row(i))) ++prank;
    if (prank > 0) {
        imat pb(prank, 8);
        for (int i = 0; i < prank; ++i) pb.set_row(i, ph.h.row(i));
        lattice scaled = induced_lattice(big, sublattice{pb});
        for (i64 k : {i64(1), i64(2)}) {
            i64 want = neg(mul(mul(k, k), v2));
            for (const ivec& y_coords : vectors_of_norm(scaled, want)) {
                ivec y = vecmat(y_coords, pb);
                bool integral = true;
                for (int j = 0; j < 8 && integral; ++j)
                    integral = fmod(add(mul(k, v[j]), y[j]), v2) == 0;
                if (integral)
                    return {false, "isotropic class pairing " + std::to_string(k) + " with v"};
            }
        }
    }
    return {true, ""};
}

const char* wall_kind_name(wall_kind k) {
    switch (k) {
        case wall_kind::divisorial: return "Divisorial";
        case wall_kind::flopping: return "Flopping";
        case wall_kind::not_a_wall: return "NotAWall";
    }
    return "?";
}

wall_verdict classify_wall(const imat& h_gram, const ivec& v_coords) {
    lattice h = make_lattice(h_gram);
    if (h.rank != 2) fail(errc::wrong_rank, "wall lattice must have rank 2");
    if (h.determinant >= 0) fail(errc::not_hyperbolic, "wall lattice must be hyperbolic");
    if (!is_primitive_vector(v_coords)) fail(errc::v_not_primitive, "v must be primitive");
    i64 v2 = norm_of(h, v_coords);
    if (v2 < 6 || v2 % 2 != 0) fail(errc::square_too_small, "v^2 >= 6 and even required");

    for (const isotropic_class& cls : isotropic_profile_rank2(h, v_coords))
        if (cls.pairing == 1 || cls.pairing == 2)
            return {wall_kind::divisorial, cls.vec, std::nullopt};

    // Finite flopping search in the rational basis (v, w), w a generator of
    // v-perp: any witness v1 = alpha v + beta w has 0 < alpha < 1 and
    // beta^2 |w^2| <= min(alpha, 1-alpha)^2 v^2, with denominators dividing
    // the index [H : Zv + Zw].
    ivec vg = vecmat(v_coords, h.gram);
    imat vg_col(2, 1);
    vg_col.at(0, 0) = vg[0];
    vg_col.at(1, 0) = vg[1];
    imat wk = integer_kernel(vg_col);
    ivec w = primitive_part(wk.row(0));
    i64 w2 = norm_of(h, w);
    i64 k2num = std::abs(mul(v2, w2));
    i64 k2den = std::abs(h.determinant);
    i64 k2 = k2num / k2den;
    if (k2 * k2den != k2num || !is_perfect_square(k2))
        fail(errc::bad_input, "index computation failed"); // internal
    i64 k = isqrt(k2);
    i64 qmax = isqrt(mul(mul(k, k), v2) / std::abs(w2)) + 1;
    for (i64 p = 1; p < k; ++p) {
        for (i64 q = -qmax; q <= qmax; ++q) {
            i64 n0 = add(mul(p, v_coords[0]), mul(q, w[0]));
            i64 n1 = add(mul(p, v_coords[1]), mul(q, w[1]));
            if (fmod(n0, k) != 0 || fmod(n1, k) != 0) continue;
            ivec v1{n0 / k, n1 / k};
            ivec v2c{sub(v_coords[0], v1[0]), sub(v_coords[1], v1[1])};
            if (norm_of(h, v1) < 0 || norm_of(h, v2c) < 0) continue;
            if (pairing(h, v1, v2c) > 0)
                return {wall_kind::flopping, std::nullopt, v1};
        }
    }
    return {wall_kind::not_a_wall, std::nullopt, std::nullopt};
}

i64 mukai_data::v_square() const {
    return sub(mul(2, mul(d, mul(c, c))), mul(2, mul(r, chi)));
}

mukai_data make_mukai(i64 r, i64 c, i64 chi, i64 d) {
    if (r <= 0 || d < 1) fail(errc::invalid_mukai, "mukai data requires r > 0, d >= 1");
    i64 g = gcd_nonneg(gcd_nonneg(r, c), chi);
    if (g != 1) fail(errc::invalid_mukai, "mukai vector must be primitive");
    return {r, c, chi, d};
}

vertical_lattice vertical_wall_lattice(const mukai_data& m) {
    i64 g = gcd_nonneg(m.r, m.c);
    i64 lambda0 = m.r / g;
    i64 tcoef = mul(lambda0, m.c) / m.r; // lambda0*c/r, integral by construction
    imat gram(2, 2);
    gram.at(0, 0) = mul(2, mul(m.d, mul(tcoef, tcoef)));
    gram.at(0, 1) = neg(lambda0);
    gram.at(1, 0) = neg(lambda0);
    gram.at(1, 1) = 0;
    ivec v{g, m.chi};
    lattice check = make_lattice(gram);
    if (norm_of(check, v) != m.v_square())
        fail(errc::invalid_mukai, "vertical wall lattice norm mismatch"); // internal
    return {gram, v, lambda0};
}

namespace {

series_match detect_series(const mukai_data& m) {
    // series 1: v = (r, krD, k^2 d r - mm), mm in {1,2}
    if (m.c % m.r == 0) {
        i64 k = m.c / m.r;
        i64 mm = sub(mul(mul(k, k), mul(m.d, m.r)), m.chi);
        if (mm == 1 || mm == 2) return {series::s1, k, mm};
    }
    if (m.r % 2 == 0) {
        i64 a = m.r / 2;
        // series 2: D^2 = 0 mod 4, v = (2a, maD, (d/2) m^2 a - 1), a >= 2, m odd
        if (m.d % 2 == 0 && a >= 2 && m.c % a == 0) {
            i64 mo = m.c / a;
            if (mo % 2 != 0 && m.chi == sub(mul(m.d / 2, mul(mo, mul(mo, a))), 1))
                return {series::s2, a, mo};
        }
        // series 3: D^2 = 2 mod 4, v = (2a, maD, (d m^2 a - 1)/2), a >= 3 odd, m odd
        if (m.d % 2 != 0 && a >= 3 && a % 2 != 0 && m.c % a == 0) {
            i64 mo = m.c / a;
            if (mo % 2 != 0 && mul(2, m.chi) == sub(mul(m.d, mul(mo, mul(mo, a))), 1))
                return {series::s3, a, mo};
        }
    }
    return {series::none, 0, 0};
}

} // namespace

vertical_wall_report make_vertical_wall_report(const mukai_data& m) {
    i64 v2 = m.v_square();
    if (v2 < 6) fail(errc::square_too_small, "vertical wall needs v^2 >= 6");
    vertical_wall_report rep;
    rep.mukai = m;
    rep.c_zero_outside_hypotheses = m.c == 0;

    i64 theta2 = mul(2, mul(m.d, mul(m.c, m.c)));
    if (theta2 % m.r == 0) {
        rep.reflection_e = ivec{m.r, m.c, sub(theta2 / m.r, m.chi), m.d};
        // recompute e perp v and e^2 = -v^2 in mukai coordinates
        i64 echi = sub(theta2 / m.r, m.chi);
        i64 ev = sub(sub(theta2, mul(m.r, m.chi)), mul(echi, m.r));
        i64 e2 = sub(theta2, mul(2, mul(m.r, echi)));
        if (ev != 0 || e2 != neg(v2))
            fail(errc::invalid_mukai, "reflection vector check failed"); // internal
    }

    rep.monodromy_ok = (mul(2, m.c) % m.r == 0) && (gcd_nonneg(m.r, m.chi) <= 2);
    rep.hit = detect_series(m);

    vertical_lattice vl = vertical_wall_lattice(m);
    lattice h = make_lattice(vl.gram);
    if (rep.monodromy_ok) {
        if (m.r <= 2 || rep.hit.kind != series::none) {
            rep.wall.kind = wall_kind::divisorial;
            for (const isotropic_class& cls : isotropic_profile_rank2(h, vl.v_coords))
                if (cls.pairing == 1 || cls.pairing == 2) rep.wall.isotropic_witness = cls.vec;
            if (!rep.wall.isotropic_witness)
                fail(errc::invalid_mukai, "divisorial witness missing"); // internal
        } else {
            rep.wall.kind = wall_kind::flopping;
            // v = v1 + (v - v1) with v1 = v + b2; valid since v^2 >= 2r here
            ivec v1{vl.v_coords[0], add(vl.v_coords[1], 1)};
            ivec rest{sub(vl.v_coords[0], v1[0]), sub(vl.v_coords[1], v1[1])};
            if (norm_of(h, v1) < 0 || norm_of(h, rest) < 0 || pairing(h, v1, rest) <= 0)
                fail(errc::invalid_mukai, "flopping witness invalid"); // internal
            rep.wall.decomposition_v1 = v1;
        }
    } else {
        rep.wall = classify_wall(vl.gram, vl.v_coords);
    }
    rep.induced_by_finite_order_symplectic =
        rep.monodromy_ok && m.r > 2 && rep.hit.kind == series::none;
    return rep;
}

exceptions_table exceptions_scan(i64 n_lo, i64 n_hi, i64 d_lo, i64 d_hi,
                                 kummer_variant variant, int threads) {
    if (n_lo < 2 || n_hi > 200 || d_lo < 1 || d_hi > 10000 || n_lo > n_hi || d_lo > d_hi)
        fail(errc::out_of_range, "scan ranges limited to n in [2,200], d in [1,10000]");
    exceptions_table table{variant, n_lo, n_hi, d_lo, d_hi, {}};
    auto row_for = [&](i64 n) {
        std::vector<i64> ds;
        for (i64 d = d_lo; d <= d_hi; ++d)
            if (!kummer_form_isotropic(n, d, variant)) ds.push_back(d);
        return ds;
    };
    i64 count = n_hi - n_lo + 1;
    std::vector<std::vector<i64>> rows(count);
    if (threads <= 1) {
        for (i64 n = n_lo; n <= n_hi; ++n) rows[n - n_lo] = row_for(n);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<i64> next{n_lo};
        for (int t = 0; t < threads; ++t)
            futs.push_back(std::async(std::launch::async, [&] {
                for (;;) {
                    i64 n = next.fetch_add(1);
                    if (n > n_hi) break;
                    rows[n - n_lo] = row_for(n);
                }
            }));
        for (auto& f : futs) f.get();
    }
    for (i64 n = n_lo; n <= n_hi; ++n)
        if (!rows[n - n_lo].empty()) table.rows.emplace_back(n, std::move(rows[n - n_lo]));
    return table;
}

bool exception_model::verified() const {
    return isometry_ok && (model_case <= 3 ? order == 2 : order == 3) &&
           fixed_square == mul(2, form_d) && coinvariant_matches && coherent;
}

exception_model exception_models(int model_case, i64 n, i64 d) {
    if (model_case < 1 || model_case > 5 || n < 2 || d < 1)
        fail(errc::invalid_case, "exception model case in 1..5 with n >= 2, d >= 1");
    exception_model em;
    em.model_case = model_case;
    em.n = n;
    em.d = d;
    i64 td = mul(2, d);
    switch (model_case) {
        case 1:
            em.ns_gram = imat{{td, 0, 0}, {0, -2, 0}, {0, 0, -2}};
            em.isometry = imat{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
            em.variant = kummer_variant::I;
            em.form_d = d;
            break;
        case 2:
            em.ns_gram = imat{{td, -1, 0}, {-1, -2, 0}, {0, 0, -2}};
            em.isometry = imat{{1, 0, 0}, {-1, -1, 0}, {0, 0, -1}};
            em.variant = kummer_variant::I;
            em.form_d = add(mul(4, d), 1);
            break;
        case 3:
            em.ns_gram = imat{{td, -1, -1}, {-1, -2, 0}, {-1, 0, -2}};
            em.isometry = imat{{1, 0, 0}, {-1, -1, 0}, {-1, 0, -1}};
            em.variant = kummer_variant::I;
            em.form_d = add(mul(4, d), 2);
            break;
        case 4:
            em.ns_gram = imat{{td, 0, 0}, {0, -2, -1}, {0, -1, -2}};
            em.isometry = imat{{1, 0, 0}, {0, 0, 1}, {0, -1, -1}};
            em.variant = kummer_variant::II;
            em.form_d = d;
            break;
        case 5:
            em.ns_gram = imat{{td, -1, -1}, {-1, -2, -1}, {-1, -1, -2}};
            em.isometry = imat{{1, 0, 0}, {0, 0, 1}, {-1, -1, -1}};
            em.variant = kummer_variant::II;
            em.form_d = add(mul(9, d), 3);
            break;
    }
    lattice ns = make_lattice(em.ns_gram);
    em.isometry_ok = is_isometry(ns, em.isometry);
    order_info oi = finite_order(em.isometry, 16);
    em.order = oi.finite ? oi.order : 0;
    auto [fixed, coinv] = fixed_and_coinvariant(ns, em.isometry);
    if (fixed.basis.rows == 1) {
        em.fixed_vector = fixed.basis.row(0);
        em.fixed_square = norm_of(ns, em.fixed_vector);
    }
    lattice cl = induced_lattice(ns, coinv);
    em.coinvariant_gram = cl.gram;
    lattice target = model_case <= 3 ? rescale(direct_sum(lat_A1(), lat_A1()), -1)
                                     : rescale(lat_A2(), -1);
    em.coinvariant_matches = is_isometric_definite(cl, target);
    em.anisotropic = !kummer_form_isotropic(n, em.form_d, em.variant);
    em.twisted_modular = is_twisted_modular(n, em.ns_gram);
    em.coherent = em.twisted_modular == !em.anisotropic;
    return em;
}

special_isometry_pair special_isometries() {
    imat g2 = imat::identity(8);
    imat g3 = imat::identity(8);
    const imat b2{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    const imat b3{{0, 1, 0, 1}, {1, 0, 0, -1}, {0, 0, 0, 1}, {-1, 1, 1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            g2.at(4 + i, 4 + j) = b2.at(i, j);
            g3.at(4 + i, 4 + j) = b3.at(i, j);
        }
    lattice big = mukai_lattice();
    if (!is_isometry(big, g2) || !is_isometry(big, g3) || isometry_det(g2) != 1 ||
        isometry_det(g3) != 1)
        fail(errc::not_isometry, "special isometries failed validation"); // internal
    if (finite_order(g2).order != 2 || finite_order(g3).order != 3)
        fail(errc::not_isometry, "special isometries have wrong order"); // internal
    auto coinv_of = [&](const imat& g) {
        return induced_lattice(big, fixed_and_coinvariant(big, g).second);
    };
    if (!is_isometric_definite(coinv_of(g2), span_lattice({-2, -2})) ||
        !is_isometric_definite(coinv_of(g3), rescale(lat_A2(), -1)))
        fail(errc::not_isometry, "special isometries have wrong coinvariants"); // internal
    return {g2, g3};
}

} // namespace exlat
