#include "exlat/qform.hpp"

namespace exlat {

diagonal_form make_form(std::vector<rat> coeffs) {
    if (coeffs.empty()) fail(errc::bad_input, "diagonal form needs rank >= 1");
    for (const rat& c : coeffs)
        if (c.is_zero()) fail(errc::degenerate, "diagonal form with zero coefficient");
    return diagonal_form{std::move(coeffs)};
}

diagonalization diagonalize(const rmat& gram) {
    if (gram.rows != gram.cols) fail(errc::not_symmetric, "gram matrix not square");
    int n = gram.rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(gram.at(i, j) == gram.at(j, i)))
                fail(errc::not_symmetric, "gram matrix not symmetric");
    rmat a = gram;
    rmat t = rmat::identity(n);

    auto col_addmul = [&](rmat& m, int dst, int src, const rat& f) {
        for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
    };
    auto col_swap = [&](rmat& m, int i, int j) {
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    };
    auto row_addmul = [&](rmat& m, int dst, int src, const rat& f) {
        for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
    };
    auto row_swap = [&](rmat& m, int i, int j) {
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    };

    for (int i = 0; i < n; ++i) {
        if (a.at(i, i).is_zero()) {
            int jd = -1;
            for (int j = i + 1; j < n; ++j)
                if (!a.at(j, j).is_zero()) { jd = j; break; }
            if (jd >= 0) {
                col_swap(a, i, jd); row_swap(a, i, jd); col_swap(t, i, jd);
            } else {
                int jo = -1;
                for (int j = i + 1; j < n; ++j)
                    if (!a.at(i, j).is_zero()) { jo = j; break; }
                if (jo < 0) fail(errc::degenerate, "gram matrix is degenerate");
                // b_i += b_j puts 2*(b_i,b_j) on the diagonal
                col_addmul(a, i, jo, rat(1)); row_addmul(a, i, jo, rat(1));
                col_addmul(t, i, jo, rat(1));
            }
        }
        rat piv = a.at(i, i);
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            rat f = -(a.at(i, j) / piv);
            col_addmul(a, j, i, f); row_addmul(a, j, i, f);
            col_addmul(t, j, i, f);
        }
    }
    std::vector<rat> coeffs(n);
    for (int i = 0; i < n; ++i) {
        if (a.at(i, i).is_zero()) fail(errc::degenerate, "gram matrix is degenerate");
        coeffs[i] = a.at(i, i);
    }
    return {diagonal_form{std::move(coeffs)}, std::move(t)};
}

form_signature signature(const diagonal_form& f) {
    form_signature s;
    for (const rat& c : f.coeffs) (c.sign() > 0 ? s.pos : s.neg)++;
    return s;
}

int hasse_invariant(const diagonal_form& f, const place& v) {
    int s = 1;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = i + 1; j < f.coeffs.size(); ++j)
            s *= hilbert_symbol(f.coeffs[i], f.coeffs[j], v);
    return s;
}

bool is_isotropic_local(const diagonal_form& f, const place& v) {
    int n = int(f.coeffs.size());
    if (n < 1) fail(errc::bad_input, "empty form");
    if (n == 1) return false;
    if (v.is_infinite()) {
        form_signature s = signature(f);
        return s.pos > 0 && s.neg > 0;
    }
    if (n == 2) return is_local_square(-(f.coeffs[0] * f.coeffs[1]), v);
    rat d(1);
    for (const rat& c : f.coeffs) d *= c;
    if (n == 3)
        return hasse_invariant(f, v) == hilbert_symbol(rat(-1), -d, v);
    if (n == 4) {
        if (!is_local_square(d, v)) return true;
        return hasse_invariant(f, v) == hilbert_symbol(rat(-1), rat(-1), v);
    }
    return true; // rank >= 5 over Q_p
}

bool is_isotropic_rational(const diagonal_form& f) {
    int n = int(f.coeffs.size());
    if (n < 1) fail(errc::bad_input, "empty form");
    if (n == 1) return false;
    if (n == 2) return squarefree_part(-(f.coeffs[0] * f.coeffs[1])) == 1;
    form_signature s = signature(f);
    bool indefinite = s.pos > 0 && s.neg > 0;
    if (!indefinite) return false;
    if (n >= 5) return true; // Meyer
    for (const place& v : relevant_places(f.coeffs))
        if (!is_isotropic_local(f, v)) return false;
    return true;
}

bool kummer_form_isotropic(i64 n, i64 d, kummer_variant variant) {
    if (n < 2 || d < 1) fail(errc::out_of_range, "kummer form requires n >= 2, d >= 1");
    rat z = variant == kummer_variant::I ? rat(-1) : rat(-3);
    return is_isotropic_rational(make_form({rat(add(n, 1)), rat(d), z, rat(-1)}));
}

} // namespace exlat
