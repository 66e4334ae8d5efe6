#include "exlat/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace exlat {

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (i64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

place place::finite(i64 p) {
    if (!is_prime(p)) fail(errc::bad_input, "finite place requires a prime");
    return place(p);
}

i64 place::prime() const {
    if (p_ == 0) fail(errc::bad_input, "infinite place has no prime");
    return p_;
}

i64 factorization::reconstruct() const {
    i64 r = sign;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) r = mul(r, p);
    return r;
}

factorization factorize(i64 n) {
    if (n == 0) fail(errc::zero_input, "factorize(0)");
    if (n > working_bound || n < -working_bound)
        fail(errc::input_too_large, "factorize input beyond 2^62");
    factorization f;
    if (n < 0) { f.sign = -1; n = -n; }
    for (i64 p : {i64(2), i64(3)}) {
        while (n % p == 0) { ++f.factors[p]; n /= p; }
    }
    for (i64 d = 5; d * d <= n; d += 6) {
        while (n % d == 0) { ++f.factors[d]; n /= d; }
        while (n % (d + 2) == 0) { ++f.factors[d + 2]; n /= d + 2; }
    }
    if (n > 1) ++f.factors[n];
    return f;
}

int jacobi_symbol(i64 a, i64 n) {
    if (n < 1 || n % 2 == 0) fail(errc::even_modulus, "jacobi symbol needs odd positive modulus");
    a = fmod(a, n);
    int s = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 m = n % 8;
            if (m == 3 || m == 5) s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) s = -s;
        a %= n;
    }
    return n == 1 ? s : 0;
}

namespace {

// valuation and unit part of a nonzero integer at p
std::pair<int, i64> val_unit(i64 n, i64 p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return {v, n};
}

int eps2(i64 u) { return int(((u - 1) / 2) % 2 + 2) % 2; }        // (u-1)/2 mod 2
int omega2(i64 u) { return int(((u * u - 1) / 8) % 2 + 2) % 2; }  // (u^2-1)/8 mod 2

int legendre(i64 a, i64 p) { return jacobi_symbol(a, p); }

} // namespace

i64 square_class(const rat& r) {
    if (r.is_zero()) fail(errc::zero_input, "square class of zero");
    return mul(r.num, r.den);
}

int hilbert_symbol(const rat& ra, const rat& rb, const place& v) {
    if (ra.is_zero() || rb.is_zero()) fail(errc::zero_input, "hilbert symbol of zero");
    i64 a = square_class(ra);
    i64 b = square_class(rb);
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    i64 p = v.prime();
    auto [al, u0] = val_unit(std::abs(a), p);
    auto [be, w0] = val_unit(std::abs(b), p);
    i64 u = a < 0 ? -u0 : u0;
    i64 w = b < 0 ? -w0 : w0;
    if (p == 2) {
        // |u*u| can overflow for huge unit parts; reduce mod 8 first
        i64 u8 = fmod(u, 8), w8 = fmod(w, 8);
        int e = (eps2(u8) * eps2(w8) + al * omega2(w8) + be * omega2(u8)) % 2;
        return e ? -1 : 1;
    }
    int e = (al % 2) * (be % 2) * int(((p - 1) / 2) % 2);
    int s = e % 2 ? -1 : 1;
    if (be % 2) s *= legendre(u, p);
    if (al % 2) s *= legendre(w, p);
    return s;
}

i64 squarefree_part(const rat& r) {
    if (r.is_zero()) fail(errc::zero_input, "squarefree part of zero");
    factorization f = factorize(square_class(r));
    i64 s = f.sign;
    for (auto [p, e] : f.factors)
        if (e % 2) s = mul(s, p);
    return s;
}

std::vector<place> relevant_places(const std::vector<rat>& coeffs) {
    std::set<i64> ps{2};
    for (const rat& c : coeffs) {
        factorization f = factorize(square_class(c));
        for (auto [p, e] : f.factors) ps.insert(p);
    }
    std::vector<place> out;
    out.reserve(ps.size());
    for (i64 p : ps) out.push_back(place::finite(p));
    return out;
}

bool is_local_square(const rat& a, const place& v) {
    if (a.is_zero()) fail(errc::zero_input, "local square test of zero");
    i64 s = square_class(a);
    if (v.is_infinite()) return s > 0;
    i64 p = v.prime();
    auto [val, u0] = val_unit(std::abs(s), p);
    i64 u = s < 0 ? -u0 : u0;
    if (val % 2) return false;
    if (p == 2) return fmod(u, 8) == 1;
    return legendre(u, p) == 1;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_input: return "ZeroInput";
        case errc::input_too_large: return "InputTooLarge";
        case errc::even_modulus: return "EvenModulus";
        case errc::overflow: return "Overflow";
        case errc::singular: return "Singular";
        case errc::degenerate: return "Degenerate";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::zero_vector: return "ZeroVector";
        case errc::isotropic_vector: return "IsotropicVector";
        case errc::not_isometry: return "NotIsometry";
        case errc::not_even: return "NotEven";
        case errc::not_in_dual: return "NotInDual";
        case errc::not_definite: return "NotDefinite";
        case errc::rank_too_large: return "RankTooLarge";
        case errc::wrong_rank: return "WrongRank";
        case errc::vector_not_in_lattice: return "VectorNotInLattice";
        case errc::out_of_range: return "OutOfRange";
        case errc::wrong_signature: return "WrongSignature";
        case errc::not_orthogonal: return "NotOrthogonal";
        case errc::wrong_signs: return "WrongSigns";
        case errc::not_so: return "NotSO";
        case errc::infinite_order: return "InfiniteOrder";
        case errc::square_too_small: return "SquareTooSmall";
        case errc::not_primitive: return "NotPrimitive";
        case errc::not_negative: return "NotNegative";
        case errc::invalid_mukai: return "InvalidMukai";
        case errc::invalid_case: return "InvalidCase";
        case errc::not_hyperbolic: return "NotHyperbolic";
        case errc::v_not_primitive: return "VNotPrimitive";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

} // namespace exlat
