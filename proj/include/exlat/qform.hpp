#pragma once

#include "exlat/intlinalg.hpp"
#include "exlat/numtheory.hpp"

namespace exlat {

// Nondegenerate rational quadratic form in diagonal shape.
struct diagonal_form {
    std::vector<rat> coeffs; // all nonzero, rank >= 1
};

struct form_signature {
    int pos = 0;
    int neg = 0;
};

struct diagonalization {
    diagonal_form form;
    rmat transform; // T with T^t * G * T diagonal, invertible over Q
};

// Symmetric Gaussian reduction with deterministic pivot order.
diagonalization diagonalize(const rmat& gram);

form_signature signature(const diagonal_form& f);

// Product over i<j of hilbert_symbol(a_i, a_j, v).
int hasse_invariant(const diagonal_form& f, const place& v);

// Local isotropy by the rank casework on invariants; no search.
bool is_isotropic_local(const diagonal_form& f, const place& v);

// Hasse-Minkowski: isotropic at infinity and at every relevant prime.
bool is_isotropic_rational(const diagonal_form& f);

enum class kummer_variant { I, II };

// Variant I: (n+1)x^2 + d y^2 - z^2 - t^2; variant II replaces -z^2 by -3z^2.
bool kummer_form_isotropic(i64 n, i64 d, kummer_variant variant);

diagonal_form make_form(std::vector<rat> coeffs);

} // namespace exlat
