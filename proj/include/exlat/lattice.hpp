#pragma once

#include <optional>
#include <utility>

#include "exlat/qform.hpp"

namespace exlat {

// Integral nondegenerate lattice given by its Gram matrix; vectors are
// integer coordinate rows in the implied basis, dual vectors rational
// coordinate rows (x in L^dual iff x*G is integral).
struct lattice {
    imat gram;
    int rank = 0;
    bool even = false;
    i64 determinant = 0;
};

lattice make_lattice(const imat& gram); // throws NotSymmetric / Degenerate

// Named constructors, documented basis order.
lattice lat_U();                 // basis (e, f), (e,f) = 1
lattice lat_A1();                // [[2]]
lattice lat_A2();                // [[2,-1],[-1,2]]
lattice span_lattice(const ivec& diag);
lattice rescale(const lattice& l, i64 m);
lattice direct_sum(const lattice& a, const lattice& b);
lattice kummer_lattice(i64 n);   // basis (e1,f1,e2,f2,e3,f3,delta), n >= 2
lattice mukai_lattice();         // basis (e1,f1,...,e4,f4)

struct sublattice {
    imat basis; // rows are coordinates of generators in the ambient basis
};

struct discriminant_group {
    std::vector<i64> invariant_factors; // d1 | d2 | ..., each > 1
    std::vector<rvec> generators;       // dual classes, d_i * g_i integral
    i64 order = 1;
};

i64 pairing(const lattice& l, const ivec& x, const ivec& y);
i64 norm_of(const lattice& l, const ivec& x);
rat pairing(const lattice& l, const rvec& x, const rvec& y);

lattice induced_lattice(const lattice& l, const sublattice& s); // B*G*B^t

discriminant_group compute_discriminant_group(const lattice& l);

// q_L value of a dual vector, canonical representative in [0, 2).
rat discriminant_form_value(const lattice& l, const rvec& x);

i64 divisibility(const lattice& l, const ivec& v); // gcd of entries of v*G

bool is_primitive_vector(const ivec& v);
ivec primitive_part(const ivec& v);

sublattice orthogonal_complement(const lattice& l, const sublattice& s);
sublattice saturation(const lattice& l, const sublattice& s);

rmat reflection_matrix(const lattice& l, const ivec& v); // throws IsotropicVector
bool is_root(const lattice& l, const ivec& v);

bool is_isometry(const lattice& l, const imat& m); // M^t G M == G
i64 isometry_det(const imat& m);                   // +-1 for isometries

// Applies an isometry (column-convention matrix) to a coordinate row.
ivec apply_isometry(const imat& m, const ivec& x);

bool is_orientation_preserving(const lattice& l, const imat& m);

enum class discriminant_action { plus_id, minus_id, other };
discriminant_action acts_on_discriminant_as(const lattice& l, const imat& m);

std::pair<sublattice, sublattice> fixed_and_coinvariant(const lattice& l, const imat& m);

// All v with v*G*v^t = t in a definite lattice of rank <= 4; excludes the
// zero vector, includes both signs.
std::vector<ivec> vectors_of_norm(const lattice& l, i64 t);

bool is_isometric_definite(const lattice& l1, const lattice& l2);

struct isotropic_class {
    ivec vec;    // primitive, sign normalized so the pairing is positive
    i64 pairing; // (vec, v) > 0
};

// Primitive isotropic classes of a rank-2 lattice up to sign, with their
// pairings against v (v^2 > 0); empty when -det(G) is not a perfect square.
std::vector<isotropic_class> isotropic_profile_rank2(const lattice& l, const ivec& v);

// Minimal polynomial-free finite-order test: characteristic polynomial
// factors into cyclotomics and the implied power is the identity.
struct order_info {
    bool finite = false;
    i64 order = 0;
};
order_info finite_order(const imat& m, i64 cap = 10000);

} // namespace exlat
