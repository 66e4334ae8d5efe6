#pragma once

#include <string>

#include "exlat/lattice.hpp"

namespace exlat {

// Standard-form primitive embedding of the rank-7 lattice into U^4: the
// three hyperbolic planes map identically and delta goes to
// (n+1)e4 - f4; the complement is generated by v = (n+1)e4 + f4.
struct wieneck_embedding {
    i64 n = 0;
    imat map; // 7x8, rows are images of the basis
    ivec v;   // 8 coordinates, v^2 = 2n+2
};

wieneck_embedding standard_wieneck(i64 n);

// det(f) * f acts trivially on the discriminant group, inside O^+.
bool is_monodromy(i64 n, const imat& f);

// e^2 = -2(n+1) and (n+1) | div(e), for primitive negative e.
bool reflection_monodromy_criterion(i64 n, const ivec& e);

struct extension {
    imat matrix; // 8x8 isometry of the big lattice
    i64 det = 1;
    int epsilon = 1; // sign of the action on the complement generator
};

// Unique extension across the embedding when the discriminant action is
// +-Id; empty otherwise.
std::optional<extension> extend_isometry(const wieneck_embedding& emb, const imat& g);

// Isotropy of <2n+2> + NS over Q.
bool is_twisted_modular(i64 n, const imat& ns_gram);

// Stably prime exceptional test: some isotropic class of the saturation
// of Zv + Zw pairs to 1 or 2 with v.
bool is_pex(const ivec& v, const ivec& w);

struct effective_verdict {
    bool effective = false;
    std::string reason; // empty when effective
};

effective_verdict symplectic_effective(const imat& g, const ivec& v);

enum class wall_kind { divisorial, flopping, not_a_wall };

struct wall_verdict {
    wall_kind kind = wall_kind::not_a_wall;
    std::optional<ivec> isotropic_witness;  // divisorial: (w,v) in {1,2}
    std::optional<ivec> decomposition_v1;   // flopping: v = v1 + (v - v1)
};

const char* wall_kind_name(wall_kind k);

// Lattice-theoretic wall classification on a hyperbolic rank-2 lattice.
wall_verdict classify_wall(const imat& h_gram, const ivec& v_coords);

// Mukai data (r, c, chi, d) for v = (r, cD, chi), D primitive of square 2d.
struct mukai_data {
    i64 r = 1;
    i64 c = 0;
    i64 chi = 0;
    i64 d = 1;

    i64 v_square() const; // 2dc^2 - 2r*chi
};

mukai_data make_mukai(i64 r, i64 c, i64 chi, i64 d); // throws InvalidMukai

struct vertical_lattice {
    imat gram;     // 2x2
    ivec v_coords; // v in the basis (b1, b2)
    i64 lambda0 = 1;
};

vertical_lattice vertical_wall_lattice(const mukai_data& m);

enum class series { none, s1, s2, s3 };

struct series_match {
    series kind = series::none;
    i64 p1 = 0; // k for s1, a for s2/s3
    i64 p2 = 0; // m for all three
};

struct vertical_wall_report {
    mukai_data mukai;
    std::optional<ivec> reflection_e; // (r, c, chi_e, d) encoding, when integral
    bool monodromy_ok = false;
    series_match hit;
    wall_verdict wall;
    bool induced_by_finite_order_symplectic = false;
    bool c_zero_outside_hypotheses = false;
};

vertical_wall_report make_vertical_wall_report(const mukai_data& m);

// Anisotropic (n, d) pairs per n, in increasing d order.
struct exceptions_table {
    kummer_variant variant;
    i64 n_lo, n_hi, d_lo, d_hi;
    std::vector<std::pair<i64, std::vector<i64>>> rows; // only nonempty rows
};

exceptions_table exceptions_scan(i64 n_lo, i64 n_hi, i64 d_lo, i64 d_hi,
                                 kummer_variant variant, int threads = 1);

struct exception_model {
    int model_case = 1;
    i64 n = 2;
    i64 d = 1;
    imat ns_gram;  // 3x3
    imat isometry; // 3x3
    kummer_variant variant;
    i64 form_d;  // parameter of the associated quaternary form
    // verification record
    bool isometry_ok = false;
    i64 order = 0;
    ivec fixed_vector;
    i64 fixed_square = 0;
    imat coinvariant_gram;
    bool coinvariant_matches = false;
    bool anisotropic = false;
    bool twisted_modular = false;
    bool coherent = false; // twisted_modular == !anisotropic
    bool verified() const;
};

exception_model exception_models(int model_case, i64 n, i64 d);

struct special_isometry_pair {
    imat g2; // order 2, coinvariant A1^2(-1)
    imat g3; // order 3, coinvariant A2(-1)
};

special_isometry_pair special_isometries();

} // namespace exlat
