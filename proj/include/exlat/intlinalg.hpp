#pragma once

#include <initializer_list>
#include <vector>

#include "exlat/rational.hpp"

namespace exlat {

using ivec = std::vector<i64>;
using rvec = std::vector<rat>;

// Dense row-major integer matrix. Vectors throughout the library are rows
// of coordinates; the pairing against a Gram matrix G is x * G * y^T.
struct imat {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a;

    imat() = default;
    imat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    imat(std::initializer_list<std::initializer_list<i64>> rws);

    i64& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    i64 at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    ivec row(int r) const;
    void set_row(int r, const ivec& v);

    static imat identity(int n);
    friend bool operator==(const imat&, const imat&) = default;
};

struct rmat {
    int rows = 0;
    int cols = 0;
    std::vector<rat> a;

    rmat() = default;
    rmat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}

    rat& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    const rat& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static rmat identity(int n);
    static rmat from(const imat& m);
    bool is_integral() const;
    imat to_imat() const; // throws bad_input unless integral
    friend bool operator==(const rmat&, const rmat&) = default;
};

imat transpose(const imat& m);
imat matmul(const imat& x, const imat& y);
ivec vecmat(const ivec& x, const imat& m);
imat matadd(const imat& x, const imat& y);
imat matsub(const imat& x, const imat& y);
imat scale(const imat& m, i64 s);
bool is_symmetric(const imat& m);

rmat transpose(const rmat& m);
rmat matmul(const rmat& x, const rmat& y);
rvec vecmat(const rvec& x, const rmat& m);
rmat matsub(const rmat& x, const rmat& y);

// Exact determinants: Bareiss fraction-free for integer input, Gaussian
// elimination for rational input.
i64 det(const imat& m);
rat det(const rmat& m);

struct hnf_result {
    imat h; // row Hermite normal form
    imat u; // unimodular, u*m = h
};

struct snf_result {
    imat s; // diagonal, d1 | d2 | ..., entries >= 0
    imat u; // unimodular
    imat v; // unimodular, u*m*v = s
};

// Row Hermite normal form: echelon shape, positive pivots, entries above
// each pivot reduced into [0, pivot).
hnf_result hnf(const imat& m);

snf_result snf(const imat& m);

// Basis of {x : x*m = 0} over Z, one row per basis vector; primitive
// (saturated) by construction since the rows come from a unimodular
// transform.
imat integer_kernel(const imat& m);

// Basis of (rational row space of m) intersected with Z^ambient_rank,
// computed as the kernel of the kernel.
imat saturate_rowspace(const imat& m, int ambient_rank);

rmat rational_inverse(const rmat& m); // throws singular

int rank_of(const imat& m);

// Solves x * m = target over Q for a row vector x (m with independent rows).
// Returns empty vector when the system is inconsistent.
rvec solve_left(const imat& m, const rvec& target);

} // namespace exlat
