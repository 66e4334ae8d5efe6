#pragma once

#include <map>
#include <vector>

#include "exlat/rational.hpp"

namespace exlat {

// A place of Q: a finite prime or the archimedean place.
class place {
  public:
    static place infinite() { return place(0); }
    static place finite(i64 p); // verifies primality

    bool is_infinite() const { return p_ == 0; }
    i64 prime() const; // throws for the infinite place

    friend bool operator==(const place&, const place&) = default;

  private:
    explicit place(i64 p) : p_(p) {}
    i64 p_; // 0 encodes infinity
};

struct factorization {
    int sign = 1;                 // +1 or -1
    std::map<i64, int> factors;   // prime -> positive exponent

    i64 reconstruct() const;
};

bool is_prime(i64 n);

// Deterministic trial division; |n| <= 2^62, n != 0.
factorization factorize(i64 n);

// Standard Jacobi symbol (a|n) for odd n >= 1.
int jacobi_symbol(i64 a, i64 n);

// Hilbert symbol (a,b)_v for nonzero rationals: +1 iff z^2 = a x^2 + b y^2
// has a nontrivial solution over the completion at v. Closed-form
// evaluation (tame formula at odd p, unit-class formula at 2, signs at
// infinity); no search.
int hilbert_symbol(const rat& a, const rat& b, const place& v);

// Squarefree integer s with r/s a rational square.
i64 squarefree_part(const rat& r);

// The finite places where invariants of objects built from the given
// square classes can be nontrivial: 2 and every prime dividing a
// numerator or denominator.
std::vector<place> relevant_places(const std::vector<rat>& coeffs);

// Integer square-class representative num*den of a nonzero rational.
i64 square_class(const rat& r);

// Is a a square in the completion at v?
bool is_local_square(const rat& a, const place& v);

} // namespace exlat
