#pragma once

#include <stdexcept>
#include <string>

namespace exlat {

enum class errc {
    zero_input,
    input_too_large,
    even_modulus,
    overflow,
    singular,
    degenerate,
    not_symmetric,
    zero_vector,
    isotropic_vector,
    not_isometry,
    not_even,
    not_in_dual,
    not_definite,
    rank_too_large,
    wrong_rank,
    vector_not_in_lattice,
    out_of_range,
    wrong_signature,
    not_orthogonal,
    wrong_signs,
    not_so,
    infinite_order,
    square_too_small,
    not_primitive,
    not_negative,
    invalid_mukai,
    invalid_case,
    not_hyperbolic,
    v_not_primitive,
    bad_input,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace exlat
