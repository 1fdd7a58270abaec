#pragma once

#include <stdexcept>
#include <string>

namespace ppf {

enum class errc {
  ok = 0,
  invalid_argument,
  non_prime_p,
  reducible_modulus,
  field_too_large,
  modulus_required,
  zero_inverse,
  zero_log,
  bad_table_length,
  no_cyclotomic_form,
  nonzero_origin,
  invalid_chain,
  degenerate_chain,
  not_permutation,
  oracle_too_large,
  scan_too_large,
  coset_mismatch,
  order_not_dividing,
  singular_moebius,
  parse_error,
  coefficient_out_of_range,
  not_prime_field,
  degree_too_small,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace ppf
