#ifndef GAUSSCUBIC_ERRORS_HPP_
#define GAUSSCUBIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gausscubic {

enum class Errc {
  not_prime,
  reducible_binomial,
  field_too_large,
  no_such_binomial,
  order_not_dividing,
  mixed_rings,
  invalid_params,
  not_one_mod_six,
  no_valid_associate,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gausscubic

#endif  // GAUSSCUBIC_ERRORS_HPP_
