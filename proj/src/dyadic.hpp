#ifndef HIGLIM_DYADIC_HPP
#define HIGLIM_DYADIC_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace higlim {

// Exact nonnegative dyadic rational p / 2^k, stored in canonical form: the
// numerator is odd or zero, and a zero numerator forces exponent 0.  The
// exponent is capped well below 63 so sums of metric values never overflow.
class Dyadic {
 public:
  static constexpr std::uint32_t kMaxExponent = 62;

  Dyadic() = default;  // zero
  Dyadic(std::int64_t numerator, std::uint32_t exponent);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  // 2^-k for k >= 0
  static Dyadic two_to_minus(std::int32_t k);

  std::int64_t numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  friend Dyadic operator+(Dyadic a, Dyadic b);
  friend Dyadic operator-(Dyadic a, Dyadic b);  // requires a >= b
  friend bool operator==(Dyadic, Dyadic);
  friend bool operator<(Dyadic, Dyadic);
  friend bool operator<=(Dyadic a, Dyadic b) { return a < b || a == b; }

  // "p/2^k", e.g. "3/2^2"; zero prints "0/2^0" and one prints "1/2^0".
  std::string to_text() const;

 private:
  std::int64_t num_ = 0;
  std::uint32_t exp_ = 0;
};

}  // namespace higlim

#endif
