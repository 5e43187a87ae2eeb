#include "dyadic.hpp"

#include <limits>

namespace higlim {

namespace {

// Numerator scaled to a common exponent.  128-bit so that the shift itself
// cannot overflow before the range check.
__int128 scaled(std::int64_t num, std::uint32_t exp, std::uint32_t common) {
  return static_cast<__int128>(num) << (common - exp);
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, std::uint32_t exponent) {
  if (numerator < 0) throw ArgumentError("dyadic numerator must be nonnegative");
  while (numerator != 0 && numerator % 2 == 0 && exponent > 0) {
    numerator /= 2;
    --exponent;
  }
  if (numerator == 0) exponent = 0;
  if (exponent > kMaxExponent) throw ArgumentError("dyadic exponent exceeds the supported maximum");
  num_ = numerator;
  exp_ = exponent;
}

Dyadic Dyadic::two_to_minus(std::int32_t k) {
  if (k < 0) throw ArgumentError("two_to_minus needs a nonnegative exponent");
  return Dyadic(1, static_cast<std::uint32_t>(k));
}

Dyadic operator+(Dyadic a, Dyadic b) {
  std::uint32_t e = std::max(a.exp_, b.exp_);
  __int128 sum = scaled(a.num_, a.exp_, e) + scaled(b.num_, b.exp_, e);
  if (sum > std::numeric_limits<std::int64_t>::max())
    throw ArgumentError("dyadic overflow in addition");
  return Dyadic(static_cast<std::int64_t>(sum), e);
}

Dyadic operator-(Dyadic a, Dyadic b) {
  std::uint32_t e = std::max(a.exp_, b.exp_);
  __int128 diff = scaled(a.num_, a.exp_, e) - scaled(b.num_, b.exp_, e);
  if (diff < 0) throw ArgumentError("dyadic subtraction would go negative");
  return Dyadic(static_cast<std::int64_t>(diff), e);
}

bool operator==(Dyadic a, Dyadic b) { return a.num_ == b.num_ && a.exp_ == b.exp_; }

bool operator<(Dyadic a, Dyadic b) {
  std::uint32_t e = std::max(a.exp_, b.exp_);
  return scaled(a.num_, a.exp_, e) < scaled(b.num_, b.exp_, e);
}

std::string Dyadic::to_text() const {
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

}  // namespace higlim
