#include "core/gaussian_rational.hpp"

#include <sstream>
#include <stdexcept>

namespace liedist {

std::string GaussianRational::str() const {
  std::ostringstream os;
  if (im == 0) {
    os << re;
  } else if (re == 0) {
    os << im << "*i";
  } else {
    os << re << (im > 0 ? "+" : "") << im << "*i";
  }
  return os.str();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  if (x == 0.0) return Rational(0);
  int exp2 = 0;
  double m = std::frexp(x, &exp2);  // x = m * 2^exp2, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  exp2 -= 53;
  Rational r(mant);
  if (exp2 >= 0) {
    r *= Rational(BigInt(1) << exp2);
  } else {
    r /= Rational(BigInt(1) << (-exp2));
  }
  return r;
}

GaussianRational gaussian_from_complex(std::complex<double> z) {
  return {rational_from_double(z.real()), rational_from_double(z.imag())};
}

std::size_t scalar_bits(const GaussianRational& z) {
  auto bits = [](const Rational& r) {
    return msb(abs(numerator(r)) + 1) + msb(denominator(r)) + 2;
  };
  return bits(z.re) + bits(z.im);
}

}  // namespace liedist
