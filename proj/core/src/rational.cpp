#include "milnor/rational.hpp"

#include "milnor/error.hpp"

namespace milnor {

std::string to_fraction_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational den = o.norm_squared();
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Rational r = (re * o.re + im * o.im) / den;
  Rational i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_fraction_string(z.re);
  std::string imag;
  const Rational abs_im = z.im < 0 ? Rational(-z.im) : z.im;
  // a bare "1/5i" would read back as 1/(5i)
  if (abs_im != 1) imag = to_fraction_string(abs_im) + (boost::multiprecision::denominator(abs_im) == 1 ? "" : "*");
  imag += "i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return to_fraction_string(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

}  // namespace milnor
