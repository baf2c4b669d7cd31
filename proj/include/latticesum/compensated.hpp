#pragma once

#include <cmath>
#include <complex>

namespace latticesum {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
/// when an addend is larger in magnitude than the running sum.
template <typename Scalar>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(Scalar init) : sum_(init) {}

  CompensatedSum& operator+=(Scalar x) {
    const Scalar t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator+=(const CompensatedSum& other) {
    *this += other.sum_;
    comp_ += other.comp_;
    return *this;
  }

  Scalar value() const { return sum_ + comp_; }

 private:
  Scalar sum_{0};
  Scalar comp_{0};
};

/// Componentwise compensated accumulation of a complex sum.
template <typename Scalar>
class CompensatedComplexSum {
 public:
  CompensatedComplexSum& operator+=(std::complex<Scalar> z) {
    re_ += z.real();
    im_ += z.imag();
    return *this;
  }
  CompensatedComplexSum& operator+=(const CompensatedComplexSum& other) {
    re_ += other.re_;
    im_ += other.im_;
    return *this;
  }
  std::complex<Scalar> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Scalar> re_;
  CompensatedSum<Scalar> im_;
};

}  // namespace latticesum
