#pragma once

namespace prabhakar::detail {

template <typename Real>
constexpr Real magnitude(Real x) {
  return x < 0 ? -x : x;
}

/// Neumaier's variant of Kahan summation; also tracks sum |x_i| so callers
/// can bound cancellation.
template <typename Real>
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (magnitude(sum_) >= magnitude(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_sum_ += magnitude(x);
  }

  Real value() const { return sum_ + comp_; }
  Real abs_sum() const { return abs_sum_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
  Real abs_sum_ = 0;
};

}  // namespace prabhakar::detail
