#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symres/monomial.hpp"

namespace symres {

/// A graded free module  S(-a_0,-b_0) ⊕ ... ⊕ S(-a_{r-1},-b_{r-1}), stored as the
/// list of generator bidegrees (a_k, b_k).
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<BiDegree> shifts) : shifts_(std::move(shifts)) {}

  static GradedFreeModule repeated(std::size_t rank, BiDegree degree) {
    return GradedFreeModule(std::vector<BiDegree>(rank, degree));
  }

  std::size_t rank() const { return shifts_.size(); }
  bool empty() const { return shifts_.empty(); }
  BiDegree shift(std::size_t i) const { return shifts_.at(i); }
  const std::vector<BiDegree>& shifts() const { return shifts_; }

  /// M ⊗ S(t): every generator degree moves by -t.
  GradedFreeModule twisted(BiDegree t) const {
    std::vector<BiDegree> out;
    out.reserve(shifts_.size());
    for (BiDegree d : shifts_) out.push_back(d - t);
    return GradedFreeModule(std::move(out));
  }

  /// Hom(M, S) ⊗ S(t).
  GradedFreeModule dual(BiDegree t = {}) const {
    std::vector<BiDegree> out;
    out.reserve(shifts_.size());
    for (BiDegree d : shifts_) out.push_back(-d - t);
    return GradedFreeModule(std::move(out));
  }

  GradedFreeModule direct_sum(const GradedFreeModule& o) const {
    std::vector<BiDegree> out = shifts_;
    out.insert(out.end(), o.shifts_.begin(), o.shifts_.end());
    return GradedFreeModule(std::move(out));
  }

  bool operator==(const GradedFreeModule& o) const { return shifts_ == o.shifts_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < shifts_.size(); ++i) {
      if (i) s += " ";
      s += shifts_[i].to_string();
    }
    return s + "]";
  }

 private:
  std::vector<BiDegree> shifts_;
};

}  // namespace symres
