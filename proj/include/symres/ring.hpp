#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symres/field.hpp"
#include "symres/monomial.hpp"

namespace symres {

/// Polynomial ring k[x_0..x_{nx-1}, y_0..y_{ny-1}] with an active term order.
/// R = k[x_0..x_n] is the case ny = 0; S = R[y_0..y_n] has ny = nx.
template <class Field>
class Ring {
 public:
  Ring(Field field, std::size_t nx, std::size_t ny, TermOrder order = TermOrder::Block,
       std::vector<std::string> x_names = {})
      : field_(std::move(field)), nx_(nx), ny_(ny), order_(order), x_names_(std::move(x_names)) {
    if (nx + ny == 0 || nx + ny > kMaxVariables) {
      throw Error("Ring: variable count must be in [1, " + std::to_string(kMaxVariables) + "]");
    }
    if (x_names_.empty()) {
      for (std::size_t i = 0; i < nx; ++i) x_names_.push_back("x" + std::to_string(i));
    }
    if (x_names_.size() != nx) throw Error("Ring: wrong number of x-variable names");
  }

  const Field& field() const { return field_; }
  std::size_t num_x() const { return nx_; }
  std::size_t num_y() const { return ny_; }
  std::size_t num_vars() const { return nx_ + ny_; }
  TermOrder order() const { return order_; }
  const std::vector<std::string>& x_names() const { return x_names_; }

  std::string variable_name(std::size_t slot) const {
    return slot < nx_ ? x_names_[slot] : "y" + std::to_string(slot - nx_);
  }

  int compare(const Monomial& a, const Monomial& b) const {
    return compare_monomials(order_, a, b, nx_, nx_ + ny_);
  }

  Monomial variable(std::size_t slot, int power = 1) const {
    if (slot >= num_vars()) throw Error("Ring: variable index out of range");
    return Monomial::variable(slot, nx_, power);
  }

  /// Same field and variables, different term order.
  std::shared_ptr<const Ring> with_order(TermOrder order) const {
    return std::make_shared<const Ring>(field_, nx_, ny_, order, x_names_);
  }

  /// S = R[y_0..y_{nx-1}] built from an x-only ring.
  std::shared_ptr<const Ring> symmetric_extension(TermOrder order) const {
    return std::make_shared<const Ring>(field_, nx_, nx_, order, x_names_);
  }

  /// The x-only ring underlying this one.
  std::shared_ptr<const Ring> base_ring() const {
    return std::make_shared<const Ring>(field_, nx_, 0, TermOrder::GrevlexAll, x_names_);
  }

  bool same_as(const Ring& o) const {
    return field_ == o.field_ && nx_ == o.nx_ && ny_ == o.ny_ && order_ == o.order_;
  }

 private:
  Field field_;
  std::size_t nx_;
  std::size_t ny_;
  TermOrder order_;
  std::vector<std::string> x_names_;
};

template <class Field>
using RingPtr = std::shared_ptr<const Ring<Field>>;

template <class Field>
RingPtr<Field> make_ring(Field field, std::size_t nx, std::size_t ny, TermOrder order = TermOrder::Block,
                         std::vector<std::string> x_names = {}) {
  return std::make_shared<const Ring<Field>>(std::move(field), nx, ny, order, std::move(x_names));
}

}  // namespace symres
