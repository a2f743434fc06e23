#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobcalc/polyring/field.hpp"
#include "frobcalc/polyring/monomial.hpp"

namespace frobcalc {

/// F_p[x_1..x_n] together with the monomial order its polynomials are sorted by.
class Ring {
 public:
  Ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order);

  std::uint32_t characteristic() const { return field_.characteristic(); }
  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  /// `GF(p)[x,y,...]`.
  std::string descriptor() const;

  bool operator==(const Ring& other) const;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Graded reverse lex unless an order is given.
RingPtr make_ring(std::uint32_t p, std::vector<std::string> names);
RingPtr make_ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order);

/// Same characteristic and names, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* operation);

}  // namespace frobcalc
