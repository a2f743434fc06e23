#include "frobcalc/polyring/ring.hpp"

#include <algorithm>
#include <set>

#include "frobcalc/errors.hpp"

namespace frobcalc {

Ring::Ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order)
    : field_(p), names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() + 1 > kMaxVariables) {
    throw DomainError("rings are limited to " + std::to_string(kMaxVariables - 1) + " variables");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second) throw DomainError("variable names must be unique and nonempty");
  }
  if (order_.precedence().size() != names_.size()) {
    throw DomainError("monomial order does not match the variable count");
  }
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::string Ring::descriptor() const {
  std::string s = "GF(" + std::to_string(characteristic()) + ")[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  return s + "]";
}

bool Ring::operator==(const Ring& other) const {
  return field_ == other.field_ && names_ == other.names_ && order_ == other.order_;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names) {
  auto order = MonomialOrder::grevlex(names.size());
  return std::make_shared<const Ring>(p, std::move(names), std::move(order));
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(p, std::move(names), std::move(order));
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->characteristic(), ring->names(), std::move(order));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* operation) {
  if (!same_ring(a, b)) {
    throw RingMismatch(std::string(operation) + ": " + a->descriptor() + " (" + a->order().name() +
                       ") vs " + b->descriptor() + " (" + b->order().name() + ")");
  }
}

}  // namespace frobcalc
