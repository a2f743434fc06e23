#include "frobcalc/nafield/orthogonal.hpp"

#include <algorithm>
#include <set>

#include "frobcalc/errors.hpp"
#include "frobcalc/nafield/upoly.hpp"

namespace frobcalc {

namespace {

std::uint32_t class_of(const LaurentElement& x) {
  const std::int64_t d = x.ramification();
  const std::int64_t e = x.valuation_units();
  return static_cast<std::uint32_t>(e - floor_div(e, d) * d);
}

/// Exact k-linear rank bookkeeping. Each vector becomes a row of d
/// polynomials in F_p[t] (its components, multiplied by a common power of t),
/// and rows are reduced fraction-free against earlier pivots.
class ExactRank {
 public:
  ExactRank(const PrimeField& field, std::uint32_t d) : field_(field), d_(d) {}

  /// Adds x if it is independent of the rows so far; returns whether it was.
  bool try_add(const LaurentElement& x) {
    std::vector<upoly::UPoly> row = to_row(x);
    for (const auto& [col, pivot] : pivots_) {
      if (row[col].empty()) continue;
      const upoly::UPoly a = pivot[col];
      const upoly::UPoly b = row[col];
      for (std::uint32_t j = 0; j < d_; ++j) {
        row[j] = upoly::sub(field_, upoly::mul(field_, a, row[j]), upoly::mul(field_, b, pivot[j]));
      }
      strip_common_power(row);
    }
    for (std::uint32_t j = 0; j < d_; ++j) {
      if (!row[j].empty()) {
        pivots_.emplace_back(j, std::move(row));
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<upoly::UPoly> to_row(const LaurentElement& x) const {
    const std::int64_t d = d_;
    std::int64_t lowest = x.valuation_units();
    const std::int64_t base = floor_div(lowest, d);
    std::vector<upoly::UPoly> row(d_);
    for (const auto& [e, c] : x.terms()) {
      const std::int64_t q = floor_div(e, d);
      const auto j = static_cast<std::size_t>(e - q * d);
      const auto k = static_cast<std::size_t>(q - base);
      if (row[j].size() <= k) row[j].resize(k + 1, 0);
      row[j][k] = c;
    }
    return row;
  }

  static void strip_common_power(std::vector<upoly::UPoly>& row) {
    std::size_t shift = SIZE_MAX;
    for (const auto& r : row) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] != 0) {
          shift = std::min(shift, k);
          break;
        }
      }
    }
    if (shift == 0 || shift == SIZE_MAX) return;
    for (auto& r : row) {
      if (!r.empty()) r.erase(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(shift));
    }
  }

  const PrimeField& field_;
  std::uint32_t d_;
  std::vector<std::pair<std::uint32_t, std::vector<upoly::UPoly>>> pivots_;
};

LaurentElement normalize_single_component(const LaurentElement& y) {
  const std::int64_t d = y.ramification();
  const std::int64_t cls = class_of(y);
  for (const auto& [e, c] : y.terms()) {
    if (e - floor_div(e, d) * d != cls) return y;
  }
  return LaurentElement::monomial(y.characteristic(), y.ramification(), y.valuation_units());
}

constexpr std::size_t kMaxReductionSteps = 1'000'000;

}  // namespace

OrthogonalBasis orthogonalize(std::span<const LaurentElement> vectors) {
  OrthogonalBasis basis;
  if (vectors.empty()) return basis;
  basis.p = vectors.front().characteristic();
  basis.d = 1;
  for (const auto& x : vectors) {
    if (x.characteristic() != basis.p) throw DomainError("orthogonalize: vectors over different characteristics");
    basis.d = common_ramification(basis.d, x.ramification());
  }
  const PrimeField field(basis.p);
  ExactRank rank(field, basis.d);
  std::vector<int> by_class(basis.d, -1);

  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    LaurentElement y = vectors[idx].refined(basis.d);
    if (y.is_exact()) {
      if (y.is_zero() || !rank.try_add(y)) continue;
    }
    std::optional<std::size_t> last_pivot;
    for (std::size_t step = 0;; ++step) {
      if (step > kMaxReductionSteps) throw InternalError("orthogonalize: reduction did not terminate");
      if (y.is_zero()) {
        if (y.is_exact()) throw InternalError("orthogonalize: independent vector reduced to zero");
        std::string pivot = last_pivot ? "basis vector " + std::to_string(*last_pivot) + " (" +
                                             basis.vectors[*last_pivot].to_string() + ")"
                                       : "no pivot";
        throw PrecisionError("orthogonalize: input " + std::to_string(idx) + " reduces to O(t^" +
                             y.precision().to_string() + ") against " + pivot +
                             "; independence cannot be decided at this precision");
      }
      const std::uint32_t cls = class_of(y);
      const int b = by_class[cls];
      if (b < 0) {
        by_class[cls] = static_cast<int>(basis.vectors.size());
        basis.vectors.push_back(normalize_single_component(y));
        basis.classes.push_back(cls);
        basis.sources.push_back(idx);
        break;
      }
      const LaurentElement& pivot = basis.vectors[static_cast<std::size_t>(b)];
      const Coeff c = field.mul(y.leading_coeff(), field.inv(pivot.leading_coeff()));
      y = y - pivot.shifted(y.valuation_units() - pivot.valuation_units()).scaled(c);
      last_pivot = static_cast<std::size_t>(b);
    }
  }
  return basis;
}

bool is_certified(const OrthogonalBasis& basis) {
  if (basis.vectors.size() != basis.classes.size() || basis.vectors.size() > basis.d) return false;
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    const auto& y = basis.vectors[i];
    if (y.is_zero() || y.characteristic() != basis.p || basis.d % y.ramification() != 0) return false;
    if (class_of(y.refined(basis.d)) != basis.classes[i] || !seen.insert(basis.classes[i]).second) return false;
  }
  return true;
}

CoordinateSystem complete_basis(const OrthogonalBasis& basis) {
  CoordinateSystem sys;
  sys.p = basis.p;
  sys.d = basis.d;
  for (const auto& y : basis.vectors) sys.basis.push_back(y.refined(basis.d));
  sys.classes = basis.classes;
  sys.span_size = basis.vectors.size();
  std::set<std::uint32_t> used(basis.classes.begin(), basis.classes.end());
  for (std::uint32_t j = 0; j < basis.d; ++j) {
    if (used.count(j)) continue;
    sys.basis.push_back(LaurentElement::monomial(basis.p, basis.d, j));
    sys.classes.push_back(j);
  }
  return sys;
}

std::vector<LaurentElement> coordinates(const CoordinateSystem& system, const LaurentElement& z,
                                        std::optional<std::int64_t> working_precision) {
  if (z.characteristic() != system.p) throw DomainError("coordinates: characteristic mismatch");
  if (system.d % z.ramification() != 0) {
    throw DomainError("coordinates: element ramification " + std::to_string(z.ramification()) +
                      " does not divide " + std::to_string(system.d));
  }
  const std::int64_t d = system.d;
  std::int64_t limit = z.is_exact() ? default_precision() * d : z.refined(system.d).precision_units();
  if (working_precision) limit = std::min(limit, *working_precision * d);

  std::vector<int> by_class(system.d, -1);
  for (std::size_t i = 0; i < system.basis.size(); ++i) by_class[system.classes[i]] = static_cast<int>(i);

  const PrimeField field(system.p);
  std::vector<std::map<std::int64_t, std::int64_t>> coeffs(system.basis.size());
  LaurentElement r = z.refined(system.d);
  for (std::size_t step = 0;; ++step) {
    if (step > kMaxReductionSteps) throw InternalError("coordinates: reduction did not terminate");
    if (r.is_zero() || r.valuation_units() >= limit) break;
    const int i = by_class[class_of(r)];
    if (i < 0) throw InternalError("coordinates: incomplete basis");
    const LaurentElement& y = system.basis[static_cast<std::size_t>(i)];
    const std::int64_t shift = r.valuation_units() - y.valuation_units();
    const Coeff c = field.mul(r.leading_coeff(), field.inv(y.leading_coeff()));
    coeffs[static_cast<std::size_t>(i)][shift / d] += c;
    r = r - y.shifted(shift).scaled(c);
  }
  const bool exact = r.is_zero() && r.is_exact();
  const std::int64_t cut = std::min(limit, r.precision_units());
  std::vector<LaurentElement> out;
  for (std::size_t i = 0; i < system.basis.size(); ++i) {
    const std::int64_t prec =
        exact ? LaurentElement::kExact : ceil_div(cut - system.basis[i].valuation_units(), d);
    out.push_back(LaurentElement::from_terms(system.p, 1, coeffs[i], prec));
  }
  return out;
}

LaurentElement DualFunctional::operator()(const LaurentElement& z) const { return coordinates(*system, z)[index]; }

std::vector<DualFunctional> dual_functionals(const OrthogonalBasis& basis) {
  if (!is_certified(basis)) throw DomainError("dual functionals need a certified orthogonal basis");
  auto system = std::make_shared<const CoordinateSystem>(complete_basis(basis));
  std::vector<DualFunctional> out;
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) out.push_back(DualFunctional{i, system});
  return out;
}

}  // namespace frobcalc
