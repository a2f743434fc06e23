#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobcalc/errors.hpp"
#include "frobcalc/frobenius/frobenius.hpp"
#include "frobcalc/kernels.hpp"

namespace frobcalc {

/// R = S/I for S = F_p[x_1..x_n]. Elements of R are passed as lifts to S.
struct QuotientPresentation {
  Ideal defining_ideal;
};

/// (I^[q] :_S I), the ideal in Fedder's criterion.
Ideal fedder_colon(const QuotientPresentation& pres, BracketExponent e);

/// Whether R -> F^e_* R, 1 |-> F^e_* r is pure at the rational maximal ideal
/// m: true iff (I^[q] : I) r is not contained in m^[q]. Decided by direct
/// membership of the generators in m^[q].
///
/// Throws DomainError if m is not of the form (x_1 - a_1, ..., x_n - a_n) or
/// if I is not contained in m.
bool fedder_pure_at(const QuotientPresentation& pres, const Polynomial& r_lift, const Ideal& m,
                    BracketExponent e);
bool fedder_pure_at(const QuotientPresentation& pres, const Polynomial& r_lift,
                    std::span<const Coeff> point, BracketExponent e);

/// ((I^[q] : I) r)^[1/q]. A prime containing I lies in the pure locus iff it
/// does not contain this ideal.
Ideal locus_ideal(const QuotientPresentation& pres, const Polynomial& r_lift, BracketExponent e);

struct PointVerdict {
  std::vector<Coeff> point;
  bool pure = false;
};

struct LocusReport {
  /// V(locus_ideal) ∩ V(I) is the non-pure locus.
  Ideal locus_ideal;
  bool pure_everywhere = false;
  std::optional<std::vector<PointVerdict>> rational_points;
};

struct LocusOptions {
  bool scan_points = false;
  Execution execution = Execution::Serial;
  std::uint64_t max_points = 1u << 20;
};

LocusReport pure_locus(const QuotientPresentation& pres, const Polynomial& r_lift, BracketExponent e,
                       const LocusOptions& options = {});
/// pure_locus with r = 1 and e = 1.
LocusReport fpure_locus(const QuotientPresentation& pres, const LocusOptions& options = {});

/// Rational points of V(I) over F_p, in lexicographic order.
std::vector<std::vector<Coeff>> rational_points(const Ideal& ideal, Execution execution = Execution::Serial,
                                                std::uint64_t max_points = 1u << 20);

/// For each rational point a of V(I): does the locus ideal avoid m_a?
std::vector<PointVerdict> scan_locus(const Ideal& locus, const Ideal& defining_ideal, Execution execution,
                                     std::uint64_t max_points = 1u << 20);

/// c in (I^[q] : I) and a projection φ with φ(F^e_*(c r)) ≡ 1 mod I.
struct SplittingCertificate {
  Polynomial multiplier;
  ProjectionFunctional functional;
  /// φ(F^e_*(c r)), congruent to 1 modulo I.
  Polynomial value;
};

struct SplitResult {
  bool splits = false;
  Ideal locus_ideal;
  std::optional<SplittingCertificate> certificate;
};

/// 1 |-> F^e_* r splits iff locus_ideal + I is the unit ideal; when it does,
/// a splitting certificate is produced and checked.
SplitResult split_element_test(const QuotientPresentation& pres, const Polynomial& r_lift, BracketExponent e);

struct FiltrationStep {
  std::vector<std::uint32_t> alpha;
  /// (I_α' : x^α), expected to be (x_1, ..., x_c).
  Ideal colon;
  bool colon_ok = false;
  /// I_α = I_α' + (x^α).
  bool generation_ok = false;
};

struct FiltrationReport {
  std::uint32_t c = 0;
  std::uint32_t b = 0;
  std::vector<FiltrationStep> steps;
  bool all_pass = false;
  /// dim_k S/(x_1^b..x_c^b), checked only when the ring has exactly c variables.
  std::optional<std::uint64_t> quotient_dimension;
  bool dimension_ok = true;
};

/// Builds the lex-ordered chain S = I_(0..0) ⊃ ... ⊃ I_∞ = (x_1^b..x_c^b) on
/// the first c variables and checks every successive step.
FiltrationReport filtration_verify(std::uint32_t c, std::uint32_t b, const RingPtr& ring,
                                   Execution execution = Execution::Serial);

class UniformExponentCapError : public CapError {
 public:
  UniformExponentCapError(const std::string& what, std::vector<Ideal> partial_roots)
      : CapError(what), partial_roots_(std::move(partial_roots)) {}
  const std::vector<Ideal>& partial_roots() const { return partial_roots_; }

 private:
  std::vector<Ideal> partial_roots_;
};

inline constexpr std::uint32_t kDefaultExponentCap = 20;

/// Smallest e >= 1 with (f)^[1/p^e] = (1); then f lies in no I^[p^e] for a
/// proper ideal I.
std::uint32_t uniform_exponent(const Polynomial& f, std::uint32_t cap = kDefaultExponentCap);

}  // namespace frobcalc
