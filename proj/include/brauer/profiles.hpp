#pragma once

// Direct sums of cyclic groups with possibly countably infinite
// multiplicities, their exterior squares, Brauer groups of classifying
// spaces at the profile level, basic-subgroup reduction and the rule-based
// non-membership certificate for obstruction classes.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "brauer/abgroup.hpp"

namespace brauer {

/// A positive integer or the countable cardinal w. w + k = w, w * k = w,
/// C(w, 2) = w.
class Multiplicity {
 public:
  Multiplicity() = default;
  /// k >= 0; zero only appears as an intermediate count.
  static Multiplicity finite(const Integer& k);
  static Multiplicity omega();

  bool is_omega() const noexcept { return omega_; }
  bool is_zero() const noexcept { return !omega_ && value_ == 0; }
  /// Undefined for w.
  const Integer& value() const noexcept { return value_; }

  /// Number of unordered pairs.
  Multiplicity choose2() const;
  std::string to_string() const;

  friend Multiplicity operator+(const Multiplicity& a, const Multiplicity& b);
  friend Multiplicity operator*(const Multiplicity& a, const Multiplicity& b);
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  bool omega_ = false;
  Integer value_ = 0;
};

struct CyclicSummand {
  Integer order;
  Multiplicity multiplicity;
  friend bool operator==(const CyclicSummand&, const CyclicSummand&) = default;
};

/// Sum of (Z/order)^multiplicity, normalized: orders >= 2 strictly
/// increasing, multiplicities positive.
class CyclicProfile {
 public:
  CyclicProfile() = default;
  explicit CyclicProfile(std::vector<CyclicSummand> summands);

  const std::vector<CyclicSummand>& summands() const noexcept { return summands_; }
  bool empty() const noexcept { return summands_.empty(); }
  Multiplicity total_multiplicity() const;
  bool is_finite() const { return !total_multiplicity().is_omega(); }
  /// p when every order is a power of the same prime p.
  std::optional<Integer> prime() const;
  /// Least common multiple of the orders (1 when empty).
  Integer exponent() const;
  /// SemanticError unless every multiplicity is finite.
  FgAbGroup to_group() const;
  static CyclicProfile from_group(const FgAbGroup& g);

  /// `(Z/2)^3 + (Z/4)^w`; the empty profile prints as `0`.
  std::string to_string() const;

  friend bool operator==(const CyclicProfile&, const CyclicProfile&) = default;

 private:
  std::vector<CyclicSummand> summands_;
};

/// D + B with D a sum of Prufer groups Z(p^inf)^m and B a cyclic profile.
struct SymbolicTorsionGroup {
  std::vector<std::pair<Integer, Multiplicity>> divisible_part;  // (p, multiplicity)
  CyclicProfile reduced_part;

  /// Sorts and merges the divisible part; rejects non-primes.
  static SymbolicTorsionGroup make(std::vector<std::pair<Integer, Multiplicity>> divisible,
                                   CyclicProfile reduced);
  /// p when the group is p-primary (including the trivial case of a single
  /// prime in an otherwise empty description).
  std::optional<Integer> prime() const;
  std::string to_string() const;
  friend bool operator==(const SymbolicTorsionGroup&, const SymbolicTorsionGroup&) = default;
};

/// Lambda^2 of the profile: C(k,2) internal pairs per summand and k_a k_b
/// cross pairs of order gcd, dropping trivial gcds.
CyclicProfile lambda_square_profile(const CyclicProfile& p);

/// Structural facts about the torsion part of an infinite product
/// prod_{i<j} Z/(n_i, n_j); nothing beyond these facts is asserted.
struct ProductDescriptor {
  std::string expression;
  /// The factors of the product, as a profile.
  CyclicProfile factors;
  /// Exponent of the product (finite because the factor orders are bounded).
  Integer exponent;
  /// The restricted direct sum of the factors, a subgroup of the torsion
  /// part.
  CyclicProfile restricted_sum;
  /// Bounded exponent makes the whole product torsion.
  bool product_is_torsion = true;

  friend bool operator==(const ProductDescriptor&, const ProductDescriptor&) = default;
};

using BgBrauer = std::variant<FgAbGroup, ProductDescriptor>;

/// Br'(BG) for G with basic subgroup given by the profile.
BgBrauer brauer_of_bg(const CyclicProfile& p);
std::string to_string(const BgBrauer& b);

struct BasicReduction {
  CyclicProfile basic;
  /// One affirmation per defining condition of a basic subgroup.
  std::vector<std::string> conditions;
};

BasicReduction reduce_to_basic(const SymbolicTorsionGroup& g);

/// a * i + b
struct Affine {
  Integer a = 0;
  Integer b = 0;
  Integer at(const Integer& i) const { return a * i + b; }
  std::string to_string() const;
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// For indices lo <= i (<= hi when bounded): J_i = (lower(i), upper(i)],
/// with upper absent meaning J_i is unbounded above.
struct ObstructionRule {
  Integer lo = 0;
  std::optional<Integer> hi;
  Affine lower;
  std::optional<Affine> upper;
  std::string to_string() const;
  friend bool operator==(const ObstructionRule&, const ObstructionRule&) = default;
};

/// Rule-based description of the nonzero coordinates alpha_ij (i < j) of a
/// class in the product; indices not covered by any rule have J_i empty.
class ObstructionDescriptor {
 public:
  ObstructionDescriptor() = default;
  /// SemanticError on negative starts, empty ranges, overlapping ranges or a
  /// J_i reaching down to some j <= i.
  explicit ObstructionDescriptor(std::vector<ObstructionRule> rules);

  const std::vector<ObstructionRule>& rules() const noexcept { return rules_; }
  /// `rule i>=1: J=(i, 2i]; rule ...`; empty descriptor prints as `none`.
  std::string to_string() const;

  friend bool operator==(const ObstructionDescriptor&, const ObstructionDescriptor&) = default;

 private:
  std::vector<ObstructionRule> rules_;
};

enum class NonBrauerVerdict { CertifiedNotInBr, ConditionFails, NotApplicable };
const char* to_string(NonBrauerVerdict v);

struct NonBrauerCertificate {
  NonBrauerVerdict verdict = NonBrauerVerdict::NotApplicable;
  /// Condition (a): all but finitely many J_i are finite.
  bool finitely_many_infinite = false;
  /// Condition (b): |J_i| is unbounded over the finite J_i.
  bool unbounded_finite_sizes = false;
  std::vector<std::string> witness;
};

NonBrauerCertificate non_brauer_certificate(const CyclicProfile& p, const ObstructionDescriptor& alpha);

}  // namespace brauer
