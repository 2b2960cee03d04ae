#pragma once

// CW-space descriptions (finite complexes, eventually periodic complexes,
// mapping telescopes, countable wedges and named catalog spaces), the
// cohomological Brauer group, phantom subgroups and Br = Br' certificates.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "brauer/abgroup.hpp"
#include "brauer/chaincx.hpp"
#include "brauer/limits.hpp"
#include "brauer/profiles.hpp"

namespace brauer {

/// A fixed complex in degrees 0..prefix.top_degree() followed by a block of
/// L degrees repeated forever. Block entry i supplies the rank and the
/// incoming boundary of degree top + 1 + i (mod L).
class PeriodicComplex {
 public:
  /// Rejects shape mismatches and nonzero boundary-of-boundary inside the
  /// block and across both seams.
  PeriodicComplex(ChainComplex prefix, std::vector<std::size_t> block_ranks,
                  std::vector<IntMatrix> block_boundaries);

  const ChainComplex& prefix() const noexcept { return prefix_; }
  const std::vector<std::size_t>& block_ranks() const noexcept { return block_ranks_; }
  const std::vector<IntMatrix>& block_boundaries() const noexcept { return block_boundaries_; }
  std::size_t period() const noexcept { return block_ranks_.size(); }

  std::size_t rank(std::size_t n) const;
  IntMatrix boundary(std::size_t n) const;
  /// The finite skeleton in degrees 0..top.
  ChainComplex unroll(std::size_t top) const;

  friend bool operator==(const PeriodicComplex&, const PeriodicComplex&) = default;

 private:
  ChainComplex prefix_;
  std::vector<std::size_t> block_ranks_;
  std::vector<IntMatrix> block_boundaries_;
};

/// Named spaces whose Brauer groups are known theorems rather than
/// computations.
struct CatalogSpace {
  enum class Family {
    ProjectiveClassifying,  // BPGL_n
    EilenbergMacLane,       // K(G, j), G finitely generated
    EilenbergMacLaneQZ,     // K(Q/Z, j)
    ClassifyingDiscrete,    // BG, G a torsion group D + B
  };
  Family family = Family::ProjectiveClassifying;
  Integer n = 1;
  FgAbGroup group;
  std::size_t degree = 0;
  SymbolicTorsionGroup torsion_group;

  friend bool operator==(const CatalogSpace&, const CatalogSpace&) = default;
};

enum class SpaceKind { Finite, Periodic, Telescope, InfiniteWedge, Catalog };

class SpaceDescription {
 public:
  static SpaceDescription finite(ChainComplex c, std::string label);
  static SpaceDescription periodic(PeriodicComplex p, std::string label);
  /// Mapping telescope of Moore spaces M(A_j, degree) along the system;
  /// degree >= 1.
  static SpaceDescription telescope(DirectedSystem d, std::size_t degree, std::string label);
  /// Countable wedge of copies of a finite complex.
  static SpaceDescription infinite_wedge(ChainComplex c, std::string label);
  static SpaceDescription catalog(CatalogSpace entry, std::string label);

  SpaceKind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

  const ChainComplex& complex() const;
  const PeriodicComplex& periodic_complex() const;
  const DirectedSystem& system() const;
  std::size_t telescope_degree() const;
  const CatalogSpace& catalog_entry() const;

  /// nullopt for infinite-dimensional spaces and catalog entries.
  std::optional<std::size_t> dimension() const;
  /// Degrees carrying at least one cell, when known and finite-dimensional.
  std::optional<std::vector<std::size_t>> cell_degrees() const;

  friend bool operator==(const SpaceDescription&, const SpaceDescription&) = default;

 private:
  SpaceKind kind_ = SpaceKind::Finite;
  std::string label_;
  std::variant<ChainComplex, PeriodicComplex, DirectedSystem, CatalogSpace> data_;
  std::size_t degree_ = 0;
};

// Builders. Labels follow the request grammar.
SpaceDescription sphere(std::size_t n);
SpaceDescription moore_3cell(const Integer& n);
/// Skeleton of the infinite lens model in degrees 0..top.
SpaceDescription lens(const Integer& n, std::size_t top);
/// Z <-0- Z <-n- Z <-0- Z <-n- ...
SpaceDescription lens_periodic(const Integer& n);
SpaceDescription wedge(const std::vector<SpaceDescription>& parts);
SpaceDescription product(const SpaceDescription& a, const SpaceDescription& b);
SpaceDescription infinite_wedge(const SpaceDescription& part);
SpaceDescription telescope(const DirectedSystem& d, std::size_t degree, std::string label);
SpaceDescription bpgl(const Integer& n);
SpaceDescription eilenberg_maclane(const FgAbGroup& g, std::size_t j);
SpaceDescription eilenberg_maclane_qz(std::size_t j);
SpaceDescription classifying_space(const SymbolicTorsionGroup& g);

/// Wraps a complex given literally; cells are its ranks.
SpaceDescription finite_complex(ChainComplex c, std::string label);

using HomologyValue = std::variant<FgAbGroup, SymbolicGroup>;
std::string to_string(const HomologyValue& h);

/// H_n for finite, periodic (stabilized) and telescope kinds;
/// UnsupportedError for countable wedges with nontrivial H_n and for
/// catalog entries.
HomologyValue space_homology(const SpaceDescription& x, std::size_t n);

/// Stable homology of a periodic complex: one group per block position,
/// checked to repeat over three consecutive blocks.
std::vector<FgAbGroup> periodic_homology_pattern(const PeriodicComplex& p);

using BrauerValue = std::variant<FgAbGroup, SymbolicGroup, ProductDescriptor>;
std::string to_string(const BrauerValue& b);
bool is_zero(const BrauerValue& b);

/// Br'(X) = Torsion Ext^1(H_2(X), Z), or the catalog value.
BrauerValue brauer_prime(const SpaceDescription& x);

struct PhantomResult {
  SymbolicGroup group;
  std::string justification;
};

/// Ext^1(H_{n-1}(X) / Torsion, Z).
PhantomResult phantom_subgroup(const SpaceDescription& x, std::size_t n);

/// Directed system H_k(X^k) -> H_k(X^{k+1}) = H_k(X) -> ... of the
/// skeleta of a periodic complex.
DirectedSystem skeleton_system(const PeriodicComplex& p, std::size_t k);

enum class EqualityVerdict { Equal, Strict, Unknown };
enum class EqualityReason { None, CompactSerre, WoodwardDimLe4, EvenCells, CatalogTheorem, NonBrauerCondition };

const char* to_string(EqualityVerdict v);
const char* to_string(EqualityReason r);

struct RuleOutcome {
  EqualityVerdict verdict;
  EqualityReason reason;
  std::string detail;
};

struct EqualityCertificate {
  EqualityVerdict verdict = EqualityVerdict::Unknown;
  EqualityReason reason = EqualityReason::None;
  std::vector<std::string> witness;
};

/// Every rule that fires, in priority order.
std::vector<RuleOutcome> applicable_rules(const SpaceDescription& x);
/// First applicable rule, with the rest listed in the witness.
EqualityCertificate equality_certificate(const SpaceDescription& x);
/// STRICT(NonBrauerCondition) for a certified class, UNKNOWN otherwise.
EqualityCertificate equality_certificate(const NonBrauerCertificate& c);

/// ord(alpha) when the dimension is at most 4; nullopt (unknown) otherwise.
/// SemanticError when no class of that order exists in Br'(X).
std::optional<Integer> min_bundle_rank(const SpaceDescription& x, const Integer& alpha_order);

struct CatalogRecord {
  std::string name;
  std::string br_prime;
  std::string br;
  EqualityVerdict equality = EqualityVerdict::Unknown;
  std::string citation;
};

/// Stated facts for named spaces; `name` uses the request grammar, e.g.
/// `bpgl(7)`, `k(Z/5,2)`, `k(Q/Z,2)`, `plus`.
CatalogRecord catalog_lookup(const SpaceDescription& x);
/// Fact entries that are not spaces (currently the plus construction).
std::vector<CatalogRecord> catalog_facts();

}  // namespace brauer
