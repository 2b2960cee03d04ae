#pragma once

// Towers and directed systems of finitely generated abelian groups that are
// eventually periodic, lim^1 vanishing certificates, symbolic colimits and a
// small symbolic algebra for the non-finitely-generated groups they produce.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "brauer/abgroup.hpp"

namespace brauer {

enum class Tri { No, Yes, Unknown };

const char* to_string(Tri t);

/// One summand of a symbolic group.
struct SymbolicAtom {
  enum class Kind {
    Localized,         // Z[1/S], S a nonempty finite set of primes
    Prufer,            // Z(p^inf)
    Rationals,         // Q
    PAdic,             // Z_p
    ContinuumQVector,  // Q-vector space of continuum dimension
    OpaqueExt,         // Ext^1(expr, Z) without an element model
  };
  struct Flags {
    Tri divisible = Tri::Unknown;
    Tri torsion = Tri::Unknown;
    Tri torsion_free = Tri::Unknown;
    Tri nonzero = Tri::Unknown;
    friend bool operator==(const Flags&, const Flags&) = default;
  };

  Kind kind = Kind::Rationals;
  /// Localized: product of the distinct primes in S. Prufer/PAdic: p.
  Integer parameter = 0;
  /// OpaqueExt only: the group whose Ext^1 into Z this stands for.
  std::string expression;
  /// OpaqueExt only; all other kinds read their flags from the table.
  Flags opaque_flags;

  static SymbolicAtom localized(const Integer& radical);
  static SymbolicAtom prufer(const Integer& p);
  static SymbolicAtom rationals();
  static SymbolicAtom padic(const Integer& p);
  static SymbolicAtom continuum_q_vector();
  static SymbolicAtom opaque_ext(std::string expression, Flags flags);

  Flags flags() const;
  std::string to_string() const;

  friend bool operator==(const SymbolicAtom&, const SymbolicAtom&) = default;
  friend auto operator<=>(const SymbolicAtom& a, const SymbolicAtom& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (int c = cmp(a.parameter, b.parameter); c != 0) return c <=> 0;
    return a.expression <=> b.expression;
  }
};

/// Finite direct sum of a finitely generated group and symbolic atoms with
/// multiplicities, kept sorted so equal descriptions compare equal.
class SymbolicGroup {
 public:
  SymbolicGroup() = default;
  explicit SymbolicGroup(FgAbGroup fg);
  static SymbolicGroup of(const SymbolicAtom& atom, std::size_t multiplicity = 1);

  const FgAbGroup& finitely_generated_part() const noexcept { return fg_; }
  const std::vector<std::pair<SymbolicAtom, std::size_t>>& atoms() const noexcept { return atoms_; }

  bool is_finitely_generated() const noexcept { return atoms_.empty(); }
  /// Structurally zero: no atoms and a trivial finitely generated part.
  bool is_zero() const noexcept { return atoms_.empty() && fg_.is_trivial(); }

  Tri divisible() const;
  Tri torsion() const;
  Tri torsion_free() const;
  Tri nonzero() const;

  /// `0`, `Z[1/5]`, `Z/6 + Q`, `Z(2^inf)^2`, ...
  std::string to_string() const;

  friend SymbolicGroup operator+(const SymbolicGroup& a, const SymbolicGroup& b);
  friend bool operator==(const SymbolicGroup&, const SymbolicGroup&) = default;

 private:
  void add_atom(const SymbolicAtom& atom, std::size_t multiplicity);

  FgAbGroup fg_;
  std::vector<std::pair<SymbolicAtom, std::size_t>> atoms_;
};

/// Ext^1(G, Z) by the atom table; UnsupportedError on Z_p, continuum and
/// opaque atoms.
SymbolicGroup ext1_symbolic(const SymbolicGroup& g);
/// G / Torsion(G); UnsupportedError when an atom's torsion is not known.
SymbolicGroup torsion_free_quotient(const SymbolicGroup& g);
/// Torsion(G); UnsupportedError when an atom's torsion is not known.
SymbolicGroup torsion_subgroup(const SymbolicGroup& g);
/// Intersection of all m G: zero for finitely generated groups, the
/// divisible atoms otherwise.
FgAbGroup first_ulm(const FgAbGroup& g);
SymbolicGroup first_ulm(const SymbolicGroup& g);

enum class ChainDirection { Tower, Directed };

/// A_0, A_1, ... given by a finite prefix followed by a block of length L
/// repeated forever. The block closes on B_0 with every invariant factor
/// multiplied by `growth` (1 for a strictly periodic chain); period k uses
/// the block groups scaled by growth^k and the same integer matrices.
///
/// For a tower the map between A_j and A_{j+1} goes A_{j+1} -> A_j, for a
/// directed system A_j -> A_{j+1}. Matrices are taken in the direction of
/// the map.
class PeriodicChain {
 public:
  /// `prefix_groups` are A_0..A_{k-1}; `prefix_maps[i]` joins A_i and A_{i+1}
  /// (A_k = block_groups[0]). `block_maps[i]` joins B_i and B_{i+1}, the last
  /// one landing on (or coming from) `closing_group`.
  PeriodicChain(ChainDirection direction, std::vector<FgAbGroup> prefix_groups,
                std::vector<IntMatrix> prefix_maps, std::vector<FgAbGroup> block_groups,
                std::vector<IntMatrix> block_maps, FgAbGroup closing_group);

  ChainDirection direction() const noexcept { return direction_; }
  std::size_t prefix_length() const noexcept { return prefix_groups_.size(); }
  std::size_t period() const noexcept { return block_groups_.size(); }
  const Integer& growth() const noexcept { return growth_; }

  const std::vector<FgAbGroup>& prefix_groups() const noexcept { return prefix_groups_; }
  const std::vector<IntMatrix>& prefix_maps() const noexcept { return prefix_maps_; }
  const std::vector<FgAbGroup>& block_groups() const noexcept { return block_groups_; }
  const std::vector<IntMatrix>& block_maps() const noexcept { return block_maps_; }
  FgAbGroup closing_group() const { return group(prefix_length() + period()); }

  FgAbGroup group(std::size_t j) const;
  const IntMatrix& map_matrix(std::size_t j) const;
  /// The map joining A_j and A_{j+1}, in the chain's direction.
  GroupHom map(std::size_t j) const;
  /// Composite joining A_j and A_{j+steps}.
  GroupHom composite(std::size_t j, std::size_t steps) const;

  bool all_groups_finite() const;

  friend bool operator==(const PeriodicChain&, const PeriodicChain&) = default;

 private:
  ChainDirection direction_;
  std::vector<FgAbGroup> prefix_groups_;
  std::vector<IntMatrix> prefix_maps_;
  std::vector<FgAbGroup> block_groups_;
  std::vector<IntMatrix> block_maps_;
  Integer growth_ = 1;
};

/// Inverse system ... -> A_2 -> A_1 -> A_0.
class Tower : public PeriodicChain {
 public:
  Tower(std::vector<FgAbGroup> prefix_groups, std::vector<IntMatrix> prefix_maps,
        std::vector<FgAbGroup> block_groups, std::vector<IntMatrix> block_maps,
        FgAbGroup closing_group)
      : PeriodicChain(ChainDirection::Tower, std::move(prefix_groups), std::move(prefix_maps),
                      std::move(block_groups), std::move(block_maps), std::move(closing_group)) {}
  /// Constant tower on g with every map the given endomorphism.
  static Tower constant(const FgAbGroup& g, const IntMatrix& map);
};

/// Direct system A_0 -> A_1 -> A_2 -> ...
class DirectedSystem : public PeriodicChain {
 public:
  DirectedSystem(std::vector<FgAbGroup> prefix_groups, std::vector<IntMatrix> prefix_maps,
                 std::vector<FgAbGroup> block_groups, std::vector<IntMatrix> block_maps,
                 FgAbGroup closing_group)
      : PeriodicChain(ChainDirection::Directed, std::move(prefix_groups), std::move(prefix_maps),
                      std::move(block_groups), std::move(block_maps), std::move(closing_group)) {}
  static DirectedSystem constant(const FgAbGroup& g, const IntMatrix& map);
};

enum class Lim1Verdict { Vanishes, Inconclusive };
enum class Lim1Reason { None, JensenFinite, MittagLeffler };

const char* to_string(Lim1Verdict v);
const char* to_string(Lim1Reason r);

struct Lim1Certificate {
  Lim1Verdict verdict = Lim1Verdict::Inconclusive;
  Lim1Reason reason = Lim1Reason::None;
  std::vector<std::string> witness;
};

/// Sound but incomplete: VANISHES only when a vanishing criterion is
/// verified, INCONCLUSIVE otherwise (never a non-vanishing claim).
Lim1Certificate lim1_certificate(const Tower& t);

/// Colimit of a system whose block maps are diagonal on a fixed list of
/// cyclic strands; UnsupportedError for any other shape.
SymbolicGroup colimit_symbolic(const DirectedSystem& d);

/// Ext^1(colim / Torsion, Z) for the system of H_{n-1} of the finite
/// stages of a telescope. `degree` is n and only labels the result.
SymbolicGroup phantom_of_telescope(const DirectedSystem& d, std::size_t degree);

}  // namespace brauer
