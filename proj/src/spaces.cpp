#include "brauer/spaces.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "brauer/errors.hpp"

namespace brauer {

namespace {

const FgAbGroup kZ = FgAbGroup::free(1);

void require_positive(const Integer& n, const char* what) {
  if (n < 1) throw SemanticError(std::string(what) + " needs a parameter >= 1, got " + n.get_str());
}

std::string join(const std::vector<SpaceDescription>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ",";
    out += p.label();
  }
  return out;
}

std::vector<std::size_t> nonzero_degrees(const ChainComplex& c) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= c.top_degree(); ++n) {
    if (c.rank(n) > 0) out.push_back(n);
  }
  return out;
}

bool telescope_has_torsion(const DirectedSystem& d) {
  auto torsion = [](const FgAbGroup& g) { return !g.is_free(); };
  return std::any_of(d.prefix_groups().begin(), d.prefix_groups().end(), torsion) ||
         std::any_of(d.block_groups().begin(), d.block_groups().end(), torsion);
}

CyclicProfile omega_profile(const FgAbGroup& torsion) {
  std::vector<CyclicSummand> s;
  for (const auto& d : torsion.invariant_factors()) s.push_back({d, Multiplicity::omega()});
  return CyclicProfile(std::move(s));
}

BrauerValue catalog_brauer(const CatalogSpace& e) {
  using F = CatalogSpace::Family;
  switch (e.family) {
    case F::ProjectiveClassifying: return FgAbGroup::cyclic(e.n);
    case F::EilenbergMacLane:
      if (e.degree == 1) return torsion_part(ext1(exterior_square(e.group), kZ));
      if (e.degree == 2) return brauer_of_k_g_2(e.group).br_prime;
      return FgAbGroup();
    case F::EilenbergMacLaneQZ: return FgAbGroup();
    case F::ClassifyingDiscrete: {
      BgBrauer b = brauer_of_bg(reduce_to_basic(e.torsion_group).basic);
      if (auto* g = std::get_if<FgAbGroup>(&b)) return *g;
      return std::get<ProductDescriptor>(b);
    }
  }
  return FgAbGroup();
}

bool bg_theorem_applies(const CatalogSpace& e) {
  return e.torsion_group.prime().has_value() && !e.torsion_group.reduced_part.is_finite();
}

}  // namespace

PeriodicComplex::PeriodicComplex(ChainComplex prefix, std::vector<std::size_t> block_ranks,
                                 std::vector<IntMatrix> block_boundaries)
    : prefix_(std::move(prefix)),
      block_ranks_(std::move(block_ranks)),
      block_boundaries_(std::move(block_boundaries)) {
  const std::size_t L = block_ranks_.size();
  if (L == 0) throw SemanticError("periodic block needs at least one degree");
  if (block_boundaries_.size() != L) throw SemanticError("periodic block needs one boundary per degree");
  if (prefix_.rank(prefix_.top_degree()) != block_ranks_.back()) {
    throw SemanticError("top prefix rank " + std::to_string(prefix_.rank(prefix_.top_degree())) +
                        " differs from the last block rank " + std::to_string(block_ranks_.back()) +
                        ", so the block cannot repeat");
  }
  // Three periods cover the seam with the prefix, the inside of the block
  // and the seam between two consecutive blocks.
  (void)unroll(prefix_.top_degree() + 3 * L);
}

std::size_t PeriodicComplex::rank(std::size_t n) const {
  const std::size_t top = prefix_.top_degree();
  if (n <= top) return prefix_.rank(n);
  return block_ranks_[(n - top - 1) % period()];
}

IntMatrix PeriodicComplex::boundary(std::size_t n) const {
  const std::size_t top = prefix_.top_degree();
  if (n <= top) return prefix_.boundary(n);
  return block_boundaries_[(n - top - 1) % period()];
}

ChainComplex PeriodicComplex::unroll(std::size_t top) const {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 0; n <= top; ++n) {
    ranks.push_back(rank(n));
    if (n > 0) boundaries.push_back(boundary(n));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

SpaceDescription SpaceDescription::finite(ChainComplex c, std::string label) {
  SpaceDescription x;
  x.kind_ = SpaceKind::Finite;
  x.label_ = std::move(label);
  x.data_ = std::move(c);
  return x;
}

SpaceDescription SpaceDescription::periodic(PeriodicComplex p, std::string label) {
  SpaceDescription x;
  x.kind_ = SpaceKind::Periodic;
  x.label_ = std::move(label);
  x.data_ = std::move(p);
  return x;
}

SpaceDescription SpaceDescription::telescope(DirectedSystem d, std::size_t degree, std::string label) {
  if (degree < 1) throw SemanticError("telescope degree must be at least 1");
  SpaceDescription x;
  x.kind_ = SpaceKind::Telescope;
  x.label_ = std::move(label);
  x.data_ = std::move(d);
  x.degree_ = degree;
  return x;
}

SpaceDescription SpaceDescription::infinite_wedge(ChainComplex c, std::string label) {
  if (c.rank(0) == 0) throw SemanticError("a wedge summand needs a 0-cell as basepoint");
  SpaceDescription x;
  x.kind_ = SpaceKind::InfiniteWedge;
  x.label_ = std::move(label);
  x.data_ = std::move(c);
  return x;
}

SpaceDescription SpaceDescription::catalog(CatalogSpace entry, std::string label) {
  SpaceDescription x;
  x.kind_ = SpaceKind::Catalog;
  x.label_ = std::move(label);
  x.data_ = std::move(entry);
  return x;
}

const ChainComplex& SpaceDescription::complex() const {
  if (const auto* c = std::get_if<ChainComplex>(&data_)) return *c;
  throw SemanticError(label_ + " has no finite cellular model");
}

const PeriodicComplex& SpaceDescription::periodic_complex() const {
  if (const auto* p = std::get_if<PeriodicComplex>(&data_)) return *p;
  throw SemanticError(label_ + " is not an eventually periodic complex");
}

const DirectedSystem& SpaceDescription::system() const {
  if (const auto* d = std::get_if<DirectedSystem>(&data_)) return *d;
  throw SemanticError(label_ + " is not a mapping telescope");
}

std::size_t SpaceDescription::telescope_degree() const {
  (void)system();
  return degree_;
}

const CatalogSpace& SpaceDescription::catalog_entry() const {
  if (const auto* e = std::get_if<CatalogSpace>(&data_)) return *e;
  throw SemanticError(label_ + " is not a catalog space");
}

std::optional<std::vector<std::size_t>> SpaceDescription::cell_degrees() const {
  switch (kind_) {
    case SpaceKind::Finite:
    case SpaceKind::InfiniteWedge: return nonzero_degrees(complex());
    case SpaceKind::Periodic: {
      const auto& p = periodic_complex();
      const bool block_empty =
          std::all_of(p.block_ranks().begin(), p.block_ranks().end(), [](std::size_t r) { return r == 0; });
      if (!block_empty) return std::nullopt;
      return nonzero_degrees(p.prefix());
    }
    case SpaceKind::Telescope: {
      // Basepoint 0-cells joined by 1-cells, Moore cells in degrees d and
      // d + 1, cylinder cells one degree higher.
      std::set<std::size_t> d{0, 1, degree_, degree_ + 1};
      if (telescope_has_torsion(system())) d.insert(degree_ + 2);
      return std::vector<std::size_t>(d.begin(), d.end());
    }
    case SpaceKind::Catalog: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> SpaceDescription::dimension() const {
  auto d = cell_degrees();
  if (!d) return std::nullopt;
  return d->empty() ? 0 : d->back();
}

SpaceDescription sphere(std::size_t n) {
  if (n < 1) throw SemanticError("sphere dimension must be at least 1");
  std::vector<std::size_t> ranks(n + 1, 0);
  ranks[0] = ranks[n] = 1;
  return SpaceDescription::finite(ChainComplex::from_sparse(ranks, {}), "sphere(" + std::to_string(n) + ")");
}

SpaceDescription moore_3cell(const Integer& n) {
  require_positive(n, "moore3");
  IntMatrix d3(1, 1);
  d3(0, 0) = n;
  return SpaceDescription::finite(ChainComplex::from_sparse({1, 0, 1, 1}, {{3, d3}}),
                                  "moore3(" + n.get_str() + ")");
}

SpaceDescription lens(const Integer& n, std::size_t top) {
  require_positive(n, "lens");
  std::vector<std::size_t> ranks(top + 1, 1);
  std::map<std::size_t, IntMatrix> b;
  for (std::size_t k = 2; k <= top; k += 2) {
    IntMatrix d(1, 1);
    d(0, 0) = n;
    b.emplace(k, d);
  }
  return SpaceDescription::finite(ChainComplex::from_sparse(ranks, b),
                                  "lens(" + n.get_str() + "," + std::to_string(top) + ")");
}

SpaceDescription lens_periodic(const Integer& n) {
  require_positive(n, "lensinf");
  IntMatrix times_n(1, 1);
  times_n(0, 0) = n;
  PeriodicComplex p(ChainComplex({1}, {}), {1, 1}, {IntMatrix(1, 1), times_n});
  return SpaceDescription::periodic(std::move(p), "lensinf(" + n.get_str() + ")");
}

SpaceDescription wedge(const std::vector<SpaceDescription>& parts) {
  if (parts.size() < 2) throw SemanticError("wedge needs at least two spaces");
  std::size_t top = 0;
  for (const auto& p : parts) {
    if (p.kind() != SpaceKind::Finite) throw SemanticError("wedge is only built from finite complexes, got " + p.label());
    if (p.complex().rank(0) == 0) throw SemanticError(p.label() + " has no 0-cell to use as basepoint");
    top = std::max(top, p.complex().top_degree());
  }
  // Cells of each part stacked in order; the first 0-cell of every part is
  // identified with the common basepoint (row 0 in degree 0).
  std::vector<std::size_t> ranks(top + 1, 0);
  std::vector<std::vector<std::size_t>> offset(parts.size(), std::vector<std::size_t>(top + 1, 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& c = parts[i].complex();
    for (std::size_t n = 0; n <= top; ++n) {
      offset[i][n] = ranks[n];
      std::size_t r = c.rank(n);
      if (n == 0 && i > 0) r -= 1;
      ranks[n] += r;
    }
  }
  auto row_of = [&](std::size_t i, std::size_t n, std::size_t r) -> std::size_t {
    if (n != 0) return offset[i][n] + r;
    if (r == 0) return 0;
    return i == 0 ? r : offset[i][0] + r - 1;
  };
  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= top; ++n) {
    IntMatrix d(ranks[n - 1], ranks[n]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const IntMatrix local = parts[i].complex().boundary(n);
      for (std::size_t r = 0; r < local.rows(); ++r) {
        for (std::size_t c = 0; c < local.cols(); ++c) {
          d(row_of(i, n - 1, r), offset[i][n] + c) += local(r, c);
        }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return SpaceDescription::finite(ChainComplex(std::move(ranks), std::move(boundaries)),
                                  "wedge(" + join(parts) + ")");
}

SpaceDescription product(const SpaceDescription& a, const SpaceDescription& b) {
  if (a.kind() != SpaceKind::Finite || b.kind() != SpaceKind::Finite) {
    throw SemanticError("product is only built from finite complexes");
  }
  return SpaceDescription::finite(tensor_complexes(a.complex(), b.complex()),
                                  "product(" + a.label() + "," + b.label() + ")");
}

SpaceDescription infinite_wedge(const SpaceDescription& part) {
  if (part.kind() != SpaceKind::Finite) throw SemanticError("infwedge needs a finite complex");
  return SpaceDescription::infinite_wedge(part.complex(), "infwedge(" + part.label() + ")");
}

SpaceDescription telescope(const DirectedSystem& d, std::size_t degree, std::string label) {
  return SpaceDescription::telescope(d, degree, std::move(label));
}

SpaceDescription bpgl(const Integer& n) {
  require_positive(n, "bpgl");
  CatalogSpace e;
  e.family = CatalogSpace::Family::ProjectiveClassifying;
  e.n = n;
  return SpaceDescription::catalog(std::move(e), "bpgl(" + n.get_str() + ")");
}

SpaceDescription eilenberg_maclane(const FgAbGroup& g, std::size_t j) {
  if (j < 1) throw SemanticError("K(G,j) needs j >= 1");
  CatalogSpace e;
  e.family = CatalogSpace::Family::EilenbergMacLane;
  e.group = g;
  e.degree = j;
  return SpaceDescription::catalog(std::move(e), "k(" + g.to_string() + "," + std::to_string(j) + ")");
}

SpaceDescription eilenberg_maclane_qz(std::size_t j) {
  if (j < 2) throw SemanticError("K(Q/Z,j) is catalogued for j >= 2");
  CatalogSpace e;
  e.family = CatalogSpace::Family::EilenbergMacLaneQZ;
  e.degree = j;
  return SpaceDescription::catalog(std::move(e), "k(Q/Z," + std::to_string(j) + ")");
}

SpaceDescription classifying_space(const SymbolicTorsionGroup& g) {
  CatalogSpace e;
  e.family = CatalogSpace::Family::ClassifyingDiscrete;
  e.torsion_group = g;
  return SpaceDescription::catalog(std::move(e), "bg(" + g.to_string() + ")");
}

SpaceDescription finite_complex(ChainComplex c, std::string label) {
  return SpaceDescription::finite(std::move(c), std::move(label));
}

std::string to_string(const HomologyValue& h) {
  return std::visit([](const auto& g) { return g.to_string(); }, h);
}

std::vector<FgAbGroup> periodic_homology_pattern(const PeriodicComplex& p) {
  const std::size_t top = p.prefix().top_degree(), L = p.period();
  const ChainComplex c = p.unroll(top + 4 * L + 1);
  std::vector<FgAbGroup> pattern;
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t first = top + 1 + i + L;
    FgAbGroup h = homology(c, first);
    for (std::size_t k = 1; k < 3; ++k) {
      if (homology(c, first + k * L) != h) {
        throw UnsupportedError("periodic homology at block position " + std::to_string(i) +
                               " did not stabilize over three blocks");
      }
    }
    pattern.push_back(std::move(h));
  }
  return pattern;
}

HomologyValue space_homology(const SpaceDescription& x, std::size_t n) {
  switch (x.kind()) {
    case SpaceKind::Finite: return homology(x.complex(), n);
    case SpaceKind::Periodic: return homology(x.periodic_complex().unroll(n + 1), n);
    case SpaceKind::Telescope:
      if (n == 0) return kZ;
      if (n == x.telescope_degree()) return colimit_symbolic(x.system());
      return FgAbGroup();
    case SpaceKind::InfiniteWedge: {
      if (n == 0) return kZ;
      const FgAbGroup h = homology(x.complex(), n);
      if (h.is_trivial()) return h;
      throw UnsupportedError("H_" + std::to_string(n) + " of " + x.label() + " is a countable sum of " +
                             h.to_string() + ", outside the symbolic alphabet");
    }
    case SpaceKind::Catalog: break;
  }
  throw UnsupportedError("homology of catalog space " + x.label() + " is not computed");
}

std::string to_string(const BrauerValue& b) {
  if (const auto* p = std::get_if<ProductDescriptor>(&b)) return p->expression;
  if (const auto* g = std::get_if<FgAbGroup>(&b)) return g->to_string();
  return std::get<SymbolicGroup>(b).to_string();
}

bool is_zero(const BrauerValue& b) {
  if (const auto* g = std::get_if<FgAbGroup>(&b)) return g->is_trivial();
  if (const auto* s = std::get_if<SymbolicGroup>(&b)) return s->is_zero();
  return std::get<ProductDescriptor>(b).factors.empty();
}

BrauerValue brauer_prime(const SpaceDescription& x) {
  switch (x.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Periodic:
      return torsion_part(ext1(std::get<FgAbGroup>(space_homology(x, 2)), kZ));
    case SpaceKind::Telescope: {
      const HomologyValue h2 = space_homology(x, 2);
      if (const auto* g = std::get_if<FgAbGroup>(&h2)) return torsion_part(ext1(*g, kZ));
      return torsion_subgroup(ext1_symbolic(std::get<SymbolicGroup>(h2)));
    }
    case SpaceKind::InfiniteWedge: {
      // Ext^1 turns the countable sum into a countable product; bounded
      // exponent makes the product torsion.
      const FgAbGroup t = torsion_part(homology(x.complex(), 2));
      if (t.is_trivial()) return FgAbGroup();
      ProductDescriptor d;
      d.factors = omega_profile(t);
      d.expression = "Tors(prod " + d.factors.to_string() + ")";
      d.exponent = t.exponent();
      d.restricted_sum = d.factors;
      d.product_is_torsion = true;
      return d;
    }
    case SpaceKind::Catalog: return catalog_brauer(x.catalog_entry());
  }
  return FgAbGroup();
}

DirectedSystem skeleton_system(const PeriodicComplex& p, std::size_t k) {
  const ChainComplex c = p.unroll(k + 1);
  const IntMatrix cycles = kernel_basis(c.boundary(k));
  const Subquotient h = cycle_subquotient(c, k);
  IntMatrix to_h(h.group().generator_count(), cycles.cols());
  for (std::size_t j = 0; j < cycles.cols(); ++j) {
    const IntVector coords = h.coordinates(cycles.column(j));
    for (std::size_t i = 0; i < coords.size(); ++i) to_h(i, j) = coords[i];
  }
  const FgAbGroup g = h.group();
  return DirectedSystem({FgAbGroup::free(cycles.cols())}, {to_h}, {g},
                        {IntMatrix::identity(g.generator_count())}, g);
}

PhantomResult phantom_subgroup(const SpaceDescription& x, std::size_t n) {
  if (n == 0) return {SymbolicGroup(), "H_{-1} = 0"};
  switch (x.kind()) {
    case SpaceKind::Finite:
      return {SymbolicGroup(), "H_" + std::to_string(n - 1) +
                                   " of a finite complex is finitely generated; its torsion-free quotient is free "
                                   "and Ext^1(free, Z) = 0"};
    case SpaceKind::Periodic: {
      const DirectedSystem d = skeleton_system(x.periodic_complex(), n - 1);
      return {phantom_of_telescope(d, n), "colimit of H_" + std::to_string(n - 1) +
                                              " over the skeleta is " + colimit_symbolic(d).to_string() +
                                              "; Ext^1 of its torsion-free quotient"};
    }
    case SpaceKind::Telescope: {
      if (n - 1 != x.telescope_degree()) {
        return {SymbolicGroup(), "H_" + std::to_string(n - 1) + " of the telescope is free of finite rank"};
      }
      const SymbolicGroup colim = colimit_symbolic(x.system());
      return {phantom_of_telescope(x.system(), n),
              "H_" + std::to_string(n - 1) + " = colim = " + colim.to_string() +
                  "; Ext^1 of its torsion-free quotient " + torsion_free_quotient(colim).to_string()};
    }
    case SpaceKind::InfiniteWedge:
      return {SymbolicGroup(), "H_" + std::to_string(n - 1) +
                                   " is a countable sum of finitely generated groups; its torsion-free quotient is "
                                   "free and Ext^1(free, Z) = 0"};
    case SpaceKind::Catalog: {
      const auto f = x.catalog_entry().family;
      const bool torsion = f == CatalogSpace::Family::EilenbergMacLaneQZ ||
                           f == CatalogSpace::Family::ClassifyingDiscrete;
      return {SymbolicGroup(), torsion ? "reduced homology is torsion, so H_" + std::to_string(n - 1) +
                                             " / Torsion is 0"
                                       : "homology of finite type; H_" + std::to_string(n - 1) +
                                             " / Torsion is free of finite rank"};
    }
  }
  return {SymbolicGroup(), ""};
}

const char* to_string(EqualityVerdict v) {
  switch (v) {
    case EqualityVerdict::Equal: return "EQUAL";
    case EqualityVerdict::Strict: return "STRICT";
    case EqualityVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

const char* to_string(EqualityReason r) {
  switch (r) {
    case EqualityReason::None: return "none";
    case EqualityReason::CompactSerre: return "CompactSerre";
    case EqualityReason::WoodwardDimLe4: return "WoodwardDimLe4";
    case EqualityReason::EvenCells: return "EvenCells";
    case EqualityReason::CatalogTheorem: return "CatalogTheorem";
    case EqualityReason::NonBrauerCondition: return "NonBrauerCondition";
  }
  return "none";
}

std::vector<RuleOutcome> applicable_rules(const SpaceDescription& x) {
  std::vector<RuleOutcome> out;
  using V = EqualityVerdict;
  using R = EqualityReason;
  if (x.kind() == SpaceKind::Finite) {
    out.push_back({V::Equal, R::CompactSerre, "finite CW-complex, hence compact: Br = Br' (Serre)"});
  }
  const auto dim = x.dimension();
  if (dim && *dim <= 4) {
    out.push_back({V::Equal, R::WoodwardDimLe4,
                   "dimension " + std::to_string(*dim) + " <= 4: every class is the obstruction of a bundle of "
                                                         "rank ord(alpha) (Woodward)"});
  }
  if (dim) {
    const auto cells = *x.cell_degrees();
    const bool odd_high = std::any_of(cells.begin(), cells.end(), [](std::size_t n) { return n >= 5 && n % 2 == 1; });
    if (!odd_high) {
      out.push_back({V::Equal, R::EvenCells,
                     "finite-dimensional with no cells of odd dimension >= 5 (even-cell criterion)"});
    }
  }
  if (x.kind() == SpaceKind::Catalog) {
    const CatalogSpace& e = x.catalog_entry();
    const BrauerValue br = brauer_prime(x);
    using F = CatalogSpace::Family;
    if (e.family == F::ProjectiveClassifying) {
      out.push_back({V::Equal, R::CatalogTheorem,
                     "Br'(BPGL_n) = Z/n is generated by the obstruction class of the universal bundle"});
    } else if (e.family == F::EilenbergMacLane && e.degree == 2 && !is_zero(br)) {
      out.push_back({V::Strict, R::CatalogTheorem,
                     "Br(K(G,2)) lies in Ext^1(G/Torsion, Z) = 0 for finitely generated G (Antieau-Williams "
                     "for G cyclic), while Br' = " + to_string(br)});
    } else if (e.family == F::ClassifyingDiscrete && bg_theorem_applies(e)) {
      out.push_back({V::Strict, R::CatalogTheorem,
                     "G is p-primary torsion with infinite basic subgroup " +
                         reduce_to_basic(e.torsion_group).basic.to_string() + ": Br(BG) is strictly smaller than Br'"});
    } else if (is_zero(br)) {
      out.push_back({V::Equal, R::CatalogTheorem, "Br' = 0 forces Br = Br' = 0"});
    }
  }
  return out;
}

EqualityCertificate equality_certificate(const SpaceDescription& x) {
  EqualityCertificate c;
  const auto rules = applicable_rules(x);
  if (rules.empty()) {
    c.witness.push_back("no rule applies to " + x.label());
    return c;
  }
  c.verdict = rules.front().verdict;
  c.reason = rules.front().reason;
  c.witness.push_back(rules.front().detail);
  for (std::size_t i = 1; i < rules.size(); ++i) {
    c.witness.push_back(std::string("also ") + to_string(rules[i].reason) + ": " + rules[i].detail);
  }
  return c;
}

EqualityCertificate equality_certificate(const NonBrauerCertificate& nb) {
  EqualityCertificate c;
  c.witness = nb.witness;
  if (nb.verdict == NonBrauerVerdict::CertifiedNotInBr) {
    c.verdict = EqualityVerdict::Strict;
    c.reason = EqualityReason::NonBrauerCondition;
    c.witness.push_back("the class lies in Br' but not in Br");
  }
  return c;
}

std::optional<Integer> min_bundle_rank(const SpaceDescription& x, const Integer& alpha_order) {
  if (alpha_order < 1) throw SemanticError("class order must be at least 1");
  const BrauerValue br = brauer_prime(x);
  const auto* g = std::get_if<FgAbGroup>(&br);
  if (!g) throw UnsupportedError("Br'(" + x.label() + ") = " + to_string(br) + " has no finite exponent model");
  const Integer e = g->exponent();
  if (!mpz_divisible_p(e.get_mpz_t(), alpha_order.get_mpz_t())) {
    throw SemanticError("Br'(" + x.label() + ") = " + g->to_string() + " has no class of order " +
                        alpha_order.get_str());
  }
  const auto dim = x.dimension();
  if (dim && *dim <= 4) return alpha_order;
  return std::nullopt;
}

CatalogRecord catalog_lookup(const SpaceDescription& x) {
  const CatalogSpace& e = x.catalog_entry();
  const BrauerValue br = brauer_prime(x);
  CatalogRecord r;
  r.name = x.label();
  r.br_prime = to_string(br);
  r.equality = equality_certificate(x).verdict;
  using F = CatalogSpace::Family;
  switch (e.family) {
    case F::ProjectiveClassifying:
      r.br = r.br_prime;
      r.citation = "Br'(BPGL_n) is cyclic of order n, generated by the obstruction class of the universal "
                   "projective bundle";
      break;
    case F::EilenbergMacLane:
      if (e.degree == 2) {
        r.br = "0";
        r.citation = e.group.is_finite() && e.group.invariant_factors().size() == 1
                         ? "Antieau-Williams: Br(K(Z/n,2)) = 0; Br' = Torsion Ext^1(G, Z)"
                         : "Br(K(G,2)) lies in Ext^1(G/Torsion, Z) = 0; Br' = Torsion Ext^1(G, Z)";
      } else if (e.degree == 1) {
        r.br = is_zero(br) ? "0" : "unknown";
        r.citation = "H_2(K(G,1)) = Lambda^2(G) for abelian G; Br' = Torsion Ext^1(Lambda^2 G, Z)";
      } else {
        r.br = "0";
        r.citation = "H_2(K(G,j)) = 0 for j >= 3, so the cohomological Brauer group is trivial";
      }
      break;
    case F::EilenbergMacLaneQZ:
      r.br = "0";
      r.citation = e.degree == 2 ? "Ext^1(Q/Z, Z) is torsion-free, so K(Q/Z,2) has trivial cohomological Brauer group"
                                 : "H_2(K(Q/Z,j)) = 0 for j >= 3";
      break;
    case F::ClassifyingDiscrete:
      r.br = bg_theorem_applies(e) ? "strictly smaller than Br'" : (is_zero(br) ? "0" : "unknown");
      r.citation = "Br'(BG) = Torsion prod_{i<j} Z/(n_i,n_j) over a basic subgroup sum Z/n_i; p-primary G with "
                   "infinite basic subgroups has Br strictly smaller than Br'";
      break;
  }
  return r;
}

std::vector<CatalogRecord> catalog_facts() {
  CatalogRecord plus;
  plus.name = "plus";
  plus.br_prime = "unchanged";
  plus.br = "unchanged";
  plus.equality = EqualityVerdict::Unknown;
  plus.citation = "plus construction X -> X^+: restriction maps on Br and Br' are bijective";
  return {plus};
}

}  // namespace brauer
