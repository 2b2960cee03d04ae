#include "brauer/limits.hpp"

#include <algorithm>
#include <stdexcept>

#include "brauer/errors.hpp"

namespace brauer {

namespace {

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t valuation(Integer n, const Integer& p) {
  std::size_t v = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Integer& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0; }

Tri all_of(const std::vector<Tri>& ts) {
  bool unknown = false;
  for (Tri t : ts) {
    if (t == Tri::No) return Tri::No;
    if (t == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::Yes;
}

Tri any_of(const std::vector<Tri>& ts) {
  bool unknown = false;
  for (Tri t : ts) {
    if (t == Tri::Yes) return Tri::Yes;
    if (t == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::No;
}

FgAbGroup scale_torsion(const FgAbGroup& g, const Integer& factor) {
  if (factor == 1) return g;
  IntVector f = g.invariant_factors();
  for (auto& d : f) d *= factor;
  return FgAbGroup::from_invariants(g.free_rank(), std::move(f));
}

}  // namespace

const char* to_string(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

SymbolicAtom SymbolicAtom::localized(const Integer& radical) {
  if (radical < 2) throw SemanticError("Z[1/S] needs a nonempty set of primes");
  Integer r = 1;
  for (const auto& p : prime_factors(radical)) r *= p;
  SymbolicAtom a;
  a.kind = Kind::Localized;
  a.parameter = r;
  return a;
}

SymbolicAtom SymbolicAtom::prufer(const Integer& p) {
  if (!is_prime(p)) throw SemanticError("Prufer group needs a prime, got " + p.get_str());
  SymbolicAtom a;
  a.kind = Kind::Prufer;
  a.parameter = p;
  return a;
}

SymbolicAtom SymbolicAtom::rationals() { return SymbolicAtom{}; }

SymbolicAtom SymbolicAtom::padic(const Integer& p) {
  if (!is_prime(p)) throw SemanticError("p-adic integers need a prime, got " + p.get_str());
  SymbolicAtom a;
  a.kind = Kind::PAdic;
  a.parameter = p;
  return a;
}

SymbolicAtom SymbolicAtom::continuum_q_vector() {
  SymbolicAtom a;
  a.kind = Kind::ContinuumQVector;
  return a;
}

SymbolicAtom SymbolicAtom::opaque_ext(std::string expression, Flags flags) {
  SymbolicAtom a;
  a.kind = Kind::OpaqueExt;
  a.expression = std::move(expression);
  a.opaque_flags = flags;
  return a;
}

SymbolicAtom::Flags SymbolicAtom::flags() const {
  switch (kind) {
    case Kind::Localized: return {Tri::No, Tri::No, Tri::Yes, Tri::Yes};
    case Kind::Prufer: return {Tri::Yes, Tri::Yes, Tri::No, Tri::Yes};
    case Kind::Rationals: return {Tri::Yes, Tri::No, Tri::Yes, Tri::Yes};
    case Kind::PAdic: return {Tri::No, Tri::No, Tri::Yes, Tri::Yes};
    case Kind::ContinuumQVector: return {Tri::Yes, Tri::No, Tri::Yes, Tri::Yes};
    case Kind::OpaqueExt: return opaque_flags;
  }
  return {};
}

std::string SymbolicAtom::to_string() const {
  switch (kind) {
    case Kind::Localized: return "Z[1/" + parameter.get_str() + "]";
    case Kind::Prufer: return "Z(" + parameter.get_str() + "^inf)";
    case Kind::Rationals: return "Q";
    case Kind::PAdic: return "Z_" + parameter.get_str();
    case Kind::ContinuumQVector: return "Q^c";
    case Kind::OpaqueExt: return "Ext(" + expression + ",Z)";
  }
  return "?";
}

SymbolicGroup::SymbolicGroup(FgAbGroup fg) : fg_(std::move(fg)) {}

SymbolicGroup SymbolicGroup::of(const SymbolicAtom& atom, std::size_t multiplicity) {
  SymbolicGroup g;
  g.add_atom(atom, multiplicity);
  return g;
}

void SymbolicGroup::add_atom(const SymbolicAtom& atom, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom,
                             [](const auto& entry, const SymbolicAtom& a) { return entry.first < a; });
  if (it != atoms_.end() && it->first == atom) {
    it->second += multiplicity;
  } else {
    atoms_.insert(it, {atom, multiplicity});
  }
}

SymbolicGroup operator+(const SymbolicGroup& a, const SymbolicGroup& b) {
  SymbolicGroup out(direct_sum(a.fg_, b.fg_));
  for (const auto& [atom, k] : a.atoms_) out.add_atom(atom, k);
  for (const auto& [atom, k] : b.atoms_) out.add_atom(atom, k);
  return out;
}

Tri SymbolicGroup::divisible() const {
  std::vector<Tri> ts{fg_.is_trivial() ? Tri::Yes : Tri::No};
  for (const auto& [atom, _] : atoms_) ts.push_back(atom.flags().divisible);
  return all_of(ts);
}

Tri SymbolicGroup::torsion() const {
  std::vector<Tri> ts{fg_.free_rank() == 0 ? Tri::Yes : Tri::No};
  for (const auto& [atom, _] : atoms_) ts.push_back(atom.flags().torsion);
  return all_of(ts);
}

Tri SymbolicGroup::torsion_free() const {
  std::vector<Tri> ts{fg_.is_free() ? Tri::Yes : Tri::No};
  for (const auto& [atom, _] : atoms_) ts.push_back(atom.flags().torsion_free);
  return all_of(ts);
}

Tri SymbolicGroup::nonzero() const {
  std::vector<Tri> ts{fg_.is_trivial() ? Tri::No : Tri::Yes};
  for (const auto& [atom, _] : atoms_) ts.push_back(atom.flags().nonzero);
  return any_of(ts);
}

std::string SymbolicGroup::to_string() const {
  std::string out = fg_.is_trivial() ? "" : fg_.to_string();
  for (const auto& [atom, k] : atoms_) {
    if (!out.empty()) out += " + ";
    out += atom.to_string();
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

SymbolicGroup ext1_symbolic(const SymbolicGroup& g) {
  SymbolicGroup out(ext1(g.finitely_generated_part(), FgAbGroup::free(1)));
  for (const auto& [atom, k] : g.atoms()) {
    switch (atom.kind) {
      case SymbolicAtom::Kind::Localized:
        // Quotient of Z_S-hat by Z: divisible because the source is
        // torsion-free, nonzero because Z[1/S] is not free.
        out = out + SymbolicGroup::of(
                        SymbolicAtom::opaque_ext(atom.to_string(), {Tri::Yes, Tri::No, Tri::No, Tri::Yes}), k);
        break;
      case SymbolicAtom::Kind::Prufer:
        out = out + SymbolicGroup::of(SymbolicAtom::padic(atom.parameter), k);
        break;
      case SymbolicAtom::Kind::Rationals:
        out = out + SymbolicGroup::of(SymbolicAtom::continuum_q_vector(), k);
        break;
      default:
        throw UnsupportedError("Ext^1(" + atom.to_string() + ", Z) is outside the symbolic tables");
    }
  }
  return out;
}

SymbolicGroup torsion_free_quotient(const SymbolicGroup& g) {
  SymbolicGroup out(free_quotient(g.finitely_generated_part()));
  for (const auto& [atom, k] : g.atoms()) {
    const auto f = atom.flags();
    if (f.torsion == Tri::Yes) continue;
    if (f.torsion_free == Tri::Yes) {
      out = out + SymbolicGroup::of(atom, k);
      continue;
    }
    throw UnsupportedError("torsion of " + atom.to_string() + " is not determined");
  }
  return out;
}

SymbolicGroup torsion_subgroup(const SymbolicGroup& g) {
  SymbolicGroup out(torsion_part(g.finitely_generated_part()));
  for (const auto& [atom, k] : g.atoms()) {
    const auto f = atom.flags();
    if (f.torsion_free == Tri::Yes) continue;
    if (f.torsion == Tri::Yes) {
      out = out + SymbolicGroup::of(atom, k);
      continue;
    }
    throw UnsupportedError("torsion of " + atom.to_string() + " is not determined");
  }
  return out;
}

FgAbGroup first_ulm(const FgAbGroup&) { return FgAbGroup(); }

SymbolicGroup first_ulm(const SymbolicGroup& g) {
  SymbolicGroup out;
  for (const auto& [atom, k] : g.atoms()) {
    const Tri d = atom.flags().divisible;
    if (d == Tri::Unknown) {
      throw UnsupportedError("divisibility of " + atom.to_string() + " is not determined");
    }
    if (d == Tri::Yes) out = out + SymbolicGroup::of(atom, k);
  }
  return out;
}

PeriodicChain::PeriodicChain(ChainDirection direction, std::vector<FgAbGroup> prefix_groups,
                             std::vector<IntMatrix> prefix_maps, std::vector<FgAbGroup> block_groups,
                             std::vector<IntMatrix> block_maps, FgAbGroup closing_group)
    : direction_(direction),
      prefix_groups_(std::move(prefix_groups)),
      prefix_maps_(std::move(prefix_maps)),
      block_groups_(std::move(block_groups)),
      block_maps_(std::move(block_maps)) {
  if (block_groups_.empty()) throw SemanticError("the repeating block needs at least one map");
  if (prefix_maps_.size() != prefix_groups_.size()) {
    throw SemanticError("prefix needs one map per prefix group");
  }
  if (block_maps_.size() != block_groups_.size()) {
    throw SemanticError("block needs one map per block group");
  }
  const FgAbGroup& b0 = block_groups_.front();
  const IntVector& bf = b0.invariant_factors();
  const IntVector& cf = closing_group.invariant_factors();
  bool ok = closing_group.free_rank() == b0.free_rank() && cf.size() == bf.size();
  if (ok && !bf.empty()) {
    ok = mpz_divisible_p(cf[0].get_mpz_t(), bf[0].get_mpz_t()) != 0;
    if (ok) growth_ = cf[0] / bf[0];
    for (std::size_t i = 0; ok && i < bf.size(); ++i) ok = cf[i] == bf[i] * growth_;
  }
  if (!ok) {
    throw SemanticError("block closes on " + closing_group.to_string() +
                        ", which is not the first block group " + b0.to_string() +
                        " with its invariant factors scaled by a common factor");
  }
  // Two periods: the second exercises the scaled groups with the same matrices.
  for (std::size_t j = 0; j < prefix_length() + 2 * period(); ++j) (void)map(j);
}

FgAbGroup PeriodicChain::group(std::size_t j) const {
  if (j < prefix_length()) return prefix_groups_[j];
  const std::size_t r = j - prefix_length();
  Integer factor;
  mpz_pow_ui(factor.get_mpz_t(), growth_.get_mpz_t(), r / period());
  return scale_torsion(block_groups_[r % period()], factor);
}

const IntMatrix& PeriodicChain::map_matrix(std::size_t j) const {
  if (j < prefix_length()) return prefix_maps_[j];
  return block_maps_[(j - prefix_length()) % period()];
}

GroupHom PeriodicChain::map(std::size_t j) const {
  if (direction_ == ChainDirection::Directed) return GroupHom(group(j), group(j + 1), map_matrix(j));
  return GroupHom(group(j + 1), group(j), map_matrix(j));
}

GroupHom PeriodicChain::composite(std::size_t j, std::size_t steps) const {
  if (steps == 0) return GroupHom::identity(group(j));
  GroupHom acc = map(j);
  for (std::size_t s = 1; s < steps; ++s) {
    acc = direction_ == ChainDirection::Directed ? compose(map(j + s), acc) : compose(acc, map(j + s));
  }
  return acc;
}

bool PeriodicChain::all_groups_finite() const {
  auto finite = [](const FgAbGroup& g) { return g.is_finite(); };
  return std::all_of(prefix_groups_.begin(), prefix_groups_.end(), finite) &&
         std::all_of(block_groups_.begin(), block_groups_.end(), finite);
}

Tower Tower::constant(const FgAbGroup& g, const IntMatrix& map) {
  return Tower({}, {}, {g}, {map}, g);
}

DirectedSystem DirectedSystem::constant(const FgAbGroup& g, const IntMatrix& map) {
  return DirectedSystem({}, {}, {g}, {map}, g);
}

const char* to_string(Lim1Verdict v) {
  return v == Lim1Verdict::Vanishes ? "VANISHES" : "INCONCLUSIVE";
}

const char* to_string(Lim1Reason r) {
  switch (r) {
    case Lim1Reason::None: return "none";
    case Lim1Reason::JensenFinite: return "JensenFinite";
    case Lim1Reason::MittagLeffler: return "MittagLeffler";
  }
  return "none";
}

Lim1Certificate lim1_certificate(const Tower& t) {
  Lim1Certificate c;
  if (t.all_groups_finite()) {
    c.verdict = Lim1Verdict::Vanishes;
    c.reason = Lim1Reason::JensenFinite;
    c.witness.push_back("every group in the tower is finite");
    return c;
  }
  if (t.growth() != 1) {
    c.witness.push_back("block grows by factor " + t.growth().get_str() +
                        " and has infinite groups; no criterion applies");
    return c;
  }
  const std::size_t k = t.prefix_length(), L = t.period();
  bool surjective = true;
  for (std::size_t j = k; j < k + L; ++j) {
    if (!t.map(j).is_surjective()) {
      surjective = false;
      c.witness.push_back("block map " + std::to_string(j - k) + " is not surjective");
      break;
    }
  }
  if (surjective) {
    c.verdict = Lim1Verdict::Vanishes;
    c.reason = Lim1Reason::MittagLeffler;
    c.witness.push_back("all block maps are surjective, images are constant");
    return c;
  }
  // Same matrices every period: with T the one-period composite at a block
  // position, Im(T^2) = Im(T^3) means T maps Im(T^2) onto itself, so the
  // image chain is constant from two periods on.
  for (std::size_t j = k; j < k + L; ++j) {
    const GroupHom twice = t.composite(j, 2 * L);
    const GroupHom thrice = t.composite(j, 3 * L);
    const IntMatrix& m = twice.matrix();
    for (std::size_t col = 0; col < m.cols(); ++col) {
      if (!thrice.image_contains(m.column(col))) {
        c.witness.push_back("image into stage " + std::to_string(j) +
                            " still shrinks after two periods (" + twice.image().to_string() + " vs " +
                            thrice.image().to_string() + " as abstract groups)");
        return c;
      }
    }
  }
  c.verdict = Lim1Verdict::Vanishes;
  c.reason = Lim1Reason::MittagLeffler;
  c.witness.push_back("images stabilize within two block periods at every block position");
  return c;
}

SymbolicGroup colimit_symbolic(const DirectedSystem& d) {
  const std::size_t k = d.prefix_length(), L = d.period();
  const std::size_t s = d.group(k).generator_count();
  std::vector<IntVector> orders;
  for (std::size_t i = 0; i <= L; ++i) {
    const FgAbGroup g = d.group(k + i);
    if (g.generator_count() != s) {
      throw UnsupportedError("block groups have different numbers of cyclic strands");
    }
    orders.push_back(g.generator_orders());
  }
  IntVector multiplier(s, 1);
  for (std::size_t i = 0; i < L; ++i) {
    const IntMatrix& m = d.map_matrix(k + i);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) {
        if (a != b && m(a, b) != 0) throw UnsupportedError("block map is not diagonal on the cyclic strands");
      }
      multiplier[a] *= m(a, a);
    }
  }
  SymbolicGroup out;
  for (std::size_t t = 0; t < s; ++t) {
    bool free = orders[0][t] == 0;
    for (const auto& o : orders) {
      if ((o[t] == 0) != free) throw UnsupportedError("a strand switches between free and torsion");
    }
    const Integer& mult = multiplier[t];
    if (mult == 0) continue;
    if (free) {
      if (abs(mult) == 1) out = out + SymbolicGroup(FgAbGroup::free(1));
      else out = out + SymbolicGroup::of(SymbolicAtom::localized(abs(mult)));
      continue;
    }
    const Integer& o = orders[0][t];
    std::vector<Integer> primes = prime_factors(o * d.growth());
    for (const auto& p : prime_factors(mult)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& p : primes) {
      const std::size_t a = valuation(o, p), g = valuation(d.growth(), p), m = valuation(mult, p);
      if (m > g) continue;  // each element is eventually killed
      if (g > 0) {
        out = out + SymbolicGroup::of(SymbolicAtom::prufer(p));
      } else if (a > 0) {
        Integer q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), a);
        out = out + SymbolicGroup(FgAbGroup::cyclic(q));
      }
    }
  }
  return out;
}

SymbolicGroup phantom_of_telescope(const DirectedSystem& d, std::size_t degree) {
  if (degree == 0) return SymbolicGroup();
  return ext1_symbolic(torsion_free_quotient(colimit_symbolic(d)));
}

}  // namespace brauer
