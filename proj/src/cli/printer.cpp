#include "brauer/cli/printer.hpp"

#include <string>

namespace brauer::cli {

namespace {

std::optional<Integer> scalar_of(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const Integer k = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != (i == j ? k : Integer(0))) return std::nullopt;
    }
  }
  return k;
}

std::string print_map(const IntMatrix& m) {
  if (m.is_zero()) return "0";
  if (auto k = scalar_of(m)) return "x" + k->get_str();
  return print(m);
}

}  // namespace

std::string print(const FgAbGroup& g) { return g.to_string(); }
std::string print(const CyclicProfile& p) { return p.to_string(); }
std::string print(const IntMatrix& m) { return to_string(m); }
std::string print(const SpaceDescription& x) { return x.label(); }
std::string print(const SymbolicTorsionGroup& g) { return g.to_string(); }
std::string print(const ObstructionDescriptor& d) { return d.to_string(); }
std::string print(const Affine& a) { return a.to_string(); }

std::string print(const ChainComplex& c) {
  std::string out = "complex {";
  bool first = true;
  auto sep = [&] {
    out += first ? " " : "; ";
    first = false;
  };
  for (std::size_t n = 0; n <= c.top_degree(); ++n) {
    sep();
    out += "cells " + std::to_string(n) + ": " + std::to_string(c.rank(n));
  }
  for (std::size_t n = 1; n <= c.top_degree(); ++n) {
    const IntMatrix d = c.boundary(n);
    if (d.is_zero()) continue;
    sep();
    out += "boundary " + std::to_string(n) + ": " + print(d);
  }
  return out + " }";
}

std::string print(const PeriodicChain& c) {
  const bool tower = c.direction() == ChainDirection::Tower;
  auto arrow = [&](const IntMatrix& m) {
    return tower ? " <-(" + print_map(m) + ")- " : " -(" + print_map(m) + ")-> ";
  };
  std::string out = tower ? "tower prefix [" : "system prefix [";
  for (std::size_t i = 0; i < c.prefix_length(); ++i) {
    if (i) out += " ";
    std::string a = arrow(c.prefix_maps()[i]);
    a.pop_back();
    out += print(c.prefix_groups()[i]) + a;
  }
  out += "] block [";
  for (std::size_t i = 0; i < c.period(); ++i) {
    out += print(c.block_groups()[i]) + arrow(c.block_maps()[i]);
  }
  return out + print(c.closing_group()) + "]";
}

std::string telescope_label(const DirectedSystem& d, std::size_t degree) {
  const bool constant = d.prefix_length() == 0 && d.period() == 1 && d.closing_group() == d.block_groups()[0] &&
                        scalar_of(d.block_maps()[0]).has_value();
  if (constant) {
    std::string out = "telescope(" + print(d.block_groups()[0]) + ", x" + scalar_of(d.block_maps()[0])->get_str();
    if (degree != 1) out += ", " + std::to_string(degree);
    return out + ")";
  }
  return "telescope(" + print(static_cast<const PeriodicChain&>(d)) + ", " + std::to_string(degree) + ")";
}

std::string print(const Request& r) {
  std::string out = command_name(r.command);
  if (const auto* x = std::get_if<SpaceDescription>(&r.subject)) out += " " + print(*x);
  if (const auto* p = std::get_if<CyclicProfile>(&r.subject)) out += " " + print(*p);
  if (const auto* t = std::get_if<Tower>(&r.subject)) out += " " + print(static_cast<const PeriodicChain&>(*t));
  if (const auto* f = std::get_if<CatalogFact>(&r.subject)) out += " " + f->name;
  if (r.degree) out += " " + std::to_string(*r.degree);
  if (r.modulus) out += " mod " + r.modulus->get_str();
  if (r.order) out += " order " + r.order->get_str();
  if (r.descriptor) out += " with " + print(*r.descriptor);
  return out;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Homology: return "homology";
    case Command::Cohomology: return "cohomology";
    case Command::Uct: return "uct";
    case Command::Bockstein: return "bockstein";
    case Command::Brauer: return "brauer";
    case Command::Phantom: return "phantom";
    case Command::Certify: return "certify";
    case Command::Lim1: return "lim1";
    case Command::ProfileBrauer: return "profile-brauer";
    case Command::NonBrauerCheck: return "non-brauer-check";
    case Command::Catalog: return "catalog";
    case Command::Reproduce: return "reproduce";
  }
  return "reproduce";
}

std::optional<Command> command_from_name(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Command::Reproduce); ++i) {
    const auto c = static_cast<Command>(i);
    if (name == command_name(c)) return c;
  }
  return std::nullopt;
}

}  // namespace brauer::cli
