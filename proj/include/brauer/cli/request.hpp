#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "brauer/limits.hpp"
#include "brauer/profiles.hpp"
#include "brauer/spaces.hpp"

namespace brauer::cli {

enum class Command {
  Homology,
  Cohomology,
  Uct,
  Bockstein,
  Brauer,
  Phantom,
  Certify,
  Lim1,
  ProfileBrauer,
  NonBrauerCheck,
  Catalog,
  Reproduce,
};

const char* command_name(Command c);
std::optional<Command> command_from_name(const std::string& name);

/// Catalog entries that are facts rather than spaces, e.g. `plus`.
struct CatalogFact {
  std::string name;
  friend bool operator==(const CatalogFact&, const CatalogFact&) = default;
};

using Subject = std::variant<std::monostate, SpaceDescription, CyclicProfile, Tower, CatalogFact>;

/// One parsed request line. Which optional fields are present depends on
/// the command:
///   homology X n | cohomology X n [mod m] | uct X n | bockstein X n mod m
///   brauer X | phantom X n | certify X [order k] | lim1 T
///   profile-brauer P | non-brauer-check P with D | catalog [X | plus]
///   reproduce
struct Request {
  Command command = Command::Reproduce;
  Subject subject;
  std::optional<std::size_t> degree;
  std::optional<Integer> modulus;
  std::optional<Integer> order;
  std::optional<ObstructionDescriptor> descriptor;

  friend bool operator==(const Request&, const Request&) = default;
};

}  // namespace brauer::cli
