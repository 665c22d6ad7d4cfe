#pragma once

// The regression corpus under tests/fixtures: a manifest of named inputs with
// expected values, and a runner that checks all of them.

#include <string>
#include <vector>

#include <json.hpp>

#include "bca/config.hpp"
#include "bca/rad3.hpp"

namespace bca {

struct Fixture {
  std::string name;
  std::string file;
  std::string kind;  // "configuration" or "graph"
  nlohmann::json expect;
};

/// BCA_FIXTURES if set, else the source tree's fixture directory.
std::string fixture_dir();

std::vector<Fixture> load_manifest(const std::string& dir = fixture_dir());

/// Parsed and validated configuration of a configuration fixture.
Configuration load_fixture_configuration(const std::string& name, const std::string& dir = fixture_dir());
Graph load_fixture_graph(const std::string& name, const std::string& dir = fixture_dir());

struct FixtureCheck {
  std::string fixture;
  std::string check;
  bool ok = false;
  std::string detail;
};

std::vector<FixtureCheck> run_fixtures(const std::string& dir = fixture_dir());

}  // namespace bca
