#include <doctest.h>

#include <algorithm>
#include <random>

#include "bca/config.hpp"
#include "bca/error.hpp"
#include "bca/io.hpp"
#include "support.hpp"

using namespace bca;
using testing_support::fixture;

namespace {

ValidationResult check(const char* text, ValidateOptions opts = {}) { return validate(parse_configuration(text), opts); }

bool has_code(const ValidationResult& r, ValidationCode c) {
  return std::any_of(r.errors.begin(), r.errors.end(), [&](const ValidationError& e) { return e.code == c; });
}

Configuration make(const char* text) { return validated(parse_configuration(text)); }

}  // namespace

TEST_CASE("occurrence counts and valence on the first example") {
  const auto cfg = fixture("example1");
  CHECK(occ(cfg, "1", "V1") == 1);
  CHECK(occ(cfg, "1", "V3") == 0);
  CHECK(val(cfg, "1") == 3);
  CHECK(val(cfg, "4") == 4);
  CHECK(val(cfg, "5") == 1);
  CHECK_FALSE(is_truncated(cfg, "5"));  // mu = 2
  for (const char* t : {"6", "7", "8"}) CHECK(is_truncated(cfg, t));
  CHECK_FALSE(is_reduced(cfg));
}

TEST_CASE("self-folded polygons count every repetition") {
  const auto cfg = fixture("example2");
  CHECK(occ(cfg, "1", "V1") == 3);
  CHECK(occ(cfg, "1", "V2") == 2);
  CHECK(val(cfg, "1") == 6);
  CHECK(cfg.polygon_size(cfg.polygon_index("V1")) == 4);
  CHECK(has_self_folding(cfg));
  CHECK(is_truncated(cfg, "4"));
}

TEST_CASE("successor sequences are stored up to rotation") {
  const auto cfg = fixture("example1");
  const std::vector<OccurrenceRef> four{{"V1", 1}, {"V4", 1}, {"V3", 1}, {"V5", 1}};
  CHECK(same_cyclic_order(successor_sequence(cfg, "4"), four));
  const std::vector<OccurrenceRef> rotated{{"V3", 1}, {"V5", 1}, {"V1", 1}, {"V4", 1}};
  CHECK(same_cyclic_order(successor_sequence(cfg, "4"), rotated));
  const std::vector<OccurrenceRef> reversed{{"V5", 1}, {"V3", 1}, {"V4", 1}, {"V1", 1}};
  CHECK_FALSE(same_cyclic_order(successor_sequence(cfg, "4"), reversed));
  CHECK(successor_sequence(cfg, "5") == std::vector<OccurrenceRef>{{"V3", 1}});
  CHECK_THROWS_AS(successor_sequence(cfg, "6"), DomainError);

  const auto ex2 = fixture("example2");
  const std::vector<OccurrenceRef> one{{"V1", 1}, {"V1", 2}, {"V1", 3}, {"V2", 1}, {"V2", 2}, {"V3", 1}};
  CHECK(same_cyclic_order(successor_sequence(ex2, "1"), one));
}

TEST_CASE("validation reports each violated condition") {
  CHECK(has_code(check(R"({"vertices": [], "polygons": []})"), ValidationCode::Empty));
  CHECK(has_code(check(R"({"vertices": ["1", "2", "3"], "polygons": [{"label": "V1", "members": ["1", "2"]},
      {"label": "V2", "members": ["1", "2"]}]})"),
                 ValidationCode::UnusedVertex));
  CHECK(has_code(check(R"({"vertices": ["1", "2"], "polygons": [{"label": "V1", "members": ["1"]},
      {"label": "V2", "members": ["1", "2"]}]})"),
                 ValidationCode::TooFewMembers));
  CHECK(has_code(check(R"({"vertices": ["1", "2"], "polygons": [{"label": "V1", "members": ["1", "2"]}]})"),
                 ValidationCode::NoNontruncatedVertex));
  CHECK(has_code(check(R"({"vertices": ["1", "1"], "polygons": [{"label": "V1", "members": ["1", "1"]}]})"),
                 ValidationCode::DuplicateVertex));
  CHECK(has_code(check(R"({"vertices": [{"name": "1", "multiplicity": 2}, "2"],
      "polygons": [{"label": "V", "members": ["1", "2"]}, {"label": "V", "members": ["1", "2"]}]})"),
                 ValidationCode::DuplicatePolygon));
}

TEST_CASE("orientation must list every occurrence exactly once") {
  const char* base = R"({"vertices": ["1", "2", "3"],
    "polygons": [{"label": "A", "members": ["1", "2"]}, {"label": "B", "members": ["1", "3"]},
                 {"label": "C", "members": ["1", "2", "3"]}],
    "orientation": {"1": %s}})";
  auto with = [&](const std::string& seq) {
    std::string text = base;
    text.replace(text.find("%s"), 2, seq);
    return validate(parse_configuration(text));
  };
  CHECK(with(R"(["A", "B", "C"])").ok());
  CHECK(has_code(with(R"(["A", "B"])"), ValidationCode::OrientationLength));
  CHECK(has_code(with(R"(["A", "A", "B"])"), ValidationCode::OrientationRepeated));

  // A valence-3 vertex with no orientation entry.
  const auto missing = check(R"({"vertices": ["1", "2", "3"],
    "polygons": [{"label": "A", "members": ["1", "2"]}, {"label": "B", "members": ["1", "3"]},
                 {"label": "C", "members": ["1", "2", "3"]}]})");
  CHECK(has_code(missing, ValidationCode::MissingOrientation));
  CHECK_THROWS_AS(validated(parse_configuration(R"({"vertices": ["1", "2", "3"],
    "polygons": [{"label": "A", "members": ["1", "2"]}, {"label": "B", "members": ["1", "3"]},
                 {"label": "C", "members": ["1", "2", "3"]}]})")),
                  DomainError);
}

TEST_CASE("degenerate two-gons are opt-in") {
  const char* text = R"({"vertices": ["1", "2"], "polygons": [{"label": "V1", "members": ["1", "2"]}]})";
  CHECK_FALSE(check(text).ok());
  const auto r = check(text, {.allow_degenerate = true});
  REQUIRE(r.ok());
  CHECK(r.config->degenerate(0));
  CHECK(r.config->has_degenerate());
  CHECK(r.config->active(0) != r.config->active(1));
}

TEST_CASE("reduction drops truncated vertices from polygons with three or more members") {
  const auto cfg = fixture("example1");
  const auto red = reduce(cfg);
  CHECK(is_reduced(red));
  CHECK(red.polygons()[red.polygon_index("V1")].members == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(red.polygons()[red.polygon_index("V2")].members == std::vector<std::string>{"1", "2", "3"});
  CHECK(red.polygons()[red.polygon_index("V4")].members == std::vector<std::string>{"4", "6"});
  CHECK_FALSE(red.find_vertex("7"));
  CHECK_FALSE(red.find_vertex("8"));
  CHECK(red.find_vertex("6"));

  const auto twice = reduce(red);
  CHECK(twice.data().polygons == red.data().polygons);
  CHECK(twice.data().vertices == red.data().vertices);

  // Nontruncated data are untouched.
  for (std::size_t v = 0; v < red.vertex_count(); ++v) {
    if (red.truncated(v)) continue;
    const auto& name = red.vertices()[v].name;
    CHECK(val(red, name) == val(cfg, name));
    CHECK(same_cyclic_order(successor_sequence(red, name), successor_sequence(cfg, name)));
  }
}

namespace {

// Signature of a polygon that does not depend on which truncated vertex
// survived: the sorted nontruncated names and the number of truncated members.
std::vector<std::pair<std::vector<std::string>, std::size_t>> reduction_signature(const Configuration& cfg) {
  std::vector<std::pair<std::vector<std::string>, std::size_t>> out;
  for (std::size_t p = 0; p < cfg.polygon_count(); ++p) {
    std::vector<std::string> kept;
    std::size_t trunc = 0;
    for (auto v : cfg.members(p)) {
      if (cfg.truncated(v))
        ++trunc;
      else
        kept.push_back(cfg.vertices()[v].name);
    }
    std::sort(kept.begin(), kept.end());
    out.emplace_back(kept, trunc);
  }
  return out;
}

}  // namespace

TEST_CASE("reduction does not depend on the removal order") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cfg = testing_support::random_configuration(rng);
    // Remove truncated members one at a time in a random order.
    BrauerConfiguration raw = cfg.data();
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> candidates;
      for (std::size_t p = 0; p < raw.polygons.size(); ++p) {
        if (raw.polygons[p].members.size() < 3) continue;
        for (std::size_t k = 0; k < raw.polygons[p].members.size(); ++k)
          if (cfg.truncated(cfg.vertex_index(raw.polygons[p].members[k]))) candidates.emplace_back(p, k);
      }
      if (candidates.empty()) break;
      const auto [p, k] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      raw.polygons[p].members.erase(raw.polygons[p].members.begin() + static_cast<long>(k));
    }
    std::erase_if(raw.vertices, [&](const ConfigVertex& v) {
      return std::none_of(raw.polygons.begin(), raw.polygons.end(), [&](const Polygon& p) {
        return std::find(p.members.begin(), p.members.end(), v.name) != p.members.end();
      });
    });
    const auto by_hand = validated(raw);
    CHECK(reduction_signature(by_hand) == reduction_signature(reduce(cfg)));
  }
}

TEST_CASE("connected components and disjoint unions") {
  const auto a = fixture("example1");
  const auto b = make(R"({"vertices": ["x", "y"], "polygons": [{"label": "W1", "members": ["x", "y"]},
      {"label": "W2", "members": ["x", "y"]}]})");
  CHECK(is_connected(a));
  const auto u = disjoint_union(a, b);
  CHECK_FALSE(is_connected(u));
  const auto parts = connected_components(u);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].polygon_count() == a.polygon_count());
  CHECK(parts[1].polygon_count() == 2);
  CHECK(parts[1].vertex_count() == 2);
  CHECK_THROWS_AS(disjoint_union(a, a), DomainError);
}

TEST_CASE("name ordering is numeric first") {
  CHECK(name_less("2", "10"));
  CHECK_FALSE(name_less("10", "2"));
  CHECK(name_less("9", "a"));
  CHECK(name_less("a", "b"));
}

TEST_CASE("ordered equivalence") {
  const char* square = R"({"vertices": ["a", "b", "c", "d"], "polygons": [
      {"label": "V1", "members": ["a", "d"]}, {"label": "V2", "members": ["a", "b"]},
      {"label": "V3", "members": ["b", "c"]}, {"label": "V4", "members": ["c", "d"]}]})";
  const char* renamed = R"({"vertices": ["p", "q", "r", "s"], "polygons": [
      {"label": "V1", "members": ["s", "p"]}, {"label": "V2", "members": ["p", "q"]},
      {"label": "V3", "members": ["q", "r"]}, {"label": "V4", "members": ["r", "s"]}]})";
  // Cycle 1-3-2-4-1 on the same labels.
  const char* crossed = R"({"vertices": ["a", "b", "c", "d"], "polygons": [
      {"label": "V1", "members": ["a", "d"]}, {"label": "V2", "members": ["b", "c"]},
      {"label": "V3", "members": ["a", "b"]}, {"label": "V4", "members": ["c", "d"]}]})";
  const auto s = make(square);
  CHECK(in_ordered_class(s));
  CHECK(is_equivalent_ordered(s, make(renamed)));
  const auto map = ordered_equivalence(s, make(renamed));
  REQUIRE(map);
  CHECK(map->at("a") == "p");
  CHECK_FALSE(is_equivalent_ordered(s, make(crossed)));
  CHECK_THROWS_AS(is_equivalent_ordered(s, fixture("example1")), DomainError);
}
