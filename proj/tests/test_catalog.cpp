#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "tiling/catalog.hpp"
#include "tiling/families.hpp"

using namespace tiling;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "catalog_test_" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string canonical_relabeling_key(const AngleTuple& t) {
  std::string best;
  for (const auto& sigma : all_vertex_permutations()) {
    AngleTuple p = permute_tuple(t, sigma);
    std::string key;
    for (const auto& a : p) key += a.str() + ";";
    if (best.empty() || key < best) best = key;
  }
  return best;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("source tags parse and print") {
  CHECK(parse_source_tag("A40") == SourceTag::A40);
  CHECK(parse_source_tag("EXTRA2") == SourceTag::Extra2);
  CHECK(parse_source_tag("SPECIFIC23") == SourceTag::Specific23);
  CHECK_THROWS_AS(parse_source_tag("a40"), ParseError);
  CHECK_THROWS_AS(parse_source_tag(""), ParseError);
  CHECK(source_tag_name(SourceTag::A40) == "A40");
  CHECK(source_tag_name(SourceTag::Extra2) == "EXTRA2");
  CHECK(source_tag_name(SourceTag::Specific23) == "SPECIFIC23");
  CHECK(source_tag_name(SourceTag::User) == "USER");
}

TEST_CASE("builtin dataset sizes and ids") {
  auto a40 = builtin_catalog(SourceTag::A40);
  REQUIRE(a40.size() == 40);
  CHECK(a40.front().id == "A40-01");
  CHECK(a40.back().id == "A40-40");

  auto extras = builtin_catalog(SourceTag::Extra2);
  REQUIRE(extras.size() == 2);
  CHECK(extras[0].id == "EXTRA2-1");
  CHECK(extras[1].id == "EXTRA2-2");

  auto spe = builtin_catalog(SourceTag::Specific23);
  REQUIRE(spe.size() == 23);
  CHECK(spe.front().id == "SPE-01");
  CHECK(spe.back().id == "SPE-23");

  CHECK_THROWS_AS(builtin_catalog(SourceTag::User), OutOfRangeError);
}

TEST_CASE("the first sporadic entry") {
  auto a40 = builtin_catalog(SourceTag::A40);
  const AngleTuple& t = a40.front().angles;
  CHECK(t[0].value() == Rational(1, 4));
  CHECK(t[1].value() == Rational(1, 3));
  CHECK(t[2].value() == Rational(1, 3));
  CHECK(t[3].value() == Rational(1, 4));
  CHECK(t[4].value() == Rational(1, 2));
  CHECK(t[5].value() == Rational(2, 3));
}

TEST_CASE("builtin expectations") {
  for (const auto& e : builtin_catalog(SourceTag::A40)) {
    REQUIRE(e.expected_verdict.has_value());
    CHECK(*e.expected_verdict == Aggregate::Inconclusive);
    CHECK(e.source_tag == SourceTag::A40);
  }
  for (const auto& e : builtin_catalog(SourceTag::Extra2)) {
    REQUIRE(e.expected_verdict.has_value());
    CHECK(*e.expected_verdict == Aggregate::DoesNotTile);
  }
  for (const auto& e : builtin_catalog(SourceTag::Specific23)) {
    CHECK_FALSE(e.expected_verdict.has_value());
  }
}

TEST_CASE("specific dataset mirrors the family enumeration") {
  auto spe = builtin_catalog(SourceTag::Specific23);
  auto members = enumerate_specific();
  REQUIRE(spe.size() == members.size());
  for (size_t i = 0; i < spe.size(); ++i) {
    CHECK(spe[i].angles == members[i].t.angles());
  }
}

TEST_CASE("every builtin entry passes the existence check") {
  for (SourceTag tag :
       {SourceTag::A40, SourceTag::Extra2, SourceTag::Specific23}) {
    for (const auto& e : builtin_catalog(tag)) {
      CHECK(check_existence(e.tetrahedron()).valid);
    }
  }
}

TEST_CASE("no two sporadic entries are relabelings of each other") {
  std::set<std::string> keys;
  for (const auto& e : builtin_catalog(SourceTag::A40)) {
    keys.insert(canonical_relabeling_key(e.angles));
  }
  CHECK(keys.size() == 40);
  for (const auto& e : builtin_catalog(SourceTag::Extra2)) {
    keys.insert(canonical_relabeling_key(e.angles));
  }
  CHECK(keys.size() == 42);
}

TEST_CASE("loading a user catalog") {
  TempFile f(R"([
    {"id": "first", "angles": [[1,4],[1,3],[1,3],[1,4],[1,2],[2,3]]},
    {"id": "flat", "angles": [[1,2],[1,2],[1,2],[1,2],[1,2],[1,2]]},
    {"id": "second", "angles": [[2,8],[2,6],[1,3],[1,4],[1,2],[2,3]]}
  ])");
  LoadedCatalog loaded = load_catalog(f.path);
  REQUIRE(loaded.entries.size() == 2);
  CHECK(loaded.entries[0].id == "first");
  CHECK(loaded.entries[0].source_tag == SourceTag::User);
  CHECK_FALSE(loaded.entries[0].expected_verdict.has_value());
  // Fractions reduce on input.
  CHECK(loaded.entries[1].angles[0].value() == Rational(1, 4));

  REQUIRE(loaded.skipped.size() == 1);
  CHECK(loaded.skipped[0].id == "flat");
  CHECK(loaded.skipped[0].reason == "determinant-nonzero");

  // "second" equals "first" after reduction, hence one duplicate group.
  REQUIRE(loaded.duplicate_groups.size() == 1);
  CHECK(loaded.duplicate_groups[0] ==
        std::vector<std::string>{"first", "second"});
}

TEST_CASE("duplicates are detected up to relabeling") {
  // The second tuple permutes the first by swapping vertices 0 and 1.
  TempFile f(R"([
    {"id": "base", "angles": [[31,60],[29,60],[7,20],[7,20],[19,60],[19,60]]},
    {"id": "relabeled", "angles": [[31,60],[29,60],[19,60],[19,60],[7,20],[7,20]]}
  ])");
  LoadedCatalog loaded = load_catalog(f.path);
  REQUIRE(loaded.entries.size() == 2);
  REQUIRE(loaded.duplicate_groups.size() == 1);
  CHECK(loaded.duplicate_groups[0] ==
        std::vector<std::string>{"base", "relabeled"});
}

TEST_CASE("load failures carry diagnostics") {
  CHECK_THROWS_AS(load_catalog("does_not_exist.json"), ParseError);

  TempFile not_array(R"({"id": "x"})");
  CHECK_THROWS_AS(load_catalog(not_array.path), ParseError);

  TempFile bad_json("[{");
  CHECK_THROWS_AS(load_catalog(bad_json.path), ParseError);

  TempFile missing_id(R"([{"angles": [[1,4],[1,3],[1,3],[1,4],[1,2],[2,3]]}])");
  CHECK_THROWS_AS(load_catalog(missing_id.path), ParseError);

  TempFile short_angles(R"([{"id": "x", "angles": [[1,4],[1,3]]}])");
  CHECK_THROWS_AS(load_catalog(short_angles.path), ParseError);

  TempFile zero_den(R"([{"id": "x", "angles": [[1,0],[1,3],[1,3],[1,4],[1,2],[2,3]]}])");
  CHECK_THROWS_AS(load_catalog(zero_den.path), ParseError);

  TempFile out_of_range(R"([{"id": "x", "angles": [[3,2],[1,3],[1,3],[1,4],[1,2],[2,3]]}])");
  CHECK_THROWS_AS(load_catalog(out_of_range.path), ParseError);
}

TEST_CASE("serialization round-trips") {
  auto extras = builtin_catalog(SourceTag::Extra2);
  std::string text = serialize_catalog(extras);
  TempFile f(text);
  LoadedCatalog loaded = load_catalog(f.path);
  REQUIRE(loaded.entries.size() == extras.size());
  CHECK(loaded.skipped.empty());
  for (size_t i = 0; i < extras.size(); ++i) {
    CHECK(loaded.entries[i].id == extras[i].id);
    CHECK(loaded.entries[i].angles == extras[i].angles);
  }

  // Serialization is deterministic.
  CHECK(serialize_catalog(extras) == text);
}

}
