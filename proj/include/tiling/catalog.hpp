#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiling/criteria.hpp"
#include "tiling/rational_angle.hpp"
#include "tiling/tetrahedron.hpp"

namespace tiling {

enum class SourceTag { A40, Extra2, Specific23, User };

std::string source_tag_name(SourceTag tag);
// Accepts the dataset names A40, EXTRA2, SPECIFIC23; throws ParseError.
SourceTag parse_source_tag(const std::string& name);

struct CatalogEntry {
  std::string id;
  AngleTuple angles;
  SourceTag source_tag = SourceTag::User;
  std::optional<Aggregate> expected_verdict;

  Tetrahedron tetrahedron() const { return Tetrahedron(angles); }
};

// Built-in datasets. A40: the 40 sporadic tuples no criterion rules out
// (expected Inconclusive). EXTRA2: the two sporadics ruled out only by a
// linear-program certificate (expected DoesNotTile). SPECIFIC23: the 23
// specific family members, derived from enumerate_specific (mixed verdicts,
// no expectation attached).
std::vector<CatalogEntry> builtin_catalog(SourceTag tag);

struct LoadedCatalog {
  std::vector<CatalogEntry> entries;

  struct Skipped {
    std::string id;
    std::string reason;
  };
  // Entries whose angles admit no tetrahedron, reported and excluded.
  std::vector<Skipped> skipped;

  // Ids of entries whose angle tuples coincide up to the 24 relabelings,
  // grouped; singleton groups are omitted.
  std::vector<std::vector<std::string>> duplicate_groups;
};

// Reads a JSON array of {"id": string, "angles": [[num, den] x 6]} with
// angle order (12, 34, 13, 24, 14, 23), each pair an integer fraction
// multiplying pi. Throws ParseError with entry/field diagnostics; entries
// failing the existence check are skipped and reported.
LoadedCatalog load_catalog(const std::string& path);

// Inverse of load_catalog's accepted grammar (ids and reduced angle pairs);
// loading the result reproduces the entries.
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

namespace detail {
using BuiltinRow = std::array<std::pair<long, long>, kNumEdges>;
extern const std::array<BuiltinRow, 40> kSporadic40;
extern const std::array<BuiltinRow, 2> kLpExtras;
}  // namespace detail

}  // namespace tiling
