#include "tiling/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <utility>

#include "json.hpp"
#include "tiling/families.hpp"

namespace tiling {

std::string source_tag_name(SourceTag tag) {
  switch (tag) {
    case SourceTag::A40:
      return "A40";
    case SourceTag::Extra2:
      return "EXTRA2";
    case SourceTag::Specific23:
      return "SPECIFIC23";
    case SourceTag::User:
      return "USER";
  }
  return "unknown";
}

SourceTag parse_source_tag(const std::string& name) {
  if (name == "A40") return SourceTag::A40;
  if (name == "EXTRA2") return SourceTag::Extra2;
  if (name == "SPECIFIC23") return SourceTag::Specific23;
  throw ParseError("unknown dataset tag: " + name +
                   " (expected A40, EXTRA2, or SPECIFIC23)");
}

namespace {

std::string numbered_id(const char* prefix, int width, int n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%0*d", prefix, width, n);
  return buf;
}

AngleTuple tuple_from_row(const detail::BuiltinRow& row) {
  std::array<Rational, kNumEdges> values;
  for (int i = 0; i < kNumEdges; ++i)
    values[i] = Rational(row[i].first, row[i].second);
  return make_angle_tuple(values);
}

// Lexicographically smallest relabeled tuple: a canonical key that two
// entries share iff one is a relabeling of the other.
std::string relabeling_key(const AngleTuple& angles) {
  std::string best;
  for (const auto& sigma : all_vertex_permutations()) {
    AngleTuple p = permute_tuple(angles, sigma);
    std::string key;
    for (const auto& a : p) key += a.str() + ";";
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog(SourceTag tag) {
  std::vector<CatalogEntry> out;
  switch (tag) {
    case SourceTag::A40: {
      int n = 0;
      for (const auto& row : detail::kSporadic40) {
        out.push_back({numbered_id("A40-", 2, ++n), tuple_from_row(row),
                       SourceTag::A40, Aggregate::Inconclusive});
      }
      break;
    }
    case SourceTag::Extra2: {
      int n = 0;
      for (const auto& row : detail::kLpExtras) {
        out.push_back({numbered_id("EXTRA2-", 1, ++n), tuple_from_row(row),
                       SourceTag::Extra2, Aggregate::DoesNotTile});
      }
      break;
    }
    case SourceTag::Specific23: {
      int n = 0;
      for (const auto& m : enumerate_specific()) {
        out.push_back({numbered_id("SPE-", 2, ++n), m.t.angles(),
                       SourceTag::Specific23, std::nullopt});
      }
      break;
    }
    case SourceTag::User:
      throw OutOfRangeError("no built-in dataset for the USER tag");
  }
  return out;
}

namespace {

long integer_field(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + ": expected a JSON integer, got " + v.dump());
  return v.get<long>();
}

AngleTuple angles_field(const nlohmann::json& entry, const std::string& where) {
  const auto it = entry.find("angles");
  if (it == entry.end()) throw ParseError(where + ": missing \"angles\"");
  if (!it->is_array() || it->size() != kNumEdges)
    throw ParseError(where + ": \"angles\" must be an array of 6 pairs");
  std::array<Rational, kNumEdges> values;
  for (int i = 0; i < kNumEdges; ++i) {
    const auto& pair = (*it)[i];
    std::string field = where + ".angles[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(field + ": expected [numerator, denominator]");
    long num = integer_field(pair[0], field + "[0]");
    long den = integer_field(pair[1], field + "[1]");
    if (den == 0) throw ParseError(field + ": denominator is zero");
    values[i] = Rational(num, den);
    values[i].canonicalize();
  }
  try {
    return make_angle_tuple(values);
  } catch (const OutOfRangeError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

LoadedCatalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("catalog " + path + ": " + e.what());
  }
  if (!doc.is_array())
    throw ParseError("catalog " + path + ": top level must be an array");

  LoadedCatalog out;
  std::map<std::string, std::vector<std::string>> by_key;
  std::vector<std::string> key_order;
  int index = 0;
  for (const auto& el : doc) {
    std::string where = path + " entry " + std::to_string(index++);
    if (!el.is_object()) throw ParseError(where + ": expected an object");
    const auto id_it = el.find("id");
    if (id_it == el.end() || !id_it->is_string())
      throw ParseError(where + ": missing string \"id\"");
    std::string id = id_it->get<std::string>();
    AngleTuple angles = angles_field(el, where + " (id " + id + ")");

    Existence ex = check_existence(Tetrahedron(angles));
    if (!ex.valid) {
      out.skipped.push_back({id, ex.reason});
      continue;
    }
    std::string key = relabeling_key(angles);
    auto [it, fresh] = by_key.try_emplace(key);
    if (fresh) key_order.push_back(key);
    it->second.push_back(id);
    out.entries.push_back({id, angles, SourceTag::User, std::nullopt});
  }
  for (const auto& key : key_order) {
    if (by_key[key].size() > 1) out.duplicate_groups.push_back(by_key[key]);
  }
  return out;
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json angles = nlohmann::ordered_json::array();
    for (const auto& a : e.angles) {
      if (a.numerator().fits_slong_p() == 0 ||
          a.denominator().fits_slong_p() == 0)
        throw ParseError("angle fraction exceeds the catalog integer range");
      angles.push_back({a.numerator().get_si(), a.denominator().get_si()});
    }
    doc.push_back({{"id", e.id}, {"angles", angles}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace tiling
