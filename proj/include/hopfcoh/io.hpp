#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfcoh/cohomology.hpp"
#include "hopfcoh/group_cohomology.hpp"
#include "hopfcoh/models.hpp"
#include "hopfcoh/radford.hpp"
#include "hopfcoh/yd.hpp"

namespace hopfcoh::io {

/// Insertion order is preserved, so every writer below produces a fixed key
/// order and dumps are byte-deterministic.
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- writers

inline json field_json(const Fp& k) { return json{{"p", k.p()}}; }

inline json space_json(const BasedSpace& s) {
  return json{{"name", s.name}, {"dim", s.dim}, {"basis_labels", s.labels}};
}

/// Sparse map as a list of [cod_index, dom_index, scalar] records, sorted by
/// (cod_index, dom_index).  Indices refer to the flattened bases.
inline json map_json(const LinearMap& m) {
  json records = json::array();
  for (const auto& [key, value] : m.entries())
    records.push_back(json::array({key.first, key.second, value}));
  return records;
}

inline json element_json(const Element& e) { return json(e.coords); }

inline json hopf_json(const HopfData& h) {
  return json{{"field", field_json(h.field)},   {"space", space_json(h.space)},
              {"mult", map_json(h.mult)},       {"unit", map_json(h.unit)},
              {"comult", map_json(h.comult)},   {"counit", map_json(h.counit)},
              {"antipode", map_json(h.antipode)}};
}

/// Braided partner: the Hopf schema plus its action and coaction over the
/// ambient algebra.
inline json braided_json(const BraidedHopfData& e) {
  json out = hopf_json(HopfData{e.field, e.space, e.mult, e.unit, e.comult,
                                e.counit, e.antipode});
  out["action"] = map_json(e.action);
  out["coaction"] = map_json(e.coaction);
  return out;
}

inline json yd_json(const YDData& m) {
  return json{{"space", space_json(m.space)},
              {"action", map_json(m.action)},
              {"coaction", map_json(m.coaction)}};
}

inline json group_json(const FiniteGroup& g) {
  return json{{"elements", g.elements}, {"table", g.table}};
}

/// Group cocycle as a dense value table in canonical element order.
inline json group_cocycle_json(const GroupCocycle& beta, const std::string& domain) {
  return json{{"domain", domain}, {"values", beta}};
}

inline json check_json(const CheckReport& rep) {
  json items = json::array();
  for (const auto& item : rep.items)
    items.push_back(json{{"name", item.name},
                         {"pass", item.pass},
                         {"witness", item.witness}});
  return json{{"ok", rep.ok()}, {"items", items}};
}

inline json cohomology_json(const std::vector<Element>& h0, std::size_t z1_count,
                            const H1Result& h1) {
  json classes = json::array();
  for (const auto& cls : h1.classes)
    classes.push_back(json{{"rep", element_json(cls.rep)},
                           {"orbit_size", cls.members.size()},
                           {"distinguished", cls.distinguished}});
  json fixed = json::array();
  for (const auto& e : h0) fixed.push_back(element_json(e));
  return json{{"h0", fixed}, {"z1_count", z1_count}, {"h1_classes", classes}};
}

inline json cohomology_json(const CohomologyResult& res) {
  return cohomology_json(res.h0, res.z1.size(), res.h1);
}

// ---------------------------------------------------------------- readers

namespace detail {

inline const json& member(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), errc::parse_error,
          std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline std::uint64_t as_unsigned(const json& v, const std::string& what) {
  require(v.is_number_integer(), errc::parse_error, what + " is not an integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  auto signed_value = v.get<std::int64_t>();
  require(signed_value >= 0, errc::parse_error, what + " is negative");
  return static_cast<std::uint64_t>(signed_value);
}

inline std::uint64_t unsigned_member(const json& j, const char* key) {
  return as_unsigned(member(j, key), std::string("key \"") + key + "\"");
}

inline std::vector<std::string> string_list(const json& j, const char* key) {
  const json& v = member(j, key);
  require(v.is_array(), errc::parse_error,
          std::string("key \"") + key + "\" is not a list");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& s : v) {
    require(s.is_string(), errc::parse_error,
            std::string("key \"") + key + "\" holds a non-string entry");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace detail

inline Fp field_from_json(const json& j) {
  return Fp(detail::unsigned_member(j, "p"));
}

inline BasedSpace space_from_json(const json& j) {
  auto dim = detail::unsigned_member(j, "dim");
  auto labels = detail::string_list(j, "basis_labels");
  require(labels.size() == dim, errc::parse_error,
          "basis_labels count does not match dim");
  const json& name = detail::member(j, "name");
  require(name.is_string(), errc::parse_error, "space name is not a string");
  return BasedSpace::make(name.get<std::string>(), dim, std::move(labels));
}

inline LinearMap map_from_json(const Fp& k, std::size_t dom_dim,
                               std::size_t cod_dim, const json& records) {
  require(records.is_array(), errc::parse_error, "map payload is not a list");
  LinearMap out(k, dom_dim, cod_dim);
  for (const auto& rec : records) {
    require(rec.is_array() && rec.size() == 3, errc::parse_error,
            "map record is not a [cod, dom, scalar] triple");
    auto cod = detail::as_unsigned(rec[0], "map record cod index");
    auto dom = detail::as_unsigned(rec[1], "map record dom index");
    auto value = detail::as_unsigned(rec[2], "map record scalar");
    require(cod < cod_dim && dom < dom_dim, errc::parse_error,
            "map record index out of range");
    require(value < k.p(), errc::parse_error,
            "map record scalar outside [0, p)");
    out.set(static_cast<std::uint32_t>(cod), static_cast<std::uint32_t>(dom),
            value);
  }
  return out;
}

inline HopfData hopf_from_json(const json& j) {
  Fp k = field_from_json(detail::member(j, "field"));
  BasedSpace space = space_from_json(detail::member(j, "space"));
  std::size_t n = space.dim;
  require(n >= 1, errc::parse_error, "space dimension must be positive");
  return HopfData{k,
                  space,
                  map_from_json(k, n * n, n, detail::member(j, "mult")),
                  map_from_json(k, 1, n, detail::member(j, "unit")),
                  map_from_json(k, n, n * n, detail::member(j, "comult")),
                  map_from_json(k, n, 1, detail::member(j, "counit")),
                  map_from_json(k, n, n, detail::member(j, "antipode"))};
}

inline FiniteGroup group_from_json(const json& j) {
  auto elements = detail::string_list(j, "elements");
  const json& table = detail::member(j, "table");
  require(table.is_array(), errc::parse_error, "group table is not a list");
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(table.size());
  for (const auto& row : table) {
    require(row.is_array(), errc::parse_error, "group table row is not a list");
    std::vector<std::uint32_t> r;
    r.reserve(row.size());
    for (const auto& cell : row) {
      auto v = detail::as_unsigned(cell, "group table entry");
      require(v < elements.size(), errc::parse_error,
              "group table index out of range");
      r.push_back(static_cast<std::uint32_t>(v));
    }
    rows.push_back(std::move(r));
  }
  return make_group(std::move(elements), std::move(rows));
}

// ---------------------------------------------------------------- files

/// Serialize with a fixed layout (2-space indent, trailing newline) so equal
/// values produce byte-identical files.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), errc::io_error, "cannot open for writing: " + path.string());
  out << dump(j);
  require(out.good(), errc::io_error, "write failed: " + path.string());
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), errc::io_error, "cannot open for reading: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  require(in.good() || in.eof(), errc::io_error, "read failed: " + path.string());
  try {
    return json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, path.string() + ": " + e.what());
  }
}

}  // namespace hopfcoh::io
