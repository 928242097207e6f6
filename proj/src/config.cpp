#include "conesing/config.hpp"

#include <fstream>
#include <sstream>

#include "conesing/error.hpp"

namespace conesing {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(Errc::Config, path + ": " + msg);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing required field");
  return *it;
}

std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Integer as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  if (v.is_number_unsigned()) return Integer(v.get<unsigned long>());
  return Integer(v.get<long>());
}

std::vector<Integer> as_int_vector(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of integers");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_integer(v[i], index(path, i)));
  return out;
}

std::vector<Integer> sized_int_vector(const json& v, const std::string& path, std::size_t rank) {
  auto out = as_int_vector(v, path);
  if (out.size() != rank) {
    fail(path, "expected " + std::to_string(rank) + " entries, got " + std::to_string(out.size()));
  }
  return out;
}

nlohmann::ordered_json to_int_json(const std::vector<Integer>& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

DivClass to_class(const std::vector<Integer>& v) { return DivClass(std::vector<Rat>(v.begin(), v.end())); }

}  // namespace

SurfaceConfig parse_config(const json& j) {
  if (!j.is_object()) fail("$", "config must be a JSON object");
  SurfaceConfig cfg;
  const json& name = field(j, "name", "");
  if (!name.is_string()) fail("name", "expected a string");
  cfg.name = name.get<std::string>();

  const json& lattice = field(j, "lattice", "");
  const json& rank_json = field(lattice, "rank", "lattice");
  const Integer rank_big = as_integer(rank_json, "lattice.rank");
  if (rank_big < 1 || rank_big > static_cast<long>(kMaxPicardRank)) {
    fail("lattice.rank", "must be between 1 and " + std::to_string(kMaxPicardRank));
  }
  const auto rank = static_cast<std::size_t>(rank_big.get_si());

  const json& basis = field(lattice, "basis", "lattice");
  if (!basis.is_array() || basis.size() != rank) {
    fail("lattice.basis", "expected an array of " + std::to_string(rank) + " names");
  }
  for (std::size_t i = 0; i < rank; ++i) {
    if (!basis[i].is_string()) fail(index("lattice.basis", i), "expected a string");
    cfg.basis.push_back(basis[i].get<std::string>());
  }

  const json& form = field(lattice, "form", "lattice");
  if (!form.is_array() || form.size() != rank) {
    fail("lattice.form", "expected a " + std::to_string(rank) + "x" + std::to_string(rank) + " integer matrix");
  }
  for (std::size_t i = 0; i < rank; ++i) cfg.form.push_back(sized_int_vector(form[i], index("lattice.form", i), rank));

  const json& cone = field(j, "cone", "");
  const json& type = field(cone, "type", "cone");
  if (!type.is_string()) fail("cone.type", "expected a string");
  cfg.cone_type = type.get<std::string>();
  if (cfg.cone_type == "quadratic") {
    cfg.ample = sized_int_vector(field(cone, "ample", "cone"), "cone.ample", rank);
  } else if (cfg.cone_type == "polyhedral") {
    const json& ineq = field(cone, "inequalities", "cone");
    if (!ineq.is_array() || ineq.empty()) fail("cone.inequalities", "expected a non-empty array of integer vectors");
    for (std::size_t i = 0; i < ineq.size(); ++i) {
      cfg.inequalities.push_back(sized_int_vector(ineq[i], index("cone.inequalities", i), rank));
    }
  } else {
    fail("cone.type", "must be \"quadratic\" or \"polyhedral\", got \"" + cfg.cone_type + "\"");
  }

  const json& canonical = field(j, "canonical_class", "");
  if (!canonical.is_array() || canonical.size() != rank) {
    fail("canonical_class", "expected an array of " + std::to_string(rank) + " rational strings");
  }
  for (std::size_t i = 0; i < rank; ++i) {
    const std::string p = index("canonical_class", i);
    if (!canonical[i].is_string()) fail(p, "expected a rational string such as \"3/4\"");
    try {
      cfg.canonical_class.push_back(Rat::parse(canonical[i].get<std::string>()));
    } catch (const Error& e) {
      fail(p, e.what());
    }
  }

  cfg.polarization = sized_int_vector(field(j, "polarization", ""), "polarization", rank);

  if (j.contains("cover")) {
    const json& cover = j.at("cover");
    CoverSpec spec;
    const Integer degree = as_integer(field(cover, "degree", "cover"), "cover.degree");
    if (degree != 2) fail("cover.degree", "only degree 2 covers are supported");
    spec.degree = 2;
    spec.branch = sized_int_vector(field(cover, "branch", "cover"), "cover.branch", rank);
    cfg.cover = std::move(spec);
  }
  return cfg;
}

SurfaceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Config, path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Errc::Config, path + ": invalid JSON: " + e.what());
  }
  return parse_config(j);
}

nlohmann::ordered_json to_json(const SurfaceConfig& cfg) {
  nlohmann::ordered_json j;
  j["name"] = cfg.name;
  j["lattice"]["rank"] = cfg.basis.size();
  j["lattice"]["basis"] = cfg.basis;
  j["lattice"]["form"] = nlohmann::ordered_json::array();
  for (const auto& row : cfg.form) j["lattice"]["form"].push_back(to_int_json(row));
  j["cone"]["type"] = cfg.cone_type;
  if (cfg.cone_type == "quadratic") {
    j["cone"]["ample"] = to_int_json(cfg.ample);
  } else {
    j["cone"]["inequalities"] = nlohmann::ordered_json::array();
    for (const auto& row : cfg.inequalities) j["cone"]["inequalities"].push_back(to_int_json(row));
  }
  j["canonical_class"] = nlohmann::ordered_json::array();
  for (const auto& k : cfg.canonical_class) j["canonical_class"].push_back(k.str());
  j["polarization"] = to_int_json(cfg.polarization);
  if (cfg.cover) {
    j["cover"]["degree"] = cfg.cover->degree;
    j["cover"]["branch"] = to_int_json(cfg.cover->branch);
  }
  return j;
}

SurfaceDatum build_surface(const SurfaceConfig& cfg) {
  NSLattice lattice;
  try {
    lattice = NSLattice(cfg.basis, IntMatrix(cfg.form));
  } catch (const Error& e) {
    fail("lattice.form", e.what());
  }
  ConeModel cone;
  if (cfg.cone_type == "quadratic") {
    cone = QuadraticCone{to_class(cfg.ample)};
  } else {
    cone = PolyhedralCone{cfg.inequalities};
  }
  SurfaceDatum base{cfg.name, lattice, cone, DivClass(cfg.canonical_class), to_class(cfg.polarization), 1};
  try {
    validate(base);
  } catch (const Error& e) {
    const char* where = e.code() == Errc::InvalidCone ? "cone" : "polarization";
    fail(where, e.what());
  }
  if (!cfg.cover) return base;
  try {
    return double_cover(base, to_class(cfg.cover->branch));
  } catch (const Error& e) {
    fail("cover.branch", e.what());
  }
}

ConeSingularity build_cone(const SurfaceConfig& cfg) { return make_cone(build_surface(cfg), cfg.name); }

}  // namespace conesing
