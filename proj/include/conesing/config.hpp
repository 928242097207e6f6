#pragma once

// JSON surface description:
//
// {
//   "name": "...",
//   "lattice": {"rank": 3, "basis": ["f1", ...], "form": [[0,1,1], ...]},
//   "cone": {"type": "quadratic", "ample": [1,1,1]}
//         | {"type": "polyhedral", "inequalities": [[1,0], [0,1]]},
//   "canonical_class": ["0", "-2", "3/4"],
//   "polarization": [3, 6, 6],
//   "cover": {"degree": 2, "branch": [6, 6, 0]}          (optional)
// }
//
// Rationals are strings; everything else is integral.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "conesing/exactnum.hpp"
#include "conesing/singularity.hpp"
#include "conesing/surface.hpp"

namespace conesing {

struct CoverSpec {
  int degree = 2;
  std::vector<Integer> branch;
};

struct SurfaceConfig {
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<Integer>> form;
  std::string cone_type;  // "quadratic" | "polyhedral"
  std::vector<Integer> ample;
  std::vector<std::vector<Integer>> inequalities;
  std::vector<Rat> canonical_class;
  std::vector<Integer> polarization;
  std::optional<CoverSpec> cover;
};

/// Schema check; throws Errc::Config with a field path ("lattice.form[1][2]: ...").
SurfaceConfig parse_config(const nlohmann::json& j);
SurfaceConfig load_config(const std::string& path);

nlohmann::ordered_json to_json(const SurfaceConfig& cfg);

/// Builds the datum, applying the cover. Model-level violations are rethrown
/// as Errc::Config prefixed with the offending field.
SurfaceDatum build_surface(const SurfaceConfig& cfg);
ConeSingularity build_cone(const SurfaceConfig& cfg);

}  // namespace conesing
