#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "conesing/singularity.hpp"

namespace conesing {

nlohmann::ordered_json to_json(const ThresholdResult& r);
nlohmann::ordered_json to_json(const SingularityReport& r);
std::string render_text(const SingularityReport& r);

nlohmann::ordered_json jumping_json(const std::string& label, const JumpingNumbers& jumps);
std::string jumping_text(const std::string& label, const JumpingNumbers& jumps);

struct LimitRow {
  LimitingValuation v;
  QuadNum gap;  // t_m - t-
};

std::vector<LimitRow> limit_table(const QuadNum& t_minus, long max_m);
nlohmann::ordered_json limit_json(const std::string& label, const QuadNum& t_minus, const std::vector<LimitRow>& rows);
std::string limit_text(const std::string& label, const QuadNum& t_minus, const std::vector<LimitRow>& rows);

/// Plot rows: the K- pencil sL - K sampled on rational s (s set), and
/// boundary points of the cone slice through L spanned by two basis
/// directions (s unset, feasible = true).
struct PlotRow {
  std::optional<Rat> s;
  double x = 0.0;
  double y = 0.0;
  bool feasible = false;
};

std::vector<PlotRow> plot_data(const ConeSingularity& c, std::size_t i, std::size_t j, std::size_t samples);
std::string plot_csv(const std::vector<PlotRow>& rows);

}  // namespace conesing
