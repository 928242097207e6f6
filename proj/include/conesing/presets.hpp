#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conesing/config.hpp"
#include "conesing/singularity.hpp"

namespace conesing {

enum class PresetKind { AbelianCover, P1xE, QuadrantSynthetic };

struct PresetId {
  PresetKind kind = PresetKind::AbelianCover;
  long degree = 1;                // P1xE: degree of the ample bundle on E
  std::vector<Rat> k_coords = {Rat(-1), Rat(-1)};  // QuadrantSynthetic: K

  /// "abelian-cover", "p1xE[:d]", "quadrant-synthetic[:k1,k2]".
  static PresetId parse(std::string_view text);
  std::string str() const;
};

/// The config equivalent of a preset; build() goes through it so presets
/// and config files share one ingestion path.
SurfaceConfig preset_config(const PresetId& id);

ConeSingularity build(const PresetId& id);

}  // namespace conesing
