#include "conesing/presets.hpp"

#include "conesing/error.hpp"

namespace conesing {

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

PresetId PresetId::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  PresetId id;
  if (head == "abelian-cover") {
    if (!args.empty()) throw Error(Errc::InvalidArgument, "abelian-cover takes no parameters");
    id.kind = PresetKind::AbelianCover;
  } else if (head == "p1xE") {
    id.kind = PresetKind::P1xE;
    if (!args.empty()) {
      const Rat d = Rat::parse(args);
      if (!d.is_integer() || d.sign() <= 0 || !d.num().fits_slong_p()) {
        throw Error(Errc::InvalidArgument, "p1xE degree must be a positive integer");
      }
      id.degree = d.num().get_si();
    }
  } else if (head == "quadrant-synthetic") {
    id.kind = PresetKind::QuadrantSynthetic;
    if (!args.empty()) {
      const auto comma = args.find(',');
      if (comma == std::string_view::npos || args.find(',', comma + 1) != std::string_view::npos) {
        throw Error(Errc::InvalidArgument, "quadrant-synthetic expects two coordinates k1,k2");
      }
      id.k_coords = {Rat::parse(args.substr(0, comma)), Rat::parse(args.substr(comma + 1))};
    }
  } else {
    throw Error(Errc::InvalidArgument, "unknown preset '" + std::string(text) +
                                           "' (expected abelian-cover, p1xE[:d], quadrant-synthetic[:k1,k2])");
  }
  return id;
}

std::string PresetId::str() const {
  switch (kind) {
    case PresetKind::AbelianCover: return "abelian-cover";
    case PresetKind::P1xE: return "p1xE:" + std::to_string(degree);
    case PresetKind::QuadrantSynthetic: return "quadrant-synthetic:" + k_coords[0].str() + "," + k_coords[1].str();
  }
  return "unknown";
}

SurfaceConfig preset_config(const PresetId& id) {
  SurfaceConfig cfg;
  cfg.name = id.str();
  switch (id.kind) {
    case PresetKind::AbelianCover:
      // E x E with f1, f2, delta; nef = effective is the positive cone.
      cfg.basis = {"f1", "f2", "delta"};
      cfg.form = {ints({0, 1, 1}), ints({1, 0, 1}), ints({1, 1, 0})};
      cfg.cone_type = "quadratic";
      cfg.ample = ints({1, 1, 1});
      cfg.canonical_class = {Rat(0), Rat(0), Rat(0)};
      cfg.polarization = ints({3, 6, 6});
      cfg.cover = CoverSpec{2, ints({6, 6, 0})};
      break;
    case PresetKind::P1xE:
      // Coordinates (P1 degree, E degree scaled by deg A); K = O(-2) x O.
      cfg.basis = {"P1-degree", "E-degree"};
      cfg.form = {ints({0, 1}), ints({1, 0})};
      cfg.cone_type = "polyhedral";
      cfg.inequalities = {ints({1, 0}), ints({0, 1})};
      cfg.canonical_class = {Rat(-2), Rat(0)};
      cfg.polarization = ints({2, 2 * id.degree});
      break;
    case PresetKind::QuadrantSynthetic:
      cfg.basis = {"e1", "e2"};
      cfg.form = {ints({0, 1}), ints({1, 0})};
      cfg.cone_type = "polyhedral";
      cfg.inequalities = {ints({1, 0}), ints({0, 1})};
      cfg.canonical_class = id.k_coords;
      cfg.polarization = ints({1, 1});
      break;
  }
  return cfg;
}

ConeSingularity build(const PresetId& id) { return build_cone(preset_config(id)); }

}  // namespace conesing
