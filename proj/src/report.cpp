#include "conesing/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "conesing/error.hpp"

namespace conesing {

namespace {

using ojson = nlohmann::ordered_json;

// Display width in code points; the exact forms contain multi-byte glyphs.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s) w += (ch & 0xC0) != 0x80 ? 1 : 0;
  return w;
}

std::string pad(const std::string& s, std::size_t w) {
  const std::size_t have = width(s);
  return have >= w ? s : s + std::string(w - have, ' ');
}

std::string table(const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows) {
    if (widths.size() < r.size()) widths.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], width(r[c]));
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += c + 1 == r.size() ? r[c] : pad(r[c], widths[c]) + "  ";
    }
    out += line + "\n";
  }
  return out;
}

ojson number_json(const QuadNum& q) {
  ojson j;
  j["exact"] = to_json(q);
  j["approx"] = q.decimal();
  return j;
}

std::string field_name(const Integer& d) { return d == 0 ? "Q" : "Q(√" + d.get_str() + ")"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

ojson to_json(const ThresholdResult& r) {
  ojson j;
  j["t"] = to_json(r.t);
  j["t_approx"] = r.t.decimal();
  j["attained"] = r.attained;
  j["active_constraint"] = r.active_label();
  j["discriminant"] = r.discriminant.get_si();
  return j;
}

ojson to_json(const SingularityReport& r) {
  ojson j;
  j["label"] = r.label;
  j["t_minus"] = to_json(r.t_minus);
  j["t_plus"] = to_json(r.t_plus);
  j["val_minus"] = number_json(r.val_minus);
  j["val_plus"] = number_json(r.val_plus);
  j["val_minus_rational"] = r.val_minus_rational;
  j["is_klt"] = r.classification.is_klt;
  j["is_canonical"] = r.classification.is_canonical;
  j["is_terminal"] = r.classification.is_terminal;
  j["jumping_irrational"] = r.jumping.irrational;
  j["jumping_numbers"] = ojson::array();
  for (const auto& x : r.jumping.values) j["jumping_numbers"].push_back(number_json(x));
  j["limiting_table"] = ojson::array();
  for (const auto& row : r.limiting_table) {
    ojson e;
    e["m"] = row.m;
    e["t_m"] = row.t_m.str();
    e["val_m"] = row.val_m.str();
    e["val_m_approx"] = QuadNum(row.val_m).decimal();
    j["limiting_table"].push_back(e);
  }
  return j;
}

std::string render_text(const SingularityReport& r) {
  std::string out = "cone singularity over " + r.label + "\n";
  out += table(
      {
          {"t-  (inf s: sL - K eff)", r.t_minus.t.display(), "active " + r.t_minus.active_label(),
           field_name(r.t_minus.discriminant)},
          {"t+  (inf r: rL + K eff)", r.t_plus.t.display(), "active " + r.t_plus.active_label(),
           field_name(r.t_plus.discriminant)},
          {"val(K-) = -(1 + t-)", r.val_minus.display(), r.val_minus_rational ? "rational" : "irrational"},
          {"val(K)  = t+ - 1", r.val_plus.display(), r.val_plus.is_rational() ? "rational" : "irrational"},
          {"klt", yes_no(r.classification.is_klt)},
          {"canonical", yes_no(r.classification.is_canonical)},
          {"terminal", yes_no(r.classification.is_terminal)},
      },
      "  ");
  out += "jumping numbers (first " + std::to_string(r.jumping.values.size()) + ", " +
         (r.jumping.irrational ? "irrational" : "rational") + ")\n";
  std::vector<std::vector<std::string>> jumps;
  for (std::size_t i = 0; i < r.jumping.values.size(); ++i) {
    jumps.push_back({std::to_string(i + 1), r.jumping.values[i].display()});
  }
  out += table(jumps, "  ");
  out += "limiting valuations\n";
  std::vector<std::vector<std::string>> lim{{"m", "t_m", "val_m"}};
  for (const auto& row : r.limiting_table) {
    lim.push_back({std::to_string(row.m), row.t_m.str(), QuadNum(row.val_m).display()});
  }
  out += table(lim, "  ");
  return out;
}

ojson jumping_json(const std::string& label, const JumpingNumbers& jumps) {
  ojson j;
  j["label"] = label;
  j["irrational"] = jumps.irrational;
  j["jumping_numbers"] = ojson::array();
  for (const auto& x : jumps.values) j["jumping_numbers"].push_back(number_json(x));
  return j;
}

std::string jumping_text(const std::string& label, const JumpingNumbers& jumps) {
  std::string out = "jumping numbers of the vertex of the cone over " + label + " (" +
                    (jumps.irrational ? "irrational" : "rational") + ")\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < jumps.values.size(); ++i) {
    rows.push_back({std::to_string(i + 1), jumps.values[i].exact_str(), jumps.values[i].decimal(),
                    jumps.values[i].is_rational() ? "rational" : "irrational"});
  }
  return out + table(rows, "  ");
}

std::vector<LimitRow> limit_table(const QuadNum& t_minus, long max_m) {
  if (max_m < 1) throw Error(Errc::InvalidArgument, "max-m must be >= 1");
  std::vector<LimitRow> rows;
  for (long m = 1; m <= max_m; ++m) {
    LimitRow row{limiting_valuation(t_minus, m), QuadNum()};
    row.gap = QuadNum(row.v.t_m) - t_minus;
    if (row.gap.sign() < 0 || (row.gap - QuadNum(Rat(1, m))).sign() >= 0) {
      throw Error(Errc::Internal, "limiting gap outside [0, 1/m) at m = " + std::to_string(m));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson limit_json(const std::string& label, const QuadNum& t_minus, const std::vector<LimitRow>& rows) {
  ojson j;
  j["label"] = label;
  j["t_minus"] = number_json(t_minus);
  j["rows"] = ojson::array();
  for (const auto& row : rows) {
    ojson e;
    e["m"] = row.v.m;
    e["t_m"] = row.v.t_m.str();
    e["val_m"] = row.v.val_m.str();
    e["gap"] = number_json(row.gap);
    j["rows"].push_back(e);
  }
  return j;
}

std::string limit_text(const std::string& label, const QuadNum& t_minus, const std::vector<LimitRow>& rows) {
  std::string out = "limiting valuations for the cone over " + label + ", t- = " + t_minus.display() + "\n";
  std::vector<std::vector<std::string>> t{{"m", "t_m", "val_m", "gap t_m - t-"}};
  for (const auto& row : rows) {
    t.push_back({std::to_string(row.v.m), row.v.t_m.str(), row.v.val_m.str(), row.gap.display()});
  }
  return out + table(t, "  ");
}

std::vector<PlotRow> plot_data(const ConeSingularity& c, std::size_t i, std::size_t j, std::size_t samples) {
  const auto& surf = c.surf;
  const std::size_t rho = surf.lattice.rank();
  if (samples < 1) throw Error(Errc::InvalidArgument, "samples must be >= 1");
  if (i >= rho || j >= rho || i == j) {
    throw Error(Errc::InvalidArgument, "plane must name two distinct basis indices below " + std::to_string(rho));
  }
  std::vector<PlotRow> rows;

  // Pencil sL - K on a rational grid spanning the threshold.
  const auto problem = make_problem(surf, surf.polarization, -surf.canonical_class);
  const Integer base = solve(problem).t.floor();
  const Rat lo(Integer(base - 1));
  const Rat step = Rat(3) / Rat(static_cast<long>(samples));
  for (std::size_t k = 0; k <= samples; ++k) {
    const Rat s = lo + step * Rat(static_cast<long>(k));
    const DivClass point = s * surf.polarization - surf.canonical_class;
    rows.push_back({s, point[i].to_double(), point[j].to_double(), feasible_at(problem, QuadNum(s))});
  }

  // Boundary of the slice {a : a_k = L_k, k not in {i, j}} by ray shooting from L.
  std::vector<double> form(rho * rho);
  for (std::size_t a = 0; a < rho; ++a) {
    for (std::size_t b = 0; b < rho; ++b) form[a * rho + b] = surf.lattice.form()(a, b).get_d();
  }
  std::vector<double> ell(rho);
  for (std::size_t a = 0; a < rho; ++a) ell[a] = surf.polarization[a].to_double();
  auto q = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double acc = 0.0;
    for (std::size_t a = 0; a < rho; ++a) {
      for (std::size_t b = 0; b < rho; ++b) acc += x[a] * form[a * rho + b] * y[b];
    }
    return acc;
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    std::vector<double> u(rho, 0.0);
    u[i] = std::cos(theta);
    u[j] = std::sin(theta);
    double reach = -1.0;
    if (std::holds_alternative<QuadraticCone>(surf.cone)) {
      // q(L + r u) = qa r^2 + qb r + qc, qc > 0: first positive root.
      const double qa = q(u, u), qb = 2.0 * q(ell, u), qc = q(ell, ell);
      const double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        const double h = -0.5 * (qb + std::copysign(root, qb));
        for (double r : {h != 0.0 ? qc / h : -1.0, qa != 0.0 ? h / qa : -1.0}) {
          if (r > 0.0 && (reach < 0.0 || r < reach)) reach = r;
        }
      }
    } else {
      for (const auto& l : std::get<PolyhedralCone>(surf.cone).inequalities) {
        double at_l = 0.0, at_u = 0.0;
        for (std::size_t a = 0; a < rho; ++a) {
          at_l += l[a].get_d() * ell[a];
          at_u += l[a].get_d() * u[a];
        }
        if (at_u < -1e-15) {
          const double r = at_l / -at_u;
          if (reach < 0.0 || r < reach) reach = r;
        }
      }
    }
    if (reach <= 0.0) continue;
    rows.push_back({std::nullopt, ell[i] + reach * u[i], ell[j] + reach * u[j], true});
  }
  return rows;
}

std::string plot_csv(const std::vector<PlotRow>& rows) {
  std::string out = "s,x,y,feasible\n";
  for (const auto& r : rows) {
    out += (r.s ? fmt_double(r.s->to_double()) : std::string()) + "," + fmt_double(r.x) + "," + fmt_double(r.y) +
           "," + (r.feasible ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace conesing
