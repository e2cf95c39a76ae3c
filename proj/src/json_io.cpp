#include "qchow/json_io.hpp"

#include <map>
#include <stdexcept>

namespace qchow {

namespace {

const char* sector_type_name(SectorType t) {
  switch (t) {
    case SectorType::OneDim: return "one_dim";
    case SectorType::Point0: return "point0";
    case SectorType::PointInf: return "point_inf";
  }
  return "?";
}

SectorType sector_type_from(const std::string& name) {
  if (name == "one_dim") return SectorType::OneDim;
  if (name == "point0") return SectorType::Point0;
  if (name == "point_inf") return SectorType::PointInf;
  throw std::invalid_argument("unknown sector type '" + name + "'");
}

}  // namespace

ordered_json to_json(const Sector& s) {
  return ordered_json{{"type", sector_type_name(s.type)}, {"label", s.label}};
}

Sector sector_from_json(const ordered_json& j, const Weights& w) {
  return make_sector(w, sector_type_from(j.at("type").get<std::string>()),
                     j.at("label").get<long>());
}

ordered_json to_json(const InertiaComponent& c) {
  return ordered_json{{"sector", to_json(c.sector)},
                      {"dim", c.dimension},
                      {"r", c.band_order},
                      {"stabilizer", c.stabilizer},
                      {"age", c.age.str()}};
}

ordered_json census_json(const Weights& w) {
  ordered_json out;
  out["weights"] = ordered_json{{"a", w.a}, {"b", w.b}, {"d", w.d}, {"m", w.m}, {"n", w.n}};
  out["degenerate"] = w.degenerate();
  ordered_json comps = ordered_json::array();
  for (const auto& c : census(w)) comps.push_back(to_json(c));
  out["components"] = comps;
  return out;
}

ordered_json wps_census_json(const std::vector<long>& weights) {
  ordered_json out;
  out["weights"] = weights;
  ordered_json secs = ordered_json::array();
  for (const auto& s : wps_census(weights)) {
    secs.push_back(ordered_json{{"twist", s.twist.str()},
                                {"fixed", s.fixed},
                                {"dim", s.fixed.empty() ? 0 : long(s.fixed.size()) - 1},
                                {"age", s.age.str()}});
  }
  out["sectors"] = secs;
  return out;
}

ordered_json to_json(const BasisClass& c) {
  return ordered_json{{"sector", to_json(c.sector)},
                      {"kind", c.kind == ClassKind::Point ? "point" : "fundamental"},
                      {"degree", c.degree.str()}};
}

ordered_json stringy_basis_json(const Weights& w) {
  ordered_json out = ordered_json::array();
  for (const auto& c : stringy_basis(w)) out.push_back(to_json(c));
  return out;
}

ordered_json to_json(const PicClass& p) {
  ordered_json torsion = ordered_json::array();
  for (const auto& [order, z] : p.torsion) torsion.push_back(z);
  ordered_json orders = ordered_json::array();
  for (const auto& [order, z] : p.torsion) orders.push_back(order);
  ordered_json j{{"z0", p.z0}, {"zinf", p.zinf}, {"torsion", torsion}};
  if (!p.torsion.empty()) j["torsion_orders"] = orders;
  return j;
}

PicClass pic_from_json(const ordered_json& j) {
  PicClass p;
  p.z0 = j.at("z0").get<long>();
  p.zinf = j.at("zinf").get<long>();
  if (j.contains("torsion")) {
    auto exps = j.at("torsion");
    auto orders = j.value("torsion_orders", ordered_json::array());
    for (size_t i = 0; i < exps.size(); ++i) {
      long order = i < orders.size() ? orders[i].get<long>() : 1;
      p.torsion.emplace_back(order, exps[i].get<long>());
    }
  }
  return p;
}

ordered_json presentation_json(const RingPresentation& pres) {
  ordered_json rels = ordered_json::array();
  for (const auto& r : pres.relations) rels.push_back(r.str());
  return ordered_json{
      {"weights", ordered_json{{"a", pres.weights.a}, {"b", pres.weights.b}}},
      {"quantum", pres.quantum},
      {"relations", rels},
      {"grading",
       ordered_json{{"zeta", pres.grading.zeta.str()},
                    {"x", pres.grading.x.str()},
                    {"y", pres.grading.y.str()},
                    {"q", pres.grading.q.str()}}}};
}

ordered_json structure_constants_json(const StructureConstants& sc) {
  ordered_json basis = ordered_json::array();
  for (const auto& m : sc.basis) basis.push_back(m.str());
  ordered_json entries = ordered_json::array();
  for (size_t i = 0; i < sc.rank(); ++i) {
    for (size_t j = i; j < sc.rank(); ++j) {
      // collect the series per target basis monomial
      std::map<size_t, ordered_json> series;
      for (const auto& [m, c] : sc.products[i][j].terms()) {
        Monomial base = m;
        base.q = 0;
        auto k = sc.index_of(base);
        if (!k) continue;
        series[*k].push_back(ordered_json{{"qpow", m.q}, {"coeff", c.str()}});
      }
      for (auto& [k, ser] : series)
        entries.push_back(ordered_json{{"i", i}, {"j", j}, {"k", k}, {"series", ser}});
    }
  }
  return ordered_json{{"truncation", sc.truncation}, {"basis", basis}, {"entries", entries}};
}

ordered_json report_json(const RingReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return ordered_json{{"ok", report.ok}, {"rank", report.rank}, {"checks", checks}};
}

ordered_json to_json(const CorrelatorKey& key) {
  ordered_json ins = ordered_json::array();
  for (const auto& i : key.insertions) {
    ins.push_back(ordered_json{{"sector", to_json(i.cls.sector)},
                               {"kind", i.cls.kind == ClassKind::Point ? "point" : "fundamental"},
                               {"tau", i.tau}});
  }
  return ordered_json{{"beta", key.beta}, {"insertions", ins}};
}

CorrelatorKey key_from_json(const ordered_json& j, const Weights& w) {
  std::vector<Insertion> ins;
  for (const auto& e : j.at("insertions")) {
    Sector s = sector_from_json(e.at("sector"), w);
    ClassKind kind = e.value("kind", std::string("fundamental")) == "point"
                         ? ClassKind::Point
                         : ClassKind::Fundamental;
    if (kind == ClassKind::Point && s.type != SectorType::OneDim)
      throw std::invalid_argument("key_from_json: point classes live on one-dimensional sectors");
    Rational degree = kind == ClassKind::Point ? Rational(1) : age(w, s);
    ins.push_back(Insertion{BasisClass{s, kind, degree}, e.value("tau", 0u)});
  }
  return CorrelatorKey::make(j.at("beta").get<long>(), std::move(ins));
}

std::vector<ordered_json> table_json_lines(const CorrelatorTable& table) {
  std::vector<ordered_json> lines;
  for (const auto& [key, entry] : table.entries()) {
    ordered_json j = to_json(key);
    j["value"] = entry.value.str();
    switch (entry.provenance) {
      case Provenance::Seeded: j["provenance"] = "seeded"; break;
      case Provenance::Recursion: j["provenance"] = "recursion"; break;
      case Provenance::User: j["provenance"] = "user"; break;
    }
    lines.push_back(std::move(j));
  }
  return lines;
}

}  // namespace qchow
