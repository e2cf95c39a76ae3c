// qchow: exact quantum Chow ring computations for weighted projective lines.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qchow/correlator.hpp"
#include "qchow/inertia.hpp"
#include "qchow/json_io.hpp"
#include "qchow/picard.hpp"
#include "qchow/quantum.hpp"

using namespace qchow;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const ordered_json& j) const { write(j.dump(2) + "\n"); }
  void emit_lines(const std::vector<ordered_json>& lines) const {
    std::string text;
    for (const auto& l : lines) text += l.dump() + "\n";
    write(text);
  }
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
  }
};

std::vector<long> parse_longs(const std::string& csv, const char* what) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (...) {
      throw CLI::ValidationError(std::string(what) + ": cannot parse '" + item + "'");
    }
    if (pos != item.size())
      throw CLI::ValidationError(std::string(what) + ": cannot parse '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(Rational::parse(item));
  }
  return out;
}

Weights weights_from(const std::string& csv, const std::string& bezout) {
  auto ab = parse_longs(csv, "--weights");
  if (ab.size() != 2) throw CLI::ValidationError("--weights expects a,b");
  if (bezout.empty()) return Weights::make(ab[0], ab[1]);
  auto mn = parse_longs(bezout, "--bezout");
  if (mn.size() != 2) throw CLI::ValidationError("--bezout expects m,n");
  return Weights::make_with_bezout(ab[0], ab[1], mn[0], mn[1]);
}

Sector parse_sector(const Weights& w, const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("sector syntax is type:label, e.g. point0:1");
  std::string type = text.substr(0, colon);
  long label = std::stol(text.substr(colon + 1));
  if (type == "one_dim") return make_sector(w, SectorType::OneDim, label);
  if (type == "point0") return make_sector(w, SectorType::Point0, label);
  if (type == "point_inf") return make_sector(w, SectorType::PointInf, label);
  throw CLI::ValidationError("unknown sector type '" + type + "'");
}

// Age rendered over a forced common denominator, e.g. 6/12 for P(4,6).
std::string styled(const Rational& r, long denom) {
  Rational scaled = r * Rational(denom);
  if (!scaled.is_integer()) return r.str();
  return scaled.num().get_str() + "/" + std::to_string(denom);
}

int run_census(const std::string& weights_csv, const std::string& wps_csv, bool denominator,
               const Output& out) {
  if (!wps_csv.empty()) {
    out.emit(wps_census_json(parse_longs(wps_csv, "--wps")));
    return kExitOk;
  }
  Weights w = weights_from(weights_csv, "");
  if (out.format == "table") {
    std::ostringstream t;
    t << "inertia of P(" << w.a << "," << w.b << ")  d=" << w.d << "  (m,n)=(" << w.m << ","
      << w.n << ")" << (w.degenerate() ? "  [degenerate]" : "") << "\n";
    for (const auto& c : census(w)) {
      t << "  " << c.sector.str() << "  dim=" << c.dimension << "  r=" << c.band_order
        << "  stab=" << c.stabilizer << "  age=";
      t << (denominator ? styled(c.age, w.e) : c.age.str()) << "\n";
    }
    out.write(t.str());
    return kExitOk;
  }
  out.emit(census_json(w));
  return kExitOk;
}

int run_ring(const std::string& mode, const Weights& w, unsigned truncate, std::uint64_t seed,
             const Output& out) {
  if (mode == "present") {
    ordered_json j = presentation_json(quantum_presentation(w));
    j["classical_relations"] = presentation_json(classical_presentation(w))["relations"];
    ordered_json basis = ordered_json::array();
    StructureConstants sc = structure_constants(w, truncate);
    for (size_t i = 0; i < sc.rank(); ++i) {
      auto [sector, kind] = monomial_sector(w, sc.basis[i]);
      basis.push_back(ordered_json{{"index", i},
                                   {"monomial", sc.basis[i].str()},
                                   {"sector", to_json(sector)},
                                   {"kind", kind == ClassKind::Point ? "point" : "fundamental"}});
    }
    j["basis"] = basis;
    if (out.format == "table") {
      std::ostringstream t;
      for (const auto& rel : j["relations"]) t << rel.get<std::string>() << "\n";
      out.write(t.str());
    } else {
      out.emit(j);
    }
    return kExitOk;
  }
  if (mode == "constants") {
    out.emit(structure_constants_json(structure_constants(w, truncate)));
    return kExitOk;
  }
  if (mode == "verify") {
    RingReport report = verify_ring(w, truncate, {}, seed);
    if (out.format == "table") {
      std::ostringstream t;
      for (const auto& c : report.checks)
        t << (c.passed ? "pass  " : "FAIL  ") << c.name
          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
      t << (report.ok ? "all checks passed" : "verification failed") << "\n";
      out.write(t.str());
    } else {
      out.emit(report_json(report));
    }
    return report.ok ? kExitOk : kExitVerification;
  }
  throw CLI::ValidationError("unknown ring mode");
}

int run_rr_chi(long genus, long rank, const std::string& degree, const std::string& ages,
               const std::string& orders, const Output& out) {
  Football c{genus, parse_longs(orders, "--orders")};
  SheafClass s{rank, Rational::parse(degree), parse_rationals(ages)};
  if (s.ages.size() < c.marking_orders.size())
    s.ages.resize(c.marking_orders.size(), Rational(0));
  Rational chi = euler_char(s, c);
  out.emit(ordered_json{{"genus", genus},
                        {"rank", rank},
                        {"degree", s.degree.str()},
                        {"chi", chi.str()}});
  return kExitOk;
}

int run_rr_h0(const Weights& w, long z0, long zinf, const Output& out) {
  PicClass p{z0, zinf, {}};
  PicClass canon = pic_canonical(p, w.a, w.b);
  out.emit(ordered_json{{"class", to_json(canon)},
                        {"degree", pic_degree(canon, w.a, w.b).str()},
                        {"h0", h0_genus0(canon, w.a, w.b)}});
  return kExitOk;
}

int run_rr_vdim(const Weights& w, long degree, const std::string& sectors_csv, const Output& out) {
  std::vector<Sector> sectors;
  std::stringstream ss(sectors_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) sectors.push_back(parse_sector(w, item));
  }
  std::vector<long> orders;
  for (const auto& s : sectors) {
    switch (s.type) {
      case SectorType::OneDim: orders.push_back(s.label == 0 ? 1 : w.d / std::gcd(s.label, w.d)); break;
      case SectorType::Point0: orders.push_back(w.a / std::gcd(s.label, w.a)); break;
      case SectorType::PointInf: orders.push_back(w.b / std::gcd(s.label, w.b)); break;
    }
  }
  MapSpec spec{w, Football{0, orders}, degree, sectors};
  out.emit(ordered_json{{"beta_multiple", degree},
                        {"markings", long(sectors.size())},
                        {"vdim", virtual_dim(spec).str()}});
  return kExitOk;
}

int run_maps_solve(const Weights& w, long degree, long third_order, const Output& out) {
  auto sols = solve_map_picard(w, degree, third_order);
  ordered_json arr = ordered_json::array();
  for (const auto& p : sols) {
    ordered_json j = to_json(p);
    j["degree"] = pic_degree(p, w.a, w.b).str();
    arr.push_back(j);
  }
  out.emit(arr);
  return kExitOk;
}

int run_correlator_reduce(const Weights& w, unsigned truncate, const std::string& equation,
                          const std::string& key_json, const Output& out) {
  RingContext ctx = RingContext::make(w, truncate);
  CorrelatorKey key = key_from_json(ordered_json::parse(key_json), w);
  ordered_json terms = ordered_json::array();
  if (equation == "string") {
    for (const auto& [c, k] : string_reduce(key))
      terms.push_back(ordered_json{{"coeff", c.str()}, {"key", to_json(k)}});
  } else if (equation == "dilaton") {
    auto [factor, reduced] = dilaton_reduce(key);
    terms.push_back(ordered_json{{"coeff", std::to_string(factor)}, {"key", to_json(reduced)}});
  } else if (equation == "divisor") {
    for (const auto& [c, k] : divisor_reduce(key, ctx.hyperplane(), ctx))
      terms.push_back(ordered_json{{"coeff", c.str()}, {"key", to_json(k)}});
  } else {
    throw CLI::ValidationError("--equation must be string, dilaton or divisor");
  }
  out.emit(ordered_json{{"equation", equation}, {"key", to_json(key)}, {"terms", terms}});
  return kExitOk;
}

int run_correlator_wdvv(const Weights& w, unsigned truncate, const std::string& four_csv,
                        const std::string& extras_csv, long beta, long max_beta,
                        const Output& out) {
  RingContext ctx = RingContext::make(w, truncate);
  const auto& basis = ctx.basis();
  auto pick = [&](long i) {
    if (i < 0 || size_t(i) >= basis.size())
      throw CLI::ValidationError("basis index out of range (see ring present)");
    return basis[size_t(i)];
  };
  auto four_idx = parse_longs(four_csv, "--four");
  if (four_idx.size() != 4) throw CLI::ValidationError("--four expects four basis indices");
  std::array<BasisClass, 4> four{pick(four_idx[0]), pick(four_idx[1]), pick(four_idx[2]),
                                 pick(four_idx[3])};
  std::vector<BasisClass> extras;
  for (long i : parse_longs(extras_csv, "--extras")) extras.push_back(pick(i));

  CorrelatorTable table = (w.a == 1 && w.b == 1) ? p1_reconstruct(std::max(max_beta, beta))
                                                 : seed_from_ring(ctx);
  WdvvResult r = wdvv_residual(table, four, extras, beta, ctx);
  if (!r.residual) {
    ordered_json missing = ordered_json::array();
    for (const auto& k : r.missing) missing.push_back(to_json(k));
    out.emit(ordered_json{{"residual", nullptr}, {"missing", missing}});
    return kExitVerification;
  }
  out.emit(ordered_json{{"residual", r.residual->str()}});
  return r.residual->is_zero() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact inertia, Riemann-Roch and quantum Chow ring computations for P(a,b)"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Output out;
  std::string weights_csv, bezout_csv, wps_csv;
  unsigned truncate = 6;
  std::uint64_t seed = 0x51c8005eedULL;
  bool denominator = false;

  app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out.path, "write output to a file instead of stdout");

  auto add_weights = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--weights", weights_csv, "weights a,b");
    if (required) opt->required();
    return opt;
  };

  // census
  auto* census_cmd = app.add_subcommand("census", "inertia components with ages");
  add_weights(census_cmd, false);
  census_cmd->add_option("--wps", wps_csv, "general weighted projective space weights");
  census_cmd->add_flag("--denominator", denominator, "render ages over lcm(a,b)");

  // ring
  auto* ring_cmd = app.add_subcommand("ring", "quantum Chow ring");
  std::string ring_mode;
  ring_cmd->add_option("mode", ring_mode, "present | constants | verify")
      ->required()
      ->check(CLI::IsMember({"present", "constants", "verify"}));
  add_weights(ring_cmd);
  ring_cmd->add_option("--truncate", truncate, "q-adic truncation (default 6)");
  ring_cmd->add_option("--bezout", bezout_csv, "override the Bezout pair m,n");
  ring_cmd->add_option("--seed", seed, "seed for the randomized confluence check");

  // rr
  auto* rr_cmd = app.add_subcommand("rr", "Riemann-Roch for twisted curves");
  std::string rr_mode;
  rr_cmd->add_option("mode", rr_mode, "chi | h0 | vdim")
      ->required()
      ->check(CLI::IsMember({"chi", "h0", "vdim"}));
  long genus = 0, rank = 1, z0 = 0, zinf = 0;
  std::string degree_str = "0", ages_csv, orders_csv, sectors_csv;
  rr_cmd->add_option("--weights", weights_csv, "weights a,b");
  rr_cmd->add_option("--genus", genus, "coarse genus");
  rr_cmd->add_option("--rank", rank, "sheaf rank");
  rr_cmd->add_option("--degree", degree_str, "sheaf degree (chi) or beta multiple (vdim)");
  rr_cmd->add_option("--ages", ages_csv, "marking ages p/q,...");
  rr_cmd->add_option("--orders", orders_csv, "marking orders r1,r2,...");
  rr_cmd->add_option("--z0", z0, "exponent of L_0");
  rr_cmd->add_option("--zinf", zinf, "exponent of L_inf");
  rr_cmd->add_option("--sectors", sectors_csv, "marking sectors type:label,...");

  // maps
  auto* maps_cmd = app.add_subcommand("maps", "twisted stable map solver");
  auto* solve_cmd = maps_cmd->add_subcommand("solve", "Picard classes of minimal maps");
  long solve_degree = 1, third_order = 1;
  solve_cmd->add_option("--weights", weights_csv, "weights a,b")->required();
  solve_cmd->add_option("--degree", solve_degree, "multiple of the minimal class")->required();
  solve_cmd->add_option("--third-order", third_order, "stack order of the third marking")
      ->required();

  // correlator
  auto* corr_cmd = app.add_subcommand("correlator", "genus-0 invariants");
  std::string corr_mode, equation, key_json, four_csv, extras_csv;
  long beta = 0, max_beta = 3, max_insertions = 6;
  corr_cmd->add_option("mode", corr_mode, "seed | reduce | wdvv | p1")
      ->required()
      ->check(CLI::IsMember({"seed", "reduce", "wdvv", "p1"}));
  corr_cmd->add_option("--weights", weights_csv, "weights a,b");
  corr_cmd->add_option("--truncate", truncate, "q-adic truncation / max beta for seeding");
  corr_cmd->add_option("--equation", equation, "string | dilaton | divisor");
  corr_cmd->add_option("--key", key_json, "correlator key as JSON");
  corr_cmd->add_option("--four", four_csv, "four basis indices for WDVV");
  corr_cmd->add_option("--extras", extras_csv, "extra insertion basis indices");
  corr_cmd->add_option("--beta", beta, "curve class multiple");
  corr_cmd->add_option("--max-beta", max_beta, "table depth for reconstruction");
  corr_cmd->add_option("--max-insertions", max_insertions, "table width for reconstruction");

  for (CLI::App* sub : {census_cmd, ring_cmd, rr_cmd, maps_cmd, solve_cmd, corr_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (census_cmd->parsed()) {
      if (weights_csv.empty() && wps_csv.empty())
        throw CLI::ValidationError("census needs --weights or --wps");
      return run_census(weights_csv, wps_csv, denominator, out);
    }
    if (ring_cmd->parsed())
      return run_ring(ring_mode, weights_from(weights_csv, bezout_csv), truncate, seed, out);
    if (rr_cmd->parsed()) {
      if (rr_mode == "chi") return run_rr_chi(genus, rank, degree_str, ages_csv, orders_csv, out);
      if (weights_csv.empty()) throw CLI::ValidationError("rr " + rr_mode + " needs --weights");
      Weights w = weights_from(weights_csv, "");
      if (rr_mode == "h0") return run_rr_h0(w, z0, zinf, out);
      return run_rr_vdim(w, std::stol(degree_str), sectors_csv, out);
    }
    if (solve_cmd->parsed())
      return run_maps_solve(weights_from(weights_csv, ""), solve_degree, third_order, out);
    if (corr_cmd->parsed()) {
      if (corr_mode == "p1") {
        out.emit_lines(table_json_lines(p1_reconstruct(max_beta, max_insertions)));
        return kExitOk;
      }
      if (weights_csv.empty()) throw CLI::ValidationError("correlator needs --weights");
      Weights w = weights_from(weights_csv, "");
      if (corr_mode == "seed") {
        out.emit_lines(table_json_lines(seed_from_ring(RingContext::make(w, truncate))));
        return kExitOk;
      }
      if (corr_mode == "reduce")
        return run_correlator_reduce(w, truncate, equation, key_json, out);
      return run_correlator_wdvv(w, truncate, four_csv, extras_csv, beta, max_beta, out);
    }
    throw CLI::ValidationError("no subcommand");
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitVerification;
  }
}
