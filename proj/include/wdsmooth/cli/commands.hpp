#pragma once

// Command implementations behind the wdsmooth executable. Each command maps a
// RunConfig to a JSON report; run_cli handles parsing, config files, output
// and exit codes.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wdsmooth/arith.hpp"
#include "wdsmooth/certificate.hpp"
#include "wdsmooth/classifier.hpp"
#include "wdsmooth/orbits.hpp"
#include "wdsmooth/rootsys.hpp"
#include "wdsmooth/tables.hpp"
#include "wdsmooth/variety.hpp"

namespace wdsmooth::cli {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPropertyFailed = 2;

struct RunConfig {
  std::string command;     // e.g. "classify", "arith order", "verify bundle"
  std::string group;
  std::string orbit;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> l;
  std::optional<int> alpha;
  std::optional<int> samples;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

struct Report {
  json body;
  bool property_failed = false;
};

// ---------------------------------------------------------------------------
// helpers

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw ValidationError(std::string("missing required flag --") + flag);
  return *v;
}

inline const std::string& require(const std::string& v, const char* flag) {
  if (v.empty()) throw ValidationError(std::string("missing required flag --") + flag);
  return v;
}

inline json inputs_of(const RunConfig& c) {
  json j;
  if (!c.group.empty()) j["group"] = c.group;
  if (!c.orbit.empty()) j["orbit"] = c.orbit;
  if (c.p) j["p"] = *c.p;
  if (c.s) j["s"] = *c.s;
  if (c.q) j["q"] = *c.q;
  if (c.l) j["l"] = *c.l;
  if (c.alpha) j["alpha"] = *c.alpha;
  if (c.samples) j["samples"] = *c.samples;
  j["seed"] = c.seed;
  return j;
}

inline json to_json(const IntVec& v) { return json(v); }

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class K, class V>
json to_json(const std::map<K, V>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) {
    std::ostringstream key;
    key << k;
    j[key.str()] = v;
  }
  return j;
}

inline json diagram_json(const RootSystem& rs, const IntVec& labels) {
  json j;
  j["labels"] = labels;
  if (rs.type().family == Family::D) {
    j["chain"] = IntVec(labels.begin(), labels.end() - 1);
    j["fork"] = labels.back();
  }
  return j;
}

inline json grading_json(const GradingDims& g) {
  json j = json::object();
  for (auto [i, d] : g.dims) j[std::to_string(i)] = d;
  return j;
}

inline std::shared_ptr<const GroupSpec> make_spec(const RunConfig& c) {
  const std::uint64_t p = require(c.p, "p");
  if (p > (1u << 30)) throw ValidationError("p too large");
  Fp F(static_cast<std::uint32_t>(p));
  return std::make_shared<const GroupSpec>(GroupSpec::parse(F, require(c.group, "group")));
}

inline Report make_report(const RunConfig& c) {
  Report r;
  r.body["schema_version"] = kSchemaVersion;
  r.body["command"] = c.command;
  r.body["inputs"] = inputs_of(c);
  r.body["results"] = json::object();
  r.body["provenance"] = json::array();
  return r;
}

inline void add_provenance(Report& r, const std::string& what, const std::string& source) {
  if (source.empty()) return;
  json entry{{"data", what}, {"source", source}};
  for (const auto& e : r.body["provenance"]) {
    if (e == entry) return;
  }
  r.body["provenance"].push_back(std::move(entry));
}

inline std::string orbit_provenance(const DynkinType& t, const OrbitLabel& o) {
  if (o.is_partition() || is_zero_orbit(o)) return "";
  for (const auto& e : distinguished_table(t)) {
    if (!e.orbit.is_partition() && e.orbit.name() == o.name()) return e.provenance;
  }
  return "";
}

// ---------------------------------------------------------------------------
// classify

inline json verdict_json(const SmoothnessVerdict& v) {
  json j;
  j["group"] = v.group;
  j["orbit"] = v.orbit.to_string();
  j["status"] = to_string(v.status);
  json reasons = json::array();
  for (Reason r : v.reasons) reasons.push_back(to_string(r));
  j["reasons"] = reasons;
  j["component_count"] = v.component_count ? json(*v.component_count) : json(nullptr);
  j["sharpened_order_bound"] = v.sharpened_order_bound ? json(*v.sharpened_order_bound) : json(nullptr);
  j["failing_power"] = v.failing_power ? json(*v.failing_power) : json(nullptr);
  j["coxeter_number"] = v.coxeter_number;
  j["considerate_checked"] = v.considerate_checked;
  return j;
}

inline Report cmd_classify(const RunConfig& c) {
  Report r = make_report(c);
  const auto groups = split(require(c.group, "group"), 'x');
  const auto orbits = split(require(c.orbit, "orbit"), ';');
  if (groups.size() != orbits.size()) {
    throw ValidationError("--group has " + std::to_string(groups.size()) + " factors but --orbit has " +
                          std::to_string(orbits.size()));
  }
  QContext ctx(require(c.q, "q"), c.l.value_or(0));
  std::vector<std::pair<RootSystem, OrbitLabel>> comps;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    DynkinType t = parse_group(groups[i]);
    RootSystem rs = build_root_system(t);
    OrbitLabel o = parse_orbit(t, orbits[i]);
    add_provenance(r, to_string(t) + " " + o.to_string(), orbit_provenance(t, o));
    comps.emplace_back(std::move(rs), std::move(o));
  }
  json& res = r.body["results"];
  if (comps.size() == 1) {
    res = verdict_json(classify_component(comps[0].first, comps[0].second, ctx));
  } else {
    ProductVerdict pv = classify_product(comps, ctx);
    res["status"] = to_string(pv.status);
    res["factors"] = json::array();
    for (const auto& f : pv.factors) res["factors"].push_back(verdict_json(f));
  }
  return r;
}

// ---------------------------------------------------------------------------
// orbits, wdd

inline Report cmd_orbits(const RunConfig& c) {
  Report r = make_report(c);
  DynkinType t = parse_group(require(c.group, "group"));
  RootSystem rs = build_root_system(t);
  json rows = json::array();
  for (const auto& o : classical_orbits(rs)) {
    json row;
    row["orbit"] = o.to_string();
    row["distinguished"] = is_distinguished(rs, o);
    row["very_even"] = o.very_even();
    row["diagram"] = weighted_dynkin(rs, o).labels;
    rows.push_back(std::move(row));
  }
  r.body["results"]["group"] = to_string(t);
  r.body["results"]["count"] = rows.size();
  r.body["results"]["rows"] = std::move(rows);
  return r;
}

inline Report cmd_wdd(const RunConfig& c) {
  Report r = make_report(c);
  DynkinType t = parse_group(require(c.group, "group"));
  RootSystem rs = build_root_system(t);
  json& res = r.body["results"];
  res["group"] = to_string(t);
  res["numbering"] = "bourbaki";
  if (!c.orbit.empty()) {
    OrbitLabel o = parse_orbit(t, c.orbit);
    validate_orbit(rs, o);
    WeightedDynkinDiagram w = weighted_dynkin(rs, o);
    GradingDims g = grading_dims(rs, w);
    res["orbit"] = o.to_string();
    res["diagram"] = diagram_json(rs, w.labels);
    res["distinguished"] = is_distinguished(rs, o);
    res["dimension_criterion"] = check_distinguished_criterion(rs, w);
    res["grading"] = grading_json(g);
    if (is_distinguished(rs, o)) res["smooth_bound_r"] = smooth_bound_r(g);
    add_provenance(r, to_string(t) + " " + o.to_string(), orbit_provenance(t, o));
    return r;
  }
  json rows = json::array();
  for (const auto& e : distinguished_table(t)) {
    json row;
    row["orbit"] = e.orbit.to_string();
    row["diagram"] = diagram_json(rs, e.diagram.labels);
    row["smooth_bound_r"] = smooth_bound_r(grading_dims(rs, e.diagram));
    row["provenance"] = e.provenance.empty() ? json("computed") : json(e.provenance);
    add_provenance(r, to_string(t) + " " + e.orbit.to_string(), e.provenance);
    rows.push_back(std::move(row));
  }
  res["count"] = rows.size();
  res["rows"] = std::move(rows);
  return r;
}

// ---------------------------------------------------------------------------
// arith

inline Report cmd_arith(const RunConfig& c, const std::string& op) {
  Report r = make_report(c);
  json& res = r.body["results"];
  if (op == "considerate") {
    RootSystem rs = build_root_system(parse_group(require(c.group, "group")));
    QContext ctx(require(c.q, "q"), require(c.l, "l"));
    auto k = failing_power(ctx, rs.coxeter_number());
    auto ord = multiplicative_order(ctx);
    res["coxeter_number"] = rs.coxeter_number();
    res["order_of_q"] = ord ? json(*ord) : json(nullptr);
    res["considerate"] = !k;
    res["failing_power"] = k ? json(*k) : json(nullptr);
  } else if (op == "banal") {
    RootSystem rs = build_root_system(parse_group(require(c.group, "group")));
    const std::uint64_t l = require(c.l, "l");
    const std::uint64_t q = require(c.q, "q");
    QContext(q, l);
    res["group_order"] = chevalley_steinberg_order(rs, q).str();
    res["banal"] = is_banal(l, rs, q);
    res["considerate"] = is_considerate(QContext(q, l), rs.coxeter_number());
  } else if (op == "order") {
    RootSystem rs = build_root_system(parse_group(require(c.group, "group")));
    const std::uint64_t q = require(c.q, "q");
    if (q < 2) throw PreconditionError("q must be at least 2");
    res["group"] = to_string(rs.type());
    res["degrees"] = rs.fundamental_degrees();
    res["num_positive_roots"] = rs.num_positive_roots();
    res["order"] = chevalley_steinberg_order(rs, q).str();
  } else if (op == "sweep") {
    std::vector<DynkinType> types;
    const std::string groups = c.group.empty() ? "A1,A2,A3,B2,B3,C2,C3" : c.group;
    for (const auto& g : split(groups, ',')) types.push_back(parse_group(g));
    ImplicationReport rep = implication_sweep(types, c.l.value_or(50), c.q.value_or(20));
    auto list = [](const std::vector<SweepInstance>& v) {
      json a = json::array();
      for (const auto& i : v) a.push_back(json{{"group", i.group}, {"l", i.l}, {"q", i.q}});
      return a;
    };
    res["instances"] = rep.instances;
    res["considerate"] = rep.considerate_count;
    res["banal"] = rep.banal_count;
    res["considerate_not_banal"] = list(rep.considerate_not_banal);
    res["type_a_banal_not_considerate"] = list(rep.type_a_banal_not_considerate);
    res["sp6_banal_not_considerate"] = list(rep.sp6_witnesses);
    r.property_failed = !rep.considerate_not_banal.empty() || !rep.type_a_banal_not_considerate.empty();
  } else {
    throw ValidationError("unknown arith operation '" + op + "'");
  }
  return r;
}

// ---------------------------------------------------------------------------
// verify

inline Report cmd_verify(const RunConfig& c, const std::string& op) {
  Report r = make_report(c);
  json& res = r.body["results"];
  auto spec = make_spec(c);
  const Fp& F = spec->field();
  const std::uint64_t q = require(c.q, "q");
  QContext ctx(q, F.characteristic());
  const auto failing = failing_power(ctx, spec->coxeter_number());
  res["group"] = spec->name();
  res["dim_g"] = spec->dim_g();
  res["considerate"] = !failing;
  res["failing_power"] = failing ? json(*failing) : json(nullptr);

  if (op == "enumerate") {
    EnumerationReport rep = enumerate_sg(spec, q);
    std::map<std::string, std::map<int, std::uint64_t>> tangents;
    std::uint64_t bridge_ok = 0, bridge_checked = 0, regular_bad = 0, zero_bad = 0;
    const bool bridge = static_cast<int>(F.characteristic()) > spec->n();
    const std::string regular = OrbitLabel::partition({spec->n()}).to_string();
    for (const auto& pt : rep.points) {
      const int td = tangent_dim(pt).tangent_dim;
      const std::string key = partition_key(jordan_type(F, pt.n_mat));
      ++tangents[key][td];
      if (key == regular && td != spec->dim_g()) ++regular_bad;
      if (pt.n_mat.is_zero() && td != spec->dim_g() + eigenspace_dim(*spec, pt.phi, pt.q)) ++zero_bad;
      if (bridge) {
        ++bridge_checked;
        bridge_ok += exp_bridge_check(pt);
      }
    }
    res["group_order"] = rep.phi_count;
    res["points"] = rep.points.size();
    json strata = json::object();
    for (const auto& [k, v] : rep.strata) strata[k] = json{{"points", v}, {"tangent_dims", to_json(tangents[k])}};
    res["strata"] = strata;
    res["regular_stratum_tangent_mismatches"] = regular_bad;
    res["zero_stratum_formula_mismatches"] = zero_bad;
    res["exp_bridge"] = bridge ? json{{"checked", bridge_checked}, {"passed", bridge_ok}} : json(nullptr);
    r.property_failed = (!failing && regular_bad > 0) || zero_bad > 0 || bridge_ok != bridge_checked;
  } else if (op == "tangent") {
    const OrbitLabel o = OrbitLabel::partition(parse_orbit(parse_group(c.group), require(c.orbit, "orbit")).parts());
    const int count = c.samples.value_or(50);
    auto pts = stratum_sample(spec, q, o.parts(), count, c.seed);
    std::map<int, std::uint64_t> hist;
    std::uint64_t bad = 0;
    const bool regular = o.parts().size() == 1;
    const bool zero = is_zero_orbit(o);
    for (const auto& pt : pts) {
      const int td = tangent_dim(pt).tangent_dim;
      ++hist[td];
      if (td < spec->dim_g()) ++bad;
      if (!failing && regular && td != spec->dim_g()) ++bad;
      if (zero && td != spec->dim_g() + eigenspace_dim(*spec, pt.phi, pt.q)) ++bad;
    }
    res["orbit"] = o.to_string();
    res["samples"] = pts.size();
    res["tangent_dims"] = to_json(hist);
    res["violations"] = bad;
    r.property_failed = bad > 0 || static_cast<int>(pts.size()) < count;
  } else if (op == "nilpotency") {
    NilpotencyReport rep = nilpotency_redundancy_check(*spec, q);
    res["group_order"] = rep.phi_count;
    res["solutions"] = rep.solutions;
    res["non_nilpotent"] = rep.non_nilpotent;
    if (rep.witness) {
      res["witness"] = json{{"phi", to_json(rep.witness->first)}, {"n", to_json(rep.witness->second)}};
    } else {
      res["witness"] = nullptr;
    }
    r.property_failed = rep.considerate && rep.non_nilpotent > 0;
  } else if (op == "expbridge") {
    std::vector<SGPoint> pts;
    if (c.samples) {
      const OrbitLabel o = c.orbit.empty() ? OrbitLabel::partition({spec->n()})
                                           : parse_orbit(parse_group(c.group), c.orbit);
      pts = stratum_sample(spec, q, o.parts(), *c.samples, c.seed);
    } else {
      pts = enumerate_sg(spec, q).points;
    }
    std::uint64_t ok = 0;
    for (const auto& pt : pts) ok += exp_bridge_check(pt);
    res["checked"] = pts.size();
    res["passed"] = ok;
    r.property_failed = ok != pts.size();
  } else if (op == "bundle") {
    BundleReport rep = bundle_count_check(*spec, q, c.samples.value_or(0), c.seed);
    res["exhaustive"] = rep.exhaustive;
    res["base_points"] = rep.base_points;
    res["expected_fiber"] = rep.expected_fiber;
    res["fiber_histogram"] = to_json(rep.fiber_histogram);
    res["all_match"] = rep.all_match;
    r.property_failed = !rep.all_match;
  } else {
    throw ValidationError("unknown verify operation '" + op + "'");
  }
  return r;
}

// ---------------------------------------------------------------------------
// certify

inline Report cmd_certify(const RunConfig& c) {
  Report r = make_report(c);
  auto spec = make_spec(c);
  const Fp& F = spec->field();
  const Elem s = F.from_int(static_cast<long long>(require(c.s, "s") % F.characteristic()));
  const DynkinType t = parse_group(c.group);
  const OrbitLabel o = parse_orbit(t, require(c.orbit, "orbit"));
  if (!o.is_partition()) throw ValidationError("certify takes a partition");
  json& res = r.body["results"];
  try {
    EpsilonCertificate cert = epsilon_certificate(spec, o.parts(), s, c.alpha);
    res["group"] = spec->name();
    res["orbit"] = o.to_string();
    res["q"] = cert.q;
    res["phi0"] = to_json(cert.phi0);
    res["eps"] = {cert.eps0, cert.eps1, cert.eps2, cert.eps3};
    res["orbit_part"] = cert.orbit_dim;
    res["torus_part"] = cert.torus_dim;
    res["unipotent_part"] = cert.unipotent_dim;
    res["phi_span_dim"] = cert.phi_span_dim;
    res["n_span_dim"] = cert.n_span_dim;
    res["off_orbit_contribution"] = cert.off_orbit_contribution;
    res["lower_bound"] = cert.lower_bound;
    res["dim_g"] = cert.dim_g;
    res["ambient_tangent_dim"] = cert.ambient_tangent_dim;
    res["direct_sum"] = cert.direct_sum;
    res["verified_tangency"] = cert.verified_tangency;
    res["valid"] = true;
    r.property_failed = cert.lower_bound > cert.ambient_tangent_dim;
  } catch (const CertificateInvalid& e) {
    res["valid"] = false;
    res["diagnostic"] = e.what();
    r.property_failed = true;
  }
  return r;
}

// ---------------------------------------------------------------------------
// rendering

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void render_table(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      render_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
    return;
  }
  const bool row_list = j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const json& e) {
    return e.is_object();
  });
  if (!row_list) {
    os << prefix << "  " << scalar_text(j) << "\n";
    return;
  }
  std::vector<std::string> cols;
  for (const auto& row : j)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  std::vector<std::size_t> width;
  for (const auto& col : cols) {
    std::size_t w = col.size();
    for (const auto& row : j) w = std::max(w, row.contains(col) ? scalar_text(row[col]).size() : 0);
    width.push_back(w);
  }
  os << prefix << "\n";
  auto line = [&](auto cell) {
    std::string text = "  ";
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::string v = cell(k);
      text += v + std::string(width[k] - v.size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << "\n";
  };
  line([&](std::size_t k) { return cols[k]; });
  for (const auto& row : j) line([&](std::size_t k) { return row.contains(cols[k]) ? scalar_text(row[cols[k]]) : ""; });
}

inline std::string render(const Report& r, const std::string& format) {
  if (format == "table") {
    std::ostringstream os;
    os << r.body["command"].get<std::string>() << "\n";
    render_table(r.body["results"], "", os);
    for (const auto& p : r.body["provenance"]) os << "source  " << p["data"].get<std::string>() << ": " << p["source"].get<std::string>() << "\n";
    return os.str();
  }
  return r.body.dump(2) + "\n";
}

inline Report dispatch(const RunConfig& c) {
  const auto words = split(c.command, ' ');
  const std::string& head = words.front();
  const std::string op = words.size() > 1 ? words[1] : "";
  if (head == "classify") return cmd_classify(c);
  if (head == "orbits") return cmd_orbits(c);
  if (head == "wdd") return cmd_wdd(c);
  if (head == "arith") return cmd_arith(c, op);
  if (head == "verify") return cmd_verify(c, op);
  if (head == "certify") return cmd_certify(c);
  throw ValidationError("unknown command '" + c.command + "'");
}

// ---------------------------------------------------------------------------
// argument handling

/// Appends `--key value` for each key=value line of the file named by
/// --config whose flag is not already on the command line.
inline std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  auto present = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!present("--" + key)) {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

inline void add_flags(CLI::App* sub, RunConfig& c, const std::string& flags) {
  for (const auto& f : split(flags, ',')) {
    if (f == "group") sub->add_option("--group", c.group, "group, e.g. GL3, D5, E7, GSp4 (products: GL3xGL2)");
    if (f == "orbit") sub->add_option("--orbit", c.orbit, "partition '2,1' or label 'E7(a3)' (products: '2,1;2')");
    if (f == "p") sub->add_option("--p", c.p, "prime p of the field F_p");
    if (f == "s") sub->add_option("--s", c.s, "square root of q in F_p");
    if (f == "q") sub->add_option("--q", c.q, "q (prime power; bound for sweeps)");
    if (f == "l") sub->add_option("--l", c.l, "residue characteristic l (0: characteristic zero; bound for sweeps)");
    if (f == "alpha") sub->add_option("--alpha", c.alpha, "simple root alpha (1-based) adjacent to the Levi");
    if (f == "samples") sub->add_option("--samples", c.samples, "number of sampled points");
    if (f == "seed") sub->add_option("--seed", c.seed, "random seed");
  }
  sub->add_option("--out", c.out, "write the report to this file");
  sub->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

/// Entry point; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig c;
  CLI::App app{"Smooth and singular components of moduli of unipotent Weil-Deligne representations", "wdsmooth"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* classify = app.add_subcommand("classify", "smooth/singular verdict for X_C");
  add_flags(classify, c, "group,orbit,q,l");
  auto* orbits = app.add_subcommand("orbits", "nilpotent orbits of a classical type");
  add_flags(orbits, c, "group");
  auto* wdd = app.add_subcommand("wdd", "weighted Dynkin diagrams");
  add_flags(wdd, c, "group,orbit");

  auto* arith = app.add_subcommand("arith", "considerateness and banality arithmetic");
  arith->require_subcommand(1);
  add_flags(arith->add_subcommand("considerate", "is q considerate towards G mod l"), c, "group,q,l");
  add_flags(arith->add_subcommand("banal", "does l divide |G(F_q)|"), c, "group,q,l");
  add_flags(arith->add_subcommand("order", "|G(F_q)|"), c, "group,q");
  add_flags(arith->add_subcommand("sweep", "considerate => banal over l <= --l, q <= --q"), c, "group,q,l");

  auto* verify = app.add_subcommand("verify", "matrix-level checks over F_p");
  verify->require_subcommand(1);
  add_flags(verify->add_subcommand("enumerate", "all points of S_G(F_p) with tangent dimensions"), c, "group,p,q");
  add_flags(verify->add_subcommand("tangent", "tangent dimensions on sampled points of a stratum"), c,
            "group,orbit,p,q,samples,seed");
  add_flags(verify->add_subcommand("nilpotency", "non-nilpotent solutions of Ad(Phi)N = qN"), c, "group,p,q");
  add_flags(verify->add_subcommand("expbridge", "Phi exp(N) Phi^-1 = exp(N)^q"), c, "group,orbit,p,q,samples,seed");
  add_flags(verify->add_subcommand("bundle", "fibre sizes over the regular component"), c, "group,p,q,samples,seed");

  auto* certify = app.add_subcommand("certify", "tangent lower bound at a point of a non-distinguished X_C");
  add_flags(certify, c, "group,orbit,p,s,alpha");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: usage: " << e.what() << "\n";
      return kExitUsage;
    }
    for (auto* sub : app.get_subcommands()) {
      c.command = sub->get_name();
      for (auto* leaf : sub->get_subcommands()) c.command += " " + leaf->get_name();
    }
    Report r = dispatch(c);
    const std::string text = render(r, c.format);
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out);
      if (!f) throw ValidationError("cannot write '" + c.out + "'");
      f << text;
    }
    if (r.property_failed) {
      err << "error: property: a checked property failed, see report\n";
      return kExitPropertyFailed;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wdsmooth::cli
