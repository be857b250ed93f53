#include "report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fd.hpp"
#include "version.hpp"

namespace liecurve {

using ordered_json = nlohmann::ordered_json;

namespace {

const std::vector<std::string>& columns_for(const GroupSpec& g) {
  static const std::vector<std::string> abelian = {"s", "x", "y", "z"};
  static const std::vector<std::string> su2 = {"s", "qw", "qx", "qy", "qz"};
  static const std::vector<std::string> so3 = {
      "s",   "r11", "r12", "r13", "r21", "r22",
      "r23", "r31", "r32", "r33"};
  switch (g.kind) {
    case GroupKind::Abelian: return abelian;
    case GroupKind::SO3: return so3;
    case GroupKind::SU2: return su2;
  }
  return abelian;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r' && ch != ' ' && ch != '\t') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& text, long line_no) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                      ": cannot parse number '" + text + "'");
  return v;
}

GroupElement element_from_row(const GroupSpec& g,
                              const std::vector<double>& v, long line_no) {
  GroupElement p;
  switch (g.kind) {
    case GroupKind::Abelian: p = Vec3(v[0], v[1], v[2]); break;
    case GroupKind::SU2: p = Quat(v[0], v[1], v[2], v[3]); break;
    case GroupKind::SO3: {
      Mat3 r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = v[3 * i + j];
      p = r;
      break;
    }
  }
  if (element_defect(g, p) > 1e-6)
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(line_no) +
                    ": coordinates do not satisfy the group constraints");
  return renormalized(g, p);
}

ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

ordered_json json_profile(std::span<const double> values) {
  ordered_json arr = ordered_json::array();
  for (double v : values) arr.push_back(json_number(v));
  return arr;
}

ordered_json json_masked_profile(const MaskedProfile& p) {
  ordered_json arr = ordered_json::array();
  for (size_t i = 0; i < p.value.size(); ++i) {
    if (p.valid.empty() || p.valid[i])
      arr.push_back(json_number(p.value[i]));
    else
      arr.push_back(nullptr);
  }
  return arr;
}

ordered_json json_stats(const ProfileStats& st) {
  ordered_json j;
  if (!st.defined) {
    j["defined"] = false;
    return j;
  }
  j["mean"] = json_number(st.mean);
  j["rel_std"] = json_number(st.rel_std);
  j["min"] = json_number(st.min);
  j["max"] = json_number(st.max);
  j["count"] = st.count;
  j["masked_fraction"] = json_number(st.masked_fraction);
  return j;
}

ordered_json json_options(const AnalysisOptions& opt) {
  ordered_json j;
  j["fd_order"] = opt.frenet.fd_order;
  j["tol_rel_std"] = json_number(opt.tol.rel_std);
  j["interior_fraction"] = json_number(opt.tol.interior_fraction);
  j["kappa_min"] = json_number(opt.frenet.kappa_min);
  j["hprime_min"] = json_number(opt.tol.hprime_min);
  j["unit_speed_tol"] = json_number(opt.frenet.unit_speed_tol);
  return j;
}

void add_verdict(ordered_json* j, const InvariantReport& rep) {
  (*j)["classification"] = curve_class_name(rep.classification);
  if (rep.classification == CurveClass::GeneralHelix)
    (*j)["general_slope"] = json_number(rep.general_slope);
  if (rep.classification == CurveClass::SlantHelix) {
    (*j)["theta"] = json_number(rep.theta);
    (*j)["mean_n_dot_axis"] = json_number(rep.mean_n_dot_axis);
  }
  if (rep.axis) {
    (*j)["axis"] = {json_number(rep.axis->x()), json_number(rep.axis->y()),
                    json_number(rep.axis->z())};
    (*j)["axis_max_dev"] = json_number(rep.axis_max_dev);
  }
  ordered_json stats;
  stats["kappa"] = json_stats(rep.kappa_stats);
  stats["tau"] = json_stats(rep.tau_stats);
  stats["H"] = json_stats(rep.H_stats);
  stats["sigma_N"] = json_stats(rep.sigma_stats);
  (*j)["stats"] = stats;
}

void append_plot_rows(std::string* out, std::span<const double> s,
                      std::span<const double> v, const char* quantity,
                      std::span<const char> valid = {}) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (!valid.empty() && !valid[i]) continue;
    *out += format_number(s[i]);
    *out += ',';
    *out += quantity;
    *out += ',';
    *out += format_number(v[i]);
    *out += '\n';
  }
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  double out = v;
  std::from_chars(buf, res.ptr, out);
  return out;
}

std::string format_number(double v) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string format_number_exact(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Analysis analyze_curve(const SampledCurve& curve, const AnalysisOptions& opt) {
  Analysis a;
  a.group = curve.group;
  a.s0 = curve.s0;
  a.h = curve.h;
  a.samples = curve.size();
  a.options = opt;
  try {
    a.fd = frenet_apparatus(curve, opt.frenet);
    a.report = classify(a.fd, opt.tol);
    a.frames_defined = true;
  } catch (const GeodesicDegeneracyError& e) {
    if (!e.everywhere()) throw;
    // Pure geodesic: report the curvature profile and the tag only.
    const std::vector<Vec3> t =
        body_velocity(curve.group, curve.points, curve.h, opt.frenet.fd_order,
                      opt.frenet.unit_speed_tol);
    const std::vector<Vec3> t_dot =
        fd_derivative(t, curve.h, opt.frenet.fd_order);
    a.fd.group = curve.group;
    a.fd.s = curve.grid();
    a.fd.T = t;
    a.fd.kappa.resize(curve.size());
    for (long i = 0; i < curve.size(); ++i) a.fd.kappa[i] = t_dot[i].norm();
    a.fd.tau_g = curve.group.tau_g();
    a.fd.fd_order = opt.frenet.fd_order;
    a.report.classification = CurveClass::Geodesic;
    a.report.tol = opt.tol;
    const long n = curve.size();
    const long drop = static_cast<long>(
        std::floor(0.5 * (1.0 - opt.tol.interior_fraction) * double(n)));
    a.report.window_lo = drop;
    a.report.window_hi = n - drop;
    a.report.kappa_stats =
        profile_stats(a.fd.kappa, {}, drop, n - drop, 1.0);
    a.frames_defined = false;
  }
  return a;
}

SampledCurve read_curve_csv(const GroupSpec& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  const auto& cols = columns_for(g);

  std::string line;
  long line_no = 0;
  bool header_seen = false;
  std::vector<double> s;
  std::vector<GroupElement> points;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv(line);
    if (!header_seen) {
      if (fields.size() != cols.size() ||
          !std::equal(cols.begin(), cols.end(), fields.begin()))
        throw Error(ErrorCode::Parse,
                    "line " + std::to_string(line_no) +
                        ": header does not match the " +
                        std::string(g.name()) + " schema");
      header_seen = true;
      continue;
    }
    if (fields.size() != cols.size())
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                        ": expected " +
                                        std::to_string(cols.size()) +
                                        " columns");
    std::vector<double> row(fields.size());
    for (size_t i = 0; i < fields.size(); ++i)
      row[i] = parse_double(fields[i], line_no);
    if (!s.empty() && !(row[0] > s.back()))
      throw Error(ErrorCode::Parse,
                  "line " + std::to_string(line_no) +
                      ": s must be strictly increasing");
    s.push_back(row[0]);
    points.push_back(element_from_row(
        g, std::vector<double>(row.begin() + 1, row.end()), line_no));
  }
  if (!header_seen) throw Error(ErrorCode::Parse, "missing header row");
  if (static_cast<long>(s.size()) < kMinSamples)
    throw Error(ErrorCode::InsufficientSamples,
                "insufficient samples: need at least " +
                    std::to_string(kMinSamples) + ", got " +
                    std::to_string(s.size()));

  SampledCurve curve;
  curve.group = g;
  if (fit_uniform_grid(s, &curve.s0, &curve.h)) {
    curve.points = std::move(points);
    return curve;
  }
  return resample_uniform(g, s, points);
}

std::string render_curve_csv(const SampledCurve& curve) {
  const auto& cols = columns_for(curve.group);
  std::string out;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i];
  }
  out += '\n';
  for (long i = 0; i < curve.size(); ++i) {
    out += format_number_exact(curve.s(i));
    switch (curve.group.kind) {
      case GroupKind::Abelian: {
        const Vec3& v = std::get<Vec3>(curve.points[i]);
        for (int d = 0; d < 3; ++d) {
          out += ',';
          out += format_number_exact(v[d]);
        }
        break;
      }
      case GroupKind::SU2: {
        const Quat& q = std::get<Quat>(curve.points[i]);
        for (double c : {q.w(), q.x(), q.y(), q.z()}) {
          out += ',';
          out += format_number_exact(c);
        }
        break;
      }
      case GroupKind::SO3: {
        const Mat3& r = std::get<Mat3>(curve.points[i]);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            out += ',';
            out += format_number_exact(r(a, b));
          }
        break;
      }
    }
    out += '\n';
  }
  return out;
}

void write_curve_csv(const SampledCurve& curve, const std::string& path) {
  write_text_atomic(path, render_curve_csv(curve));
}

std::string render_algebra_curve_csv(const AlgebraCurve& curve,
                                     const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  out += "s,x,y,z\n";
  for (long i = 0; i < curve.size(); ++i) {
    out += format_number_exact(curve.s(i));
    for (int d = 0; d < 3; ++d) {
      out += ',';
      out += format_number_exact(curve.points[i][d]);
    }
    out += '\n';
  }
  return out;
}

void write_algebra_curve_csv(const AlgebraCurve& curve,
                             const std::string& path,
                             const std::string& comment) {
  write_text_atomic(path, render_algebra_curve_csv(curve, comment));
}

std::string render_analysis_report(const Analysis& a) {
  ordered_json j;
  j["liecurve_report"] = "analysis";
  j["version"] = kVersion;
  j["group"] = a.group.name();
  {
    ordered_json grid;
    grid["samples"] = a.samples;
    grid["s0"] = json_number(a.s0);
    grid["s1"] = json_number(a.s0 + a.h * double(a.samples - 1));
    grid["step"] = json_number(a.h);
    j["grid"] = grid;
  }
  j["options"] = json_options(a.options);
  j["tau_g"] = json_number(a.group.tau_g());
  j["unit_speed_max_dev"] = json_number(a.fd.max_unit_speed_dev);
  add_verdict(&j, a.report);

  ordered_json profiles;
  profiles["s"] = json_profile(a.fd.s);
  profiles["kappa"] = json_profile(a.fd.kappa);
  if (a.frames_defined) {
    profiles["tau"] = json_profile(a.fd.tau);
    std::vector<double> tau_g(a.fd.size(), a.fd.tau_g);
    profiles["tau_g"] = json_profile(tau_g);
    profiles["H"] = json_profile(a.report.H);
    profiles["H_prime"] = json_profile(a.report.Hprime);
    profiles["sigma_N"] = json_masked_profile(a.report.sigma);
  }
  j["profiles"] = profiles;
  return j.dump(2) + "\n";
}

std::string render_analysis_plot_csv(const Analysis& a) {
  std::string out = "s,quantity,value\n";
  append_plot_rows(&out, a.fd.s, a.fd.kappa, "kappa");
  if (a.frames_defined) {
    append_plot_rows(&out, a.fd.s, a.fd.tau, "tau");
    append_plot_rows(&out, a.fd.s, a.report.H, "H");
    append_plot_rows(&out, a.fd.s, a.report.Hprime, "H_prime");
    append_plot_rows(&out, a.fd.s, a.report.sigma.value, "sigma_N",
                     a.report.sigma.valid);
  }
  return out;
}

std::string render_derived_report(const DeriveRun& run) {
  ordered_json j;
  j["liecurve_report"] = "derive";
  j["version"] = kVersion;
  j["group"] = run.group.name();
  j["kind"] = derived_kind_name(run.kind);
  j["options"] = json_options(run.options);
  if (run.kind == DerivedKind::Involute)
    j["involute_c"] = json_number(run.involute_c);
  j["tau_g_source"] = json_number(run.group.tau_g());

  ordered_json results = ordered_json::array();
  for (const DerivedCurveResult& r : run.results) {
    ordered_json e;
    e["window"] = {{"begin", r.window_begin},
                   {"end", r.window_end},
                   {"epsilon", json_number(r.epsilon)}};
    add_verdict(&e, r.verdict);
    e["tau_g_derived"] = json_number(r.fd.tau_g);
    e["max_kappa_delta"] = json_number(r.max_kappa_delta);
    e["max_tau_delta"] = json_number(r.max_tau_delta);
    e["max_rate_delta"] = json_number(r.max_rate_delta);
    e["max_t_inner"] = json_number(r.max_t_inner);
    ordered_json profiles;
    profiles["s_star"] = json_profile(r.fd.s);
    profiles["kappa"] = json_profile(r.fd.kappa);
    profiles["tau"] = json_profile(r.fd.tau);
    if (!r.kappa_pred.empty()) {
      profiles["kappa_pred"] = json_profile(r.kappa_pred);
      profiles["tau_pred"] = json_profile(r.tau_pred);
    }
    e["profiles"] = profiles;
    results.push_back(e);
  }
  j["results"] = results;
  return j.dump(2) + "\n";
}

std::string render_derived_plot_csv(const DeriveRun& run) {
  std::string out = "s,quantity,value\n";
  for (const DerivedCurveResult& r : run.results) {
    append_plot_rows(&out, r.fd.s, r.fd.kappa, "kappa");
    append_plot_rows(&out, r.fd.s, r.fd.tau, "tau");
    if (!r.kappa_pred.empty()) {
      append_plot_rows(&out, r.fd.s, r.kappa_pred, "kappa_pred");
      append_plot_rows(&out, r.fd.s, r.tau_pred, "tau_pred");
    }
  }
  return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot open '" + tmp + "' for writing");
    out << content;
    if (!out) throw Error(ErrorCode::Io, "write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorCode::Io, "cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace liecurve
