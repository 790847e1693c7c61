#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polydisk/curves.hpp"
#include "polydisk/julia.hpp"
#include "polydisk/jwc.hpp"
#include "polydisk/limits.hpp"

namespace polydisk {

using ordered_json = nlohmann::ordered_json;

// --- complex scalars on the wire ------------------------------------------------
//
// Arguments and reports carry complex numbers as "re+imi" strings; %.17g both
// ways makes the round trip bit-exact.

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_complex(cplx v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

inline double parse_double_strict(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  return v;
}

inline cplx parse_complex(std::string s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty complex literal");

  const bool has_i = t.back() == 'i' || t.back() == 'I';
  // split point: a +/- that is neither leading nor an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (!has_i) {
    return cplx{parse_double_strict(t), 0.0};
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = t.substr(0, t.size() - 1);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
  } else {
    re_part = t.substr(0, split);
    im_part = t.substr(split, t.size() - split - 1);
    if (im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
  }
  return cplx{parse_double_strict(re_part), parse_double_strict(im_part)};
}

inline std::vector<cplx> parse_point(const std::string& csv) {
  std::vector<cplx> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(parse_complex(cur));
  if (out.empty()) throw std::invalid_argument("empty point literal");
  return out;
}

// --- json views -------------------------------------------------------------------

inline ordered_json to_json(cplx v) { return ordered_json{{"re", v.real()}, {"im", v.imag()}}; }

inline ordered_json to_json(const std::vector<cplx>& v) {
  ordered_json arr = ordered_json::array();
  for (const cplx& c : v) arr.push_back(to_json(c));
  return arr;
}

inline ordered_json to_json(const LimitEstimate& est, bool with_tail = false) {
  ordered_json j;
  j["verdict"] = to_string(est.verdict);
  if (est.verdict == LimitVerdict::converged) j["value"] = to_json(est.value);
  if (est.accelerated) j["accelerated"] = to_json(*est.accelerated);
  j["tolerance"] = est.tolerance;
  if (!est.note.empty()) j["note"] = est.note;
  if (with_tail) j["tail"] = to_json(est.tail);
  return j;
}

inline ordered_json to_json(const Classification& c, bool with_sequences = false) {
  ordered_json j;
  j["special"] = to_string(c.special);
  j["special_criteria"] = {{"distance", to_string(c.special_distance)},
                           {"ratio", to_string(c.special_ratio)}};
  j["restricted"] = to_string(c.restricted);
  if (c.m_restricted_at) j["m_restricted_at"] = *c.m_restricted_at;
  j["peculiar"] = to_string(c.peculiar);
  j["amplitude_estimate"] = c.amplitude_estimate;
  j["diagonal_ratio_last"] = c.diagonal_ratio_last;
  j["tail_policy"] = c.tail_policy;
  if (with_sequences) {
    j["schedule"] = c.schedule;
    j["special_ratio_seq"] = c.special_ratio_seq;
    j["special_dist_seq"] = c.special_dist_seq;
    j["restricted_seq"] = c.restricted_seq;
    j["peculiar_seq"] = c.peculiar_seq;
    j["koranyi_seq"] = c.koranyi_seq;
  }
  return j;
}

inline ordered_json to_json(const JuliaReport& jr, bool with_tail = false) {
  ordered_json j;
  j["alpha"] = jr.alpha_finite() ? ordered_json(jr.alpha) : ordered_json("infinity");
  if (jr.alpha_finite()) {
    j["tau"] = to_json(jr.tau);
    j["tau_snapped"] = jr.tau_snapped;
    j["tau_snap_distance"] = jr.tau_snap_distance;
  }
  j["radial_verdict"] = to_string(jr.tau_estimate.verdict);
  j["alpha_lower_bound"] = jr.alpha_lower_bound;
  if (!jr.diagnostics.empty()) j["diagnostics"] = jr.diagnostics;
  if (with_tail) {
    j["schedule"] = jr.schedule;
    j["radial_ratio"] = jr.radial_ratio;
  }
  return j;
}

inline ordered_json to_json(const JwcReport& rep) {
  ordered_json j;
  j["julia"] = to_json(rep.julia);
  j["part_i"] = to_json(rep.part_i);
  ordered_json ii = ordered_json::array();
  for (const auto& [idx, est] : rep.part_ii)
    ii.push_back({{"j", idx + 1}, {"estimate", to_json(est)}});
  j["part_ii"] = ii;
  j["part_iii"] = {{"df_dx", to_json(rep.part_iii_x)},
                   {"df_dsilov", to_json(rep.part_iii_silov)}};
  ordered_json iv = ordered_json::array();
  for (const auto& [idx, est] : rep.part_iv)
    iv.push_back({{"j", idx + 1}, {"estimate", to_json(est)}});
  j["part_iv"] = iv;
  ordered_json v = ordered_json::array();
  for (const auto& [idx, est] : rep.part_v)
    v.push_back({{"j", idx + 1}, {"estimate", to_json(est)}});
  j["part_v"] = v;
  j["derivative_masses"] = rep.derivative_masses;
  j["mass_sum"] = rep.mass_sum;
  j["sum_rule_residual"] = rep.sum_rule_residual;
  j["violations"] = rep.violations;
  j["pass"] = rep.pass();
  return j;
}

inline ordered_json to_json(const FamilyLimit& fam) {
  ordered_json j;
  j["overall"] = to_json(fam.overall);
  ordered_json members = ordered_json::array();
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    members.push_back({{"curve", fam.labels[i]}, {"estimate", to_json(fam.members[i])}});
  j["members"] = members;
  return j;
}

inline ordered_json to_json(const KLimitReport& rep) {
  ordered_json j;
  j["estimate"] = to_json(rep.estimate);
  j["shells"] = rep.shell_radius.size();
  j["last_spread"] = rep.shell_spread.empty() ? 0.0 : rep.shell_spread.back();
  return j;
}

// --- csv side files -----------------------------------------------------------------

inline void write_csv_real(const std::string& path, const std::vector<double>& eps,
                           const std::vector<double>& value) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "eps,value\n";
  for (std::size_t i = 0; i < eps.size() && i < value.size(); ++i)
    out << format_double(eps[i]) << "," << format_double(value[i]) << "\n";
}

inline void write_csv_complex(const std::string& path, const std::vector<double>& eps,
                              const std::vector<cplx>& value) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "eps,re,im\n";
  for (std::size_t i = 0; i < eps.size() && i < value.size(); ++i)
    out << format_double(eps[i]) << "," << format_double(value[i].real()) << ","
        << format_double(value[i].imag()) << "\n";
}

}  // namespace polydisk
