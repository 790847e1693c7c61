#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polydisk/curves.hpp"
#include "polydisk/holomap.hpp"

namespace polydisk {

enum class LimitVerdict { converged, diverged_to_infinity, no_limit, undecided };

inline const char* to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::converged: return "converged";
    case LimitVerdict::diverged_to_infinity: return "diverged_to_infinity";
    case LimitVerdict::no_limit: return "no_limit";
    default: return "undecided";
  }
}

inline constexpr double kLimitTol = 1e-6;          // value tolerance after acceleration
inline constexpr double kAitkenDenomFloor = 1e-13; // below this the transform is noise
inline constexpr double kInfinityThreshold = 1e12;

struct LimitEstimate {
  LimitVerdict verdict = LimitVerdict::undecided;
  cplx value{0.0, 0.0};
  std::vector<cplx> tail;
  std::optional<cplx> accelerated;
  double tolerance = kLimitTol;
  std::string note;

  bool converged_to(cplx target, double tol) const {
    return verdict == LimitVerdict::converged && std::abs(value - target) <= tol;
  }
};

// Iterated Aitken delta-squared on the last (up to) 12 entries; stops when a
// second difference drops under the floor. Kills the dominant geometric error
// mode, which is exactly the shape curve tails produce on a 2^-k schedule.
inline std::optional<cplx> aitken(std::span<const cplx> seq,
                                  double denom_floor = kAitkenDenomFloor) {
  const std::size_t take = std::min<std::size_t>(seq.size(), 12);
  std::vector<cplx> s(seq.end() - static_cast<std::ptrdiff_t>(take), seq.end());
  bool any = false;
  cplx best{0.0, 0.0};
  for (int round = 0; round < 3 && s.size() >= 3; ++round) {
    std::vector<cplx> next;
    next.reserve(s.size() - 2);
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      const cplx d1 = s[i + 1] - s[i];
      const cplx d2 = s[i + 2] - s[i + 1];
      const cplx den = d2 - d1;
      if (std::abs(den) < denom_floor) return any ? std::optional<cplx>(best) : std::nullopt;
      next.push_back(s[i + 2] - d2 * d2 / den);
    }
    s = std::move(next);
    best = s.back();
    any = true;
  }
  return any ? std::optional<cplx>(best) : std::nullopt;
}

inline LimitEstimate classify_sequence(std::span<const cplx> seq, double tol = kLimitTol) {
  LimitEstimate est;
  est.tolerance = tol;
  est.tail.assign(seq.begin(), seq.end());
  const std::size_t n = seq.size();
  if (n < 6) {
    est.note = "too few samples";
    return est;
  }
  for (const cplx& v : seq)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      est.note = "non-finite sample";
      return est;
    }

  double scale = 1.0;
  for (const cplx& v : seq) scale = std::max(scale, std::abs(v));

  bool growing = true;
  for (std::size_t i = n - 5; i + 1 < n; ++i)
    if (std::abs(seq[i + 1]) < std::abs(seq[i])) growing = false;
  if (growing && std::abs(seq[n - 1]) > kInfinityThreshold) {
    est.verdict = LimitVerdict::diverged_to_infinity;
    est.note = "monotone growth beyond 1e12";
    return est;
  }

  const std::size_t W = std::min<std::size_t>(8, n - 1);
  std::vector<double> diffs(W);
  for (std::size_t i = 0; i < W; ++i) diffs[i] = std::abs(seq[n - W + i] - seq[n - W + i - 1]);
  const double dlast = diffs.back();

  if (dlast == 0.0 && diffs[W - 2] == 0.0) {
    est.verdict = LimitVerdict::converged;
    est.value = seq[n - 1];
    return est;
  }

  // acceleration, with a one-sample-earlier run as the stability probe
  const std::optional<cplx> acc = aitken(seq);
  const std::optional<cplx> acc_prev = aitken(seq.first(n - 1));
  if (acc) est.accelerated = acc;
  if (acc && acc_prev && std::abs(*acc - *acc_prev) <= 0.5 * tol && dlast <= 1e-2 * scale) {
    est.verdict = LimitVerdict::converged;
    est.value = *acc;
    return est;
  }

  double osc = 0.0;
  for (std::size_t i = n - 5; i < n; ++i) osc = std::max(osc, std::abs(seq[i] - seq[n - 1]));
  if (osc <= tol) {
    est.verdict = LimitVerdict::converged;
    est.value = (acc && std::abs(*acc - seq[n - 1]) <= 10.0 * osc + tol) ? *acc : seq[n - 1];
    return est;
  }

  // oscillation with no decay across the window
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < W; ++i)
    if (diffs[i] > 0.0) ratios.push_back(diffs[i + 1] / diffs[i]);
  if (!ratios.empty()) {
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
    const double med = ratios[ratios.size() / 2];
    if (med >= 0.9 && dlast >= 1e-3 * scale) {
      est.verdict = LimitVerdict::no_limit;
      est.note = "oscillation is not decaying";
      return est;
    }
  }
  est.note = "tail neither settled nor demonstrably oscillating";
  return est;
}

inline LimitEstimate classify_real_sequence(std::span<const double> seq,
                                            double tol = kLimitTol) {
  std::vector<cplx> c(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) c[i] = cplx{seq[i], 0.0};
  return classify_sequence(c, tol);
}

// --- limits along curves ----------------------------------------------------------

// Evaluates a per-point functional along the curve schedule and classifies
// the tail. Evaluation failures resolve to undecided with the message kept.
inline LimitEstimate limit_of_functional(const Curve& c,
                                         const std::function<cplx(const CurvePointData&)>& fn,
                                         double tol = kLimitTol) {
  std::vector<cplx> values;
  values.reserve(c.schedule.size());
  for (double eps : c.schedule) {
    try {
      values.push_back(fn(curve_point(c, eps)));
    } catch (const std::exception& e) {
      LimitEstimate est;
      est.tolerance = tol;
      est.tail = std::move(values);
      est.note = std::string("evaluation failed at eps=") + std::to_string(eps) + ": " +
                 e.what();
      return est;
    }
  }
  return classify_sequence(values, tol);
}

// The plain value of f along the curve. Captures the map by value, so the
// functional may outlive its construction site.
inline std::function<cplx(const CurvePointData&)> value_functional(const HoloMap& f,
                                                                   int component = 0) {
  return [f, component](const CurvePointData& p) {
    std::vector<Dual> u(p.u.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = Dual{p.u[j]};
    return f.eval_u(u)[static_cast<std::size_t>(component)].v;
  };
}

inline LimitEstimate limit_along_curve(const HoloMap& f, const Curve& c, int component = 0,
                                       double tol = kLimitTol) {
  if (static_cast<std::size_t>(f.arity()) != c.target.dim())
    throw std::invalid_argument("limit_along_curve: arity mismatch");
  return limit_of_functional(c, value_functional(f, component), tol);
}

// --- family agreement ---------------------------------------------------------------

struct FamilyLimit {
  LimitEstimate overall;
  std::vector<LimitEstimate> members;
  std::vector<std::string> labels;
};

// A limit notion tested over a family of curves: converged only when every
// member converges and all values agree within tolerance; a single
// disagreeing pair is a no_limit witness.
inline FamilyLimit family_limit(std::span<const Curve> curves,
                                const std::function<cplx(const CurvePointData&)>& fn,
                                double tol = kLimitTol) {
  FamilyLimit out;
  out.overall.tolerance = tol;
  for (const Curve& c : curves) {
    out.members.push_back(limit_of_functional(c, fn, tol));
    out.labels.push_back(c.label);
  }
  bool any_undecided = false;
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    const LimitEstimate& m = out.members[i];
    if (m.verdict == LimitVerdict::no_limit ||
        m.verdict == LimitVerdict::diverged_to_infinity) {
      out.overall.verdict = LimitVerdict::no_limit;
      out.overall.note = "member '" + out.labels[i] + "' fails to converge";
      return out;
    }
    if (m.verdict == LimitVerdict::undecided) any_undecided = true;
  }
  if (any_undecided) {
    out.overall.verdict = LimitVerdict::undecided;
    out.overall.note = "some members undecided";
    return out;
  }
  cplx mean{0.0, 0.0};
  for (const LimitEstimate& m : out.members) mean += m.value;
  mean /= static_cast<double>(out.members.size());
  for (std::size_t i = 0; i < out.members.size(); ++i)
    for (std::size_t l = i + 1; l < out.members.size(); ++l)
      if (std::abs(out.members[i].value - out.members[l].value) > tol) {
        out.overall.verdict = LimitVerdict::no_limit;
        out.overall.note = "members '" + out.labels[i] + "' and '" + out.labels[l] +
                           "' disagree";
        return out;
      }
  out.overall.verdict = LimitVerdict::converged;
  out.overall.value = mean;
  return out;
}

}  // namespace polydisk
