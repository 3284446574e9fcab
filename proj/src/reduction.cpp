#include "deltadg/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace deltadg {

SourceSpec::SourceSpec(std::vector<SourceTerm> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const SourceTerm& a, const SourceTerm& b) { return a.order < b.order; });
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].order < 0) throw std::invalid_argument("source: negative delta order");
    if (i > 0 && terms_[i].order == terms_[i - 1].order)
      throw std::invalid_argument("source: duplicate delta order " +
                                  std::to_string(terms_[i].order));
  }
}

int SourceSpec::max_order() const { return terms_.empty() ? -1 : terms_.back().order; }

TimeFunction SourceSpec::amplitude(int order) const {
  for (const auto& t : terms_)
    if (t.order == order) return t.amplitude;
  return TimeFunction::zero();
}

nlohmann::json SourceSpec::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_)
    terms.push_back({{"order", t.order}, {"amplitude", t.amplitude.to_json()}});
  return {{"terms", terms}};
}

SourceSpec SourceSpec::from_json(const nlohmann::json& j) {
  std::vector<SourceTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({t.at("order").get<int>(), TimeFunction::from_json(t.at("amplitude"))});
  return SourceSpec(std::move(terms));
}

namespace {

// Pad to an odd top order N = 2M + 1.
int padded_half(int max_order) {
  const int n = std::max(max_order, 1);
  return (n % 2 == 1 ? n - 1 : n) / 2;
}

void trim_recon(std::vector<DeltaTerm>& recon, int max_order) {
  const int top = max_order - 2;
  std::erase_if(recon, [top](const DeltaTerm& d) { return d.order > top; });
}

}  // namespace

ReducedSource reduce(const SourceSpec& src) {
  const int m = padded_half(src.max_order());
  ReducedSource out;
  std::vector<TimeFunction> g;
  std::vector<TimeFunction> f;
  for (int n = 0; n <= m; ++n) {
    g.push_back(src.amplitude(2 * n).derivative(2 * n));
    f.push_back(src.amplitude(2 * n + 1).derivative(2 * n));
  }
  out.g = TimeFunction::sum(std::move(g));
  out.f = TimeFunction::sum(std::move(f));

  for (int i = 0; i < m; ++i) {
    std::vector<TimeFunction> even;
    std::vector<TimeFunction> odd;
    for (int n = 0; n <= m - 1 - i; ++n) {
      even.push_back(src.amplitude(2 * n + 2 * i + 2).derivative(2 * n));
      odd.push_back(src.amplitude(2 * n + 2 * i + 3).derivative(2 * n));
    }
    out.recon.push_back({2 * i, TimeFunction::sum(std::move(even))});
    out.recon.push_back({2 * i + 1, TimeFunction::sum(std::move(odd))});
  }
  trim_recon(out.recon, src.max_order());
  return out;
}

ReducedSource reduce_iterative(const SourceSpec& src) {
  const int top = 2 * padded_half(src.max_order()) + 1;
  std::vector<TimeFunction> coeff(top + 1);
  for (const auto& t : src.terms()) coeff[t.order] = t.amplitude;
  std::vector<TimeFunction> recon(std::max(top - 1, 0));

  // Each pass subtracts sum_n c_{n+2} delta^(n) and lowers the top order by two.
  for (int n_top = top; n_top > 1; n_top -= 2) {
    for (int n = 0; n <= n_top - 2; ++n) recon[n] = recon[n] + coeff[n + 2];
    std::vector<TimeFunction> next(n_top - 1);
    for (int n = 0; n <= n_top - 2; ++n) {
      TimeFunction shifted = coeff[n + 2].derivative(2);
      next[n] = n < 2 ? coeff[n] + shifted : shifted;
    }
    coeff = std::move(next);
  }

  ReducedSource out;
  out.g = coeff[0];
  out.f = coeff[1];
  for (std::size_t m = 0; m < recon.size(); ++m)
    out.recon.push_back({static_cast<int>(m), recon[m]});
  trim_recon(out.recon, src.max_order());
  return out;
}

ReducedSource reduce_with_potential(const SourceSpec& src, double v0, double v1) {
  if (src.max_order() > 3)
    throw std::invalid_argument(
        "reduce_with_potential: delta orders above 3 are not supported with a potential");
  const TimeFunction a0 = src.amplitude(0);
  const TimeFunction a1 = src.amplitude(1);
  const TimeFunction a2 = src.amplitude(2);
  const TimeFunction a3 = src.amplitude(3);
  ReducedSource out;
  out.g = TimeFunction::sum({a0, a2.derivative(2), TimeFunction::scaled(-v0, a2),
                             TimeFunction::scaled(v1, a3)});
  out.f = TimeFunction::sum({a1, a3.derivative(2), TimeFunction::scaled(-v0, a3)});
  out.recon = {{0, a2}, {1, a3}};
  trim_recon(out.recon, src.max_order());
  return out;
}

AdvectionSource reduce_advection(const SourceSpec& src, double speed) {
  if (speed != 1.0 && speed != -1.0)
    throw std::invalid_argument("advection: speed must be +1 or -1");
  if (src.max_order() > 1)
    throw std::invalid_argument("advection: source orders above 1 are not supported");
  const TimeFunction a1 = src.amplitude(1);
  AdvectionSource out;
  out.amplitude = src.amplitude(0) - TimeFunction::scaled(speed, a1.derivative(1));
  if (!a1.is_zero()) out.recon.push_back({0, TimeFunction::scaled(speed, a1)});
  return out;
}

}  // namespace deltadg
