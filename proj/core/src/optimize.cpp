// Copyright 2026 The bsfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bsfilter/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bsfilter/errors.hpp"

namespace bsf {

namespace {

constexpr double kEtaFloor = 1e-6;
constexpr int kLineScanPoints = 33;
constexpr double kGoldenTolerance = 1e-12;
constexpr int kBalanceMaxIterations = 2000;
constexpr double kBalanceTolerance = 1e-15;

// Coefficient index groups moved together during refinement.
const std::vector<std::vector<std::size_t>> &search_directions() {
    // 0 = va, 1 = ha, 2 = vb, 3 = hb
    static const std::vector<std::vector<std::size_t>> dirs = {
        {0}, {1}, {2}, {3}, {0, 2}, {1, 3}, {0, 3}, {1, 2},
    };
    return dirs;
}

FilterSettings normalize_arms(const FilterSettings &s) {
    auto arm = [](double v, double h) -> std::array<double, 2> {
        const double m = std::max(v, h);
        if (m <= 0.0) return {v, h};
        return {std::min(1.0, v / m), std::min(1.0, h / m)};
    };
    const auto a = arm(s.va(), s.ha());
    const auto b = arm(s.vb(), s.hb());
    return {a[0], a[1], b[0], b[1]};
}

class Search {
   public:
    Search(const DensityMatrix4 &rho, const OptimizeConfig &cfg, const CandidateObserver &observer)
        : rho_(rho), cfg_(cfg), observer_(observer) {}

    std::optional<CandidateScore> evaluate(const FilterSettings &raw) {
        ++evaluations_;
        FilterSettings s = raw;
        if (cfg_.mode == OptimizeMode::kSubsystemConstrained) {
            auto balanced = balance_marginals(rho_, raw);
            if (!balanced) {
                notify(raw, std::nullopt);
                return std::nullopt;
            }
            s = *balanced;
        }
        std::optional<CandidateScore> score;
        try {
            const FilterOutcome out = apply_filter(rho_, s);
            const double res_a = std::abs(subsystem_entropy(out.state, Subsystem::kA) - 1.0);
            const double res_b = std::abs(subsystem_entropy(out.state, Subsystem::kB) - 1.0);
            const double residual = std::max(res_a, res_b);
            bool feasible = out.probability >= cfg_.min_probability;
            if (cfg_.mode == OptimizeMode::kSubsystemConstrained) feasible = feasible && residual <= cfg_.entropy_tolerance;
            score = CandidateScore{s, out.probability, eof(out.state), residual, feasible};
        } catch (const VanishingEnsemble &) {
        } catch (const ValidationError &) {
            // Round-off amplified by a tiny success probability.
        }
        notify(s, score);
        if (score && !score->feasible) return std::nullopt;
        return score;
    }

    /// Strict "a is preferred over b".
    bool better(const CandidateScore &a, const CandidateScore &b) const {
        if (a.eof > b.eof + cfg_.eof_tie_tolerance) return true;
        if (a.eof < b.eof - cfg_.eof_tie_tolerance) return false;
        if (a.probability != b.probability) return a.probability > b.probability;
        return a.settings.as_array() > b.settings.as_array();
    }

    void offer(const std::optional<CandidateScore> &c) {
        if (!c) return;
        if (!best_ || better(*c, *best_)) best_ = c;
    }

    void grid() {
        const int n = cfg_.grid_resolution;
        std::vector<double> axis(n);
        for (int i = 0; i < n; ++i) axis[i] = static_cast<double>(i) / (n - 1);
        axis.back() = 1.0;
        for (double va : axis) {
            for (double ha : axis) {
                for (double vb : axis) {
                    for (double hb : axis) offer(evaluate(FilterSettings(va, ha, vb, hb)));
                }
            }
        }
    }

    void refine_round() {
        for (const auto &dir : search_directions()) {
            if (!best_) return;
            line_search(dir);
            offer(evaluate(normalize_arms(best_->settings)));
        }
    }

    const std::optional<CandidateScore> &best() const { return best_; }
    std::size_t evaluations() const { return evaluations_; }

   private:
    // Scales the coefficients in `dir` by exp(u); zero coefficients are treated as 1.
    void line_search(const std::vector<std::size_t> &dir) {
        const auto base = best_->settings.as_array();
        std::array<double, 4> ref = base;
        double hi_scale = std::numeric_limits<double>::infinity();
        double lo_scale = 0.0;
        for (std::size_t i : dir) {
            if (ref[i] <= 0.0) ref[i] = 1.0;
            hi_scale = std::min(hi_scale, 1.0 / ref[i]);
            lo_scale = std::max(lo_scale, kEtaFloor / ref[i]);
        }
        if (!(lo_scale < hi_scale)) return;
        const double u_lo = std::log(lo_scale), u_hi = std::log(hi_scale);

        auto at = [&](double u) {
            std::array<double, 4> e = base;
            const double t = std::exp(u);
            for (std::size_t i : dir) e[i] = std::clamp(ref[i] * t, 0.0, 1.0);
            return FilterSettings::from_array(e);
        };
        auto objective = [&](double u) {
            auto c = evaluate(at(u));
            offer(c);
            return c ? c->eof : -1.0;
        };

        std::vector<double> us(kLineScanPoints), fs(kLineScanPoints);
        std::size_t arg = 0;
        for (int k = 0; k < kLineScanPoints; ++k) {
            us[k] = u_lo + (u_hi - u_lo) * k / (kLineScanPoints - 1);
            fs[k] = objective(us[k]);
            if (fs[k] > fs[arg]) arg = k;
        }
        double a = us[arg > 0 ? arg - 1 : 0];
        double b = us[std::min<std::size_t>(arg + 1, kLineScanPoints - 1)];
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
        double f1 = objective(x1), f2 = objective(x2);
        while (b - a > kGoldenTolerance) {
            if (f1 >= f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = objective(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = objective(x2);
            }
        }
    }

    void notify(const FilterSettings &s, const std::optional<CandidateScore> &score) {
        if (observer_) observer_(s, score);
    }

    const DensityMatrix4 &rho_;
    const OptimizeConfig &cfg_;
    const CandidateObserver &observer_;
    std::optional<CandidateScore> best_;
    std::size_t evaluations_ = 0;
};

}  // namespace

void validate(const OptimizeConfig &cfg) {
    if (cfg.grid_resolution < 8) {
        throw ParamOutOfRange("grid_resolution must be >= 8, got " + error_number(cfg.grid_resolution));
    }
    if (cfg.refine_rounds < 1) {
        throw ParamOutOfRange("refine_rounds must be >= 1, got " + error_number(cfg.refine_rounds));
    }
    if (!(cfg.entropy_tolerance >= 0.0)) throw ParamOutOfRange("entropy_tolerance must be >= 0");
    if (!(cfg.eof_tie_tolerance >= 0.0)) throw ParamOutOfRange("eof_tie_tolerance must be >= 0");
    if (!(cfg.min_probability >= 0.0 && cfg.min_probability <= 1.0)) {
        throw ParamOutOfRange("min_probability must lie in [0, 1]");
    }
}

std::optional<FilterSettings> balance_marginals(const DensityMatrix4 &rho, const FilterSettings &start) {
    const double d1 = rho(kVV, kVV).real(), d2 = rho(kVH, kVH).real();
    const double d3 = rho(kHV, kHV).real(), d4 = rho(kHH, kHH).real();
    // u, w: squared V/H amplitude ratios of arms A and B.
    auto ratio2 = [](double v, double h) { return (v > 0.0 && h > 0.0) ? (v * v) / (h * h) : 1.0; };
    double u = ratio2(start.va(), start.ha());
    double w = ratio2(start.vb(), start.hb());
    for (int it = 0; it < kBalanceMaxIterations; ++it) {
        const double den_u = w * d1 + d2, den_w = u * d1 + d3;
        if (!(den_u > 0.0) || !(den_w > 0.0)) return std::nullopt;
        const double u_next = (w * d3 + d4) / den_u;
        const double w_next = (u_next * d2 + d4) / (u_next * d1 + d3);
        if (!(u_next > 0.0 && w_next > 0.0) || !std::isfinite(u_next) || !std::isfinite(w_next)) {
            return std::nullopt;
        }
        const double change = std::max(std::abs(u_next - u) / u_next, std::abs(w_next - w) / w_next);
        u = u_next;
        w = w_next;
        if (change <= kBalanceTolerance) break;
    }
    // A balance reachable only in a limit is returned unconverged; the caller checks the residual.
    auto arm = [](double ratio2) -> std::array<double, 2> {
        const double r = std::sqrt(ratio2);
        return r <= 1.0 ? std::array<double, 2>{r, 1.0} : std::array<double, 2>{1.0, 1.0 / r};
    };
    const auto a = arm(u);
    const auto b = arm(w);
    return FilterSettings(a[0], a[1], b[0], b[1]);
}

OptimizeResult optimize_eof(const DensityMatrix4 &rho, const OptimizeConfig &cfg, const CandidateObserver &observer) {
    validate(cfg);
    Search search(rho, cfg, observer);
    std::vector<double> history;
    search.grid();
    if (search.best()) history.push_back(search.best()->eof);
    for (int round = 0; round < cfg.refine_rounds && search.best(); ++round) {
        search.refine_round();
        history.push_back(search.best()->eof);
    }
    if (!search.best()) {
        throw NoFeasiblePoint(cfg.mode == OptimizeMode::kSubsystemConstrained
                                  ? "no candidate reaches maximal subsystem entropies within the tolerance"
                                  : "no candidate yields a non-vanishing post-selected ensemble");
    }
    const FilterSettings best = search.best()->settings;
    FilterOutcome outcome = apply_filter(rho, best);
    MeasureReport rep = report(outcome.state);
    return OptimizeResult{best,
                          outcome,
                          rep,
                          {std::abs(rep.entropy_a - 1.0), std::abs(rep.entropy_b - 1.0)},
                          std::move(history),
                          search.evaluations()};
}

}  // namespace bsf
