/*
 * Copyright 2026 The dpcl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "family.hpp"
#include "localbounds.hpp"
#include "parse.hpp"

namespace dpcl {

struct StageError : std::runtime_error {
    std::string stage;
    StageError(std::string s, const std::string& what) : std::runtime_error("stage " + s + ": " + what), stage(std::move(s)) {}
};

// stages computed on demand, each at most once
class Pipeline {
  public:
    Pipeline(PipelineConfig cfg, unsigned workers) : cfg_(std::move(cfg)), workers_(workers) {}

    const PipelineConfig& config() const { return cfg_; }
    bool from_points() const { return !cfg_.points.empty() && !cfg_.model_file; }

    const GeneralPositionVerdict<Rat>& points() {
        if (!gp_) gp_ = stage("points", [&] {
            if (cfg_.points.empty()) throw std::invalid_argument("no points in the configuration");
            return check_general_position(cfg_.points);
        });
        return *gp_;
    }
    const DelPezzoData& delpezzo() {
        if (!dp_) dp_ = stage("linear-systems", [&] {
            if (!points().pass) throw std::runtime_error("points not in general position: " + points().describe());
            return build_delpezzo(cfg_.points, cfg_.u);
        });
        return *dp_;
    }
    const BranchCurveData& branch_curve() {
        if (!bc_) bc_ = stage("branch-curve", [&] { return build_branch_curve(delpezzo()); });
        return *bc_;
    }
    const TwoTorsionData& torsion() {
        if (!tt_) tt_ = stage("torsion", [&] { return build_two_torsion(delpezzo(), branch_curve(), cfg_.precision, workers_, cfg_.seed); });
        return *tt_;
    }
    const TrigonalModel& model() {
        if (!model_) model_ = stage("model", [&] {
            if (cfg_.model_file) return parse_model(read_file(*cfg_.model_file), cfg_.model_file->string());
            return branch_curve().model;
        });
        return *model_;
    }
    const std::vector<KummerFunction>& kummer() {
        if (!h_) h_ = stage("kummer", [&] {
            if (cfg_.h_file) {
                std::vector<KummerFunction> hs;
                for (auto& h : parse_kummer_file(read_file(*cfg_.h_file), cfg_.h_file->string())) hs.push_back(h.normalized());
                return hs;
            }
            return torsion().h;
        });
        return *h_;
    }
    const std::vector<Int>& primes() {
        if (!primes_) primes_ = stage("bad-primes", [&] {
            if (!cfg_.points.empty()) return candidate_bad_primes(cfg_.points, cfg_.prime_bound);
            if (override_primes_) return *override_primes_;
            throw std::invalid_argument("no points to derive bad primes from; pass a table or a prime list");
        });
        return *primes_;
    }
    void set_primes(std::vector<Int> p) { override_primes_ = std::move(p); }
    const AdmissibilityProfile& profile() {
        if (!profile_) profile_ = stage("bounds", [&] { return compute_profile(model(), kummer(), primes(), workers_); });
        return *profile_;
    }
    SignStrategy strategy() const {
        if (cfg_.strategy == "negative") return SignStrategy::Negative;
        if (cfg_.strategy == "both") return SignStrategy::Both;
        return SignStrategy::Positive;
    }
    std::vector<Rat> enumerate(size_t count) {
        return stage("enumerate", [&] { return enumerate_admissible(profile(), count, strategy()); });
    }
    std::vector<CertifyOutcome> certify_all(const std::vector<Rat>& ts) {
        return stage("certify", [&] {
            CertifyOptions opt;
            opt.aux_budget = cfg_.aux_budget;
            return certify_many(model(), kummer(), profile(), ts, opt, workers_);
        });
    }

  private:
    template <class F>
    auto stage(const std::string& name, F f) -> decltype(f()) {
        try {
            return f();
        } catch (const StageError&) {
            throw;
        } catch (const std::exception& e) {
            throw StageError(name, e.what());
        }
    }

    PipelineConfig cfg_;
    unsigned workers_;
    std::optional<GeneralPositionVerdict<Rat>> gp_;
    std::optional<DelPezzoData> dp_;
    std::optional<BranchCurveData> bc_;
    std::optional<TwoTorsionData> tt_;
    std::optional<TrigonalModel> model_;
    std::optional<std::vector<KummerFunction>> h_;
    std::optional<std::vector<Int>> primes_, override_primes_;
    std::optional<AdmissibilityProfile> profile_;
};

}  // namespace dpcl
