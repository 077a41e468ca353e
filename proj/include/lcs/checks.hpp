// Copyright 2026 The lcsgame Authors
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

// Residual records shared by all numerical check suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace lcs {

inline constexpr double kDefaultTolerance = 1e-9;

/// One named identity, possibly aggregated over many instances. `residual`
/// is the worst (largest) Frobenius residual seen and `worst` names the
/// instance it came from.
struct Check {
    std::string suite;
    std::string name;
    double residual = 0.0;
    double tolerance = kDefaultTolerance;
    std::uint64_t count = 0;
    std::string worst;

    bool pass() const { return residual <= tolerance; }  // NaN fails
};

class CheckAccumulator {
   public:
    CheckAccumulator(std::string suite, std::string name, double tol) {
        c_.suite = std::move(suite);
        c_.name = std::move(name);
        c_.tolerance = tol;
    }

    void observe(double residual, const std::string &label) {
        ++c_.count;
        if (std::isnan(c_.residual) && c_.count > 1) return;  // NaN sticks
        if (c_.count == 1 || std::isnan(residual) || residual > c_.residual) {
            c_.residual = residual;
            c_.worst = label;
        }
    }
    // Instances known to be exactly zero without evaluating them.
    void observe_exact_zeros(std::uint64_t n) { c_.count += n; }

    Check finish() const { return c_; }

   private:
    Check c_;
};

struct CheckReport {
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    void append(const CheckReport &o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

    bool all_pass() const {
        for (const auto &c : checks) {
            if (!c.pass()) return false;
        }
        return true;
    }
    const Check *first_failure() const {
        for (const auto &c : checks) {
            if (!c.pass()) return &c;
        }
        return nullptr;
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto &c : checks) m = std::max(m, c.residual);
        return m;
    }
    const Check *find(const std::string &suite, const std::string &name) const {
        for (const auto &c : checks) {
            if (c.suite == suite && c.name == name) return &c;
        }
        return nullptr;
    }
    CheckReport suite(const std::string &s) const {
        CheckReport r;
        for (const auto &c : checks) {
            if (c.suite == s) r.add(c);
        }
        return r;
    }
};

}  // namespace lcs
