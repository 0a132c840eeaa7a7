// SPDX-License-Identifier: Apache-2.0
//
// otma - oversampled time-modulated array simulation library
// Copyright (C) 2026 otma developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <vector>

namespace otma
{

// One row of the verification report.
struct verify_check
{
    std::string name;
    double max_error = 0.0; // worst observed deviation
    double threshold = 0.0; // pass bound
    bool passed = false;
    std::string detail; // where the worst case occurred
};

struct verify_report
{
    std::vector<verify_check> checks;

    bool all_passed() const
    {
        for (const verify_check &c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

struct verify_options
{
    std::vector<int> n_phases_grid = {2, 3, 4, 8};
    std::vector<int> o_tau_grid = {1, 2, 4};
    int samples_per_slot = 3;
    int parseval_i_max = 1000;
    // When set, one analytic coefficient is perturbed by 1e-6 before the
    // oracle comparison; the grid check must then fail (self-test of the
    // harness's ability to catch regressions).
    bool inject_fault = false;
};

// Run the full analytic-vs-oracle verification grid:
//   closed-form coefficients vs time-domain DFT over all (N, o_tau, d, l),
//   spectral sparsity of untapered schedules, Parseval power identities,
//   delay-phase uniformity, and replica-sum reconstruction of a modulated
//   test signal.
verify_report run_verification(const verify_options &opt = {});

} // namespace otma
