// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance runner: executes the eleven top-level checks and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <vector>

#include "wittcharge/verify.hpp"

int main() {
    using wittcharge::CheckResult;
    const std::vector<std::function<CheckResult()>> criteria = {
        [] { return wittcharge::check_dimension_oracle(); },
        [] { return wittcharge::check_xi1_closed_form(); },
        [] { return wittcharge::check_fs_bounds(); },
        [] { return wittcharge::check_charge_formula(); },
        [] { return wittcharge::check_sqrt_galois(); },
        [] { return wittcharge::check_signature_grid(); },
        [] { return wittcharge::check_sine_oracle(); },
        [] { return wittcharge::check_structure_depth3(); },
        [] { return wittcharge::check_pointed_classes(); },
        [] { return wittcharge::check_sequence(); },
        [] { return wittcharge::check_randomized_properties(); },
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        CheckResult res;
        try {
            res = criteria[i]();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
            res.name = "criterion";
        }
        if (!res.pass) ++failures;
        std::cout << "criterion " << (i + 1) << ": " << (res.pass ? "PASS" : "FAIL") << " — "
                  << res.name << (res.detail.empty() ? "" : " (" + res.detail + ")") << "\n";
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    else std::cout << "all 11 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
