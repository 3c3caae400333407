/*
   Copyright 2026 The qps Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

namespace qps {

// One verified claim. Failures are data, not errors: a failed claim carries
// a witness whenever the construction exhibits one.
struct Finding {
    std::string claim;     // stable identifier, e.g. "l1.3.surjective"
    std::string instance;  // human-readable instance description
    bool pass = false;
    std::string witness;   // optional
    std::string detail;    // optional numeric detail

    static Finding ok(std::string claim, std::string instance, std::string detail = "") {
        return Finding{std::move(claim), std::move(instance), true, "", std::move(detail)};
    }
    static Finding fail(std::string claim, std::string instance, std::string witness,
                        std::string detail = "") {
        return Finding{std::move(claim), std::move(instance), false, std::move(witness),
                       std::move(detail)};
    }
};

using Findings = std::vector<Finding>;

inline bool all_pass(const Findings& fs) {
    for (const auto& f : fs)
        if (!f.pass) return false;
    return true;
}

}  // namespace qps
