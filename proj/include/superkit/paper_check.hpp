#pragma once

#include "superkit/consistency.hpp"

#include <string>
#include <vector>

namespace superkit {

struct IdentityCheck {
    std::string id;
    bool match = false;
    std::vector<std::string> diff;  // term-level differences when not matching
};

/// Recomputation of the displayed identities from first principles, diffed
/// against their printed forms. Mismatches are findings, not failures.
struct PaperCheckReport {
    ConjugationPolicy policy;
    PushforwardConvention convention;
    std::vector<IdentityCheck> checks;
    std::vector<std::string> notes;

    const IdentityCheck& check(const std::string& id) const;
    std::vector<std::string> mismatched_ids() const;
};

PaperCheckReport paper_check(ConjugationPolicy policy, PushforwardConvention conv);

const char* policy_str(ConjugationPolicy p);
const char* convention_str(PushforwardConvention c);
ConjugationPolicy parse_policy(const std::string& s);
PushforwardConvention parse_convention(const std::string& s);

}  // namespace superkit
