#pragma once

#include <map>
#include <string>
#include <vector>

namespace riesz {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

struct CaseResult {
    std::string name;
    std::map<std::string, double> params;
    double value = 0.0;
    double error = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

/// Aggregated result of one verification sweep. worst_margin is the smallest
/// signed margin over all cases (its meaning is per check: |value| - k*error
/// for sign checks, an offset slack for containment checks).
struct LemmaReport {
    std::string lemma_id;
    std::map<std::string, double> params;
    std::vector<CaseResult> cases;
    double worst_margin = 0.0;

    bool all_pass() const {
        for (const auto& c : cases)
            if (c.verdict != Verdict::Pass) return false;
        return true;
    }
    Verdict overall() const {
        bool inconclusive = false;
        for (const auto& c : cases) {
            if (c.verdict == Verdict::Fail) return Verdict::Fail;
            if (c.verdict == Verdict::Inconclusive) inconclusive = true;
        }
        return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
    }
};

}  // namespace riesz
