#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qplab/series_cache.hpp"

// The verify-paper checklist: every published constant, closed form and
// threshold the library reproduces, one named check each.
struct VerifyResult {
    bool ok = true;
    std::string message;  // shown after the status line; notes and errata
};

struct VerifyCheck {
    std::string name;
    std::function<VerifyResult(const qplab::SeriesCache&, int jobs)> run;
};

std::vector<VerifyCheck> verify_checks();
