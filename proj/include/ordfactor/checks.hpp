#pragma once

#include "ordfactor/instances.hpp"

#include <string>
#include <vector>

namespace ordfactor {

struct RunConfig {
    EnumConfig enumc;
    std::size_t cap_unique = 6;
    std::size_t cd_cap = 12;
};

// canonical order, duplicates dropped; "all" expands; throws InputError on unknown names
std::vector<std::string> expand_conditions(const std::string& list);
const std::vector<std::string>& known_conditions();

Report run_checks(const Loaded& l, const std::vector<std::string>& conditions, const RunConfig& cfg = {});

// the full battery: every condition plus the factorization law suite and structural properties
Report full_report(const Loaded& l, const RunConfig& cfg = {});

std::string format_text(const Report& r);
std::string format_json(const Report& r);
Report parse_json_report(const std::string& text); // throws InputError

} // namespace ordfactor
