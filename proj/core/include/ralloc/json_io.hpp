#pragma once

#include <filesystem>
#include <string>

#include "ralloc/instance.hpp"
#include "ralloc/instance_gen.hpp"
#include "ralloc/report.hpp"

namespace ralloc {

/// Instance document:
///   {"n": int, "B": int, "M": number, "b": [int...],
///    "costs": [[number...]...], "convex": bool}
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);  // validated on load

Instance load_instance_file(const std::filesystem::path& path);
void save_instance_file(const Instance& instance,
                        const std::filesystem::path& path);

/// Report document mirrors SolveReport; true_objective is omitted when
/// unknown, trace entries carry bound matrices only on verbose runs.
std::string report_to_json(const SolveReport& report);

GenSpec gen_spec_from_json(const std::string& text);

}  // namespace ralloc
