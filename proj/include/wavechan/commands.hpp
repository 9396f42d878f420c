#pragma once

#include <string>

#include "wavechan/scenario.hpp"

namespace wavechan {

// Each command writes its CSV products plus a metadata.json into out_dir and
// returns a process exit status.
int cmd_bounds(const Scenario& scn, const std::string& out_dir);
int cmd_count(const Scenario& scn, const std::string& out_dir);
int cmd_capacity(const Scenario& scn, const std::string& out_dir);
int cmd_oracle(const Scenario& scn, const std::string& out_dir);
int cmd_verify(const std::string& scenario_dir);

}  // namespace wavechan
