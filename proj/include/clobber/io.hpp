#pragma once

#include <string>
#include <vector>

#include "clobber/board.hpp"

namespace clobber {

// Board text: optional header `clobber v1 anchor=<0|1>` then rows of B/W/.
// Without a header the anchor defaults to 0.
Configuration parse_board(const std::string& text);
std::string format_board(const Configuration& cfg);

// Plan text: `W r1 c1 r2 c2` per line; lines starting with `#` are comments.
// Leading comment lines become the plan metadata.
Plan parse_plan(const std::string& text);
std::string format_plan(const Plan& plan);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace clobber
