#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csg::cli {

/// Exit status: 0 success, 1 domain infeasibility, 2 bad input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace csg::cli
