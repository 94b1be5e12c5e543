#pragma once

#include <string>
#include <vector>

namespace wsd {

// Exit codes: 0 success, 1 usage error, 2 data/IO error.
int cli_main(int argc, const char* const* argv);
int cli_main(const std::vector<std::string>& args);

}  // namespace wsd
