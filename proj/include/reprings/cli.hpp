#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reprings::cli {

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResourceError = 3;

// args excludes the program name. Writes one JSON document
// {"command", "inputs_echo", "result"} to out on success and a diagnostic to
// err otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reprings::cli
