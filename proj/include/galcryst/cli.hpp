#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galcryst::cli {

// args excludes the program name. Returns 0 on success, 1 on domain errors
// (JSON {"error": code, "message": ...} on err), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galcryst::cli
