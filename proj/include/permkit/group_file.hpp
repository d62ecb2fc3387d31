#ifndef PERMKIT_GROUP_FILE_HPP
#define PERMKIT_GROUP_FILE_HPP

#include <string>
#include <string_view>

#include "permkit/bsgs.hpp"

namespace permkit {

/// Group file format:
///   degree: <n>
///   (1 2 3)(4 5)      # one generator per line, cycle notation
/// '#' starts a comment, blank lines are ignored. At least one generator
/// line is required ("()" for the trivial group).
GroupInput parse_group_text(std::string_view text);

GroupInput read_group_file(const std::string &path);

std::string format_group(const GroupInput &g);

} // namespace permkit

#endif
