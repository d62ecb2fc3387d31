#include "permkit/group_file.hpp"

#include <fstream>
#include <sstream>

#include "permkit/errors.hpp"

namespace permkit {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

} // namespace

GroupInput parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  int degree = 0;
  std::vector<Permutation> gens;
  bool have_degree = false;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (!have_degree) {
      if (line.rfind("degree:", 0) != 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 'degree: <n>' before generators");
      const std::string value = strip(line.substr(7));
      try {
        size_t used = 0;
        degree = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception &) {
        throw ParseError("line " + std::to_string(lineno) + ": bad degree '" + value + "'");
      }
      if (degree < 1)
        throw ParseError("line " + std::to_string(lineno) + ": degree must be >= 1");
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, degree));
    } catch (const ParseError &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_degree) throw ParseError("missing 'degree: <n>' line");
  if (gens.empty()) throw ParseError("no generator lines (use '()' for the trivial group)");
  return GroupInput{degree, std::move(gens)};
}

GroupInput read_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group_text(buf.str());
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_group(const GroupInput &g) {
  std::string out = "degree: " + std::to_string(g.degree) + "\n";
  for (const auto &gen : g.generators) out += format_cycles(gen) + "\n";
  return out;
}

} // namespace permkit
