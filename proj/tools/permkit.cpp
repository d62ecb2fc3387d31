// permkit: command-line driver for the permutation-group toolkit.
//
// Exit codes: 0 = yes / success, 1 = correct "no" answer, 2 = usage or parse
// error, 3 = resource cap exceeded, 4 = internal verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "permkit/bsgs.hpp"
#include "permkit/coset_fpf.hpp"
#include "permkit/errors.hpp"
#include "permkit/group_file.hpp"
#include "permkit/kbase.hpp"
#include "permkit/kmove.hpp"
#include "permkit/move_opt.hpp"
#include "permkit/numeric.hpp"
#include "permkit/oracle.hpp"
#include "permkit/perm.hpp"

using permkit::BigInt;
using permkit::Permutation;
using permkit::Rational;
using permkit::StabilizerChain;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

std::string fnv1a_hex(const std::string &bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Options {
  std::string group_path;
  std::string pi_text;
  bool have_pi = false;
  int k = 0;
  int b = 0;
  int point = 0;
  bool have_point = false;
  std::string delta_text;
  bool have_delta = false;
  int cap = 0;
  bool have_cap = false;
  bool json = false;
};

struct Context {
  permkit::GroupInput group;
  std::string digest;
  const Options &opt;
  std::string command;

  Permutation pi() const {
    if (!opt.have_pi) return Permutation(group.degree);
    return permkit::parse_cycles(opt.pi_text, group.degree);
  }

  std::vector<int> delta() const {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(opt.delta_text);
    std::string normalized = opt.delta_text;
    for (auto &c : normalized)
      if (c == ',') c = ' ';
    std::istringstream sin(normalized);
    while (sin >> tok) {
      try {
        size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception &) {
        throw permkit::ParseError("bad point '" + tok + "' in --delta");
      }
    }
    if (out.empty()) throw permkit::ParseError("--delta lists no points");
    return out;
  }

  permkit::FpfOptions fpf_options() const {
    permkit::FpfOptions f;
    if (opt.have_cap) f.degree_cap = opt.cap;
    return f;
  }

  BigInt oracle_cap() const { return opt.have_cap ? BigInt(opt.cap) : BigInt(1000000); }
};

class Emitter {
public:
  Emitter(const Context &ctx) : json_(ctx.opt.json) {
    doc_["command"] = ctx.command;
    doc_["input-digest"] = ctx.digest;
  }

  void field(const std::string &key, const std::string &value, bool bare = false) {
    doc_[key] = value;
    if (bare)
      lines_.push_back(value);
    else
      lines_.push_back(key + ": " + value);
  }

  void field(const std::string &key, int value) {
    doc_[key] = value;
    lines_.push_back(key + ": " + std::to_string(value));
  }

  void field_points(const std::string &key, const std::vector<int> &points) {
    doc_[key] = points;
    std::string line = key + ":";
    for (int p : points) line += " " + std::to_string(p);
    lines_.push_back(line);
  }

  void field_strings(const std::string &key, const std::string &line_key,
                     const std::vector<std::string> &values) {
    doc_[key] = values;
    for (const auto &v : values) lines_.push_back(line_key + ": " + v);
  }

  void answer(bool yes) { field("answer", yes ? "yes" : "no", true); }

  void orbit_blocks(const std::vector<std::vector<int>> &orbs) {
    doc_["orbits"] = orbs;
    std::string line;
    for (const auto &orb : orbs) {
      if (!line.empty()) line += ' ';
      line += '{';
      for (size_t i = 0; i < orb.size(); ++i) {
        if (i) line += ',';
        line += std::to_string(orb[i]);
      }
      line += '}';
    }
    lines_.push_back(line);
  }

  void print() const {
    if (json_) {
      std::cout << doc_.dump() << "\n";
    } else {
      for (const auto &l : lines_) std::cout << l << "\n";
    }
  }

private:
  bool json_;
  ordered_json doc_;
  std::vector<std::string> lines_;
};

std::string witness_string(const Permutation &w) {
  const std::string text = permkit::format_cycles(w);
  if (permkit::parse_cycles(text, w.degree()) != w)
    throw permkit::InternalError("witness does not round-trip through cycle notation");
  return text;
}

int run_orbits(const Context &ctx) {
  Emitter out(ctx);
  out.orbit_blocks(permkit::orbits(ctx.group));
  out.print();
  return kExitYes;
}

int run_order(const Context &ctx) {
  Emitter out(ctx);
  out.field("order", permkit::to_string(permkit::build_chain(ctx.group).order()), true);
  out.print();
  return kExitYes;
}

int run_member(const Context &ctx) {
  if (!ctx.opt.have_pi) throw permkit::ParseError("member requires --pi");
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  const bool yes = chain.contains(ctx.pi());
  Emitter out(ctx);
  out.answer(yes);
  out.print();
  return yes ? kExitYes : kExitNo;
}

int run_stab(const Context &ctx) {
  if (ctx.opt.have_point == ctx.opt.have_delta)
    throw permkit::ParseError("stab requires exactly one of --point or --delta");
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  std::vector<int> fixed =
      ctx.opt.have_point ? std::vector<int>{ctx.opt.point} : ctx.delta();
  for (int p : fixed)
    if (p < 1 || p > ctx.group.degree)
      throw permkit::ParseError("point " + std::to_string(p) + " out of range 1.." +
                                std::to_string(ctx.group.degree));
  const StabilizerChain stab = permkit::pointwise_stabilizer(chain, fixed);
  Emitter out(ctx);
  out.field_points("fixed", fixed);
  out.field("order", permkit::to_string(stab.order()));
  std::vector<std::string> gens;
  for (const auto &g : stab.group_generators()) gens.push_back(permkit::format_cycles(g));
  out.field_strings("generators", "generator", gens);
  out.print();
  return kExitYes;
}

int run_expected_move(const Context &ctx) {
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  Emitter out(ctx);
  out.field("expected-move", permkit::to_string(permkit::expected_move(chain, ctx.pi())),
            true);
  out.print();
  return kExitYes;
}

int run_max_move(const Context &ctx) {
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  const Permutation pi = ctx.pi();
  const Rational expected = permkit::expected_move(chain, pi);
  const Permutation w = permkit::max_move_element(chain, pi);
  if (Rational(permkit::move_count(w)) < expected ||
      !chain.contains(permkit::compose(w, pi.inverse())))
    throw permkit::InternalError("max-move witness fails verification");
  Emitter out(ctx);
  out.field("witness", witness_string(w));
  out.field("moved", permkit::move_count(w));
  out.field("expected-move", permkit::to_string(expected));
  out.print();
  return kExitYes;
}

int run_fpf_transitive(const Context &ctx) {
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  const Permutation w = permkit::fpf_transitive(chain);
  if (permkit::fix_count(w) != 0 || !chain.contains(w))
    throw permkit::InternalError("fpf-transitive witness fails verification");
  Emitter out(ctx);
  out.field("witness", witness_string(w));
  out.field("moved", permkit::move_count(w));
  out.print();
  return kExitYes;
}

int run_fpf_coset(const Context &ctx) {
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  const Permutation pi = ctx.pi();
  const auto w = permkit::find_fpf(chain, pi, ctx.fpf_options());
  Emitter out(ctx);
  if (!w) {
    out.answer(false);
    out.print();
    return kExitNo;
  }
  if (permkit::fix_count(*w) != 0 ||
      !chain.contains(permkit::compose(*w, pi.inverse())))
    throw permkit::InternalError("fpf-coset witness fails verification");
  out.answer(true);
  out.field("witness", witness_string(*w));
  out.print();
  return kExitYes;
}

int run_count_nonfpf(const Context &ctx) {
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  const BigInt order = chain.order();
  const BigInt non_fpf = permkit::count_non_fpf(chain, ctx.pi(), ctx.fpf_options());
  Emitter out(ctx);
  out.field("non-fpf", permkit::to_string(non_fpf));
  out.field("fpf", permkit::to_string(BigInt(order - non_fpf)));
  out.field("order", permkit::to_string(order));
  out.print();
  return kExitYes;
}

int run_kmove(const Context &ctx) {
  if (ctx.opt.k < 1) throw permkit::ParseError("k-move requires --k >= 1");
  const auto w =
      permkit::solve_kmove(permkit::KMoveInstance{ctx.group, ctx.opt.k}, ctx.fpf_options());
  Emitter out(ctx);
  if (!w) {
    out.answer(false);
    out.print();
    return kExitNo;
  }
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  if (permkit::move_count(*w) < ctx.opt.k || !chain.contains(*w))
    throw permkit::InternalError("k-move witness fails verification");
  out.answer(true);
  out.field("witness", witness_string(*w));
  out.field("moved", permkit::move_count(*w));
  out.print();
  return kExitYes;
}

int run_kernel(const Context &ctx) {
  if (ctx.opt.k < 1) throw permkit::ParseError("kernel requires --k >= 1");
  const auto kr = permkit::kernelize(permkit::KMoveInstance{ctx.group, ctx.opt.k});
  Emitter out(ctx);
  if (kr.is_witness()) {
    const StabilizerChain chain = permkit::build_chain(ctx.group);
    if (permkit::move_count(*kr.witness) < ctx.opt.k || !chain.contains(*kr.witness))
      throw permkit::InternalError("kernel witness fails verification");
    out.answer(true);
    out.field("witness", witness_string(*kr.witness));
    out.field("moved", permkit::move_count(*kr.witness));
    out.print();
    return kExitYes;
  }
  out.field("kernel-degree", kr.kernel_degree);
  std::vector<std::string> gens;
  for (const auto &g : kr.kernel_generators) gens.push_back(permkit::format_cycles(g));
  out.field_strings("kernel-generators", "generator", gens);
  out.field_points("support", kr.support_points);
  out.print();
  return kExitYes;
}

int verify_and_print_base(const Context &ctx, const StabilizerChain &chain,
                          const std::optional<std::vector<int>> &base) {
  Emitter out(ctx);
  if (!base) {
    out.answer(false);
    out.print();
    return kExitNo;
  }
  if (static_cast<int>(base->size()) > ctx.opt.k || !permkit::is_base(chain, *base))
    throw permkit::InternalError("returned base fails verification");
  out.answer(true);
  out.field_points("base", *base);
  out.print();
  return kExitYes;
}

int run_kbase_brute(const Context &ctx) {
  if (ctx.opt.k < 0) throw permkit::ParseError("k-base-brute requires --k >= 0");
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  return verify_and_print_base(ctx, chain, permkit::brute_force_kbase(chain, ctx.opt.k));
}

int run_kbase_cyclic(const Context &ctx) {
  if (ctx.opt.k < 1) throw permkit::ParseError("k-base-cyclic requires --k >= 1");
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  return verify_and_print_base(ctx, chain, permkit::cyclic_kbase(ctx.group, ctx.opt.k));
}

int run_kbase_bounded(const Context &ctx) {
  if (ctx.opt.k < 1) throw permkit::ParseError("k-base-bounded requires --k >= 1");
  if (ctx.opt.b < 1) throw permkit::ParseError("k-base-bounded requires --b >= 1");
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  return verify_and_print_base(
      ctx, chain, permkit::bounded_orbit_kbase(ctx.group, ctx.opt.k, ctx.opt.b));
}

int run_oracle_stats(const Context &ctx) {
  const StabilizerChain chain = permkit::build_chain(ctx.group);
  const permkit::GroupTable table = permkit::enumerate_group(chain, ctx.oracle_cap());
  const Permutation pi = ctx.pi();
  const permkit::CosetStats st = permkit::stats(table, pi);
  Emitter out(ctx);
  out.field("order", permkit::to_string(chain.order()));
  out.field("fpf-count", permkit::to_string(st.fpf_count));
  out.field("sum-move", permkit::to_string(st.sum_move));
  out.field("max-move", st.max_move);
  if (st.min_base_size) out.field("min-base-size", *st.min_base_size);
  out.print();
  return kExitYes;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"permkit: permutation group algorithms on stabilizer chains"};
  app.require_subcommand(1);

  Options opt;
  struct Cmd {
    std::string name;
    int (*fn)(const Context &);
  };
  std::vector<Cmd> table = {
      {"orbits", run_orbits},
      {"order", run_order},
      {"member", run_member},
      {"stab", run_stab},
      {"expected-move", run_expected_move},
      {"max-move", run_max_move},
      {"fpf-transitive", run_fpf_transitive},
      {"fpf-coset", run_fpf_coset},
      {"count-nonfpf", run_count_nonfpf},
      {"k-move", run_kmove},
      {"kernel", run_kernel},
      {"k-base-brute", run_kbase_brute},
      {"k-base-cyclic", run_kbase_cyclic},
      {"k-base-bounded", run_kbase_bounded},
      {"oracle-stats", run_oracle_stats},
  };
  const std::string descr[] = {
      "orbit partition of the group",
      "group order from a stabilizer chain",
      "membership test for --pi",
      "order and generators of a point(wise) stabilizer",
      "exact average number of moved points over the coset G*pi",
      "element of G*pi moving at least the average number of points",
      "fixed-point-free element of a transitive group",
      "fixed-point-free element of the coset G*pi, if any",
      "inclusion-exclusion count of coset elements with a fixed point",
      "element moving at least k points, if any",
      "kernelization of the k-move instance",
      "smallest base of size <= k by exhaustive search",
      "base of size <= k for a cyclic group",
      "base of size <= k for a group with orbits of size <= b",
      "exhaustive coset statistics (order, derangements, moves, minimum base)",
  };

  for (size_t i = 0; i < table.size(); ++i) {
    CLI::App *sub = app.add_subcommand(table[i].name, descr[i]);
    sub->add_option("--group", opt.group_path, "group file")->required();
    sub->add_flag("--json", opt.json, "emit a single JSON object");
    const std::string &name = table[i].name;
    if (name == "member" || name == "expected-move" || name == "max-move" ||
        name == "fpf-coset" || name == "count-nonfpf" || name == "oracle-stats")
      sub->add_option("--pi", opt.pi_text, "permutation in cycle notation")
          ->each([&opt](const std::string &) { opt.have_pi = true; });
    if (name == "k-move" || name == "kernel" || name == "k-base-brute" ||
        name == "k-base-cyclic" || name == "k-base-bounded")
      sub->add_option("--k", opt.k, "parameter k")->required();
    if (name == "k-base-bounded")
      sub->add_option("--b", opt.b, "orbit size bound")->required();
    if (name == "stab") {
      sub->add_option("--point", opt.point, "single point to stabilize")
          ->each([&opt](const std::string &) { opt.have_point = true; });
      sub->add_option("--delta", opt.delta_text, "comma-separated points to fix")
          ->each([&opt](const std::string &) { opt.have_delta = true; });
    }
    if (name == "fpf-coset" || name == "count-nonfpf" || name == "k-move")
      sub->add_option("--cap", opt.cap, "inclusion-exclusion degree cap (default 24)")
          ->each([&opt](const std::string &) { opt.have_cap = true; });
    if (name == "oracle-stats")
      sub->add_option("--cap", opt.cap, "enumeration cap in elements (default 10^6)")
          ->each([&opt](const std::string &) { opt.have_cap = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::ifstream in(opt.group_path, std::ios::binary);
    if (!in) throw permkit::ParseError("cannot open group file '" + opt.group_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    Context ctx{permkit::parse_group_text(bytes), fnv1a_hex(bytes), opt, ""};
    for (const auto &cmd : table) {
      if (app.got_subcommand(cmd.name)) {
        ctx.command = cmd.name;
        return cmd.fn(ctx);
      }
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const permkit::ResourceError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const permkit::InternalError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const permkit::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const permkit::DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
