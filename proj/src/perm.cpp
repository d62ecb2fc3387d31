#include "permkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "permkit/errors.hpp"

namespace permkit {

Permutation::Permutation(int degree) {
  if (degree < 1) throw DomainError("permutation degree must be >= 1");
  images_.resize(static_cast<size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw DomainError("permutation degree must be >= 1");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n)
      throw DomainError("image value " + std::to_string(v) + " out of range 1.." +
                        std::to_string(n));
    if (seen[static_cast<size_t>(v)])
      throw DomainError("image value " + std::to_string(v) + " repeated; not a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
  return Permutation(std::move(images), true);
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv), true);
}

Permutation Permutation::power(const BigInt &e) const {
  std::vector<int> out(images_.size());
  std::vector<char> done(images_.size() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<size_t>(start)]) continue;
    std::vector<int> cyc;
    int p = start;
    do {
      cyc.push_back(p);
      done[static_cast<size_t>(p)] = 1;
      p = (*this)(p);
    } while (p != start);
    const auto len = static_cast<long long>(cyc.size());
    long long shift = static_cast<long long>(e % len);
    if (shift < 0) shift += len;
    for (size_t j = 0; j < cyc.size(); ++j)
      out[static_cast<size_t>(cyc[j]) - 1] =
          cyc[(j + static_cast<size_t>(shift)) % cyc.size()];
  }
  return Permutation(std::move(out), true);
}

BigInt Permutation::order() const {
  BigInt ord = 1;
  for (const auto &cyc : cycles())
    ord = boost::multiprecision::lcm(ord, BigInt(cyc.size()));
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> done(images_.size() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<size_t>(start)] || (*this)(start) == start) continue;
    std::vector<int> cyc;
    int p = start;
    do {
      cyc.push_back(p);
      done[static_cast<size_t>(p)] = 1;
      p = (*this)(p);
    } while (p != start);
    out.push_back(std::move(cyc)); // starts at its minimum: start is unvisited-smallest
  }
  return out;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>> &cycles) {
  Permutation id(degree);
  std::vector<int> images = id.images_;
  std::vector<char> used(static_cast<size_t>(degree) + 1, 0);
  for (const auto &cyc : cycles) {
    for (int p : cyc) {
      if (p < 1 || p > degree)
        throw DomainError("cycle point " + std::to_string(p) + " out of range 1.." +
                          std::to_string(degree));
      if (used[static_cast<size_t>(p)])
        throw DomainError("cycle point " + std::to_string(p) + " repeated");
      used[static_cast<size_t>(p)] = 1;
    }
    for (size_t j = 0; j < cyc.size(); ++j)
      images[static_cast<size_t>(cyc[j]) - 1] = cyc[(j + 1) % cyc.size()];
  }
  return Permutation(std::move(images), true);
}

bool operator<(const Permutation &a, const Permutation &b) {
  return a.images_ < b.images_;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw DomainError("degree mismatch in composition: " + std::to_string(p.degree()) +
                      " vs " + std::to_string(q.degree()));
  std::vector<int> images(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    images[static_cast<size_t>(i) - 1] = p(q(i));
  return Permutation(std::move(images), true); // bijections compose to a bijection
}

int fix_count(const Permutation &g) {
  int f = 0;
  for (int i = 1; i <= g.degree(); ++i)
    if (g(i) == i) ++f;
  return f;
}

int move_count(const Permutation &g) { return g.degree() - fix_count(g); }

std::vector<int> moved_points(const Permutation &g) {
  std::vector<int> out;
  for (int i = 1; i <= g.degree(); ++i)
    if (g(i) != i) out.push_back(i);
  return out;
}

namespace {

struct CycleLexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }
};

} // namespace

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1) throw DomainError("permutation degree must be >= 1");
  std::vector<std::vector<int>> cycles;
  std::vector<char> used(static_cast<size_t>(degree) + 1, 0);
  CycleLexer lex{text};
  while (!lex.done()) {
    if (lex.peek() != '(')
      throw ParseError(std::string("expected '(' but found '") + lex.peek() +
                       "' in cycle notation");
    ++lex.pos;
    std::vector<int> cyc;
    while (true) {
      lex.skip_ws();
      if (lex.pos >= lex.text.size())
        throw ParseError("unterminated cycle: missing ')'");
      if (lex.peek() == ')') {
        ++lex.pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
        throw ParseError(std::string("unexpected character '") + lex.peek() +
                         "' inside cycle");
      size_t start = lex.pos;
      while (lex.pos < lex.text.size() &&
             std::isdigit(static_cast<unsigned char>(lex.text[lex.pos])))
        ++lex.pos;
      const std::string tok(lex.text.substr(start, lex.pos - start));
      long long v = 0;
      try {
        v = std::stoll(tok);
      } catch (const std::exception &) {
        throw ParseError("point '" + tok + "' is not a valid integer");
      }
      if (v < 1 || v > degree)
        throw ParseError("point '" + tok + "' out of range 1.." + std::to_string(degree));
      if (used[static_cast<size_t>(v)])
        throw ParseError("repeated point '" + tok + "' in cycle notation");
      used[static_cast<size_t>(v)] = 1;
      cyc.push_back(static_cast<int>(v));
    }
    if (cyc.size() == 1)
      throw ParseError("cycle of length 1 containing point '" +
                       std::to_string(cyc[0]) + "'; fixed points are implicit");
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string format_cycles(const Permutation &g) {
  const auto cycs = g.cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto &cyc : cycs) {
    out += '(';
    for (size_t j = 0; j < cyc.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(cyc[j]);
    }
    out += ')';
  }
  return out;
}

size_t PermHash::operator()(const Permutation &g) const {
  // FNV-1a over image values
  size_t h = 1469598103934665603ull;
  for (int v : g.images()) {
    h ^= static_cast<size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace permkit
