#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "centerbound/bigint.hpp"
#include "centerbound/config.hpp"
#include "centerbound/error.hpp"
#include "centerbound/group.hpp"
#include "centerbound/perm.hpp"

namespace centerbound {

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

namespace detail {

inline void require_range(const std::string& family, long long value, long long lo, long long hi) {
  if (value < lo || value > hi)
    throw Error(ErrorCode::ArgOutOfRange, family + ": argument " + std::to_string(value) +
                                              " outside [" + std::to_string(lo) + ", " +
                                              std::to_string(hi) + "]");
}

inline void require_arity(const std::string& family, std::size_t got, std::size_t want) {
  if (got != want)
    throw Error(ErrorCode::ArgOutOfRange, family + " takes " + std::to_string(want) +
                                              " argument(s), got " + std::to_string(got));
}

// The permutation i ↦ f(i) on {0..n-1}.
template <class F>
Perm perm_from(std::size_t n, F&& f) {
  std::vector<Perm::Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Perm::Point>(f(i));
  return Perm::from_zero_based(std::move(img));
}

}  // namespace detail

/// ⟨(1 2 ... n)⟩ on n points.
inline Group cyclic_group(std::size_t n) {
  detail::require_range("cyclic", static_cast<long long>(n), 1, Perm::kMaxDegree);
  return Group(n, {detail::perm_from(n, [n](std::size_t i) { return (i + 1) % n; })});
}

/// Symmetries of the n-gon on n points; n = 1 gives C₂ on 2 points and
/// n = 2 the Klein four-group on 4 points.
inline Group dihedral_group(std::size_t n) {
  detail::require_range("dihedral", static_cast<long long>(n), 1, Perm::kMaxDegree);
  if (n == 1) return Group(2, {Perm::from_images({2, 1})});
  if (n == 2) return Group(4, {Perm::from_images({2, 1, 4, 3}), Perm::from_images({3, 4, 1, 2})});
  return Group(n, {detail::perm_from(n, [n](std::size_t i) { return (i + 1) % n; }),
                   detail::perm_from(n, [n](std::size_t i) { return (n - i) % n; })});
}

/// Dicyclic group ⟨a, x | a^{2n}, x² = a^n, x⁻¹ax = a⁻¹⟩ of order 4n, in its
/// regular action on the 4n words a^k x^j (point k + 2n·j).
inline Group dicyclic_group(std::size_t n) {
  detail::require_range("dicyclic", static_cast<long long>(n), 1, Perm::kMaxDegree / 4);
  const std::size_t m = 2 * n;
  // Right multiplication: a^k·a = a^{k+1}, a^k x·a = a^{k-1} x, a^k·x = a^k x, a^k x·x = a^{k+n}.
  auto a = detail::perm_from(2 * m, [m](std::size_t i) {
    return i < m ? (i + 1) % m : m + (i - m + m - 1) % m;
  });
  auto x = detail::perm_from(2 * m, [m, n](std::size_t i) {
    return i < m ? i + m : (i - m + n) % m;
  });
  return Group(2 * m, {a, x});
}

inline Group symmetric_group(std::size_t n) {
  detail::require_range("symmetric", static_cast<long long>(n), 1, 7);
  if (n == 1) return Group(1);
  return Group(n, {detail::perm_from(n, [](std::size_t i) { return i < 2 ? 1 - i : i; }),
                   detail::perm_from(n, [n](std::size_t i) { return (i + 1) % n; })});
}

/// Generated by the 3-cycles (i i+1 i+2).
inline Group alternating_group(std::size_t n) {
  detail::require_range("alternating", static_cast<long long>(n), 1, 7);
  std::vector<Perm> gens;
  for (std::size_t i = 0; i + 2 < n; ++i)
    gens.push_back(detail::perm_from(n, [i](std::size_t j) {
      if (j == i) return i + 1;
      if (j == i + 1) return i + 2;
      if (j == i + 2) return i;
      return j;
    }));
  return Group(n, std::move(gens));
}

/// C_p^k as k disjoint p-cycles on p·k points.
inline Group elem_abelian_group(std::uint64_t p, std::size_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::ArgOutOfRange, "elem_abelian: " + std::to_string(p) + " is not prime");
  detail::require_range("elem_abelian", static_cast<long long>(k), 1,
                        static_cast<long long>(Perm::kMaxDegree / p));
  const std::size_t n = static_cast<std::size_t>(p) * k;
  std::vector<Perm> gens;
  for (std::size_t b = 0; b < k; ++b)
    gens.push_back(detail::perm_from(n, [p, b](std::size_t i) {
      if (i / p != b) return i;
      return b * p + (i % p + 1) % p;
    }));
  return Group(n, std::move(gens));
}

/// Extraspecial group of order p³ as the maps (x, y) ↦ (x + a, y + b·x + c)
/// on p² points (point x·p + y); generated by x ↦ x+1 and y ↦ y+x.
inline Group heisenberg_group(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::ArgOutOfRange, "heisenberg: " + std::to_string(p) + " is not prime");
  detail::require_range("heisenberg", static_cast<long long>(p), 2, 255);
  const std::size_t q = p;
  return Group(q * q, {detail::perm_from(q * q, [q](std::size_t i) { return ((i / q + 1) % q) * q + i % q; }),
                       detail::perm_from(q * q, [q](std::size_t i) {
                         const std::size_t x = i / q, y = i % q;
                         return x * q + (y + x) % q;
                       })});
}

/// A × B on the disjoint union of the two domains.
inline Group direct_product(const Group& a, const Group& b) {
  const std::size_t n = a.degree() + b.degree();
  if (n > Perm::kMaxDegree)
    throw Error(ErrorCode::ArgOutOfRange, "direct_product: degree " + std::to_string(n) + " too large");
  std::vector<Perm> gens;
  for (const auto& g : a.generators())
    gens.push_back(detail::perm_from(n, [&](std::size_t i) { return i < a.degree() ? g[i] : i; }));
  for (const auto& g : b.generators())
    gens.push_back(detail::perm_from(n, [&](std::size_t i) {
      return i < a.degree() ? i : a.degree() + g[i - a.degree()];
    }));
  return Group(n, std::move(gens));
}

inline Group build_family(const std::string& name, const std::vector<long long>& args) {
  const std::size_t arity = name == "elem_abelian" ? 2 : 1;
  if (name == "direct_product") throw Error(ErrorCode::ArgOutOfRange, "direct_product takes group arguments");
  if (name != "cyclic" && name != "dihedral" && name != "dicyclic" && name != "symmetric" &&
      name != "alternating" && name != "elem_abelian" && name != "heisenberg")
    throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "'");
  detail::require_arity(name, args.size(), arity);
  for (long long a : args)
    if (a < 1) throw Error(ErrorCode::ArgOutOfRange, name + ": argument " + std::to_string(a) + " < 1");
  const auto n = static_cast<std::size_t>(args[0]);
  if (name == "cyclic") return cyclic_group(n);
  if (name == "dihedral") return dihedral_group(n);
  if (name == "dicyclic") return dicyclic_group(n);
  if (name == "symmetric") return symmetric_group(n);
  if (name == "alternating") return alternating_group(n);
  if (name == "heisenberg") return heisenberg_group(n);
  return elem_abelian_group(n, static_cast<std::size_t>(args[1]));
}

// ---------------------------------------------------------------------------
// Specs
// ---------------------------------------------------------------------------

/// name(arg, ...) where each argument is an integer or a nested expression.
struct FamilyExpr {
  std::string name;
  std::vector<std::variant<long long, FamilyExpr>> args;

  std::string text() const {
    std::string out = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      if (const auto* n = std::get_if<long long>(&args[i])) out += std::to_string(*n);
      else out += std::get<FamilyExpr>(args[i]).text();
    }
    return out + ")";
  }
};

struct GroupSpec {
  enum class Kind { family, file };
  Kind kind = Kind::family;
  FamilyExpr family;
  std::string path;
  std::string label;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  FamilyExpr parse() {
    FamilyExpr e = expr();
    skip();
    if (i_ != s_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "family expression '" + std::string(s_) + "' at column " + std::to_string(i_ + 1) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  FamilyExpr expr() {
    skip();
    FamilyExpr e;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      e.name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(s_[i_++]))));
    if (e.name.empty()) fail("expected a family name");
    expect('(');
    skip();
    if (i_ < s_.size() && s_[i_] == ')') {
      ++i_;
      return e;
    }
    for (;;) {
      skip();
      if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) {
        std::size_t used = 0;
        long long v = 0;
        try {
          v = std::stoll(std::string(s_.substr(i_)), &used);
        } catch (const std::exception&) {
          fail("bad integer");
        }
        i_ += used;
        e.args.emplace_back(v);
      } else {
        e.args.emplace_back(expr());
      }
      skip();
      if (i_ < s_.size() && s_[i_] == ',') {
        ++i_;
        continue;
      }
      expect(')');
      return e;
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline FamilyExpr parse_family_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// "family:dihedral(4)", "family:direct_product(symmetric(3),dihedral(4))" or "file:path".
inline GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  if (text.starts_with("family:")) {
    spec.kind = GroupSpec::Kind::family;
    spec.family = parse_family_expr(text.substr(7));
    spec.label = spec.family.text();
  } else if (text.starts_with("file:")) {
    spec.kind = GroupSpec::Kind::file;
    spec.path = std::string(text.substr(5));
    if (spec.path.empty()) throw Error(ErrorCode::ParseError, "empty file path in '" + std::string(text) + "'");
    spec.label = "file:" + spec.path;
  } else {
    throw Error(ErrorCode::ParseError, "group spec '" + std::string(text) + "' must start with family: or file:");
  }
  return spec;
}

inline GroupSpec family_spec(const std::string& text) { return parse_group_spec("family:" + text); }

inline Group build_family_expr(const FamilyExpr& e) {
  if (e.name == "direct_product") {
    if (e.args.size() != 2)
      throw Error(ErrorCode::ArgOutOfRange, "direct_product takes 2 arguments, got " + std::to_string(e.args.size()));
    const auto* a = std::get_if<FamilyExpr>(&e.args[0]);
    const auto* b = std::get_if<FamilyExpr>(&e.args[1]);
    if (!a || !b) throw Error(ErrorCode::ArgOutOfRange, "direct_product takes group arguments");
    return direct_product(build_family_expr(*a), build_family_expr(*b));
  }
  std::vector<long long> ints;
  for (const auto& arg : e.args) {
    const auto* n = std::get_if<long long>(&arg);
    if (!n) throw Error(ErrorCode::ArgOutOfRange, e.name + " takes integer arguments");
    ints.push_back(*n);
  }
  return build_family(e.name, ints);
}

// ---------------------------------------------------------------------------
// Group files
// ---------------------------------------------------------------------------

/// First meaningful line "degree N", then one generator per line in cycle
/// notation. Blank lines and text after '#' are ignored.
inline Group parse_group_text(std::string_view text, const std::string& source = "<text>") {
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string line(text.substr(pos, end == std::string_view::npos ? text.npos : end - pos));
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (!have_degree) {
      if (!line.starts_with("degree"))
        throw Error(ErrorCode::ParseError, where + "expected 'degree N'");
      const std::string rest = detail::trim(line.substr(6));
      std::size_t used = 0;
      long long n = 0;
      try {
        n = std::stoll(rest, &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, where + "bad degree '" + rest + "'");
      }
      if (used != rest.size() || n < 1 || n > static_cast<long long>(Perm::kMaxDegree))
        throw Error(ErrorCode::ParseError, where + "bad degree '" + rest + "'");
      degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, degree));
    } catch (const Error& e) {
      throw Error(e.code(), where + e.message());
    }
  }
  if (!have_degree) throw Error(ErrorCode::ParseError, source + ": missing 'degree N' line");
  return Group(degree, std::move(gens));
}

inline Group parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open group file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_group_text(text, path);
}

/// The inverse of parse_group_text.
inline std::string format_group_text(const Group& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& s : g.generators()) out += to_cycle_string(s) + "\n";
  return out;
}

inline Group build_group(const GroupSpec& spec) {
  if (spec.kind == GroupSpec::Kind::file) return parse_group_file(spec.path);
  return build_family_expr(spec.family);
}

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

struct Corpus {
  std::vector<GroupSpec> specs;
  Config config;
};

inline Corpus default_corpus() {
  Corpus c;
  auto add = [&](const std::string& text) { c.specs.push_back(family_spec(text)); };
  for (int n = 1; n <= 32; ++n) add("cyclic(" + std::to_string(n) + ")");
  for (int n = 1; n <= 32; ++n) add("dihedral(" + std::to_string(n) + ")");
  for (int n = 1; n <= 32; ++n) add("dicyclic(" + std::to_string(n) + ")");
  for (int n = 1; n <= 6; ++n) add("symmetric(" + std::to_string(n) + ")");
  for (int n = 3; n <= 6; ++n) add("alternating(" + std::to_string(n) + ")");
  for (int p : {2, 3, 5})
    for (int k = 1; k <= 3; ++k) add("elem_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")");
  for (int p : {2, 3, 5}) add("heisenberg(" + std::to_string(p) + ")");
  for (const char* text : {
           "direct_product(symmetric(3),dihedral(4))",
           "direct_product(symmetric(4),heisenberg(3))",
           "direct_product(symmetric(3),symmetric(3))",
           "direct_product(dihedral(4),dihedral(4))",
           "direct_product(dicyclic(2),cyclic(2))",
           "direct_product(heisenberg(3),heisenberg(3))",
           "direct_product(heisenberg(3),elem_abelian(3,1))",
           "direct_product(heisenberg(5),cyclic(5))",
           "direct_product(symmetric(4),symmetric(4))",
           "direct_product(symmetric(5),cyclic(3))",
           "direct_product(alternating(4),cyclic(3))",
           "direct_product(alternating(4),dicyclic(2))",
           "direct_product(alternating(5),dihedral(4))",
           "direct_product(dihedral(5),dicyclic(2))",
           "direct_product(symmetric(3),cyclic(4))",
           "direct_product(symmetric(4),cyclic(2))",
           "direct_product(symmetric(3),symmetric(4))",
           "direct_product(dicyclic(3),symmetric(3))",
           "direct_product(dihedral(8),heisenberg(3))",
           "direct_product(dihedral(4),direct_product(cyclic(2),cyclic(4)))",
           "direct_product(symmetric(3),direct_product(symmetric(3),symmetric(3)))",
           "direct_product(symmetric(4),heisenberg(5))",
           "direct_product(heisenberg(5),heisenberg(3))",
           "direct_product(heisenberg(5),symmetric(5))",
       })
    add(text);
  return c;
}

}  // namespace centerbound
