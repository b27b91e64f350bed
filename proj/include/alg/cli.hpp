#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alg/encoding.hpp"
#include "alg/error.hpp"
#include "alg/serialize.hpp"

namespace alg::cli {

struct Location {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
};

/// Parse and execution diagnostics.
class SpecError : public Error {
 public:
  SpecError(Location loc, const std::string& message)
      : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": error: " + message), loc_(loc) {}
  const Location& location() const { return loc_; }

 private:
  Location loc_;
};

enum class NodeKind { Ring, Module, Set, Sub, Query };

/// One declaration or query line.
///
///   ring   forms: zmod, product, quotient, idealization
///   module forms: regular, cyclic, product, direct_sum, quotient
///   set    form:  list
///   sub    forms: list, gen
///   query  forms: classify, s_primary, s_prime, suite, search
struct Node {
  NodeKind kind = NodeKind::Ring;
  std::string name;                 // declared name; empty for queries
  std::string form;
  std::vector<std::string> refs;    // referenced names, in source order
  std::int64_t number = 0;          // zmod N, zmod D over R
  std::vector<Encoding> elements;   // element literals
  std::string target;               // suite property or search target
  std::vector<std::pair<std::string, std::int64_t>> options;  // key=value, in source order
  Location loc;
};

struct SpecDocument {
  std::vector<Node> nodes;
};

/// Structural equality ignoring locations.
bool same_ast(const SpecDocument& a, const SpecDocument& b);

/// Throws SpecError with the position of the first problem: lexical,
/// syntactic, undeclared or redeclared name, or a reference of the wrong kind.
SpecDocument parse_spec(std::string_view text);

/// Canonical source text; parse_spec(print_spec(d)) is same_ast to d.
std::string print_spec(const SpecDocument& doc);

struct ExecOptions {
  bool parallel = true;
};

struct ExecResult {
  int exit_code = 0;  // 0 ok, 1 a suite failed, 2 input error
  Json report;        // {"queries":[...]}
  std::string text;   // human-readable report
  std::string diagnostic;
};

/// Builds the declared objects and runs the queries in order. Construction
/// errors stop execution with exit code 2 and a located diagnostic.
ExecResult execute(const SpecDocument& doc, const ExecOptions& opts = {});

}  // namespace alg::cli
