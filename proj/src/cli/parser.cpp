#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "alg/cli.hpp"
#include "alg/verify.hpp"

namespace alg::cli {

namespace {

enum class Tok { Word, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  Location loc;
};

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' || c == '\'';
}

std::vector<Token> lex_line(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const Location loc{lineno, i + 1};
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (word_start(c)) {
      const std::size_t j = i;
      while (i < line.size() && word_char(line[i])) ++i;
      out.push_back({Tok::Word, std::string(line.substr(j, i - j)), 0, loc});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
      const std::size_t j = i;
      ++i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      Token t{Tok::Int, std::string(line.substr(j, i - j)), 0, loc};
      const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) throw SpecError(loc, "integer literal out of range");
      out.push_back(std::move(t));
      continue;
    }
    if (std::string_view("=(){},").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), 0, loc});
      ++i;
      continue;
    }
    throw SpecError(loc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", 0, Location{lineno, line.size() + 1}});
  return out;
}

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Ring: return "ring";
    case NodeKind::Module: return "module";
    case NodeKind::Set: return "set";
    case NodeKind::Sub: return "sub";
    case NodeKind::Query: return "query";
  }
  return "?";
}

bool is_identifier(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c != '.' && c != '-'; });
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::map<std::string, NodeKind>& names)
      : toks_(std::move(toks)), names_(names) {}

  bool blank() const { return toks_.front().kind == Tok::End; }

  Node parse() {
    const Token head = expect_word("a declaration keyword (ring, module, set, sub, query)");
    Node n;
    n.loc = head.loc;
    if (head.text == "ring") ring(n);
    else if (head.text == "module") module(n);
    else if (head.text == "set") set(n);
    else if (head.text == "sub") sub(n);
    else if (head.text == "query") query(n);
    else throw SpecError(head.loc, "expected a declaration keyword (ring, module, set, sub, query), found '" + head.text + "'");
    if (peek().kind != Tok::End) throw SpecError(peek().loc, "expected end of line, found '" + peek().text + "'");
    if (n.kind != NodeKind::Query) names_[n.name] = n.kind;
    return n;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void expected(const std::string& what) const {
    const Token& t = peek();
    throw SpecError(t.loc, "expected " + what + (t.kind == Tok::End ? ", found end of line" : ", found '" + t.text + "'"));
  }

  Token expect_word(const std::string& what) {
    if (peek().kind != Tok::Word) expected(what);
    return next();
  }

  void expect_keyword(const char* kw) {
    if (peek().kind != Tok::Word || peek().text != kw) expected(std::string("'") + kw + "'");
    next();
  }

  void expect_punct(char c) {
    if (peek().kind != Tok::Punct || peek().text[0] != c) expected(std::string("'") + c + "'");
    next();
  }

  bool accept_punct(char c) {
    if (peek().kind == Tok::Punct && peek().text[0] == c) {
      next();
      return true;
    }
    return false;
  }

  std::int64_t expect_int(const std::string& what) {
    if (peek().kind != Tok::Int) expected(what);
    return next().value;
  }

  void declare(Node& n, NodeKind kind) {
    n.kind = kind;
    const Token t = expect_word(std::string(kind_name(kind)) + " name");
    if (!is_identifier(t.text)) throw SpecError(t.loc, "'" + t.text + "' is not a valid name");
    if (names_.count(t.text)) throw SpecError(t.loc, "'" + t.text + "' is already declared");
    n.name = t.text;
  }

  void reference(Node& n, NodeKind want) {
    const Token t = expect_word(std::string(kind_name(want)) + " name");
    const auto it = names_.find(t.text);
    if (it == names_.end()) throw SpecError(t.loc, "'" + t.text + "' is not declared");
    if (it->second != want)
      throw SpecError(t.loc, "'" + t.text + "' is a " + kind_name(it->second) + ", expected a " + kind_name(want));
    n.refs.push_back(t.text);
  }

  /// "(" REF, REF, ... ")" with the given kinds; an empty kinds list means
  /// two or more references of kind `rest`.
  void ref_list(Node& n, std::vector<NodeKind> kinds, NodeKind rest) {
    expect_punct('(');
    if (!kinds.empty()) {
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i) expect_punct(',');
        reference(n, kinds[i]);
      }
    } else {
      reference(n, rest);
      do {
        expect_punct(',');
        reference(n, rest);
      } while (peek().kind == Tok::Punct && peek().text == ",");
    }
    expect_punct(')');
  }

  Encoding element() {
    if (peek().kind == Tok::Int) return Encoding::integer(next().value);
    if (!accept_punct('(')) expected("an element (integer or tuple)");
    std::vector<Encoding> items{element()};
    while (accept_punct(',')) items.push_back(element());
    expect_punct(')');
    return Encoding::tuple(std::move(items));
  }

  std::vector<Encoding> element_list() {
    expect_punct('{');
    std::vector<Encoding> out;
    if (accept_punct('}')) return out;
    out.push_back(element());
    while (accept_punct(',')) out.push_back(element());
    expect_punct('}');
    return out;
  }

  void ring(Node& n) {
    declare(n, NodeKind::Ring);
    expect_punct('=');
    const Token form = expect_word("a ring form (zmod, product, quotient, idealization)");
    n.form = form.text;
    if (form.text == "zmod") n.number = expect_int("a modulus");
    else if (form.text == "product") ref_list(n, {}, NodeKind::Ring);
    else if (form.text == "quotient") ref_list(n, {NodeKind::Ring, NodeKind::Sub}, NodeKind::Ring);
    else if (form.text == "idealization") ref_list(n, {NodeKind::Ring, NodeKind::Module}, NodeKind::Ring);
    else throw SpecError(form.loc, "expected a ring form (zmod, product, quotient, idealization), found '" + form.text + "'");
  }

  void module(Node& n) {
    declare(n, NodeKind::Module);
    expect_punct('=');
    const Token form = expect_word("a module form (regular, zmod, product, quotient)");
    if (form.text == "regular") {
      n.form = "regular";
      reference(n, NodeKind::Ring);
    } else if (form.text == "zmod") {
      n.form = "cyclic";
      n.number = expect_int("a cyclic order");
      expect_keyword("over");
      reference(n, NodeKind::Ring);
    } else if (form.text == "product") {
      n.form = "product";
      ref_list(n, {}, NodeKind::Module);
      if (peek().kind == Tok::Word && peek().text == "over") {
        next();
        n.form = "direct_sum";
        reference(n, NodeKind::Ring);
      }
    } else if (form.text == "quotient") {
      n.form = "quotient";
      ref_list(n, {NodeKind::Module, NodeKind::Sub}, NodeKind::Module);
    } else {
      throw SpecError(form.loc, "expected a module form (regular, zmod, product, quotient), found '" + form.text + "'");
    }
  }

  void set(Node& n) {
    declare(n, NodeKind::Set);
    n.form = "list";
    expect_keyword("in");
    reference(n, NodeKind::Ring);
    expect_punct('=');
    n.elements = element_list();
  }

  void sub(Node& n) {
    declare(n, NodeKind::Sub);
    expect_keyword("of");
    reference(n, NodeKind::Module);
    expect_punct('=');
    n.form = "list";
    if (peek().kind == Tok::Word && peek().text == "gen") {
      next();
      n.form = "gen";
    }
    n.elements = element_list();
  }

  void options(Node& n, std::initializer_list<const char*> allowed) {
    while (peek().kind == Tok::Word) {
      const Token key = next();
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key.text == a; })) {
        std::string hint;
        for (const char* a : allowed) hint += std::string(hint.empty() ? "" : ", ") + a;
        throw SpecError(key.loc, "unknown option '" + key.text + "' (expected one of " + hint + ")");
      }
      expect_punct('=');
      const Location vloc = peek().loc;
      const auto v = expect_int("an integer option value");
      if (v < 0) throw SpecError(vloc, "option values must be non-negative");
      n.options.emplace_back(key.text, v);
    }
  }

  void query(Node& n) {
    n.kind = NodeKind::Query;
    const Token form = expect_word("a query kind (classify, s_primary, s_prime, suite, search)");
    n.form = form.text;
    if (form.text == "classify" || form.text == "s_primary" || form.text == "s_prime") {
      reference(n, NodeKind::Sub);
      reference(n, NodeKind::Set);
    } else if (form.text == "suite") {
      const Token t = expect_word("a property name");
      const auto& reg = property_registry();
      if (std::none_of(reg.begin(), reg.end(), [&](const Property& p) { return p.name == t.text; }))
        throw SpecError(t.loc, "unknown property '" + t.text + "'");
      n.target = t.text;
      options(n, {"maxring", "maxmod", "composite", "sample", "seed"});
    } else if (form.text == "search") {
      const Token t = expect_word("a search target");
      const auto& ts = search_targets();
      if (std::find(ts.begin(), ts.end(), t.text) == ts.end())
        throw SpecError(t.loc, "unknown search target '" + t.text + "'");
      n.target = t.text;
      options(n, {"maxring", "maxmod", "composite"});
    } else {
      throw SpecError(form.loc, "expected a query kind (classify, s_primary, s_prime, suite, search), found '" + form.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, NodeKind>& names_;
};

}  // namespace

SpecDocument parse_spec(std::string_view text) {
  SpecDocument doc;
  std::map<std::string, NodeKind> names;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    LineParser lp(lex_line(line, lineno), names);
    if (!lp.blank()) doc.nodes.push_back(lp.parse());
    if (end == text.size()) break;
    start = end + 1;
  }
  return doc;
}

bool same_ast(const SpecDocument& a, const SpecDocument& b) {
  if (a.nodes.size() != b.nodes.size()) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const Node& x = a.nodes[i];
    const Node& y = b.nodes[i];
    if (x.kind != y.kind || x.name != y.name || x.form != y.form || x.refs != y.refs || x.number != y.number ||
        !(x.elements == y.elements) || x.target != y.target || x.options != y.options)
      return false;
  }
  return true;
}

namespace {

void print_element(std::string& out, const Encoding& e) {
  if (!e.is_tuple) {
    out += std::to_string(e.value);
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ", ";
    print_element(out, e.items[i]);
  }
  out += ')';
}

std::string element_list(const std::vector<Encoding>& es) {
  std::string out = "{";
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ", ";
    print_element(out, es[i]);
  }
  return out + "}";
}

std::string joined(const std::vector<std::string>& xs, std::size_t from, std::size_t to) {
  std::string out = "(";
  for (std::size_t i = from; i < to; ++i) out += (i > from ? ", " : "") + xs[i];
  return out + ")";
}

}  // namespace

std::string print_spec(const SpecDocument& doc) {
  std::string out;
  for (const Node& n : doc.nodes) {
    switch (n.kind) {
      case NodeKind::Ring:
        out += "ring " + n.name + " = " + n.form;
        out += n.form == "zmod" ? " " + std::to_string(n.number) : joined(n.refs, 0, n.refs.size());
        break;
      case NodeKind::Module:
        out += "module " + n.name + " = ";
        if (n.form == "regular") out += "regular " + n.refs[0];
        else if (n.form == "cyclic") out += "zmod " + std::to_string(n.number) + " over " + n.refs[0];
        else if (n.form == "direct_sum") out += "product" + joined(n.refs, 0, n.refs.size() - 1) + " over " + n.refs.back();
        else out += n.form + joined(n.refs, 0, n.refs.size());
        break;
      case NodeKind::Set:
        out += "set " + n.name + " in " + n.refs[0] + " = " + element_list(n.elements);
        break;
      case NodeKind::Sub:
        out += "sub " + n.name + " of " + n.refs[0] + " = " + (n.form == "gen" ? "gen " : "") + element_list(n.elements);
        break;
      case NodeKind::Query:
        out += "query " + n.form;
        if (n.target.empty()) {
          for (const auto& r : n.refs) out += " " + r;
        } else {
          out += " " + n.target;
          for (const auto& [k, v] : n.options) out += " " + k + "=" + std::to_string(v);
        }
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace alg::cli
