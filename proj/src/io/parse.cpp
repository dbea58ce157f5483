#include <cctype>
#include <fstream>
#include <sstream>

#include "rootfunc/errors.hpp"
#include "rootfunc/io.hpp"

namespace rootfunc::io {
namespace {

class ExprParser {
 public:
  ExprParser(std::string_view src, std::size_t base, const ContextPtr& context,
             const FieldSpec& field, bool allow_y)
      : src_(src), base_(base), context_(context), field_(field), allow_y_(allow_y) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == src_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, base_ + at);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Polynomial factor() {
    skip_space();
    if (pos_ == src_.size()) fail("unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      skip_space();
      if (pos_ < src_.size() && src_[pos_] == '^') {
        fail("exponentiation of a parenthesized expression is not supported; expand it");
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        const std::size_t den_at = pos_;
        den = integer();
        if (den == 0) fail_at("zero denominator", den_at);
      }
      Scalar q(num, den);
      q.canonicalize();
      try {
        return Polynomial::constant(context_, field_, q);
      } catch (const DomainError& e) {
        fail_at(e.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = src_.substr(start, pos_ - start);
      auto index = context_->index_of(name);
      if (!index) fail_at("undeclared variable '" + std::string(name) + "'", start);
      Block block = Block::x;
      if (pos_ < src_.size() && src_[pos_] == '\'') {
        if (!allow_y_) fail("primed variables are not allowed here");
        ++pos_;
        block = Block::y;
      }
      unsigned exponent = 1;
      if (accept('^')) {
        skip_space();
        const std::size_t exp_at = pos_;
        if (pos_ < src_.size() && src_[pos_] == '-') {
          fail("exponent must be a non-negative integer");
        }
        mpz_class e = integer();
        if (e > 65535) fail_at("exponent too large", exp_at);
        exponent = static_cast<unsigned>(e.get_ui());
      }
      Monomial m(context_->size());
      m.set(block == Block::y ? context_->size() + *index : *index, exponent);
      return Polynomial::monomial(context_, field_, m);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  std::size_t base_;
  std::size_t pos_ = 0;
  const ContextPtr& context_;
  const FieldSpec& field_;
  bool allow_y_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial parse_poly(std::string_view src, const ContextPtr& context, const FieldSpec& field,
                      bool allow_y_block) {
  return ExprParser(src, 0, context, field, allow_y_block).parse();
}

SystemFile parse_system_file(std::string_view text) {
  std::vector<std::string> names;
  FieldSpec field;
  bool have_vars = false;
  bool have_field = false;
  std::vector<std::pair<std::string, std::pair<std::string_view, std::size_t>>> equations;

  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start <= text.size()) {
    ++line_no;
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (line_end == text.size()) break;
      continue;
    }
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<key>: <value>'", offset);
    }
    const std::string key(trim(line.substr(0, colon)));
    std::string_view value = line.substr(colon + 1);
    const std::size_t value_offset = offset + colon + 1;

    if (key == "vars") {
      if (have_vars) throw ParseError("line " + std::to_string(line_no) + ": repeated vars", offset);
      std::istringstream in{std::string(value)};
      for (std::string name; in >> name;) names.push_back(name);
      have_vars = true;
    } else if (key == "field") {
      if (have_field) throw ParseError("line " + std::to_string(line_no) + ": repeated field", offset);
      std::istringstream in{std::string(value)};
      std::string kind;
      in >> kind;
      if (kind == "Q") {
        field = FieldSpec::rationals();
      } else if (kind == "Fp") {
        std::uint64_t p = 0;
        if (!(in >> p)) {
          throw ParseError("line " + std::to_string(line_no) + ": Fp needs a prime modulus", value_offset);
        }
        field = FieldSpec::prime(p);
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown field '" + kind + "'", value_offset);
      }
      std::string rest;
      if (in >> rest) {
        throw ParseError("line " + std::to_string(line_no) + ": trailing text after field", value_offset);
      }
      have_field = true;
    } else {
      if (key.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": missing equation label", offset);
      }
      equations.push_back({key, {value, value_offset}});
    }
    if (line_end == text.size()) break;
  }

  if (!have_vars) throw Error("system file declares no vars");
  SystemFile out;
  out.context = VarContext::make(names);
  out.field = field;
  if (equations.size() != names.size()) {
    throw Error("system file has " + std::to_string(equations.size()) + " equations for " +
                std::to_string(names.size()) + " variables");
  }
  std::vector<Polynomial> polys;
  for (const auto& [label, body] : equations) {
    out.labels.push_back(label);
    polys.push_back(ExprParser(body.first, body.second, out.context, field, false).parse());
  }
  out.system = PolySystem(std::move(polys));
  return out;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open system file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system_file(buffer.str());
}

}  // namespace rootfunc::io
