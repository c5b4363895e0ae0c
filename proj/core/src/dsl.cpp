#include "revposet/dsl.hpp"

#include <algorithm>
#include <cctype>

#include "revposet/catalog.hpp"
#include "revposet/error.hpp"

namespace revposet {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PosetExpr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string ident() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) {
      if (pos_ == text_.size()) fail_unclosed();
      fail("expected a name");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  /// End of input: blame the innermost open parenthesis, if any.
  [[noreturn]] void fail_unclosed() {
    if (open_.empty()) fail("unexpected end of input");
    pos_ = open_.back();
    fail("unclosed '('");
  }

  void expect(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return;
    }
    if (pos_ == text_.size()) fail_unclosed();
    fail(std::string("expected '") + c + "'");
  }

  PosetExpr expr() {
    const auto name_at = pos_;
    auto name = ident();
    skip_ws();
    const bool call = pos_ < text_.size() && text_[pos_] == '(';
    if (!call) {
      PosetExpr e;
      e.atom = std::move(name);
      return e;
    }
    open_.push_back(pos_);
    ++pos_;
    PosetExpr e;
    if (name == "dual" || name == "duinf") {
      e.op = name == "dual" ? PosetExpr::Op::Dual : PosetExpr::Op::InfiniteUnion;
      e.args.push_back(expr());
    } else if (name == "du" || name == "ls") {
      e.op = name == "du" ? PosetExpr::Op::DisjointUnion : PosetExpr::Op::LinearSum;
      e.args.push_back(expr());
      expect(',');
      e.args.push_back(expr());
    } else {
      pos_ = name_at;
      skip_ws();
      fail("unknown combinator '" + name + "'");
    }
    expect(')');
    open_.pop_back();
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> open_;
};

}  // namespace

PosetExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const PosetExpr& e) {
  switch (e.op) {
    case PosetExpr::Op::Atom: return e.atom;
    case PosetExpr::Op::Dual: return "dual(" + print_expr(e.args[0]) + ")";
    case PosetExpr::Op::InfiniteUnion: return "duinf(" + print_expr(e.args[0]) + ")";
    case PosetExpr::Op::DisjointUnion:
      return "du(" + print_expr(e.args[0]) + "," + print_expr(e.args[1]) + ")";
    case PosetExpr::Op::LinearSum:
      return "ls(" + print_expr(e.args[0]) + "," + print_expr(e.args[1]) + ")";
  }
  return {};
}

std::vector<std::string> dsl_atoms() {
  std::vector<std::string> out = {"omega", "omega_d", "D1", "Dinf", "Zinf", "Z2"};
  for (int i = 1; i <= 8; ++i) {
    out.push_back("F" + std::to_string(i));
    out.push_back("F" + std::to_string(i) + "d");
  }
  for (int i = 1; i <= 4; ++i) {
    out.push_back("G" + std::to_string(i));
    out.push_back("G" + std::to_string(i) + "d");
  }
  return out;
}

PosetPresentation elaborate(const PosetExpr& e) {
  switch (e.op) {
    case PosetExpr::Op::Atom: {
      const auto& a = e.atom;
      if (a == "omega") return gen::omega();
      if (a == "omega_d") return gen::omega_d();
      if (a == "D1") return gen::d1();
      if (a == "Dinf") return gen::dinf();
      if (a == "Zinf") return gen::zinf();
      if (a == "Z2") return gen::z2();
      if (auto k = ForbiddenKind::parse(a)) return forbidden(*k);
      throw Error("unknown atom '" + a + "'");
    }
    case PosetExpr::Op::Dual: return dual(elaborate(e.args[0]));
    case PosetExpr::Op::InfiniteUnion: return infinite_disjoint_union(elaborate(e.args[0]));
    case PosetExpr::Op::DisjointUnion:
      return disjoint_union(elaborate(e.args[0]), elaborate(e.args[1]));
    case PosetExpr::Op::LinearSum: return linear_sum(elaborate(e.args[0]), elaborate(e.args[1]));
  }
  throw Error("malformed expression");
}

}  // namespace revposet
