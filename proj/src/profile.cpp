#include "ocl/profile.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace ocl {

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("profile expression error at offset " + std::to_string(pos) +
                                ": " + what + " in \"" + text + "\"");
  }

  std::shared_ptr<Expr> parse_expr() {
    auto lhs = parse_term();
    while (eat('+')) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Add;
      node->lhs = lhs;
      node->rhs = parse_term();
      lhs = node;
    }
    return lhs;
  }

  std::shared_ptr<Expr> parse_term() {
    auto lhs = parse_factor();
    while (eat('*')) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Mul;
      node->lhs = lhs;
      node->rhs = parse_factor();
      lhs = node;
    }
    return lhs;
  }

  std::shared_ptr<Expr> parse_factor() {
    auto base = parse_atom();
    if (eat('^')) {
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("exponent must be a non-negative integer literal");
      unsigned long long e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        e = e * 10 + (text[pos++] - '0');
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Pow;
      node->lhs = base;
      node->exponent = e;
      return node;
    }
    return base;
  }

  std::shared_ptr<Expr> parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v(0);
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * BigInt(10) + BigInt(text[pos++] - '0');
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Const;
      node->value = v;
      return node;
    }
    if (c == '(') {
      ++pos;
      auto inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string ident = text.substr(start, pos - start);
      if (eat('(')) {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Call;
        node->callee = ident;
        node->lhs = parse_expr();
        if (!eat(')')) fail("expected ')'");
        return node;
      }
      if (ident != "m") fail("unknown identifier '" + ident + "' (only variable m)");
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Var;
      return node;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

std::shared_ptr<Expr> Expr::parse(const std::string& text) {
  Parser p(text);
  auto e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::Const:
      return value.to_string();
    case Kind::Var:
      return "m";
    case Kind::Add:
      return lhs->to_string() + "+" + rhs->to_string();
    case Kind::Mul:
      return "(" + lhs->to_string() + ")*(" + rhs->to_string() + ")";
    case Kind::Pow:
      return "(" + lhs->to_string() + ")^" + std::to_string(exponent);
    case Kind::Call:
      return callee + "(" + lhs->to_string() + ")";
  }
  return "?";
}

PolynomialProfile::PolynomialProfile(std::string name, const std::string& f,
                                     const std::string& polyzero, const std::string& polyone,
                                     const std::string& polytwo, const std::string& lsize,
                                     const std::string& docasize)
    : name_(std::move(name)),
      f_(Expr::parse(f)),
      polyzero_(Expr::parse(polyzero)),
      polyone_(Expr::parse(polyone)),
      polytwo_(Expr::parse(polytwo)),
      lsize_(Expr::parse(lsize)),
      docasize_(Expr::parse(docasize)) {}

const std::shared_ptr<Expr>& PolynomialProfile::fn(const std::string& func) const {
  if (func == "f") return f_;
  if (func == "polyzero") return polyzero_;
  if (func == "polyone") return polyone_;
  if (func == "polytwo") return polytwo_;
  if (func == "lsize") return lsize_;
  if (func == "docasize") return docasize_;
  throw std::invalid_argument("unknown profile function: " + func);
}

namespace {

BigInt eval_expr(const PolynomialProfile& profile, const Expr& e, const BigInt& m, int depth) {
  if (depth > 16) throw std::invalid_argument("profile expression recursion too deep");
  switch (e.kind) {
    case Expr::Kind::Const:
      return e.value;
    case Expr::Kind::Var:
      return m;
    case Expr::Kind::Add:
      return eval_expr(profile, *e.lhs, m, depth) + eval_expr(profile, *e.rhs, m, depth);
    case Expr::Kind::Mul:
      return eval_expr(profile, *e.lhs, m, depth) * eval_expr(profile, *e.rhs, m, depth);
    case Expr::Kind::Pow:
      return eval_expr(profile, *e.lhs, m, depth).pow(e.exponent);
    case Expr::Kind::Call:
      return profile.eval(e.callee, eval_expr(profile, *e.lhs, m, depth + 1));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

BigInt PolynomialProfile::eval(const std::string& func, const BigInt& m) const {
  const auto& e = fn(func);
  if (!e) throw std::logic_error("profile function not set: " + func);
  return eval_expr(*this, *e, m, 0);
}

long long PolynomialProfile::eval_i64(const std::string& func, long long m) const {
  BigInt v = eval(func, BigInt(m));
  long long out;
  if (!v.to_i64(out))
    throw std::range_error("profile value " + func + "(" + std::to_string(m) + ") = " +
                           v.to_string() + " is too large for a concrete run");
  return out;
}

PolynomialProfile PolynomialProfile::from_json(const nlohmann::json& j) {
  auto field = [&](const char* key) -> std::string {
    const nlohmann::json& v = j.at(key);
    std::string kind = v.at("kind").get<std::string>();
    if (kind == "expr") return v.at("text").get<std::string>();
    if (kind == "poly") {
      // coeffs [c0, c1, ...] stands for c0 + c1*m + c2*m^2 + ...
      std::string out;
      auto coeffs = v.at("coeffs").get<std::vector<long long>>();
      for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0) throw std::invalid_argument("poly coefficients must be non-negative");
        if (coeffs[i] == 0 && coeffs.size() > 1) continue;
        if (!out.empty()) out += "+";
        out += std::to_string(coeffs[i]);
        if (i >= 1) out += "*m";
        if (i >= 2) out += "^" + std::to_string(i);
      }
      return out.empty() ? "0" : out;
    }
    throw std::invalid_argument("unknown profile function kind: " + kind);
  };
  return PolynomialProfile(j.at("name").get<std::string>(), field("f"), field("polyzero"),
                           field("polyone"), field("polytwo"), field("lsize"), field("docasize"));
}

nlohmann::json PolynomialProfile::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  auto put = [&](const char* key, const std::shared_ptr<Expr>& e) {
    j[key] = {{"kind", "expr"}, {"text", e->to_string()}};
  };
  put("f", f_);
  put("polyzero", polyzero_);
  put("polyone", polyone_);
  put("polytwo", polytwo_);
  put("lsize", lsize_);
  put("docasize", docasize_);
  return j;
}

std::optional<PolynomialProfile> PolynomialProfile::builtin(const std::string& name) {
  if (name == "paper") {
    // f is the equivalence-bound polynomial; m^4 is the smallest admissible one.
    return PolynomialProfile("paper", "m^4", "12*(m+1)^10", "3*(m+1)^4",
                             "f((m+1)^2*polyzero(m))", "(m+1)^4*f(polyzero(m))", "polyzero(m)");
  }
  if (name == "desk-small") {
    return PolynomialProfile("desk-small", "m", "12*(m+1)", "3*(m+1)", "4*(m+1)^2+16",
                             "4*(m+1)", "4*(m+1)^2+20");
  }
  if (name == "desk-fixed") {
    return PolynomialProfile("desk-fixed", "m", "24", "4", "40", "12", "24");
  }
  return std::nullopt;
}

PolynomialProfile PolynomialProfile::resolve(const std::string& name_or_path) {
  if (auto b = builtin(name_or_path)) return *b;
  std::ifstream in(name_or_path);
  if (!in)
    throw std::invalid_argument("profile '" + name_or_path +
                                "' is neither a built-in name nor a readable file");
  return from_json(nlohmann::json::parse(in));
}

std::vector<std::string> validate_profile(const PolynomialProfile& profile, long long n) {
  std::vector<std::string> out;
  BigInt m(n);
  BigInt one(1), two(2), three(3);
  BigInt polyone = profile.polyone(n);
  BigInt polytwo = profile.polytwo(n);
  BigInt lsize = profile.lsize(n);
  BigInt f_polyzero = profile.eval("f", profile.polyzero(n));
  BigInt m2p1 = m * m + one;

  // polyone(m)/m - (m^2+1) > (3m+1)m^2+1, multiplied through by m.
  BigInt lhs1 = polyone - m * m2p1;
  BigInt rhs1 = m * ((three * m + one) * m * m + one);
  if (!(lhs1 > rhs1))
    out.push_back("polyone(m)/m - (m^2+1) > (3m+1)m^2+1 fails at m=" + std::to_string(n));

  // 2m(lsize+2m)(m^2+1) <= polytwo(m) - polyone(m).
  BigInt lhs2 = two * m * (lsize + two * m) * m2p1;
  BigInt rhs2 = polytwo - polyone;
  if (!(lhs2 <= rhs2))
    out.push_back("2m(lsize+2m)(m^2+1) <= polytwo(m) - polyone(m) fails at m=" +
                  std::to_string(n));

  // (lsize - 2m)/2m > f(polyzero(m)), multiplied through by 2m.
  BigInt lhs3 = lsize - two * m;
  BigInt rhs3 = two * m * f_polyzero;
  if (!(lhs3 > rhs3))
    out.push_back("(lsize - 2m)/2m > f(polyzero(m)) fails at m=" + std::to_string(n));

  return out;
}

std::vector<std::string> profile_sanity(const PolynomialProfile& profile, long long n_max) {
  std::vector<std::string> out;
  const char* funcs[] = {"f", "polyzero", "polyone", "polytwo", "lsize", "docasize"};
  for (const char* func : funcs) {
    BigInt prev(0);
    for (long long n = 1; n <= n_max; ++n) {
      BigInt v = profile.eval(func, BigInt(n));
      if (v < BigInt(1)) {
        out.push_back(std::string(func) + "(" + std::to_string(n) + ") < 1");
        break;
      }
      if (v < prev) {
        out.push_back(std::string(func) + " not monotone at n=" + std::to_string(n));
        break;
      }
      prev = v;
    }
  }
  return out;
}

}  // namespace ocl
