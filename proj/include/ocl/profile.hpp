#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ocl/bigint.hpp"

namespace ocl {

// Arithmetic over the profile variable m: +, *, ^, integer literals, the
// variable itself, parentheses, and calls to the profile's named functions
// (the paper profile composes f with polyzero).
struct Expr {
  enum class Kind { Const, Var, Add, Mul, Pow, Call };
  Kind kind = Kind::Const;
  BigInt value;                 // Const
  std::shared_ptr<Expr> lhs;    // Add, Mul; Pow base; Call argument
  std::shared_ptr<Expr> rhs;    // Add, Mul
  unsigned long long exponent = 0;  // Pow
  std::string callee;           // Call

  static std::shared_ptr<Expr> parse(const std::string& text);
  std::string to_string() const;
};

// The tuple (f, polyzero, polyone, polytwo, lsize, docasize) as evaluable
// integer functions of m, with a name for provenance.
class PolynomialProfile {
 public:
  PolynomialProfile() = default;
  PolynomialProfile(std::string name, const std::string& f, const std::string& polyzero,
                    const std::string& polyone, const std::string& polytwo,
                    const std::string& lsize, const std::string& docasize);

  const std::string& name() const { return name_; }

  BigInt eval(const std::string& func, const BigInt& m) const;
  BigInt f(long long m) const { return eval("f", BigInt(m)); }
  BigInt polyzero(long long m) const { return eval("polyzero", BigInt(m)); }
  BigInt polyone(long long m) const { return eval("polyone", BigInt(m)); }
  BigInt polytwo(long long m) const { return eval("polytwo", BigInt(m)); }
  BigInt lsize(long long m) const { return eval("lsize", BigInt(m)); }
  BigInt docasize(long long m) const { return eval("docasize", BigInt(m)); }

  // Throws std::range_error when the value does not fit a machine word; used
  // where a profile value drives an actual run.
  long long eval_i64(const std::string& func, long long m) const;

  static PolynomialProfile from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  // Built-in profiles by name ("paper", "desk-small", "desk-fixed"); nullopt
  // for unknown names.
  static std::optional<PolynomialProfile> builtin(const std::string& name);

  // Resolves a --profile argument: builtin name or a JSON file path.
  static PolynomialProfile resolve(const std::string& name_or_path);

 private:
  std::string name_;
  std::shared_ptr<Expr> f_, polyzero_, polyone_, polytwo_, lsize_, docasize_;

  const std::shared_ptr<Expr>& fn(const std::string& func) const;
};

// The three inequalities the exact construction relies on, evaluated at m = n.
// Returns one description per violated inequality; desk profiles are expected
// to violate some, so callers treat this as warning material.
std::vector<std::string> validate_profile(const PolynomialProfile& profile, long long n);

// Type-level sanity: every function >= 1 and non-decreasing on a small range.
std::vector<std::string> profile_sanity(const PolynomialProfile& profile, long long n_max = 8);

}  // namespace ocl
