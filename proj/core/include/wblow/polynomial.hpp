#pragma once

#include "wblow/degree.hpp"
#include "wblow/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wblow {

/// Exponent vector, one entry per ring variable.
using Exponents = std::vector<int>;

struct Variable {
  std::string name;
  int weight = 0;
  int aux_weight = 0;
  // Negative exponents are allowed only on invertible variables.
  bool invertible = false;

  Degree degree() const { return {weight, aux_weight}; }
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial monomial(Exponents e, const Rational& c = 1);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * x^e, merging with an existing term.
  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial times_monomial(std::span<const int> e) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_arity(std::size_t n) const;

  std::size_t arity_ = 0;
  Terms terms_;
};

/// Bigraded polynomial ring modulo homogeneous relations.
///
/// Every relation must be homogeneous for the variable degrees; the
/// constructor throws std::invalid_argument otherwise.
class GradedRing {
 public:
  GradedRing() = default;
  explicit GradedRing(std::vector<Variable> variables, std::vector<Polynomial> relations = {});

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  std::size_t arity() const { return variables_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  Degree degree_of(std::span<const int> e) const;

  /// Degree of a nonzero homogeneous polynomial; nullopt when inhomogeneous
  /// or zero.
  std::optional<Degree> homogeneous_degree(const Polynomial& p) const;
  bool is_homogeneous(const Polynomial& p, const Degree& d) const;

  Polynomial zero() const { return Polynomial(arity()); }
  Polynomial one() const { return Polynomial::constant(arity(), 1); }
  Polynomial variable(std::size_t i) const;

  /// Parses text in the polynomial grammar (see parse_polynomial).
  Polynomial parse(std::string_view text) const;

  GradedRing with_relations(std::vector<Polynomial> relations) const;

  /// True when some linear functional is positive on every variable degree,
  /// i.e. every graded piece of the non-localized ring is finite.
  bool is_pointed() const { return positive_functional_.has_value(); }

  /// Largest exponent variable i can carry in a monomial of degree d, when
  /// the grading is pointed. nullopt otherwise.
  std::optional<int> exponent_cap(std::size_t i, const Degree& d) const;

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.variables_ == b.variables_ && a.relations_ == b.relations_;
  }

 private:
  std::vector<Variable> variables_;
  std::vector<Polynomial> relations_;
  std::optional<std::pair<int, int>> positive_functional_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := coeff ("*" factor)* | factor ("*" factor)*
///   factor := ident ("^" uint)?
///   coeff  := int | int "/" uint
/// Whitespace is insignificant. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const GradedRing& ring);

/// Inverse of parse_polynomial on normalized polynomials. Terms are printed in
/// descending lexicographic order of exponent vectors.
std::string print_polynomial(const Polynomial& p, const GradedRing& ring);

}  // namespace wblow
