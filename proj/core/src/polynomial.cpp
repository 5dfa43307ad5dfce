#include "wblow/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace wblow {

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void Polynomial::check_arity(std::size_t n) const {
  if (n != arity_) {
    throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(n) + " vs " +
                                std::to_string(arity_));
  }
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  check_arity(e.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_arity(o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_arity(o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_arity(b.arity_);
  Polynomial out(a.arity_);
  Exponents e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::times_monomial(std::span<const int> m) const {
  check_arity(m.size());
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out = constant(arity_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return out;
}

namespace {

// Searches small integer functionals a*weight + b*aux that are strictly
// positive on every variable degree.
std::optional<std::pair<int, int>> find_positive_functional(const std::vector<Variable>& vars) {
  for (const auto& v : vars) {
    if (v.invertible) return std::nullopt;
  }
  constexpr int kRange = 64;
  for (int r = 1; r <= kRange; ++r) {
    for (int a = -r; a <= r; ++a) {
      for (int b : {-r, r}) {
        bool ok = std::all_of(vars.begin(), vars.end(), [&](const Variable& v) {
          return a * v.weight + b * v.aux_weight > 0;
        });
        if (ok) return std::pair{a, b};
        ok = std::all_of(vars.begin(), vars.end(), [&](const Variable& v) {
          return b * v.weight + a * v.aux_weight > 0;
        });
        if (ok) return std::pair{b, a};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GradedRing::GradedRing(std::vector<Variable> variables, std::vector<Polynomial> relations)
    : variables_(std::move(variables)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[i].name == variables_[j].name) {
        throw std::invalid_argument("duplicate variable name '" + variables_[i].name + "'");
      }
    }
  }
  for (const auto& r : relations_) {
    if (r.arity() != arity()) throw std::invalid_argument("relation arity mismatch");
    if (r.is_zero()) continue;
    if (!homogeneous_degree(r)) {
      throw std::invalid_argument("relation " + print_polynomial(r, *this) + " is not homogeneous");
    }
  }
  std::erase_if(relations_, [](const Polynomial& p) { return p.is_zero(); });
  positive_functional_ = find_positive_functional(variables_);
}

std::optional<std::size_t> GradedRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t GradedRing::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return *i;
}

Degree GradedRing::degree_of(std::span<const int> e) const {
  Degree d;
  for (std::size_t i = 0; i < e.size(); ++i) {
    d.weight += e[i] * variables_[i].weight;
    d.aux += e[i] * variables_[i].aux_weight;
  }
  return d;
}

std::optional<Degree> GradedRing::homogeneous_degree(const Polynomial& p) const {
  if (p.is_zero()) return std::nullopt;
  std::optional<Degree> deg;
  for (const auto& [e, c] : p.terms()) {
    Degree d = degree_of(e);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool GradedRing::is_homogeneous(const Polynomial& p, const Degree& d) const {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return degree_of(t.first) == d; });
}

Polynomial GradedRing::variable(std::size_t i) const {
  Exponents e(arity(), 0);
  e.at(i) = 1;
  return Polynomial::monomial(std::move(e));
}

Polynomial GradedRing::parse(std::string_view text) const { return parse_polynomial(text, *this); }

GradedRing GradedRing::with_relations(std::vector<Polynomial> relations) const {
  return GradedRing(variables_, std::move(relations));
}

std::optional<int> GradedRing::exponent_cap(std::size_t i, const Degree& d) const {
  if (!positive_functional_) return std::nullopt;
  auto [a, b] = *positive_functional_;
  const long total = static_cast<long>(a) * d.weight + static_cast<long>(b) * d.aux;
  if (total < 0) return -1;
  const long unit = static_cast<long>(a) * variables_[i].weight +
                    static_cast<long>(b) * variables_[i].aux_weight;
  return static_cast<int>(total / unit);
}

}  // namespace wblow
