#include "rootfunc/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "rootfunc/errors.hpp"

namespace rootfunc {
namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || names_.size() > kMaxVars) {
    throw ArityError("variable count must be in 1.." + std::to_string(kMaxVars));
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_identifier(name)) {
      throw ArityError("invalid variable name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw ArityError("duplicate variable name '" + name + "'");
    }
  }
}

std::shared_ptr<const VarContext> VarContext::make(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

std::shared_ptr<const VarContext> VarContext::make_default(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i + 1));
  }
  return make(std::move(names));
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

Monomial::Monomial(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n > kMaxVars) {
    throw ArityError("too many variables: " + std::to_string(n));
  }
}

Monomial Monomial::from_exponents(std::size_t n, std::span<const unsigned> exps) {
  if (exps.size() != n && exps.size() != 2 * n) {
    throw ArityError("exponent vector of length " + std::to_string(exps.size()) +
                     " for " + std::to_string(n) + " variables");
  }
  Monomial m(n);
  for (std::size_t k = 0; k < exps.size(); ++k) {
    m.set(k, exps[k]);
  }
  return m;
}

Monomial Monomial::x_power(std::size_t n, std::size_t var, unsigned e) {
  Monomial m(n);
  m.set_x(var, e);
  return m;
}

void Monomial::set(std::size_t k, unsigned e) {
  if (k >= width()) {
    throw ArityError("exponent index out of range");
  }
  if (e > std::numeric_limits<Exponent>::max()) {
    throw DomainError("exponent overflow");
  }
  e_[k] = static_cast<Exponent>(e);
}

unsigned Monomial::degree(Block b) const noexcept {
  std::size_t lo = b == Block::y ? n_ : 0;
  std::size_t hi = b == Block::x ? n_ : width();
  unsigned d = 0;
  for (std::size_t k = lo; k < hi; ++k) d += e_[k];
  return d;
}

Monomial Monomial::x_part() const {
  Monomial m(n_);
  std::copy_n(e_.begin(), n_, m.e_.begin());
  return m;
}

Monomial Monomial::y_part_as_x() const {
  Monomial m(n_);
  std::copy_n(e_.begin() + n_, n_, m.e_.begin());
  return m;
}

Monomial Monomial::swapped() const {
  Monomial m(n_);
  std::copy_n(e_.begin(), n_, m.e_.begin() + n_);
  std::copy_n(e_.begin() + n_, n_, m.e_.begin());
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t k = 0; k < width(); ++k) {
    if (e_[k] > other.e_[k]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial m(n_);
  for (std::size_t k = 0; k < width(); ++k) {
    m.e_[k] = static_cast<Exponent>(e_[k] - divisor.e_[k]);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) {
    throw ArityError("monomial arity mismatch");
  }
  Monomial m(a.n_);
  for (std::size_t k = 0; k < a.width(); ++k) {
    m.set(k, static_cast<unsigned>(a.e_[k]) + b.e_[k]);
  }
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (std::size_t k = 0; k < width(); ++k) {
    h ^= e_[k];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = a.width(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  }
  return 0;
}

std::vector<Monomial> x_monomials_up_to(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(n);
  // Enumerate exponent vectors with sum <= d by recursion on the variable.
  auto rec = [&](auto&& self, std::size_t var, int budget) -> void {
    if (var == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      cur.set_x(var, static_cast<unsigned>(e));
      self(self, var + 1, budget - e);
    }
    cur.set_x(var, 0);
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

MonomialIndex::MonomialIndex(std::size_t n, int degree)
    : degree_(degree), monomials_(x_monomials_up_to(n, degree)) {}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m, GrevlexGreater{});
  if (it == monomials_.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - monomials_.begin());
}

}  // namespace rootfunc
