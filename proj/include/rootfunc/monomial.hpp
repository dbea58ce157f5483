#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rootfunc {

inline constexpr std::size_t kMaxVars = 8;

// Which half of the paired variable set an operation looks at.
enum class Block { x, y, both };

/// Names of the n x-variables. Every x_i has a partner y_i in the auxiliary
/// block; the partner is displayed as the x-name followed by a prime.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);

  static std::shared_ptr<const VarContext> make(std::vector<std::string> names);
  /// x1, ..., xn
  static std::shared_ptr<const VarContext> make_default(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::string partner_name(std::size_t i) const { return names_.at(i) + "'"; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarContext&, const VarContext&) = default;

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Exponent vector over the 2n variables (x-block then y-block).
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The unit monomial for n x-variables.
  explicit Monomial(std::size_t n);

  /// `exps` has length n (x-block only) or 2n.
  static Monomial from_exponents(std::size_t n, std::span<const unsigned> exps);
  static Monomial x_power(std::size_t n, std::size_t var, unsigned e);

  std::size_t arity() const noexcept { return n_; }
  std::size_t width() const noexcept { return 2 * static_cast<std::size_t>(n_); }

  Exponent operator[](std::size_t k) const noexcept { return e_[k]; }
  Exponent x(std::size_t i) const noexcept { return e_[i]; }
  Exponent y(std::size_t i) const noexcept { return e_[n_ + i]; }
  void set(std::size_t k, unsigned e);
  void set_x(std::size_t i, unsigned e) { set(i, e); }
  void set_y(std::size_t i, unsigned e) { set(n_ + i, e); }

  unsigned degree(Block b = Block::both) const noexcept;
  bool is_x_only() const noexcept { return degree(Block::y) == 0; }
  bool is_one() const noexcept { return degree() == 0; }

  /// The x-block with the y-block zeroed.
  Monomial x_part() const;
  /// The y-block moved into the x slots (so it can index an x-functional).
  Monomial y_part_as_x() const;
  Monomial swapped() const;

  bool divides(const Monomial& other) const noexcept;
  /// Requires divides(other).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, 2 * kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Graded reverse lexicographic comparison over x1 > ... > xn > y1 > ... > yn.
/// Negative when a < b.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

/// Strict weak ordering placing larger monomials first (canonical term order).
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grevlex_compare(a, b) > 0;
  }
};

/// All x-only monomials of total degree <= d, in descending grevlex order.
/// Empty when d < 0.
std::vector<Monomial> x_monomials_up_to(std::size_t n, int d);

/// Index of monomials used for the columns of Macaulay-style matrices.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  MonomialIndex(std::size_t n, int degree);

  std::size_t size() const noexcept { return monomials_.size(); }
  int degree() const noexcept { return degree_; }
  const Monomial& at(std::size_t k) const { return monomials_.at(k); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::optional<std::size_t> find(const Monomial& m) const;

 private:
  int degree_ = -1;
  std::vector<Monomial> monomials_;
};

}  // namespace rootfunc
