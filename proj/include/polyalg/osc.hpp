#pragma once

#include "polyalg/nc_element.hpp"
#include "polyalg/npoly.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace polyalg {

enum class OscMode { Quantum, Classical };

struct ModeMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// The structure function an oscillator algebra is built on.
/// Quantum:   b^dag b = phi(N), b b^dag = phi(N+1).
/// Classical: b b^+ = b^+ b = phi(N) (that is G), {b, b^+} = phi'(N).
struct OscContext {
  OscMode mode;
  NRatFn phi;
};

/// sum_k f_k(N) L_k with L_k = (b^dag)^k for k > 0, b^|k| for k < 0 and
/// L_0 = 1. Coefficients always stand to the left of the ladder operators.
class OscElement {
public:
  OscElement(std::shared_ptr<const OscContext> ctx);  // NOLINT(implicit)  zero
  OscElement(std::shared_ptr<const OscContext> ctx, const NRatFn &f, int k = 0);

  static OscElement N(std::shared_ptr<const OscContext> ctx) { return {std::move(ctx), NRatFn(NPoly::N())}; }
  static OscElement raise(std::shared_ptr<const OscContext> ctx) { return {std::move(ctx), NRatFn(1), 1}; }
  static OscElement lower(std::shared_ptr<const OscContext> ctx) { return {std::move(ctx), NRatFn(1), -1}; }

  const std::map<int, NRatFn> &terms() const { return t_; }
  NRatFn coeff(int k) const;
  bool is_zero() const { return t_.empty(); }
  OscMode mode() const { return ctx_->mode; }
  const std::shared_ptr<const OscContext> &context() const { return ctx_; }

  OscElement operator-() const;
  OscElement &operator+=(const OscElement &o);
  OscElement &operator-=(const OscElement &o);
  friend OscElement operator+(OscElement a, const OscElement &b) { return a += b; }
  friend OscElement operator-(OscElement a, const OscElement &b) { return a -= b; }
  friend OscElement operator*(const OscElement &a, const OscElement &b);
  OscElement scaled(const NRatFn &f) const;  // f(N) from the left

  friend bool operator==(const OscElement &a, const OscElement &b);

  std::string str() const;

private:
  void add(int k, const NRatFn &f);
  void check_same(const OscElement &o) const;
  std::shared_ptr<const OscContext> ctx_;
  std::map<int, NRatFn> t_;
};

OscElement osc_multiply(const OscElement &x, const OscElement &y);
OscElement osc_commutator(const OscElement &x, const OscElement &y);
/// Classical bracket: biderivation with {N, b} = -b, {N, b^+} = b^+, {b, b^+} = phi'.
OscElement osc_poisson(const OscElement &x, const OscElement &y);
OscElement osc_pow(const OscElement &x, unsigned e);

/// Substitutes A, B, C into the ordered element x (products in the
/// oscillator algebra, left to right).
OscElement osc_evaluate(const NCElement &x, const OscElement &A, const OscElement &B, const OscElement &C);

}  // namespace polyalg
