#pragma once

#include "polyalg/algebra_spec.hpp"
#include "polyalg/nc_element.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyalg {

/// A formal (not yet ordered) noncommutative polynomial: words over
/// {A, B, C} with coefficients.
struct NCWordSum {
  std::vector<std::pair<CoeffPoly, std::string>> terms;
  NCWordSum &add(const CoeffPoly &c, std::string word) {
    terms.emplace_back(c, std::move(word));
    return *this;
  }
};

/// Which way products are reduced. RightFold multiplies generators onto the
/// right of an ordered element; LeftFold onto the left. On a consistent
/// algebra both give the same normal form.
enum class Strategy { RightFold, LeftFold };

/// The oriented rules
///   B A -> A B - C,   C A -> A C - R2,   C B -> B C - R3
/// where R2, R3 are the ordered right sides of [A,C] and [B,C]. Every rule
/// lowers the weight of a word (A = 2, B = M, C = M + 1) or keeps it and
/// removes an inversion, so reduction terminates.
///
/// Products are memoized; the caches are guarded, so one system can be
/// shared between threads.
class RewriteSystem {
public:
  /// Quantum relations of the algebra (eta, omega as stored, symbolic or not).
  explicit RewriteSystem(const AlgebraSpec &spec);
  /// Already ordered right sides.
  RewriteSystem(NCElement rhs_ac, NCElement rhs_bc);
  ~RewriteSystem();
  RewriteSystem(const RewriteSystem &) = delete;
  RewriteSystem &operator=(const RewriteSystem &) = delete;

  const NCElement &rhs_ac() const { return r2_; }
  const NCElement &rhs_bc() const { return r3_; }

  NCElement multiply(const NCElement &x, const NCElement &y, Strategy s = Strategy::RightFold) const;
  NCElement word(std::string_view w, Strategy s = Strategy::RightFold) const;
  NCElement power(const NCElement &x, unsigned e) const;

private:
  struct Cache;
  RewriteSystem();
  friend NCElement rhs_ac(const AlgebraSpec &spec);
  friend NCElement rhs_bc(const AlgebraSpec &spec);
  NCElement rmul(const NCMono &m, int gen) const;
  NCElement rmul(const NCElement &x, int gen) const;
  NCElement lmul(int gen, const NCMono &m) const;
  NCElement lmul(int gen, const NCElement &x) const;
  NCElement mono_times(const NCMono &m, const NCElement &y) const;
  NCElement times_mono(const NCElement &x, const NCMono &m) const;

  NCElement r2_, r3_;
  bool have_r2_ = false, have_r3_ = false;
  std::unique_ptr<Cache> cache_;
};

NCElement normal_order(std::string_view word, const RewriteSystem &rw, Strategy s = Strategy::RightFold);
NCElement normal_order(const NCWordSum &sum, const RewriteSystem &rw, Strategy s = Strategy::RightFold);
/// Elements are stored ordered already, so this is the identity.
inline NCElement normal_order(const NCElement &x, const RewriteSystem &) { return x; }

NCElement commutator(const NCElement &x, const NCElement &y, const RewriteSystem &rw);
NCElement anticommutator(const NCElement &x, const NCElement &y, const RewriteSystem &rw);

/// [A,[B,C]] - [B,[A,C]] reduced with the rules; zero exactly when the
/// structure constants satisfy the Jacobi constraint.
NCElement jacobi_residual(const RewriteSystem &rw);

inline bool is_zero(const NCElement &x) { return x.is_zero(); }

/// The ordered right sides of [A,C] and [B,C] for a spec.
NCElement rhs_ac(const AlgebraSpec &spec);
NCElement rhs_bc(const AlgebraSpec &spec);

}  // namespace polyalg
