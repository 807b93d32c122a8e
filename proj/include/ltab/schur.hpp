#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ltab/bigint.hpp"
#include "ltab/shapes.hpp"

namespace ltab {

/// s_(size) for a row factor, s_(1^size) for a column factor. Size 0 is the identity.
struct PieriFactor {
  StripKind kind = StripKind::row;
  int size = 0;
};

/// Finitely supported Partition -> coefficient map with every coefficient >= 1.
/// When a box is set every term fits inside it (the Grassmannian truncation).
class SchurExpansion {
 public:
  SchurExpansion() = default;
  explicit SchurExpansion(std::optional<Box> box) : box_(box) {}

  /// {empty partition: 1}.
  static SchurExpansion unit(std::optional<Box> box = std::nullopt);

  const std::map<Partition, BigInt>& terms() const noexcept { return terms_; }
  const std::optional<Box>& box() const noexcept { return box_; }
  BigInt coefficient(const Partition& lambda) const;
  /// Adds `amount` to the coefficient of lambda. Terms outside the box are dropped.
  void add(const Partition& lambda, const BigInt& amount);
  void merge(const SchurExpansion& other);
  bool empty() const noexcept { return terms_.empty(); }

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  std::map<Partition, BigInt> terms_;
  std::optional<Box> box_;
};

/// Pieri rule: each term lambda becomes the sum over box-bounded strip
/// extensions nu of lambda by the factor.
SchurExpansion multiply_pieri(const SchurExpansion& e, PieriFactor f);
SchurExpansion multiply_pieri(const SchurExpansion& e, const std::vector<PieriFactor>& factors);

/// Gr(k, n): partitions live in a k x (n-k) box; the point class is ((n-k)^k).
struct GrassmannianCtx {
  int k = 1;
  int n = 1;

  /// Throws TableauError(parameter) unless 1 <= k <= n.
  GrassmannianCtx(int k, int n);
  Box box() const noexcept { return {k, n - k}; }
  Partition point_class() const { return Partition::rectangle(k, n - k); }
  /// Coefficient of the point class.
  BigInt integral(const SchurExpansion& e) const { return e.coefficient(point_class()); }
};

/// Sum over compositions (a_0..a_r) of (r+1)(d-r)-rg of the point-class
/// coefficient of s_(1^r)^g * prod s_(a_i) in Gr(r+1, d+1). Layered DP over
/// row factors of free size. Returns 0 when (r+1)(d-r) < rg.
BigInt integral_L(int g, int r, int d);
/// Same quantity by an explicit loop over every composition.
BigInt integral_L_by_compositions(int g, int r, int d);

/// Difference of the two Gr(2, d+1) and Gr(2, d) sums. Throws
/// TableauError(parameter) unless 2 <= k <= d and k+g <= 2d+1.
BigInt integral_Lprime(int g, int d, int k);

/// g! * (1! 2! ... r!) / (s! (s+1)! ... (s+r)!) with s = g/(r+1).
/// Throws TableauError(parameter) when r+1 does not divide g.
BigInt castelnuovo_number(int g, int r);

}  // namespace ltab
