#include "ltab/schur.hpp"

#include <functional>
#include <string>

#include "ltab/error.hpp"

namespace ltab {

SchurExpansion SchurExpansion::unit(std::optional<Box> box) {
  SchurExpansion e(box);
  e.add(Partition{}, 1);
  return e;
}

BigInt SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurExpansion::add(const Partition& lambda, const BigInt& amount) {
  if (amount == 0) return;
  if (box_ && !lambda.fits(box_->rows, box_->cols)) return;
  terms_[lambda] += amount;
}

void SchurExpansion::merge(const SchurExpansion& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
}

SchurExpansion multiply_pieri(const SchurExpansion& e, PieriFactor f) {
  SchurExpansion out(e.box());
  const Box bounds = e.box().value_or(kUnbounded);
  for (const auto& [lambda, c] : e.terms()) {
    const auto next = f.kind == StripKind::row ? extensions_by_row_strip(lambda, f.size, bounds)
                                               : extensions_by_col_strip(lambda, f.size, bounds);
    for (const Partition& nu : next) out.add(nu, c);
  }
  return out;
}

SchurExpansion multiply_pieri(const SchurExpansion& e, const std::vector<PieriFactor>& factors) {
  SchurExpansion out = e;
  for (const PieriFactor& f : factors) out = multiply_pieri(out, f);
  return out;
}

GrassmannianCtx::GrassmannianCtx(int k_, int n_) : k(k_), n(n_) {
  if (k < 1 || k > n)
    throw TableauError(ErrorKind::parameter, "grassmannian.dimensions",
                       "Gr(" + std::to_string(k) + "," + std::to_string(n) + ") needs 1 <= k <= n");
}

namespace {

void require_l_params(int g, int r, int d) {
  if (g < 0 || r < 1 || d < r)
    throw TableauError(ErrorKind::parameter, "integral_l.domain",
                       "need g >= 0, r >= 1, d >= r (got g=" + std::to_string(g) + ", r=" + std::to_string(r) +
                           ", d=" + std::to_string(d) + ")");
}

SchurExpansion seed_columns(const GrassmannianCtx& ctx, int count, int height) {
  SchurExpansion e = SchurExpansion::unit(ctx.box());
  for (int i = 0; i < count; ++i) e = multiply_pieri(e, PieriFactor{StripKind::column, height});
  return e;
}

// Multiplies by `factors` row factors of free size, keeping only total added size <= budget.
SchurExpansion free_rows(SchurExpansion e, int factors, int budget, int base_size) {
  for (int i = 0; i < factors; ++i) {
    SchurExpansion next(e.box());
    for (int a = 0; a <= budget; ++a) {
      SchurExpansion step = multiply_pieri(e, PieriFactor{StripKind::row, a});
      for (const auto& [lambda, c] : step.terms())
        if (lambda.size() - base_size <= budget) next.add(lambda, c);
    }
    e = std::move(next);
  }
  return e;
}

}  // namespace

BigInt integral_L(int g, int r, int d) {
  require_l_params(g, r, d);
  const int budget = (r + 1) * (d - r) - r * g;
  if (budget < 0) return 0;
  const GrassmannianCtx ctx(r + 1, d + 1);
  const SchurExpansion seeded = seed_columns(ctx, g, r);
  return ctx.integral(free_rows(seeded, r + 1, budget, r * g));
}

BigInt integral_L_by_compositions(int g, int r, int d) {
  require_l_params(g, r, d);
  const int budget = (r + 1) * (d - r) - r * g;
  if (budget < 0) return 0;
  const GrassmannianCtx ctx(r + 1, d + 1);
  const SchurExpansion seeded = seed_columns(ctx, g, r);
  BigInt total = 0;
  std::vector<int> parts(static_cast<std::size_t>(r + 1), 0);
  std::function<void(int, int)> walk = [&](int index, int left) {
    if (index == r) {
      parts[static_cast<std::size_t>(index)] = left;
      SchurExpansion e = seeded;
      for (int a : parts) e = multiply_pieri(e, PieriFactor{StripKind::row, a});
      total += ctx.integral(e);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      parts[static_cast<std::size_t>(index)] = a;
      walk(index + 1, left - a);
    }
  };
  walk(0, budget);
  return total;
}

namespace {

// Sum over i+j=budget of the point-class coefficient of s_1^g s_gray s_i s_j in Gr(2, n).
BigInt two_row_term(int g, int n, int gray, int budget) {
  if (budget < 0 || n < 2) return 0;
  const GrassmannianCtx ctx(2, n);
  SchurExpansion e = SchurExpansion::unit(ctx.box());
  for (int i = 0; i < g; ++i) e = multiply_pieri(e, PieriFactor{StripKind::row, 1});
  e = multiply_pieri(e, PieriFactor{StripKind::row, gray});
  return ctx.integral(free_rows(e, 2, budget, g + gray));
}

}  // namespace

BigInt integral_Lprime(int g, int d, int k) {
  if (g < 0 || k < 2 || k > d || k + g > 2 * d + 1)
    throw TableauError(ErrorKind::parameter, "integral_lprime.domain",
                       "need g >= 0, 2 <= k <= d, k+g <= 2d+1 (got g=" + std::to_string(g) +
                           ", d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")");
  const BigInt positive = two_row_term(g, d + 1, k - 1, 2 * d - g - k - 1);
  const BigInt negative = two_row_term(g, d, k - 2, 2 * d - g - k - 2);
  return positive - negative;
}

BigInt castelnuovo_number(int g, int r) {
  if (g < 0 || r < 1 || g % (r + 1) != 0)
    throw TableauError(ErrorKind::parameter, "castelnuovo.divisibility",
                       "r+1=" + std::to_string(r + 1) + " must divide g=" + std::to_string(g));
  const int s = g / (r + 1);
  BigInt numerator = factorial(static_cast<unsigned>(g));
  for (int j = 1; j <= r; ++j) numerator *= factorial(static_cast<unsigned>(j));
  BigInt denominator = 1;
  for (int j = 0; j <= r; ++j) denominator *= factorial(static_cast<unsigned>(s + j));
  return numerator / denominator;
}

}  // namespace ltab
