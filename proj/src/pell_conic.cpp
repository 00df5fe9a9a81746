#include "lpfbinom/pell_conic.hpp"

#include <string>

#include "lpfbinom/errors.hpp"
#include "lpfbinom/torsion_poly.hpp"

namespace lpf {
namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1 % m;
  unsigned __int128 b = base % m;
  while (e > 0) {
    if (e & 1) result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

ConicContext::ConicContext(std::int64_t delta, std::uint64_t modulus)
    : delta_(delta), delta_mod_(0), modulus_(modulus), half_(0) {
  if (modulus < 3 || modulus % 2 == 0) {
    throw DomainError("conic modulus must be odd and >= 3, got " + std::to_string(modulus));
  }
  const auto m = static_cast<__int128>(modulus);
  __int128 d = static_cast<__int128>(delta) % m;
  if (d < 0) d += m;
  delta_mod_ = static_cast<std::uint64_t>(d);
  half_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(modulus) + 1) / 2);
}

std::uint64_t ConicContext::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % modulus_);
}

std::uint64_t ConicContext::add(std::uint64_t a, std::uint64_t b) const noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % modulus_);
}

std::uint64_t ConicContext::sub(std::uint64_t a, std::uint64_t b) const noexcept {
  return a >= b ? a - b : static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) + modulus_ - b);
}

bool on_conic(std::uint64_t x, std::uint64_t y, const ConicContext& ctx) {
  const std::uint64_t m = ctx.modulus();
  if (x >= m || y >= m) return false;
  const std::uint64_t lhs = ctx.sub(ctx.mul(x, x), ctx.mul(ctx.delta_mod(), ctx.mul(y, y)));
  return lhs == 4 % m;
}

ConicPoint::ConicPoint(std::uint64_t x, std::uint64_t y, const ConicContext& ctx) : x_(x), y_(y), ctx_(ctx) {
  if (!on_conic(x, y, ctx)) {
    throw DomainError("(" + std::to_string(x) + ", " + std::to_string(y) + ") is not on X^2 - " +
                      std::to_string(ctx.delta()) + " Y^2 = 4 mod " + std::to_string(ctx.modulus()));
  }
}

ConicPoint ConicPoint::identity(const ConicContext& ctx) { return ConicPoint(2 % ctx.modulus(), 0, ctx); }

ConicPoint ConicPoint::negated() const { return ConicPoint(x_, ctx_.sub(0, y_), ctx_, Unchecked{}); }

ConicPoint add(const ConicPoint& p1, const ConicPoint& p2) {
  if (!(p1.ctx_ == p2.ctx_)) throw DomainError("points belong to different conics");
  const ConicContext& c = p1.ctx_;
  const std::uint64_t xx = c.add(c.mul(p1.x_, p2.x_), c.mul(c.delta_mod(), c.mul(p1.y_, p2.y_)));
  const std::uint64_t xy = c.add(c.mul(p1.x_, p2.y_), c.mul(p2.x_, p1.y_));
  return ConicPoint(c.mul(xx, c.half()), c.mul(xy, c.half()), c, ConicPoint::Unchecked{});
}

ConicPoint scalar_mul(std::uint64_t k, const ConicPoint& p) {
  ConicPoint acc = ConicPoint::identity(p.context());
  ConicPoint base = p;
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    k >>= 1;
    if (k > 0) base = add(base, base);
  }
  return acc;
}

bool torsion_x_identity_check(std::uint64_t n, const ConicPoint& p) {
  const ConicContext& c = p.context();
  const std::uint64_t psi = psi_recurrence(n).eval_mod(p.x(), c.modulus());
  const std::uint64_t predicted = c.add(c.mul(c.sub(p.x(), 2 % c.modulus()), c.mul(psi, psi)), 2 % c.modulus());
  return scalar_mul(n, p).x() == predicted;
}

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) return 0;
  if (pow_mod(a, (q - 1) / 2, q) != 1) return std::nullopt;
  std::uint64_t s = q - 1;
  unsigned e = 0;
  while (s % 2 == 0) {
    s /= 2;
    ++e;
  }
  if (e == 1) return pow_mod(a, (q + 1) / 4, q);
  std::uint64_t z = 2;
  while (pow_mod(z, (q - 1) / 2, q) != q - 1) ++z;
  auto mulq = [q](std::uint64_t u, std::uint64_t v) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(u) * v % q);
  };
  std::uint64_t x = pow_mod(a, (s + 1) / 2, q);
  std::uint64_t b = pow_mod(a, s, q);
  std::uint64_t g = pow_mod(z, s, q);
  unsigned r = e;
  while (b != 1) {
    unsigned k = 0;
    std::uint64_t t = b;
    while (t != 1) {
      t = mulq(t, t);
      ++k;
    }
    std::uint64_t gs = g;
    for (unsigned i = 0; i + k + 1 < r; ++i) gs = mulq(gs, gs);
    x = mulq(x, gs);
    g = mulq(gs, gs);
    b = mulq(b, g);
    r = k;
  }
  return x;
}

std::vector<ConicPoint> points_with_y(const ConicContext& ctx, std::uint64_t y) {
  const std::uint64_t m = ctx.modulus();
  y %= m;
  const std::uint64_t rhs = ctx.add(4 % m, ctx.mul(ctx.delta_mod(), ctx.mul(y, y)));
  std::vector<ConicPoint> out;
  if (auto root = sqrt_mod_prime(rhs, m)) {
    out.emplace_back(*root, y, ctx);
    if (*root != 0) out.emplace_back(m - *root, y, ctx);
  }
  return out;
}

ConicPoint random_point(const ConicContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick_y(0, ctx.modulus() - 1);
  std::uniform_int_distribution<int> pick_side(0, 1);
  while (true) {
    auto pts = points_with_y(ctx, pick_y(rng));
    if (!pts.empty()) return pts[pts.size() == 2 ? pick_side(rng) : 0];
  }
}

}  // namespace lpf
