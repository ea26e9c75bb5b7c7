#ifndef ADE_QUADRICS_HPP
#define ADE_QUADRICS_HPP

// Hodge-Deligne polynomials (in w) of the quadric x_1^2 + ... + x_r^2 = 0 in
// P^(r+1), P^r and P^(r-1) (kinds A, B, C) and of the smooth affine quadric
// x_1^2 + ... + x_r^2 + 1 = 0 in A^r (kind DAffine).
//
// For r = 1 the projective kinds take the surface conventions a_1 = w + 1,
// b_1 = 1, c_1 = 0; the affine kind starts at r = 2.

#include <stdexcept>
#include <string>

#include "exactalg.hpp"

namespace ade {

enum class QuadricKind { A, B, C, DAffine };

inline Polynomial quadric_hodge(QuadricKind kind, long r)
{
  if (r < 1)
    throw std::invalid_argument("quadric_hodge requires r >= 1, got " + std::to_string(r));
  const bool even = r % 2 == 0;
  const auto w_pow = [](long e) { return Polynomial::monomial(1, static_cast<std::size_t>(e)); };

  switch (kind) {
  case QuadricKind::A:
    if (r == 1)
      return Polynomial{1, 1};
    return even ? geom_sum(r + 1) + w_pow(r / 2 + 1) : geom_sum(r + 1);
  case QuadricKind::B:
    if (r == 1)
      return Polynomial::constant(1);
    return even ? geom_sum(r) + w_pow(r / 2) : geom_sum(r);
  case QuadricKind::C:
    if (r == 1)
      return {};
    return even ? geom_sum(r - 1) + w_pow(r / 2 - 1) : geom_sum(r - 1);
  case QuadricKind::DAffine:
    if (r == 1)
      throw std::invalid_argument("affine quadric d_r is defined for r >= 2");
    return even ? w_pow(r - 1) - w_pow(r / 2 - 1) : w_pow(r - 1) + w_pow((r - 1) / 2);
  }
  throw std::invalid_argument("unknown quadric kind");
}

inline Polynomial quadric_a(long r) { return quadric_hodge(QuadricKind::A, r); }
inline Polynomial quadric_b(long r) { return quadric_hodge(QuadricKind::B, r); }
inline Polynomial quadric_c(long r) { return quadric_hodge(QuadricKind::C, r); }
inline Polynomial quadric_d(long r) { return quadric_hodge(QuadricKind::DAffine, r); }

} // namespace ade

#endif // ADE_QUADRICS_HPP
