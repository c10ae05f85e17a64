#pragma once

// Scalar discrete averages. Integer versions act on all of Z with floor and
// ceiling toward -infinity / +infinity and parity taken by mathematical mod.

#include <cstdint>

#include "evenrhythm/core.hpp"

namespace evenrhythm {

/// floor(x / 2), e.g. floor_half(-1) == -1.
constexpr std::int64_t floor_half(std::int64_t x) noexcept { return x >= 0 ? x / 2 : -((1 - x) / 2); }
/// ceil(x / 2), e.g. ceil_half(-1) == 0.
constexpr std::int64_t ceil_half(std::int64_t x) noexcept { return -floor_half(-x); }
constexpr bool is_odd(std::int64_t x) noexcept { return x % 2 != 0; }

/// floor((a + b) / 2).
int av_floor(int a, int b) noexcept;

/// fc-average: floor((a+b)/2) when a is even, ceil((a+b)/2) when a is odd.
/// Not symmetric: av_fc(1, 2) == 2 but av_fc(2, 1) == 1.
int av_fc(int a, int b) noexcept;

/// cf-average: the fc-average with the parity rule exchanged.
int av_cf(int a, int b) noexcept;

/// sq_N(chi(a)) = chi(floor(a / 2)).
RootOfUnity discrete_sqrt(RootOfUnity p);

/// P * sq_N(P^-1 * Q). Lands on the counterclockwise arc [P, Q).
RootOfUnity av_mu(RootOfUnity p, RootOfUnity q);

/// a +_N floor((-a +_N b) / 2). Lands in the cyclic interval [a, b).
Residue av_z(Residue a, Residue b);

}  // namespace evenrhythm
