#include "evenrhythm/averages.hpp"

#include "mutation.hpp"

namespace evenrhythm {

int av_floor(int a, int b) noexcept {
  return static_cast<int>(floor_half(std::int64_t{a} + b));
}

int av_fc(int a, int b) noexcept {
  const std::int64_t s = std::int64_t{a} + b;
  bool use_ceiling = is_odd(a);
  if constexpr (detail::active_mutant == detail::Mutant::fc_parity_flip) {
    use_ceiling = !use_ceiling;
  }
  return static_cast<int>(use_ceiling ? ceil_half(s) : floor_half(s));
}

int av_cf(int a, int b) noexcept {
  const std::int64_t s = std::int64_t{a} + b;
  return static_cast<int>(is_odd(a) ? floor_half(s) : ceil_half(s));
}

RootOfUnity discrete_sqrt(RootOfUnity p) {
  const int a = p.exponent().value();
  return RootOfUnity::character(Residue(static_cast<int>(floor_half(a)), p.modulus()));
}

RootOfUnity av_mu(RootOfUnity p, RootOfUnity q) { return p * discrete_sqrt(p.inverse() * q); }

Residue av_z(Residue a, Residue b) {
  const Residue forward = residue_add(residue_negate(a), b);
  const int half = static_cast<int>(floor_half(forward.value()));
  return residue_add(a, Residue(half, a.modulus()));
}

}  // namespace evenrhythm
