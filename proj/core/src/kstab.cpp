#include "secant/kstab.hpp"

namespace secant::kstab {

bool volume_scaling_identity_check(const Rat& ord_D0, const Rat& sinv_a, const Rat& x,
                                   const PiecewisePoly<Rat>& base_volume) {
    if (x < sinv_a || !(x < ord_D0))
        throw DomainError("volume_scaling_identity_check: x must lie in [s^-1 A, ord_F D0)");
    if (!(sinv_a < ord_D0))
        throw DomainError("volume_scaling_identity_check: requires s^-1 A < ord_F D0");
    const Rat lhs = base_volume.eval(x);
    const Rat ratio = (ord_D0 - x) / (ord_D0 - sinv_a);
    const Rat rhs = ratio.pow(static_cast<unsigned>(kDimension)) * base_volume.eval(sinv_a);
    return lhs == rhs;
}

RatFuncD equivariant_alpha() {
    const auto cfg = ledger::builtin_config("enp-secant-resolution");
    return ledger::replay_symbolic(cfg).lct(OrbitData::invariant_prime_divisor).value;
}

Rat equivariant_alpha(const Rat& d) {
    if (d < Rat(4)) throw DomainError("equivariant_alpha: requires d >= 4");
    const auto cfg = ledger::builtin_config("enp-secant-resolution");
    return ledger::replay_at(cfg, d).lct(OrbitData::invariant_prime_divisor).value;
}

} // namespace secant::kstab
