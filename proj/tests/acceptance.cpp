// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Every check is exact; no tolerances appear anywhere.

#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "secant/chow.hpp"
#include "secant/cylinder.hpp"
#include "secant/kstab.hpp"
#include "secant/ledger.hpp"
#include "secant/sign.hpp"

#include "test_support.hpp"

using namespace secant;

namespace {

const RatFuncD D = RatFuncD::variable();

bool expect(bool ok, const char* what) {
    if (!ok) std::fprintf(stderr, "    subcheck failed: %s\n", what);
    return ok;
}

// 1. Degree and anticanonical volume, concrete d in {4..40} and symbolic.
bool criterion_degree_volume() {
    bool ok = true;
    chow::ChowRing<RatFuncD> ring(D);
    const RatFuncD deg = (D - RatFuncD(1)) * (D - RatFuncD(2)) / RatFuncD(2);
    const RatFuncD vol = RatFuncD(32) * (D - RatFuncD(1)) / (D - RatFuncD(2)).pow(2);
    ok &= expect(ring.triple_intersection(ring.xi(), ring.xi(), ring.xi()) == deg, "H^3 symbolic");
    ok &= expect(ring.anticanonical_volume() == vol, "(-K)^3 symbolic");
    for (long long d = 4; d <= 40; ++d) {
        chow::ChowRing<Rat> rd{Rat(d)};
        ok &= expect(rd.degree_sigma() == Rat((d - 1) * (d - 2) / 2) ||
                         rd.degree_sigma() == Rat(d - 1) * Rat(d - 2) / Rat(2),
                     "H^3 concrete");
        ok &= expect(rd.anticanonical_volume() == Rat(32) * Rat(d - 1) / (Rat(d - 2) * Rat(d - 2)),
                     "(-K)^3 concrete");
    }
    chow::ChowRing<Rat> r4{Rat(4)};
    ok &= expect(r4.degree_sigma() == Rat(3), "deg Sigma = 3 at d = 4");
    ok &= expect(r4.anticanonical_volume() == Rat(24), "(-K)^3 = 24 at d = 4");
    return ok;
}

// 2. The two coefficient solves.
bool criterion_solves() {
    chow::ChowRing<RatFuncD> ring(D);
    const auto c = ring.solve_anticanonical_coeffs();
    bool ok = expect(c.a == RatFuncD(4) / (D - RatFuncD(2)), "a = 4/(d-2)");
    ok &= expect(c.b == (D - RatFuncD(4)) / (D - RatFuncD(2)), "b = (d-4)/(d-2)");
    ok &= expect(ring.solve_pullback_coeff() == RatFuncD(2) / (D - RatFuncD(2)), "c = 2/(d-2)");
    return ok;
}

// 3. The resolution ledger reproduces the six displayed coefficients and
//    the lct with its minimizer.
bool criterion_ledger() {
    const auto led = ledger::replay_symbolic(ledger::builtin_config("enp-secant-resolution"));
    const RatFuncD two_over = RatFuncD(2) / (D - RatFuncD(2));
    bool ok = expect(led.coefficient(ledger::kKRow, "Z") ==
                         -(D - RatFuncD(4)) / (D - RatFuncD(2)),
                     "K_B row");
    ok &= expect(led.coefficient("T", "Z") == two_over, "beta^*T row");
    ok &= expect(led.coefficient(ledger::kKRow, "E1") == two_over, "K_B1 row");
    ok &= expect(led.coefficient("T", "E1") == D / (D - RatFuncD(2)), "(b1 b)^*T row");
    ok &= expect(led.coefficient(ledger::kKRow, "E2") == RatFuncD(4) / (D - RatFuncD(2)),
                 "K_B2 row");
    ok &= expect(led.coefficient("T", "E2") == RatFuncD(2) * D / (D - RatFuncD(2)), "f^*T row");
    const auto lct = led.lct("T");
    ok &= expect(lct.value == (D + RatFuncD(2)) / (RatFuncD(2) * D), "lct = (d+2)/(2d)");
    ok &= expect(lct.argmin == "E2", "argmin E2");
    return ok;
}

// 4. S and A for the tangent developable.
bool criterion_s_and_a() {
    chow::ChowRing<RatFuncD> ring(D);
    const RatFuncD V = ring.anticanonical_volume();
    bool ok = expect(kstab::s_invariant(kstab::cubic_volume_profile(V), V) == RatFuncD(Rat(1, 4)),
                     "S(T) = 1/4");
    const auto led = ledger::replay_symbolic(ledger::builtin_config("enp-secant-resolution"));
    ok &= expect(led.log_discrepancy("T") == RatFuncD(1), "A(T) = 1");
    return ok;
}

// 5. Minimax estimate with the rational-grid oracle.
bool criterion_minimax() {
    const auto sym = ledger::minimax_ord_bound<RatFuncD>(D);
    bool ok = expect(sym.max_value == RatFuncD(4) / D, "max = 4/d");
    ok &= expect(sym.argmax_a == RatFuncD(4) / (D * (D - RatFuncD(2))), "argmax = 4/(d(d-2))");
    for (long long d = 4; d <= 12; ++d) {
        const Rat dd(d);
        const Rat hi = Rat(2) / (dd - Rat(2));
        Rat best(-1);
        for (long long j = 0; j <= 4 * d; ++j) {
            const Rat a = hi * Rat(j) / Rat(4 * d);
            const Rat f = a * (dd - Rat(2));
            const Rat g = Rat(4) / (dd - Rat(2)) - Rat(2) * a;
            const Rat m = f < g ? f : g;
            if (m > best) best = m;
        }
        ok &= expect(best == ledger::minimax_ord_bound<Rat>(dd).max_value, "grid oracle");
        ok &= expect(best == Rat(4) / dd, "grid max = 4/d");
    }
    return ok;
}

// 6. The criterion margins, their positivity on all of d >= 4, and the
//    adversarial alpha floor.
bool criterion_zhuang() {
    const auto v = kstab::zhuang_check_symbolic();
    bool ok = expect(v.polystable, "verdict positive");
    ok &= expect(v.margin_T == RatFuncD(Rat(3, 4)), "margin(T) = 3/4");
    ok &= expect(v.margin_factor_C == RatFuncD(1) / (D + RatFuncD(2)), "margin factor 1/(d+2)");
    ok &= expect(v.bound_factor_C ==
                     (RatFuncD(4) * D + RatFuncD(4)) / (RatFuncD(4) * (D + RatFuncD(2))),
                 "bound factor (4d+4)/(4(d+2))");
    ok &= expect(is_positive_on(v.margin_factor_C, Rat(4)), "sign analysis on d >= 4");
    const auto blunt = kstab::zhuang_check_symbolic(RatFuncD(Rat(1, 2)));
    ok &= expect(blunt.margin_factor_C == RatFuncD(0), "adversarial t = 1/2 margin 0");
    ok &= expect(!blunt.polystable, "adversarial verdict inconclusive");
    return ok;
}

// 7. Equivariant alpha invariant.
bool criterion_alpha() {
    bool ok = expect(kstab::equivariant_alpha() == (D + RatFuncD(2)) / (RatFuncD(2) * D),
                     "alpha_G symbolic");
    ok &= expect(kstab::equivariant_alpha(Rat(4)) == Rat(3, 4), "alpha_G(4) = 3/4");
    return ok;
}

// 8. The cylinder construction end to end.
bool criterion_cylinder() {
    bool ok = expect(cylinder::cylinder_full_verify<RatFuncD>(D).pass, "five steps symbolic");
    const auto sigma = cylinder::sigma_map();
    const auto& vars = sigma.source_vars;
    ok &= expect(sigma.components[2] ==
                     MVPoly::var(vars, "t") * MVPoly::var(vars, "v"),
                 "sigma^*(z) = tv");
    ok &= expect(cylinder::ideal_membership_check().pass, "iota substitution vanishes");
    ok &= expect(compose(cylinder::gamma_map(), cylinder::gamma_inverse_map()).is_identity(),
                 "gamma o gamma^-1 = id");
    ok &= expect(cylinder::gamma_plane_check().details.find("image_equation") == "zp",
                 "gamma plane image = zp");
    chow::ChowRing<RatFuncD> ring(D);
    const RatFuncD total = (RatFuncD(4) / D) * (RatFuncD(Rat(1, 2)) + (D - RatFuncD(2)) / RatFuncD(4));
    ok &= expect(total == RatFuncD(1), "(4/d)(1/2 + (d-2)/4) = 1");
    ok &= expect(cylinder::preimage_line_decomposition_check().pass,
                 "sigma^*(y^2 - xz) = (1/4)(tu - sv)^2");
    return ok;
}

// 9. Higher-secant evaluator with the independent binomial cross-check.
bool criterion_higher_secant() {
    const auto inv = chow::higher_secant_invariants(2, Rat(7));
    bool ok = expect(inv.anticanonical_coeff == Rat(2), "coeff 2");
    ok &= expect(inv.degree == Rat(10), "degree 10");
    ok &= expect(inv.anticanonical_volume == Rat(320), "volume 320");
    ok &= expect(inv.discrepancy_coeff == Rat(1, 3), "discrepancy 1/3");
    // C(5,3) by the Pascal recurrence, then 2^5 * C(5,3).
    long long pascal[6][6] = {};
    for (int n = 0; n <= 5; ++n) {
        pascal[n][0] = 1;
        for (int r = 1; r <= n; ++r)
            pascal[n][r] = pascal[n - 1][r - 1] + (r <= n - 1 ? pascal[n - 1][r] : 0);
    }
    ok &= expect(inv.degree == Rat(pascal[5][3]), "C(5,3) cross-check");
    ok &= expect(inv.anticanonical_volume == Rat(32 * pascal[5][3]), "2^5 C(5,3) cross-check");
    return ok;
}

// 10. Property suites and one intentional mutation per verification
//     operation.
bool criterion_properties() {
    bool ok = true;

    // Scalar symbolic/numeric coherence at 50 random d in [5, 10^6].
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> sample(5, 1000000);
    chow::ChowRing<RatFuncD> sym_ring(D);
    const auto sym_coeffs = sym_ring.solve_anticanonical_coeffs();
    const RatFuncD sym_vol = sym_ring.anticanonical_volume();
    for (int i = 0; i < 50; ++i) {
        const long long d = sample(rng);
        chow::ChowRing<Rat> rd{Rat(d)};
        ok &= expect(rd.anticanonical_volume() == sym_vol.eval_int(d), "coherence: volume");
        ok &= expect(rd.solve_anticanonical_coeffs().a == sym_coeffs.a.eval_int(d),
                     "coherence: solve");
    }

    // Chow ring axioms on random classes.
    std::mt19937_64 rng2(434343);
    auto rnd_class = [&](chow::ChowRing<Rat>& ring) {
        auto c = ring.zero();
        c.c0 = testsup::random_rat(rng2);
        c.ch = testsup::random_rat(rng2);
        c.cxi = testsup::random_rat(rng2);
        c.ch2 = testsup::random_rat(rng2);
        c.chxi = testsup::random_rat(rng2);
        c.cpt = testsup::random_rat(rng2);
        return c;
    };
    chow::ChowRing<Rat> r9{Rat(9)};
    for (int i = 0; i < 30; ++i) {
        const auto a = rnd_class(r9), b = rnd_class(r9), c = rnd_class(r9);
        ok &= expect(a * b == b * a, "commutativity");
        ok &= expect((a * b) * c == a * (b * c), "associativity");
        ok &= expect(a * (b + c) == a * b + a * c, "distributivity");
    }

    // Ledger linearity under boundary scaling.
    auto scaled_cfg = ledger::builtin_config("enp-secant-resolution");
    for (auto& [tracked, coeffs] : scaled_cfg.seeds)
        if (tracked == "T")
            for (auto& [divisor, coeff] : coeffs) coeff = RatFuncD(5) * coeff;
    const auto base = ledger::replay_symbolic(ledger::builtin_config("enp-secant-resolution"));
    const auto scaled = ledger::replay_symbolic(scaled_cfg);
    for (const auto& divisor : base.divisor_order())
        ok &= expect(scaled.coefficient("T", divisor) == RatFuncD(5) * base.coefficient("T", divisor),
                     "ledger linearity");

    // S-invariant scale invariance.
    for (long long c = 1; c <= 10; ++c)
        ok &= expect(kstab::s_invariant(kstab::cubic_volume_profile(Rat(c)), Rat(c)) == Rat(1, 4),
                     "S scale invariance");

    // Mutations: every verification operation must reject its perturbation.
    chow::ChowRing<RatFuncD> ring(D);
    ok &= expect(!ring.cylinder_divisor_check(RatFuncD(4) / (D + RatFuncD(1))).pass,
                 "mutation: divisor check");
    ok &= expect(!ledger::ord_fd_case_checks(RatFuncD(4) / (D - RatFuncD(1))).pass,
                 "mutation: order-bound identity");
    {
        const std::vector<std::string> V = {"w0", "w1", "x", "y"};
        const MVPoly mutated = cylinder::secant_quadric() +
                               Rat(4) * MVPoly::var(V, "y") * MVPoly::var(V, "w0") *
                                   MVPoly::var(V, "w1");
        ok &= expect(!cylinder::ideal_membership_check(mutated).pass, "mutation: ideal membership");
    }
    {
        const auto& V = cylinder::gamma_map().source_vars;
        const auto& W = cylinder::gamma_inverse_map().source_vars;
        const MVPoly zp_mut = MVPoly::var(V, "w0") * MVPoly::var(V, "w0") -
                              MVPoly::var(V, "y") * MVPoly::var(V, "w0") + MVPoly::var(V, "x");
        const PolyMap mutated(V, W, {MVPoly::var(V, "w0"), MVPoly::var(V, "y"), zp_mut});
        const MVPoly x_mut = MVPoly::var(W, "zp") - MVPoly::var(W, "w0") * MVPoly::var(W, "w0") +
                             MVPoly::var(W, "yp") * MVPoly::var(W, "w0");
        const PolyMap mutated_inv(W, V, {MVPoly::var(W, "w0"), x_mut, MVPoly::var(W, "yp")});
        ok &= expect(!cylinder::gamma_plane_check(mutated, mutated_inv,
                                                  cylinder::secant_quadric_affine())
                          .pass,
                     "mutation: gamma plane");
    }
    {
        PolyMap mutated = cylinder::sigma_map();
        mutated.components[2] = MVPoly::var(mutated.source_vars, "t") *
                                MVPoly::var(mutated.source_vars, "u");
        ok &= expect(!cylinder::preimage_line_decomposition_check(mutated).pass,
                     "mutation: line preimage");
    }
    ok &= expect(!cylinder::cylinder_full_verify<RatFuncD>(D, RatFuncD(4) / (D + RatFuncD(1))).pass,
                 "mutation: full cylinder");
    ok &= expect(!kstab::volume_scaling_identity_check(Rat(2, 3), Rat(1, 4), Rat(1, 2),
                                                       kstab::cubic_volume_profile(Rat(24))),
                 "mutation: volume scaling");
    ok &= expect(!kstab::zhuang_check_symbolic(RatFuncD(Rat(1, 2))).polystable,
                 "mutation: zhuang floor");
    {
        auto mutated_cfg = ledger::builtin_config("enp-secant-resolution");
        for (auto& [tracked, coeffs] : mutated_cfg.seeds)
            if (tracked == ledger::kKRow)
                for (auto& [divisor, coeff] : coeffs)
                    coeff = -(D - RatFuncD(3)) / (D - RatFuncD(2));
        const auto led = ledger::replay_symbolic(mutated_cfg);
        ok &= expect(led.lct("T").value != (D + RatFuncD(2)) / (RatFuncD(2) * D),
                     "mutation: replay seed changes the lct");
    }
    for (long long d = 4; d <= 12; ++d)
        ok &= expect(ledger::minimax_ord_bound<Rat>(Rat(d)).max_value != Rat(4) / Rat(d + 1),
                     "mutation: minimax closed form is tight");

    return ok;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
        {"criterion 1: degree and anticanonical volume, d in {4..40} and symbolic",
         criterion_degree_volume},
        {"criterion 2: anticanonical and pullback coefficient solves", criterion_solves},
        {"criterion 3: resolution ledger rows and lct(Sigma, T)", criterion_ledger},
        {"criterion 4: S(T) = 1/4 and A(T) = 1", criterion_s_and_a},
        {"criterion 5: minimax order bound with grid oracle", criterion_minimax},
        {"criterion 6: equivariant criterion margins and adversarial floor", criterion_zhuang},
        {"criterion 7: equivariant alpha invariant", criterion_alpha},
        {"criterion 8: anticanonical polar cylinder certificates", criterion_cylinder},
        {"criterion 9: higher-secant closed forms at (k, d) = (2, 7)", criterion_higher_secant},
        {"criterion 10: property suites and mutation sensitivity", criterion_properties},
    };

    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "    exception: %s\n", e.what());
        }
        std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all 10 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
