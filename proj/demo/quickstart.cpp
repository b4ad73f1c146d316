// Solve one small instance three ways and print the detour accounting.

#include <cstdio>

#include "tspn/tspn.hpp"

int main() {
    using namespace tspn;
    const Instance inst = gen_disjoint(7, 1.0, 16.0, 42);

    const Tour opt = snap_to_boundary(inst, tspn_exact_small(inst));
    const Tour centers = approx_disjoint(inst);
    std::printf("optimal TSPN       %.6f\n", opt.length);
    std::printf("tour on centers    %.6f  (ratio %.4f)\n", centers.length, centers.length / opt.length);
    std::printf("2Rn detour budget  %.6f\n", opt.length + 2.0 * inst.radius * static_cast<double>(inst.size()));

    const DetourLedger led = build_detour_ledger(inst, opt, AnalysisParams{});
    std::printf("K = %zu of n = %zu (triads %zu, good %zu, bad %zu), case %s, bound %.6f\n", led.K, led.n, led.k1,
                led.good_outside, led.bad_outside, led.active == BoundCase::one ? "1" : "2", led.bound_value);

    const SharpTurnInstance turn = gen_sharp_turn_triad(SharpTurnParams{}, 3);
    const SharpTurnCheck chk = check_sharp_turn(turn, default_beta());
    std::printf("sharp-turn instance: %zu triad(s) on its optimal tour\n", chk.triads);
    return 0;
}
