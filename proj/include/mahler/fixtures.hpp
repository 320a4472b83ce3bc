#pragma once

#include <functional>

#include "mahler/evaluator.hpp"
#include "mahler/planner.hpp"

namespace mahler::fixtures {

// --- words ---
Morphism fibonacci();
Morphism tribonacci();
Morphism w_word();
Morphism thue_morse();
Morphism baum_sweet();
Dfao thue_morse_dfao();
Dfao powers_of_two_dfao();

// --- scalar equations ---
ScalarMahlerEq thue_morse_eq();
ScalarMahlerEq paperfolding_eq();
ScalarMahlerEq baum_sweet_eq();

// --- coefficient rules ---
Rat paperfolding_term(unsigned long n); // indexed so that a_0 = 0
Rat baum_sweet_term(unsigned long n);
bool sierpinski_rule(unsigned long n1, unsigned long n2);

// --- named univariate evaluation streams (tm, pf, bs, fib, trib, w,
// power2, hm-sqrt2, hm-1+sqrt2, hm-2sqrt2, hm-golden, hm-sqrt3) ---
bool has_stream(const std::string& name);
CoefficientStream stream(const std::string& name);
std::vector<std::string> stream_names();

// --- transformation matrices (t1, t2, t3, t4, t5, 2I2, 3I2) ---
bool has_matrix(const std::string& name);
IntMatrix matrix_fixture(const std::string& name);
std::vector<std::string> matrix_names();

// --- quadratic irrationals ---
bool has_omega(const std::string& name);
QuadraticIrrational omega_fixture(const std::string& name);

// --- residual-checkable systems ---
struct SystemFixture {
    std::string name;
    std::string provenance;
    MahlerSystem system;
    // certified component values at a point of the right arity
    std::function<std::vector<Ball>(const std::vector<Rat>&, long)> components;
};

bool has_system(const std::string& name);
// tm, pf, bs, tm-deriv, pf-deriv, bs-deriv, fib2, trib3, w2, sierpinski,
// sqrtpow2; each self-verifies (small residual check) on construction.
SystemFixture system_fixture(const std::string& name);
std::vector<std::string> system_names();

std::vector<Ball> system_residual(const SystemFixture& f, const std::vector<Rat>& point, long p);

// --- gauges ---
MahlerSystem fibonacci_system_q();
GaugeInput fibonacci_gauge(long order, long margin = 8);
MahlerSystem tribonacci_system_eisenstein();
// order counts in units of 1/2 (the fixture's ramification)
GaugeInput tribonacci_gauge(long half_order, long margin = 12);

// --- the bundled independence request ---
std::vector<EvalItem> bundled_independence_items();
std::vector<EvalItem> remark_dependence_items();

} // namespace mahler::fixtures
