// Acceptance suite: one PASS/FAIL line per criterion.

#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/minors.hpp"
#include "drazin/ode.hpp"
#include "drazin/solvers.hpp"
#include "support/fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace drazin;
using fixtures::frac;
using fixtures::gr;

namespace {

// Tolerances. Arithmetic is exact, so every comparison is literal equality;
// only the runtime budgets are numeric.
constexpr double kGoldenBudgetSeconds = 1.0;
constexpr double kAgreementBudgetSeconds = 60.0;
constexpr std::size_t kSingularFixtures = 100;
constexpr std::size_t kInvertibleFixtures = 50;
constexpr std::size_t kOdePairs = 50;
constexpr std::uint32_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        else if (detail.size() < 400) detail += "; " + what;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared fixtures: singular matrices forced through rank-deficient products.
const std::vector<CMatrix>& singular_fixtures() {
    static const std::vector<CMatrix> fixtures = [] {
        fixtures::Generator g(kSeed);
        std::vector<CMatrix> out;
        for (std::size_t t = 0; t < kSingularFixtures; ++t) {
            out.push_back(g.rank_deficient_product(2 + t % 4));
        }
        return out;
    }();
    return fixtures;
}

const std::vector<CMatrix>& invertible_fixtures() {
    static const std::vector<CMatrix> fixtures = [] {
        fixtures::Generator g(kSeed + 1);
        std::vector<CMatrix> out;
        for (std::size_t t = 0; t < kInvertibleFixtures; ++t) out.push_back(g.invertible(1 + t % 4));
        return out;
    }();
    return fixtures;
}

Outcome example_one() {
    Outcome o;
    const auto start = Clock::now();
    const CMatrix a = fixtures::ex1_A();
    const CMatrix b = fixtures::ex1_B();
    const CMatrix d = fixtures::ex1_D();
    const SolveReport s = solve_axb(a, b, d);

    // Golden values for the worked example.
    const CMatrix x_golden{{frac(1, 12, 1, 12), frac(-1, 12, -1, 12), frac(0, 1, 1, 18)},
                            {frac(1, 12), frac(-1, 12), frac(1, 12, -1, 12)},
                            {frac(0, 1, -1, 12), frac(0, 1, 1, 12), frac(-1, 12, -1, 12)}};
    const CMatrix d_tilde_golden{{-4, 4, 8}, {gr(-2, 2), gr(2, -2), gr(4, -4)}, {gr(2, 2), gr(-2, -2), gr(-4, -4)}};
    const std::vector<CMatrix> dB_golden{
        CMatrix::column_vector({gr(12, -12), gr(0, -12), -12}),
        CMatrix::column_vector({gr(-12, 12), gr(0, 12), 12}),
        CMatrix::column_vector({8, gr(-12, -12), gr(-12, 12)}),
    };

    o.expect(sum_principal_minors(mat_pow(a, 3), 1) == gr(8), "sum of order-1 principal minors of A^3 != 8");
    o.expect(sum_principal_minors(mat_pow(b, 2), 2) == gr(0, -18), "sum of order-2 principal minors of B^2 != -18i");
    o.expect(s.d_tilde && *s.d_tilde == d_tilde_golden, "D~ differs");
    for (std::size_t j = 0; j < 3; ++j) {
        const CMatrix& got = (*s.dB_columns)[j];
        for (std::size_t i = 0; i < 3; ++i) {
            if (got(i, 0) != dB_golden[j](i, 0)) {
                o.expect(false, "d^B column " + std::to_string(j + 1) + " entry " + std::to_string(i + 1) + ": got " +
                                    got(i, 0).to_string() + ", expected " + dB_golden[j](i, 0).to_string());
            }
        }
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (s.X(i, j) != x_golden(i, j)) {
                o.expect(false, "x" + std::to_string(i + 1) + std::to_string(j + 1) + ": got " + s.X(i, j).to_string() +
                                    ", expected " + x_golden(i, j).to_string());
            }
        }
    const double t = seconds_since(start);
    o.expect(t < kGoldenBudgetSeconds, "runtime " + std::to_string(t) + " s");
    return o;
}

Outcome example_two() {
    Outcome o;
    const auto start = Clock::now();
    const CMatrix a = fixtures::ex2_A();
    const CMatrix b = fixtures::ex2_B();
    const CMatrix constant =
        CMatrix{{gr(1, 1), gr(-1, -1), 0}, {gr(-1, 1), gr(1, -1), 0}, {4, gr(-1, 3), 0}} * frac(1, 6);
    o.expect(solve_ax(a, b).X == constant, "solve_ax differs from the constant matrix");

    const MatrixPolynomial x = ode_left_partial(a, b);
    // Entry-by-entry derivations: constant part and t-coefficient.
    const CMatrix t_coeff{{0, frac(1, 2, 1, 2), 1}, {0, frac(1, 2, 1, 2), 1}, {0, 0, 0}};
    const MatrixPolynomial per_entry({constant, t_coeff});
    o.expect(x.coefficient(0)(0, 0) == frac(1, 6, 1, 6), "x11");
    o.expect(x.coefficient(1)(0, 1) == frac(1, 2, 1, 2), "x12 t-term");
    o.expect(x.coefficient(0)(2, 0) == frac(2, 3), "x31");
    o.expect(x.coefficient(1)(0, 2) == gr(1) && x.coefficient(0)(0, 2) == gr(0), "x13 != t");
    o.expect(x == per_entry, "ode_left_partial differs from the entry-by-entry values");
    o.expect(residual_left(a, b, x).is_zero(), "residual not zero");

    // The factored display scales the whole t-column by 1/6; it is not a solution.
    const MatrixPolynomial factored(
        {constant,
         CMatrix{{0, gr(3, 3), 1}, {0, gr(3, 3), 1}, {0, 0, 0}} * frac(1, 6)});
    o.expect(!(x == factored), "result matches the factored display");
    o.expect(!residual_left(a, b, factored).is_zero(), "factored display unexpectedly solves the system");

    const double t = seconds_since(start);
    o.expect(t < kGoldenBudgetSeconds, "runtime " + std::to_string(t) + " s");
    return o;
}

Outcome representation_agreement() {
    Outcome o;
    const auto start = Clock::now();
    std::size_t idx = 0;
    for (const CMatrix& a : singular_fixtures()) {
        ++idx;
        o.expect(rank(a) < a.rows(), "fixture " + std::to_string(idx) + " not singular");
        const CMatrix col = drazin_col(a).inverse;
        const CMatrix row = drazin_row(a).inverse;
        const CMatrix oracle = drazin_oracle(a);
        o.expect(col == row, "column != row on fixture " + std::to_string(idx));
        o.expect(col == oracle, "column != oracle on fixture " + std::to_string(idx));
    }
    const double t = seconds_since(start);
    o.expect(t < kAgreementBudgetSeconds, "runtime " + std::to_string(t) + " s");
    std::ostringstream os;
    os << singular_fixtures().size() << " fixtures in " << t << " s";
    if (o.pass) o.detail = os.str();
    return o;
}

Outcome axiom_suite() {
    Outcome o;
    std::size_t idx = 0;
    for (const CMatrix& a : singular_fixtures()) {
        ++idx;
        const DrazinAxioms ax = verify_drazin(a, drazin_col(a).inverse);
        o.expect(ax.all(), "axioms fail on fixture " + std::to_string(idx));
    }
    return o;
}

Outcome classical_reduction() {
    Outcome o;
    fixtures::Generator g(kSeed + 2);
    std::size_t idx = 0;
    for (const CMatrix& a : invertible_fixtures()) {
        ++idx;
        const CMatrix inv = *fixtures::gauss_jordan_inverse(a);
        const CMatrix b = g.matrix(a.rows(), 2);
        o.expect(drazin_col(a).inverse == inv, "drazin != inverse on fixture " + std::to_string(idx));
        o.expect(solve_ax(a, b).X == inv * b, "solve_ax != A^-1 B on fixture " + std::to_string(idx));
    }
    return o;
}

Outcome solver_products() {
    Outcome o;
    fixtures::Generator g(kSeed + 3);
    std::vector<CMatrix> all = singular_fixtures();
    all.insert(all.end(), invertible_fixtures().begin(), invertible_fixtures().end());
    for (std::size_t t = 0; t < all.size(); ++t) {
        const CMatrix& a = all[t];
        const CMatrix& b = all[(t + 1) % all.size()];
        const std::string tag = " on fixture " + std::to_string(t + 1);
        const CMatrix ad = drazin_oracle(a);
        const CMatrix bd = drazin_oracle(b);
        const CMatrix rhs = g.matrix(a.rows(), 2);
        const CMatrix lhs = g.matrix(2, a.rows());
        o.expect(solve_ax(a, rhs).X == ad * rhs, "solve_ax" + tag);
        o.expect(solve_xa(a, lhs).X == lhs * ad, "solve_xa" + tag);
        const CMatrix d = g.matrix(a.rows(), b.rows());
        try {
            o.expect(solve_axb(a, b, d).X == ad * d * bd, "solve_axb" + tag);
        } catch (const RepresentationMismatch& e) {
            o.expect(false, std::string("column and row paths disagree") + tag);
        }
    }
    return o;
}

Outcome restriction_semantics() {
    Outcome o;
    fixtures::Generator g(kSeed + 4);
    std::size_t holds = 0, fails = 0;
    for (int t = 0; t < 60; ++t) {
        const auto n = static_cast<std::size_t>(2 + t % 4);
        const auto cn = g.random_core_nilpotent(n);
        const CMatrix& a = cn.a;
        const CMatrix a_k = mat_pow(a, cn.index);
        const bool constructed = t % 2 == 0;
        const std::string tag = " on fixture " + std::to_string(t + 1);

        const CMatrix b = constructed ? a_k * g.matrix(n, 2) : g.matrix(n, 2);
        const bool b_in = fixtures::reference_rank(hstack(a_k, b)) == fixtures::reference_rank(a_k);
        const SolveReport ax = solve_ax(a, b);
        o.expect(ax.restriction_satisfied == b_in, "AX=B flag" + tag);
        if (ax.restriction_satisfied) o.expect(a * ax.X == b, "A X != B" + tag);
        (b_in ? holds : fails) += 1;

        const CMatrix c = constructed ? g.matrix(2, n) * a_k : g.matrix(2, n);
        const bool c_in = fixtures::reference_rank(vstack(a_k, c)) == fixtures::reference_rank(a_k);
        const SolveReport xa = solve_xa(a, c);
        o.expect(xa.restriction_satisfied == c_in, "XA=B flag" + tag);
        if (xa.restriction_satisfied) o.expect(xa.X * a == c, "X A != B" + tag);

        const auto cb = g.random_core_nilpotent(static_cast<std::size_t>(2 + (t / 4) % 3));
        const CMatrix b_k = mat_pow(cb.a, cb.index);
        const CMatrix d = constructed ? a_k * g.matrix(n, cb.a.rows()) * b_k : g.matrix(n, cb.a.rows());
        const bool d_in = fixtures::reference_rank(hstack(a_k, d)) == fixtures::reference_rank(a_k) &&
                          fixtures::reference_rank(vstack(b_k, d)) == fixtures::reference_rank(b_k);
        const SolveReport axb = solve_axb(a, cb.a, d);
        o.expect(axb.restriction_satisfied == d_in, "AXB=D flag" + tag);
        if (axb.restriction_satisfied) o.expect(a * axb.X * cb.a == d, "A X B != D" + tag);
    }
    o.expect(holds > 0 && fails > 0, "fixtures did not cover both outcomes");
    return o;
}

Outcome ode_residuals() {
    Outcome o;
    fixtures::Generator g(kSeed + 5);
    std::size_t nilpotent = 0, index1 = 0, index2 = 0;
    for (std::size_t t = 0; t < kOdePairs; ++t) {
        fixtures::CoreNilpotent cn;
        switch (t % 4) {
        case 0: cn = g.core_nilpotent(0, {2, 1}); break;
        case 1: cn = g.core_nilpotent(2, {1, 1}); break;
        case 2: cn = g.core_nilpotent(2, {2}); break;
        default: cn = g.random_core_nilpotent(static_cast<std::size_t>(2 + t % 4)); break;
        }
        const IndexProfile p = index_of(cn.a);
        nilpotent += p.r == 0;
        index1 += p.k == 1;
        index2 += p.k == 2;
        const std::size_t n = cn.a.rows();
        const std::string tag = " on pair " + std::to_string(t + 1);
        const CMatrix b = g.matrix(n, 2);
        o.expect(residual_left(cn.a, b, ode_left_partial(cn.a, b)).is_zero(), "left residual" + tag);
        const CMatrix c = g.matrix(2, n);
        o.expect(residual_right(cn.a, c, ode_right_partial(cn.a, c)).is_zero(), "right residual" + tag);
    }
    o.expect(nilpotent > 0 && index1 > 0 && index2 > 0, "pairs did not cover nilpotent, index-1 and index-2 A");
    return o;
}

Outcome projector_suite() {
    Outcome o;
    std::size_t idx = 0;
    for (const CMatrix& a : singular_fixtures()) {
        ++idx;
        const std::string tag = " on fixture " + std::to_string(idx);
        const CMatrix left = proj_AdA(a);
        const CMatrix right = proj_AAd(a);
        const CMatrix ada = a * drazin_oracle(a) * a;
        o.expect(left * left == left, "A^D A not idempotent" + tag);
        o.expect(right * right == right, "A A^D not idempotent" + tag);
        o.expect(a * left == ada, "A (A^D A) != A A^D A" + tag);
        o.expect(right * a == ada, "(A A^D) A != A A^D A" + tag);
    }
    for (const CMatrix& a : invertible_fixtures()) {
        const CMatrix id = CMatrix::identity(a.rows());
        o.expect(proj_AdA(a) == id && proj_AAd(a) == id, "projector of an invertible matrix is not I");
    }
    return o;
}

struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> check;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "worked example AXB=D golden values", example_one},
        {2, "worked example X'+AX=B golden values", example_two},
        {3, "column/row/oracle agreement on singular fixtures", representation_agreement},
        {4, "Drazin axioms on singular fixtures", axiom_suite},
        {5, "reduction to the classical inverse", classical_reduction},
        {6, "solver product identities", solver_products},
        {7, "restriction semantics", restriction_semantics},
        {8, "ODE residuals", ode_residuals},
        {9, "projectors", projector_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double t = seconds_since(start);
        std::printf("criterion %d: %s  %s  [%.3f s]%s%s\n", c.number, o.pass ? "PASS" : "FAIL", c.name, t,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
