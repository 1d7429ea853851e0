// Computes Fréchet bounds for a small pair of marginals and prints the
// extreme tables, then draws one feasible table and verifies it sits
// between the bounds.

#include <cstdio>

#include "maxplus/maxplus.hpp"

using namespace maxplus;

namespace {

void print_table(const char* label, const Dense<Rational>& t) {
    std::printf("%s:\n", label);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        std::printf("  ");
        for (std::size_t j = 0; j < t.cols(); ++j)
            std::printf("%8s", t.at(i, j).to_string().c_str());
        std::printf("\n");
    }
}

}  // namespace

int main() {
    Marginals<Rational> inst;
    inst.p = {Rational(1, 5), Rational(1, 2), Rational(3, 10)};
    inst.q = {Rational(2, 5), Rational(2, 5), Rational(1, 5)};

    Compare<Rational> cmp{};
    BoundsResult<Rational> bounds = compute_bounds(inst, cmp);

    print_table("upper bound table", bounds.upper_table);
    print_table("lower bound table", bounds.lower_table);

    Dense<Rational> sample = sample_feasible(inst, 7, cmp);
    print_table("sampled table", sample);

    SandwichReport report = sandwich_check(sample, inst, cmp);
    std::printf("sample within bounds: %s\n", report.ok() ? "yes" : "no");
    return report.ok() ? 0 : 1;
}
