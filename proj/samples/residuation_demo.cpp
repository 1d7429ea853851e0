// Shows matrix residuation: ldiv(A, B) is the greatest X with
// odot(A, X) <= B, so re-multiplying never overshoots B.

#include <cstdio>

#include "maxplus/maxplus.hpp"

using namespace maxplus;

namespace {

using TR = Tropical<Rational>;

void print_matrix(const char* label, const TropMatrix<Rational>& m) {
    std::printf("%s:\n", label);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::printf("  ");
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::printf("%8s", to_string(m.at(i, j)).c_str());
        std::printf("\n");
    }
}

}  // namespace

int main() {
    TropMatrix<Rational> a = TropMatrix<Rational>::from_rows({
        {TR(Rational(0)), TR(Rational(2))},
        {TR::bottom(), TR(Rational(1))},
    });
    TropMatrix<Rational> b = TropMatrix<Rational>::from_rows({
        {TR(Rational(3))},
        {TR(Rational(5))},
    });

    Compare<Rational> cmp{};
    TropMatrix<Rational> x = ldiv(a, b);
    print_matrix("A", a);
    print_matrix("B", b);
    print_matrix("greatest X with A (x) X <= B", x);

    TropMatrix<Rational> back = odot(a, x);
    print_matrix("A (x) X", back);
    std::printf("A (x) X <= B: %s\n", le(back, b, cmp) ? "yes" : "no");
    return le(back, b, cmp) ? 0 : 1;
}
