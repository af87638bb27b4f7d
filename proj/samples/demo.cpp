// Small tour: q-expansions, the quasimodular expression of A_2, and a
// truncated check of the arcsine identity.
#include <iostream>

#include "macmahon/macmahon.hpp"

int main() {
    using namespace macmahon;

    const QSeries a2 = macmahon_a(2, 10);
    std::cout << "A_2 = ";
    for (int n = 0; n <= a2.order(); ++n) std::cout << a2[n] << (n < a2.order() ? " " : "\n");

    const auto polys = extract_polynomials(Side::A, 3);
    for (std::size_t r = 0; r < polys.size(); ++r) std::cout << "A_" << r + 1 << " = " << polys[r].str() << "\n";

    const VerdictReport rep = verify_main_a(20, 8);
    std::cout << rep.identity << " up to q^20, X^8: " << (rep.verified() ? "verified" : "mismatch") << "\n";

    const LatticeSum psi = monotangent(4, Tau(0.25, 1.0), 20000);
    std::cout << "Psi_4(1/4+i) ~ " << psi.corrected() << ", Lipschitz " << lipschitz_monotangent(4, Tau(0.25, 1.0)) << "\n";
    return 0;
}
