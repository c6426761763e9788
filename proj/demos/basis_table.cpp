// Prints the standard-tableau basis of V(n,k,d) next to the tableaux that
// index it, for a shape given on the command line (defaults to (5,1,3)).

#include <cstdlib>
#include <iostream>

#include "specht/specht.hpp"

int main(int argc, char** argv)
{
    int n = argc > 1 ? std::atoi(argv[1]) : 5;
    int k = argc > 2 ? std::atoi(argv[2]) : 1;
    int d = argc > 3 ? std::atoi(argv[3]) : 3;

    using namespace specht;
    SpechtModuleBasis basis = module_basis(ShiftedShape(n, k, d), FieldSpec::rationals());
    std::cout << "dim V(" << n << "," << k << "," << d << ") = " << basis.dimension()
              << "  (formula " << count_standard(basis.shape).str() << ")\n";
    for (size_t i = 0; i < basis.polynomials.size(); ++i)
        std::cout << basis.tableaux[i].str() << "  ->  " << basis.polynomials[i].str() << "\n";

    // straighten a deliberately scrambled filling and show the coordinates
    std::vector<int> entries(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        entries[static_cast<size_t>(i)] = n - i;
    Tableau scrambled(basis.shape, std::vector<int>(entries.begin(), entries.begin() + d),
                      std::vector<int>(entries.begin() + d, entries.end()));
    std::cout << "\nstraightening " << scrambled.str() << ":\n";
    for (const auto& [t, c] : straighten(scrambled, FieldSpec::rationals()).coords)
        std::cout << "  " << c.str() << " * [" << t.str() << "]\n";
    return 0;
}
