// Tabulates the weak/strong Lefschetz rank tests for A = F[x]/(x^2) against
// the characteristic thresholds, for n up to a bound given on the command
// line.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "specht/lefschetz.hpp"

int main(int argc, char** argv)
{
    int max_n = argc > 1 ? std::atoi(argv[1]) : 8;

    using namespace specht;
    std::vector<long long> primes{0, 2, 3, 5, 7, 11, 13};
    std::cout << "WLP (rank test; * marks disagreement with the threshold, none expected)\n";
    std::cout << "  n\\p ";
    for (long long p : primes)
        std::cout << std::setw(4) << (p == 0 ? std::string("0") : std::to_string(p));
    std::cout << "\n";
    for (int n = 1; n <= max_n; ++n) {
        std::cout << std::setw(5) << n << " ";
        for (long long p : primes) {
            FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
            bool rank = has_wlp(n, f);
            bool pred = wlp_threshold_predicate(n, p);
            std::cout << std::setw(3) << (rank ? "y" : "n") << (rank == pred ? " " : "*");
        }
        std::cout << "\n";
    }
    std::cout << "\nSLP\n";
    for (int n = 1; n <= max_n; ++n) {
        std::cout << std::setw(5) << n << " ";
        for (long long p : primes) {
            FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
            bool rank = has_slp(n, f);
            bool pred = slp_threshold_predicate(n, p);
            std::cout << std::setw(3) << (rank ? "y" : "n") << (rank == pred ? " " : "*");
        }
        std::cout << "\n";
    }
    return 0;
}
