#include <iostream>
#include "hmf/genset.hpp"
using namespace hmf;
int main()
{
    const GeneratorSet& gens = generator_set(-7);
    for (const char* name : {"b7", "m9", "m10_2"}) {
        std::cout << name << ": H1 order "
                  << *vanishing_order(gens.at(name), 1, 1, 0, 8) << "; slices N=0..4 diag orders: ";
        for (int N = 0; N <= 4; ++N) {
            ParamExp s = pullback(gens.at(name), 1, 1, 0, N);
            if (s.is_zero()) { std::cout << "[zero] "; continue; }
            auto d = s.diagonal_order(8);
            std::cout << (d ? std::to_string(*d) : ">8") << " ";
        }
        std::cout << "\n";
    }
    return 0;
}
