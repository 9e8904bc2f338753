#pragma once

#include <map>
#include <string>
#include <vector>

#include "splift/numeric.hpp"

namespace splift {

// Hecke eigenvalue data of a level-one elliptic eigenform.
struct HeckeData {
    std::string name;
    int weight = 0;          // modular weight 2k
    std::map<long, Int> ap;  // prime -> a_p
};

// q-expansion of the unique normalized eigenform of the given weight,
// built from Delta = q prod (1-q^n)^24 and the Eisenstein series E4, E6.
// Supported weights: 12, 16, 18, 20, 22, 26 (one-dimensional cusp spaces).
// Returns a_1..a_count.
std::vector<Int> eigenform_q_expansion(int weight, int count);

// Eigenvalues a_p for all primes p <= bound, via eigenform_q_expansion.
HeckeData eigenform_hecke_data(const std::string& name, int weight, long prime_bound);

// Parses the eigenform JSON schema
//   {"name": str, "kind": "elliptic", "weight": int, "ap": {"<prime>": int|str, ...}}
HeckeData load_eigenform_data(const std::string& path);

std::vector<long> primes_up_to(long bound);

} // namespace splift
