#include "covdeg/common.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace covdeg {

std::string FinAbGroup::to_string() const {
    if (rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FinAbGroup FinAbGroup::cyclic(const Int& n) {
    if (n <= 0) throw InvalidInput("FinAbGroup::cyclic: modulus must be positive");
    FinAbGroup g;
    if (n > 1) g.torsion.push_back(n);
    return g;
}

std::vector<Int> invariant_factors_from_cyclic(std::vector<Int> moduli) {
    // Factor every modulus, bucket prime powers per prime, then rebuild the
    // chain: the k-th largest invariant factor collects the k-th largest
    // power of each prime.
    std::map<Int, std::vector<int>> powers;  // prime -> exponents, one per modulus
    for (Int m : moduli) {
        if (m < 2) throw InvalidInput("invariant_factors_from_cyclic: modulus < 2");
        for (Int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                powers[p].push_back(e);
            }
        }
        if (m > 1) powers[m].push_back(1);
    }
    size_t slots = 0;
    for (auto& [p, es] : powers) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        slots = std::max(slots, es.size());
    }
    std::vector<Int> out(slots, Int(1));
    for (auto& [p, es] : powers) {
        for (size_t k = 0; k < es.size(); ++k) {
            Int q = 1;
            for (int i = 0; i < es[k]; ++i) q *= p;
            out[k] *= q;  // out[0] is the largest factor
        }
    }
    std::reverse(out.begin(), out.end());
    out.erase(std::remove(out.begin(), out.end(), Int(1)), out.end());
    return out;
}

int floor_log2(long n) {
    if (n < 1) throw InvalidInput("floor_log2: argument must be >= 1");
    int e = 0;
    while ((n >> 1) >= 1) {
        n >>= 1;
        ++e;
    }
    return e;
}

int two_adic_valuation(long n) {
    if (n < 1) throw InvalidInput("two_adic_valuation: argument must be >= 1");
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

}  // namespace covdeg
