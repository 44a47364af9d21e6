#ifndef COVDEG_COMMON_HPP
#define COVDEG_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covdeg {

/// Exact arbitrary-precision integer. No floating point is used anywhere
/// in the library.
using Int = boost::multiprecision::cpp_int;

/// Rejection of malformed input (bad group parameters, schema violations,
/// dimension mismatches). The CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check that should hold failed (method disagreement, product
/// mismatch, table-vs-ring mismatch). The CLI maps this to exit code 1.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Finitely generated abelian group in invariant-factor form:
///   Z^rank  +  Z/d1 + Z/d2 + ...   with d1 | d2 | ... and every di >= 2.
struct FinAbGroup {
    long rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FinAbGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_finite() const { return rank == 0; }

    /// Group order; nullopt when the rank is positive.
    std::optional<Int> order() const {
        if (rank > 0) return std::nullopt;
        Int n = 1;
        for (const Int& d : torsion) n *= d;
        return n;
    }

    Int torsion_order() const {
        Int n = 1;
        for (const Int& d : torsion) n *= d;
        return n;
    }

    /// "0", "Z", "Z^2 + Z/2 + Z/4", ...
    std::string to_string() const;

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup free(long rank) { return {rank, {}}; }
    static FinAbGroup cyclic(const Int& n);
};

/// Normalizes an unordered list of cyclic-factor moduli (each >= 2 or 0 for
/// a free factor is not allowed here) into canonical invariant-factor form.
std::vector<Int> invariant_factors_from_cyclic(std::vector<Int> moduli);

/// Largest e >= 0 with 2^e <= n. Requires n >= 1.
int floor_log2(long n);

/// 2-adic valuation of n. Requires n >= 1.
int two_adic_valuation(long n);

}  // namespace covdeg

#endif
