#ifndef COVDEG_CHOW_HPP
#define COVDEG_CHOW_HPP

#include <optional>
#include <string>

#include "covdeg/catalog.hpp"
#include "covdeg/gring.hpp"

namespace covdeg {

/// A ring presentation with a display label and an optional distinguished
/// degree-2 generator.
struct NamedRing {
    std::string label;
    RingPresentation presentation;
    std::optional<std::string> omega;

    std::string to_json_text() const;
    static NamedRing from_json_text(const std::string& text);
};

/// The subring of the adjoint group's cohomology generated by degree 2, as a
/// finite presentation keyed by the family arithmetic (s, t, r parameters).
/// Rejects non-adjoint input.
NamedRing j_ring(const GroupSpec& g);

/// The full Chow-ring presentation of g in any catalogued form, including
/// the intermediate SO(2n).
NamedRing chow_ring(const GroupSpec& g);

/// The Euler class of the central extension of a catalogued covering step,
/// expressed as scale * generator inside the target ring used by the ratio
/// method (j_ring for adjoint targets, chow_ring for SO(2n)).
struct EulerClass {
    std::string generator;
    Int scale = 1;
};

EulerClass euler_class(const CyclicCovering& c);

/// The target-ring presentation the ratio method computes characteristics in.
NamedRing covering_target_ring(const CyclicCovering& c);

/// Substitutes every torus class with a single degree-2 generator in the
/// elementary symmetric relations of the full flag ring of SU(n): the result
/// has relations C(n,r) w^r and must present the same ring as j_ring(PSU(n)).
NamedRing borel_specialize_su(long n);

/// Starts from the flag-ring presentation of Spin(2n) (torus classes t_i,
/// classes x_1..x_{n-1}, relations delta_r, q_r), substitutes t_i -> w,
/// imposes 2w = 0, eliminates the even-index x's through the q relations and
/// returns the resulting presentation on w and the odd-index generators.
NamedRing marlin_specialize_spin(long n);

}  // namespace covdeg

#endif
