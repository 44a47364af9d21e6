#ifndef COVDEG_CATALOG_HPP
#define COVDEG_CATALOG_HPP

#include <string>
#include <vector>

#include "covdeg/common.hpp"

namespace covdeg {

enum class Family { SU, Sp, SpinOdd, SpinEven, E6, E7 };

enum class GroupForm { SimplyConnected, Adjoint, SpecialOrthogonal };

/// A simply connected simple Lie group with nontrivial center, or one of its
/// quotient forms. `param` is n for SU(n) and Sp(n), and n for Spin(2n+1)
/// and Spin(2n); the exceptional families ignore it.
struct GroupSpec {
    Family family;
    long param = 0;
    GroupForm form = GroupForm::SimplyConnected;

    bool operator==(const GroupSpec& o) const {
        return family == o.family && param == o.param && form == o.form;
    }

    /// "SU(12)", "PSU(12)", "Spin(13)", "SO(12)", "PE6", ...
    std::string label() const;

    GroupSpec with_form(GroupForm f) const { return {family, param, f}; }
};

/// Degree sequence I_G of the basic Weyl invariants, in the canonical
/// ordering: for Spin(2n) the even block 2, 4, ..., 2(n-1) occupies
/// positions 1..n-1 and the degree n sits last, not sorted in.
struct DegreeSequence {
    std::vector<long> degrees;

    long max() const;
    bool operator==(const DegreeSequence& o) const { return degrees == o.degrees; }
};

/// One covering step with cyclic kernel.
struct CyclicCovering {
    GroupSpec source;
    GroupSpec target;
    Int kernel_order;
};

/// Throws InvalidInput unless g satisfies the family/parameter/form rules.
void validate(const GroupSpec& g);

/// Parse "SU"/"Sp"/"Spin"/"E6"/"E7" plus parameter. For Spin the parameter
/// is the dimension m of Spin(m); it is converted to the internal n.
GroupSpec parse_group(const std::string& family, long param, GroupForm form = GroupForm::SimplyConnected);

/// Parse an adjoint/intermediate ring preset label such as "PSU4", "PSp12",
/// "PSpin13", "SO12", "PE6", "PE7" (parentheses tolerated).
GroupSpec parse_preset(const std::string& label);

long rank(const GroupSpec& g);

DegreeSequence degree_sequence(const GroupSpec& g);

/// Center of the simply connected form of g's family.
FinAbGroup center(const GroupSpec& g);

/// The chain of cyclic coverings from g down to the adjoint group: a single
/// step for every family except Spin(2n), which factors through SO(2n).
std::vector<CyclicCovering> covering_chain(const GroupSpec& g);

/// Low-rank isomorphism note (Sp(1) = SU(2) = Spin(3), Sp(2) = Spin(5),
/// SU(4) = Spin(6)), empty when none applies.
std::vector<std::string> coincidence_warnings(const GroupSpec& g);

std::string family_name(Family f);

}  // namespace covdeg

#endif
