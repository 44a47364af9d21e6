#include "covdeg/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace covdeg {

std::string family_name(Family f) {
    switch (f) {
        case Family::SU: return "SU";
        case Family::Sp: return "Sp";
        case Family::SpinOdd:
        case Family::SpinEven: return "Spin";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    return "?";
}

std::string GroupSpec::label() const {
    std::ostringstream os;
    switch (form) {
        case GroupForm::SimplyConnected: break;
        case GroupForm::Adjoint: os << "P"; break;
        case GroupForm::SpecialOrthogonal: os << "S"; break;  // completed below
    }
    switch (family) {
        case Family::SU: os << "SU(" << param << ")"; break;
        case Family::Sp: os << "Sp(" << param << ")"; break;
        case Family::SpinOdd:
            os << (form == GroupForm::SpecialOrthogonal ? "O(" : "Spin(") << 2 * param + 1 << ")";
            break;
        case Family::SpinEven:
            os << (form == GroupForm::SpecialOrthogonal ? "O(" : "Spin(") << 2 * param << ")";
            break;
        case Family::E6: os << "E6"; break;
        case Family::E7: os << "E7"; break;
    }
    return os.str();
}

long DegreeSequence::max() const {
    long m = 0;
    for (long d : degrees) m = std::max(m, d);
    return m;
}

void validate(const GroupSpec& g) {
    switch (g.family) {
        case Family::SU:
            if (g.param < 2) throw InvalidInput("SU(n) requires n >= 2");
            break;
        case Family::Sp:
            if (g.param < 1) throw InvalidInput("Sp(n) requires n >= 1");
            break;
        case Family::SpinOdd:
            if (g.param < 3)
                throw InvalidInput("Spin(2n+1) requires n >= 3 (Spin(3) = Sp(1), Spin(5) = Sp(2) are catalogued there)");
            break;
        case Family::SpinEven:
            if (g.param < 4)
                throw InvalidInput("Spin(2n) requires n >= 4 (Spin(2), Spin(4) are not simple; Spin(6) = SU(4))");
            break;
        case Family::E6:
        case Family::E7: break;
    }
    if (g.form == GroupForm::SpecialOrthogonal && g.family != Family::SpinEven)
        throw InvalidInput("the SO form is only the intermediate quotient of Spin(2n)");
}

GroupSpec parse_group(const std::string& family, long param, GroupForm form) {
    GroupSpec g;
    g.form = form;
    if (family == "SU") {
        g.family = Family::SU;
        g.param = param;
    } else if (family == "Sp") {
        g.family = Family::Sp;
        g.param = param;
    } else if (family == "Spin" || family == "SO") {
        long m = param;  // Spin(m), addressed by dimension
        if (m < 3) throw InvalidInput("Spin(m) requires m >= 3");
        if (m == 3) throw InvalidInput("Spin(3) = Sp(1); use Sp 1");
        if (m == 4) throw InvalidInput("Spin(4) is not simple");
        if (m == 5) throw InvalidInput("Spin(5) = Sp(2); use Sp 2");
        if (m == 6) throw InvalidInput("Spin(6) = SU(4); use SU 4");
        if (m % 2 == 1) {
            g.family = Family::SpinOdd;
            g.param = (m - 1) / 2;
        } else {
            g.family = Family::SpinEven;
            g.param = m / 2;
        }
        if (family == "SO") g.form = GroupForm::SpecialOrthogonal;
    } else if (family == "E6") {
        g.family = Family::E6;
        g.param = 6;
    } else if (family == "E7") {
        g.family = Family::E7;
        g.param = 7;
    } else {
        throw InvalidInput("unknown family '" + family + "' (expected SU, Sp, Spin, E6 or E7)");
    }
    validate(g);
    return g;
}

GroupSpec parse_preset(const std::string& label) {
    std::string s;
    for (char c : label)
        if (c != '(' && c != ')' && c != ' ') s.push_back(c);
    auto split = [&s](const std::string& prefix, bool* ok) -> long {
        *ok = false;
        if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return 0;
        long v = 0;
        for (size_t i = prefix.size(); i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i]))) return 0;
            v = v * 10 + (s[i] - '0');
        }
        *ok = true;
        return v;
    };
    bool ok = false;
    if (s == "PE6") return parse_group("E6", 6, GroupForm::Adjoint);
    if (s == "PE7") return parse_group("E7", 7, GroupForm::Adjoint);
    if (s == "E6") return parse_group("E6", 6);
    if (s == "E7") return parse_group("E7", 7);
    if (long v = split("PSU", &ok); ok) return parse_group("SU", v, GroupForm::Adjoint);
    if (long v = split("PSp", &ok); ok) return parse_group("Sp", v, GroupForm::Adjoint);
    if (long v = split("PSpin", &ok); ok) return parse_group("Spin", v, GroupForm::Adjoint);
    if (long v = split("SO", &ok); ok) {
        GroupSpec g = parse_group("SO", v);
        if (g.family != Family::SpinEven) throw InvalidInput("SO(m) presets exist for even m >= 8 only");
        return g;
    }
    if (long v = split("SU", &ok); ok) return parse_group("SU", v);
    if (long v = split("Sp", &ok); ok) return parse_group("Sp", v);
    if (long v = split("Spin", &ok); ok) return parse_group("Spin", v);
    throw InvalidInput("cannot parse group preset '" + label + "'");
}

long rank(const GroupSpec& g) {
    validate(g);
    switch (g.family) {
        case Family::SU: return g.param - 1;
        case Family::Sp:
        case Family::SpinOdd:
        case Family::SpinEven: return g.param;
        case Family::E6: return 6;
        case Family::E7: return 7;
    }
    return 0;
}

DegreeSequence degree_sequence(const GroupSpec& g) {
    validate(g);
    DegreeSequence out;
    switch (g.family) {
        case Family::SU:
            for (long d = 2; d <= g.param; ++d) out.degrees.push_back(d);
            break;
        case Family::Sp:
        case Family::SpinOdd:
            for (long i = 1; i <= g.param; ++i) out.degrees.push_back(2 * i);
            break;
        case Family::SpinEven:
            for (long i = 1; i <= g.param - 1; ++i) out.degrees.push_back(2 * i);
            out.degrees.push_back(g.param);
            break;
        case Family::E6: out.degrees = {2, 5, 6, 8, 9, 12}; break;
        case Family::E7: out.degrees = {2, 6, 8, 10, 12, 14, 18}; break;
    }
    return out;
}

FinAbGroup center(const GroupSpec& g) {
    validate(g);
    switch (g.family) {
        case Family::SU: return FinAbGroup::cyclic(Int(g.param));
        case Family::Sp:
        case Family::SpinOdd: return FinAbGroup::cyclic(Int(2));
        case Family::SpinEven:
            if (g.param % 2 == 1) return FinAbGroup::cyclic(Int(4));
            return FinAbGroup{0, {Int(2), Int(2)}};
        case Family::E6: return FinAbGroup::cyclic(Int(3));
        case Family::E7: return FinAbGroup::cyclic(Int(2));
    }
    return FinAbGroup::trivial();
}

std::vector<CyclicCovering> covering_chain(const GroupSpec& g) {
    validate(g);
    if (g.form != GroupForm::SimplyConnected)
        throw InvalidInput("covering_chain expects the simply connected form");
    std::vector<CyclicCovering> out;
    if (g.family == Family::SpinEven) {
        GroupSpec so = g.with_form(GroupForm::SpecialOrthogonal);
        GroupSpec pg = g.with_form(GroupForm::Adjoint);
        out.push_back({g, so, Int(2)});
        out.push_back({so, pg, Int(2)});
    } else {
        out.push_back({g, g.with_form(GroupForm::Adjoint), *center(g).order()});
    }
    return out;
}

std::vector<std::string> coincidence_warnings(const GroupSpec& g) {
    std::vector<std::string> out;
    if (g.family == Family::Sp && g.param == 1) out.push_back("Sp(1) = SU(2) = Spin(3)");
    if (g.family == Family::Sp && g.param == 2) out.push_back("Sp(2) = Spin(5)");
    if (g.family == Family::SU && g.param == 2) out.push_back("SU(2) = Sp(1) = Spin(3)");
    if (g.family == Family::SU && g.param == 4) out.push_back("SU(4) = Spin(6)");
    return out;
}

}  // namespace covdeg
