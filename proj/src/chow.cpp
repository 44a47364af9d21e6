#include "covdeg/chow.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace covdeg {

namespace {

Int pow2(int e) {
    Int x = 1;
    for (int i = 0; i < e; ++i) x *= 2;
    return x;
}

long pow2_long(int e) { return 1L << e; }

Polynomial mono_rel(const Int& coeff, size_t gen_count, size_t var, int exp) {
    Term t;
    t.coeff = coeff;
    t.exponents.assign(gen_count, 0);
    t.exponents[var] = exp;
    return {t};
}

// Coefficients of prod_{i=1..n} (1 + w t) in t: entry r is the integer
// multiplying w^r t^r, built by the Pascal recurrence so that no binomial
// formula is consulted.
std::vector<Int> symmetric_substitution_coeffs(long n) {
    std::vector<Int> c{Int(1)};
    for (long i = 0; i < n; ++i) {
        std::vector<Int> next(c.size() + 1, Int(0));
        for (size_t r = 0; r < c.size(); ++r) {
            next[r] += c[r];
            next[r + 1] += c[r];
        }
        c = std::move(next);
    }
    return c;  // c[r] = e_r(w,...,w) / w^r
}

// k_i = 2^(floor(log2(m / i)) + 1) for the truncation heights of the spin
// families; m is n for Spin(2n+1) and n-1 for Spin(2n) and SO(2n).
int truncation_height_exp(long m, long i) { return floor_log2(m / i) + 1; }

struct SpinGens {
    std::vector<Generator> gens;
    std::vector<long> odd_index;  // odd_index[k] = 2i-1 for gens[k]
};

SpinGens spin_odd_generators(long from_i, long to_i) {
    SpinGens out;
    for (long i = from_i; i <= to_i; ++i) {
        std::ostringstream os;
        os << "x" << 2 * i - 1;
        out.gens.push_back(Generator{os.str(), 2 * (2 * i - 1)});
        out.odd_index.push_back(2 * i - 1);
    }
    return out;
}

}  // namespace

NamedRing j_ring(const GroupSpec& g) {
    validate(g);
    if (g.form != GroupForm::Adjoint)
        throw InvalidInput("j_ring expects an adjoint group (got " + g.label() + ")");
    NamedRing out;
    out.label = "J(" + g.label() + ")";
    std::vector<Generator> gens;
    std::vector<Polynomial> rels;
    switch (g.family) {
        case Family::SU: {
            gens = {Generator{"w", 2}};
            for (long r = 1; r <= g.param; ++r) rels.push_back(mono_rel(gcd_binomials(g.param, r), 1, 0, static_cast<int>(r)));
            out.omega = "w";
            break;
        }
        case Family::Sp: {
            int t = two_adic_valuation(g.param);
            gens = {Generator{"w", 2}};
            rels.push_back(mono_rel(Int(2), 1, 0, 1));
            rels.push_back(mono_rel(Int(1), 1, 0, static_cast<int>(pow2_long(t + 1))));
            out.omega = "w";
            break;
        }
        case Family::SpinOdd: {
            int s = floor_log2(g.param);
            gens = {Generator{"w", 2}};
            rels.push_back(mono_rel(Int(2), 1, 0, 1));
            rels.push_back(mono_rel(Int(1), 1, 0, static_cast<int>(pow2_long(s + 1))));
            out.omega = "w";
            break;
        }
        case Family::SpinEven: {
            if (g.param % 2 == 1) {
                int s = floor_log2(g.param - 1);  // 2^s < n <= 2^{s+1}
                gens = {Generator{"w", 2}};
                rels.push_back(mono_rel(Int(4), 1, 0, 1));
                rels.push_back(mono_rel(Int(2), 1, 0, 2));
                rels.push_back(mono_rel(Int(1), 1, 0, static_cast<int>(pow2_long(s + 1))));
                out.omega = "w";
            } else {
                int t = two_adic_valuation(g.param);
                int r = floor_log2(g.param - 1);
                gens = {Generator{"w1", 2}, Generator{"w2", 2}};
                rels.push_back(mono_rel(Int(2), 2, 0, 1));
                rels.push_back(mono_rel(Int(2), 2, 1, 1));
                rels.push_back(mono_rel(Int(1), 2, 0, static_cast<int>(pow2_long(t))));
                rels.push_back(mono_rel(Int(1), 2, 1, static_cast<int>(pow2_long(r + 1))));
                out.omega = "w1";
            }
            break;
        }
        case Family::E6: {
            gens = {Generator{"w", 2}};
            rels.push_back(mono_rel(Int(3), 1, 0, 1));
            rels.push_back(mono_rel(Int(1), 1, 0, 9));
            out.omega = "w";
            break;
        }
        case Family::E7: {
            gens = {Generator{"w", 2}};
            rels.push_back(mono_rel(Int(2), 1, 0, 1));
            rels.push_back(mono_rel(Int(1), 1, 0, 2));
            out.omega = "w";
            break;
        }
    }
    out.presentation = RingPresentation(std::move(gens), std::move(rels));
    return out;
}

NamedRing chow_ring(const GroupSpec& g) {
    validate(g);
    NamedRing out;
    out.label = "A*(" + g.label() + ")";
    const bool adjoint = g.form == GroupForm::Adjoint;
    std::vector<Generator> gens;
    std::vector<Polynomial> rels;

    switch (g.family) {
        case Family::SU:
        case Family::Sp: {
            if (!adjoint) break;  // trivial positive part
            NamedRing j = j_ring(g);
            out.presentation = j.presentation;
            out.omega = j.omega;
            return out;
        }
        case Family::SpinOdd: {
            long n = g.param;
            long top = (n + 1) / 2;
            long from = adjoint ? 1 : 2;
            if (g.form == GroupForm::SpecialOrthogonal) throw InvalidInput("SO form applies to Spin(2n) only");
            SpinGens sg = spin_odd_generators(from, top);
            gens = sg.gens;
            for (size_t k = 0; k < gens.size(); ++k) {
                long i = (sg.odd_index[k] + 1) / 2;
                rels.push_back(mono_rel(Int(2), gens.size(), k, 1));
                rels.push_back(mono_rel(Int(1), gens.size(), k, static_cast<int>(pow2_long(truncation_height_exp(n, i)))));
            }
            if (adjoint) out.omega = "x1";
            break;
        }
        case Family::SpinEven: {
            long n = g.param;
            long top = n / 2;
            if (g.form == GroupForm::SimplyConnected) {
                SpinGens sg = spin_odd_generators(2, top);
                gens = sg.gens;
                for (size_t k = 0; k < gens.size(); ++k) {
                    long i = (sg.odd_index[k] + 1) / 2;
                    rels.push_back(mono_rel(Int(2), gens.size(), k, 1));
                    rels.push_back(
                        mono_rel(Int(1), gens.size(), k, static_cast<int>(pow2_long(truncation_height_exp(n - 1, i)))));
                }
            } else if (g.form == GroupForm::SpecialOrthogonal) {
                SpinGens sg = spin_odd_generators(1, top);
                gens = sg.gens;
                for (size_t k = 0; k < gens.size(); ++k) {
                    long i = (sg.odd_index[k] + 1) / 2;
                    rels.push_back(mono_rel(Int(2), gens.size(), k, 1));
                    rels.push_back(
                        mono_rel(Int(1), gens.size(), k, static_cast<int>(pow2_long(truncation_height_exp(n - 1, i)))));
                }
                out.omega = "x1";
            } else if (n % 2 == 1) {
                SpinGens sg = spin_odd_generators(1, top);
                gens = sg.gens;
                rels.push_back(mono_rel(Int(4), gens.size(), 0, 1));
                rels.push_back(mono_rel(Int(2), gens.size(), 0, 2));
                rels.push_back(mono_rel(Int(1), gens.size(), 0, static_cast<int>(pow2_long(truncation_height_exp(n - 1, 1)))));
                for (size_t k = 1; k < gens.size(); ++k) {
                    long i = (sg.odd_index[k] + 1) / 2;
                    rels.push_back(mono_rel(Int(2), gens.size(), k, 1));
                    rels.push_back(
                        mono_rel(Int(1), gens.size(), k, static_cast<int>(pow2_long(truncation_height_exp(n - 1, i)))));
                }
                out.omega = "x1";
            } else {
                int h = two_adic_valuation(n);
                SpinGens sg = spin_odd_generators(1, top);
                gens.push_back(Generator{"w", 2});
                for (auto& gg : sg.gens) gens.push_back(gg);
                rels.push_back(mono_rel(Int(2), gens.size(), 0, 1));
                rels.push_back(mono_rel(Int(1), gens.size(), 0, static_cast<int>(pow2_long(h))));
                for (size_t k = 0; k < sg.gens.size(); ++k) {
                    long i = (sg.odd_index[k] + 1) / 2;
                    rels.push_back(mono_rel(Int(2), gens.size(), k + 1, 1));
                    rels.push_back(
                        mono_rel(Int(1), gens.size(), k + 1, static_cast<int>(pow2_long(truncation_height_exp(n - 1, i)))));
                }
                out.omega = "w";
            }
            break;
        }
        case Family::E6: {
            if (!adjoint) {
                gens = {Generator{"x3", 6}, Generator{"x4", 8}};
                rels.push_back(mono_rel(Int(2), 2, 0, 1));
                rels.push_back(mono_rel(Int(3), 2, 1, 1));
                rels.push_back(mono_rel(Int(1), 2, 0, 2));
                rels.push_back(mono_rel(Int(1), 2, 1, 3));
            } else {
                gens = {Generator{"w", 2}, Generator{"x3", 6}, Generator{"x4", 8}};
                rels.push_back(mono_rel(Int(3), 3, 0, 1));
                rels.push_back(mono_rel(Int(2), 3, 1, 1));
                rels.push_back(mono_rel(Int(3), 3, 2, 1));
                // (x3 + w^3)^2 = x3^2 + 2 x3 w^3 + w^6
                Polynomial sq;
                sq.push_back(Term{Int(1), {0, 2, 0}});
                sq.push_back(Term{Int(2), {3, 1, 0}});
                sq.push_back(Term{Int(1), {6, 0, 0}});
                rels.push_back(std::move(sq));
                rels.push_back(mono_rel(Int(1), 3, 0, 9));
                rels.push_back(mono_rel(Int(1), 3, 2, 3));
                out.omega = "w";
            }
            break;
        }
        case Family::E7: {
            if (!adjoint) {
                gens = {Generator{"x3", 6}, Generator{"x4", 8}, Generator{"x5", 10}, Generator{"x9", 18}};
                rels.push_back(mono_rel(Int(2), 4, 0, 1));
                rels.push_back(mono_rel(Int(3), 4, 1, 1));
                rels.push_back(mono_rel(Int(2), 4, 2, 1));
                rels.push_back(mono_rel(Int(2), 4, 3, 1));
                rels.push_back(mono_rel(Int(1), 4, 0, 2));
                rels.push_back(mono_rel(Int(1), 4, 1, 3));
                rels.push_back(mono_rel(Int(1), 4, 2, 2));
                rels.push_back(mono_rel(Int(1), 4, 3, 2));
            } else {
                gens = {Generator{"w", 2}, Generator{"x3", 6}, Generator{"x4", 8}, Generator{"x5", 10},
                        Generator{"x9", 18}};
                rels.push_back(mono_rel(Int(2), 5, 0, 1));
                rels.push_back(mono_rel(Int(1), 5, 0, 2));
                rels.push_back(mono_rel(Int(2), 5, 1, 1));
                rels.push_back(mono_rel(Int(3), 5, 2, 1));
                rels.push_back(mono_rel(Int(2), 5, 3, 1));
                rels.push_back(mono_rel(Int(2), 5, 4, 1));
                rels.push_back(mono_rel(Int(1), 5, 1, 2));
                rels.push_back(mono_rel(Int(1), 5, 2, 3));
                rels.push_back(mono_rel(Int(1), 5, 3, 2));
                rels.push_back(mono_rel(Int(1), 5, 4, 2));
                out.omega = "w";
            }
            break;
        }
    }
    out.presentation = RingPresentation(std::move(gens), std::move(rels));
    return out;
}

EulerClass euler_class(const CyclicCovering& c) {
    validate(c.source);
    validate(c.target);
    if (c.source.family != c.target.family || c.source.param != c.target.param)
        throw InvalidInput("euler_class: covering does not stay within one family");
    const Family fam = c.source.family;
    if (c.source.form == GroupForm::SimplyConnected && c.target.form == GroupForm::Adjoint) {
        if (fam == Family::SpinEven)
            throw InvalidInput("euler_class: Spin(2n) -> PSpin(2n) factors through SO(2n); use the chain steps");
        return EulerClass{"w", Int(1)};
    }
    if (fam == Family::SpinEven && c.source.form == GroupForm::SimplyConnected &&
        c.target.form == GroupForm::SpecialOrthogonal) {
        return EulerClass{"x1", Int(1)};
    }
    if (fam == Family::SpinEven && c.source.form == GroupForm::SpecialOrthogonal &&
        c.target.form == GroupForm::Adjoint) {
        if (c.source.param % 2 == 0) return EulerClass{"w1", Int(1)};
        // H^2(PSpin(2n)) is cyclic of order 4 here and the extension has a
        // two-element kernel, so the Euler class is the order-2 class 2w.
        return EulerClass{"w", Int(2)};
    }
    throw InvalidInput("euler_class: covering is not one of the catalogued chain steps");
}

NamedRing covering_target_ring(const CyclicCovering& c) {
    if (c.target.form == GroupForm::Adjoint) return j_ring(c.target);
    if (c.target.form == GroupForm::SpecialOrthogonal) return chow_ring(c.target);
    throw InvalidInput("covering_target_ring: target must be adjoint or SO");
}

NamedRing borel_specialize_su(long n) {
    if (n < 2) throw InvalidInput("borel_specialize_su: need n >= 2");
    std::vector<Int> e = symmetric_substitution_coeffs(n);
    NamedRing out;
    out.label = "Borel(PSU(" + std::to_string(n) + "))";
    out.omega = "w";
    std::vector<Polynomial> rels;
    for (long r = 1; r <= n; ++r) rels.push_back(mono_rel(e[static_cast<size_t>(r)], 1, 0, static_cast<int>(r)));
    out.presentation = RingPresentation({Generator{"w", 2}}, std::move(rels));
    return out;
}

namespace {

// Polynomials over the working variable set (w, x_1 .. x_{n-1}) during the
// Marlin reduction, keyed by exponent vector: index 0 is w, index k is x_k.
using PolyMap = std::map<std::vector<int>, Int>;

void poly_add(PolyMap& dst, const std::vector<int>& exps, const Int& c) {
    auto [it, inserted] = dst.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) dst.erase(it);
    }
}

PolyMap poly_mul(const PolyMap& a, const PolyMap& b) {
    PolyMap out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            poly_add(out, e, ca * cb);
        }
    return out;
}

PolyMap poly_pow(const PolyMap& a, int e, size_t nvars) {
    PolyMap out;
    out.emplace(std::vector<int>(nvars, 0), Int(1));
    for (int i = 0; i < e; ++i) out = poly_mul(out, a);
    return out;
}

// Substitute definitions of the even-index variables into p.
PolyMap substitute_evens(const PolyMap& p, const std::map<size_t, PolyMap>& defs, size_t nvars) {
    PolyMap out;
    for (auto& [exps, c] : p) {
        PolyMap term;
        std::vector<int> kept = exps;
        bool any = false;
        for (auto& [var, def] : defs)
            if (exps[var] > 0) {
                any = true;
                kept[var] = 0;
            }
        term.emplace(kept, c);
        if (any)
            for (auto& [var, def] : defs)
                if (exps[var] > 0) term = poly_mul(term, poly_pow(def, exps[var], nvars));
        for (auto& [e2, c2] : term) poly_add(out, e2, c2);
    }
    return out;
}

}  // namespace

NamedRing marlin_specialize_spin(long n) {
    if (n < 4) throw InvalidInput("marlin_specialize_spin: need n >= 4");
    const size_t nvars = static_cast<size_t>(n);  // w, x_1 .. x_{n-1}
    std::vector<Int> e = symmetric_substitution_coeffs(n);

    auto var_mono = [&](size_t v, int exp) {
        std::vector<int> ex(nvars, 0);
        ex[v] = exp;
        return ex;
    };

    // Definitions of the even-index classes from the q relations, reduced to
    // w and odd-index classes as we go.
    std::map<size_t, PolyMap> even_defs;
    for (long r = 1; 2 * r <= n - 1; ++r) {
        PolyMap def;
        for (long i = 1; i <= r - 1; ++i) {
            long j = 2 * r - i;
            if (i >= n || j >= n) continue;  // x_k = 0 for k >= n
            std::vector<int> ex(nvars, 0);
            ex[static_cast<size_t>(i)] += 1;
            ex[static_cast<size_t>(j)] += 1;
            poly_add(def, ex, Int(2));
        }
        poly_add(def, var_mono(static_cast<size_t>(r), 2), r % 2 == 0 ? Int(-1) : Int(1));
        def = substitute_evens(def, even_defs, nvars);
        even_defs[static_cast<size_t>(2 * r)] = std::move(def);
    }

    std::vector<std::pair<std::string, PolyMap>> raw_rels;
    {
        PolyMap two_w;
        poly_add(two_w, var_mono(0, 1), Int(2));
        raw_rels.emplace_back("2w", std::move(two_w));
    }
    for (long r = 1; r <= n - 1; ++r) {
        PolyMap d;
        poly_add(d, var_mono(static_cast<size_t>(r), 1), Int(2));
        poly_add(d, var_mono(0, static_cast<int>(r)), -e[static_cast<size_t>(r)]);
        raw_rels.emplace_back("delta_" + std::to_string(r), substitute_evens(d, even_defs, nvars));
    }
    {
        PolyMap d;
        poly_add(d, var_mono(0, static_cast<int>(n)), Int(1));  // e_n(w,..,w) = w^n
        raw_rels.emplace_back("delta_" + std::to_string(n), std::move(d));
    }
    for (long r = (n + 1) / 2; r <= n - 1; ++r) {
        // q_r with x_{2r} = 0: only the quadratic tail survives.
        PolyMap q;
        for (long i = 1; i <= r - 1; ++i) {
            long j = 2 * r - i;
            if (i >= n || j >= n) continue;
            std::vector<int> ex(nvars, 0);
            ex[static_cast<size_t>(i)] += 1;
            ex[static_cast<size_t>(j)] += 1;
            poly_add(q, ex, Int(-2));
        }
        if (r < n) poly_add(q, var_mono(static_cast<size_t>(r), 2), r % 2 == 0 ? Int(1) : Int(-1));
        raw_rels.emplace_back("q_" + std::to_string(r), substitute_evens(q, even_defs, nvars));
    }

    // Output generators: w and the odd-index classes.
    std::vector<Generator> gens;
    std::vector<size_t> var_of_gen;
    gens.push_back(Generator{"w", 2});
    var_of_gen.push_back(0);
    for (long k = 1; k <= n - 1; k += 2) {
        gens.push_back(Generator{"x" + std::to_string(k), static_cast<long>(2 * k)});
        var_of_gen.push_back(static_cast<size_t>(k));
    }
    std::map<size_t, size_t> gen_of_var;
    for (size_t gi = 0; gi < var_of_gen.size(); ++gi) gen_of_var[var_of_gen[gi]] = gi;

    std::vector<Polynomial> rels;
    for (auto& [name, p] : raw_rels) {
        Polynomial poly;
        for (auto& [exps, c] : p) {
            Term t;
            t.coeff = c;
            t.exponents.assign(gens.size(), 0);
            for (size_t v = 0; v < nvars; ++v) {
                if (exps[v] == 0) continue;
                auto it = gen_of_var.find(v);
                if (it == gen_of_var.end())
                    throw VerificationError("marlin_specialize_spin: relation " + name +
                                            " still involves an eliminated even-index class");
                t.exponents[it->second] = exps[v];
            }
            poly.push_back(std::move(t));
        }
        if (!poly.empty()) rels.push_back(std::move(poly));
    }

    NamedRing out;
    out.label = "Marlin(PSpin(" + std::to_string(2 * n) + "))";
    out.omega = n % 2 == 1 ? "x1" : "w";
    out.presentation = RingPresentation(std::move(gens), std::move(rels));
    return out;
}

std::string NamedRing::to_json_text() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(presentation.to_json_text());
    nlohmann::ordered_json out;
    out["label"] = label;
    if (omega) out["omega"] = *omega;
    out["generators"] = j["generators"];
    out["relations"] = j["relations"];
    return out.dump(2);
}

NamedRing NamedRing::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("presentation file: ") + e.what());
    }
    NamedRing out;
    out.presentation = RingPresentation::from_json_text(text);
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw InvalidInput("presentation file: label must be a string");
        out.label = j["label"].get<std::string>();
    } else {
        out.label = "custom";
    }
    if (j.contains("omega")) {
        if (!j["omega"].is_string()) throw InvalidInput("presentation file: omega must be a string");
        out.omega = j["omega"].get<std::string>();
        size_t wi = out.presentation.generator_index(*out.omega);
        if (out.presentation.generators()[wi].degree != 2)
            throw InvalidInput("presentation file: omega must name a degree-2 generator");
    }
    return out;
}

}  // namespace covdeg
