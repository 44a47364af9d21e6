#include "covdeg/gring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace covdeg {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm_int(const Int& a, const Int& b) { return a / gcd_int(a, b) * b; }

using SparseRow = std::vector<std::pair<long, Int>>;  // (column, coeff), sorted by column

void normalize_sparse(SparseRow& r) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& [c, x] : r) {
        if (!out.empty() && out.back().first == c)
            out.back().second += x;
        else
            out.emplace_back(c, x);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
    r = std::move(out);
}

SparseRow sparse_combine(const Int& a, const SparseRow& x, const Int& b, const SparseRow& y) {
    SparseRow out;
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            Int v = a * x[i].second;
            if (v != 0) out.emplace_back(x[i].first, v);
            ++i;
        } else if (i >= x.size() || y[j].first < x[i].first) {
            Int v = b * y[j].second;
            if (v != 0) out.emplace_back(y[j].first, v);
            ++j;
        } else {
            Int v = a * x[i].second + b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Integer row echelon over sparse rows: pivot per leading column, gcd
// combination when the incoming leading coefficient is not divisible.
class SparseEchelon {
  public:
    void insert(SparseRow row) {
        while (!row.empty()) {
            long lead = row.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                if (row.front().second < 0)
                    for (auto& [c, x] : row) x = -x;
                pivots_.emplace(lead, std::move(row));
                return;
            }
            SparseRow& piv = it->second;
            const Int& p = piv.front().second;
            const Int& b = row.front().second;
            if (b % p == 0) {
                row = sparse_combine(1, row, -(b / p), piv);
            } else {
                Int x0 = 1, y0 = 0, x1 = 0, y1 = 1, a0 = p, b0 = b;
                while (b0 != 0) {
                    Int q = a0 / b0, t;
                    t = a0 - q * b0; a0 = b0; b0 = t;
                    t = x0 - q * x1; x0 = x1; x1 = t;
                    t = y0 - q * y1; y0 = y1; y1 = t;
                }
                const Int g = a0;  // gcd(p, b)
                SparseRow comb = sparse_combine(x0, piv, y0, row);
                SparseRow rest = sparse_combine(p / g, row, -(b / g), piv);
                piv = std::move(comb);
                row = std::move(rest);
            }
        }
    }

    std::vector<SparseRow> rows() const {
        std::vector<SparseRow> out;
        out.reserve(pivots_.size());
        for (auto& [lead, r] : pivots_) out.push_back(r);
        return out;
    }

  private:
    std::map<long, SparseRow> pivots_;
};

void enumerate_monomials(const std::vector<Generator>& gens, size_t idx, long remaining, std::vector<int>& cur,
                         std::vector<Monomial>& out) {
    if (idx + 1 == gens.size()) {
        if (remaining % gens[idx].degree == 0) {
            cur[idx] = static_cast<int>(remaining / gens[idx].degree);
            out.push_back(Monomial{cur});
        }
        return;
    }
    for (long e = remaining / gens[idx].degree; e >= 0; --e) {
        cur[idx] = static_cast<int>(e);
        enumerate_monomials(gens, idx + 1, remaining - e * gens[idx].degree, cur, out);
    }
}

}  // namespace

RingPresentation::RingPresentation(std::vector<Generator> gens, std::vector<Polynomial> rels,
                                   std::optional<long> degree_cap)
    : gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        if (g.name.empty()) throw InvalidInput("generator name must be nonempty");
        if (g.degree <= 0 || g.degree % 2 != 0) {
            std::ostringstream os;
            os << "generator '" << g.name << "' has degree " << g.degree
               << "; only even positive degrees are supported (the exterior part is out of scope)";
            throw InvalidInput(os.str());
        }
        for (size_t j = 0; j < i; ++j)
            if (gens_[j].name == g.name) throw InvalidInput("duplicate generator name '" + g.name + "'");
    }
    long max_rel_degree = 0;
    for (auto& rel : rels) {
        Polynomial canon;
        std::map<std::vector<int>, Int> acc;
        for (auto& t : rel) {
            if (t.exponents.size() != gens_.size())
                throw InvalidInput("relation term exponent vector length does not match generator count");
            for (int e : t.exponents)
                if (e < 0) throw InvalidInput("negative exponent in relation");
            acc[t.exponents] += t.coeff;
        }
        long deg = -1;
        for (auto& [exps, c] : acc) {
            if (c == 0) continue;
            long d = monomial_degree(exps);
            if (deg < 0) deg = d;
            if (d != deg) {
                std::ostringstream os;
                os << "relation is not homogeneous: mixes degrees " << deg << " and " << d;
                throw InvalidInput(os.str());
            }
            canon.push_back(Term{c, exps});
        }
        if (canon.empty()) continue;  // the zero relation contributes nothing
        if (canon.size() > 1) monomial_only_ = false;
        rels_.push_back(std::move(canon));
        rel_degrees_.push_back(deg);
        max_rel_degree = std::max(max_rel_degree, deg);
    }
    long default_cap = 4 * max_rel_degree;
    if (rels_.empty()) {
        long max_gen = 0;
        for (auto& g : gens_) max_gen = std::max(max_gen, g.degree);
        default_cap = 4 * max_gen;
    }
    degree_cap_ = degree_cap.value_or(default_cap);
    if (degree_cap_ < 0) throw InvalidInput("degree cap must be nonnegative");
}

size_t RingPresentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    throw InvalidInput("no generator named '" + name + "'");
}

long RingPresentation::monomial_degree(const std::vector<int>& exponents) const {
    if (exponents.size() != gens_.size()) throw InvalidInput("exponent vector length does not match generator count");
    long d = 0;
    for (size_t i = 0; i < gens_.size(); ++i) d += static_cast<long>(exponents[i]) * gens_[i].degree;
    return d;
}

bool RingPresentation::operator==(const RingPresentation& o) const {
    if (gens_.size() != o.gens_.size() || rels_.size() != o.rels_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree) return false;
    auto key = [](const Polynomial& p) {
        std::vector<std::pair<std::vector<int>, Int>> k;
        for (auto& t : p) k.emplace_back(t.exponents, t.coeff);
        std::sort(k.begin(), k.end());
        return k;
    };
    std::vector<std::vector<std::pair<std::vector<int>, Int>>> a, b;
    for (auto& r : rels_) a.push_back(key(r));
    for (auto& r : o.rels_) b.push_back(key(r));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<Monomial> monomial_basis(const RingPresentation& p, long degree) {
    if (degree < 0 || degree % 2 != 0) throw InvalidInput("monomial_basis: degree must be even and nonnegative");
    std::vector<Monomial> out;
    if (degree == 0) {
        out.push_back(Monomial{std::vector<int>(p.generators().size(), 0)});
        return out;
    }
    if (p.generators().empty()) return out;
    std::vector<int> cur(p.generators().size(), 0);
    enumerate_monomials(p.generators(), 0, degree, cur, out);
    return out;
}

GradedComponent build_component(const RingPresentation& p, long degree, bool allow_fast) {
    if (degree < 0 || degree % 2 != 0) throw InvalidInput("component: degree must be even and nonnegative");
    if (degree > p.degree_cap()) {
        std::ostringstream os;
        os << "component: degree " << degree << " exceeds the degree cap " << p.degree_cap()
           << " of this presentation";
        throw InvalidInput(os.str());
    }
    GradedComponent comp;
    comp.degree = degree;
    comp.basis = monomial_basis(p, degree);
    const long b = static_cast<long>(comp.basis.size());

    if (allow_fast && p.monomial_relations_only()) {
        // Every degree-d slice row is a coefficient on a single monomial, so
        // the slice lattice is diagonal: column m is annihilated by the gcd
        // of the coefficients of all relations whose monomial divides m.
        comp.diagonal_ = true;
        comp.moduli_.assign(static_cast<size_t>(b), Int(0));
        std::vector<Int> torsion;
        long free_count = 0;
        for (long j = 0; j < b; ++j) {
            const std::vector<int>& exps = comp.basis[static_cast<size_t>(j)].exponents;
            Int m = 0;
            for (auto& rel : p.relations()) {
                const Term& t = rel.front();
                bool divides = true;
                for (size_t i = 0; i < exps.size(); ++i)
                    if (t.exponents[i] > exps[static_cast<size_t>(i)]) {
                        divides = false;
                        break;
                    }
                if (divides) m = gcd_int(m, t.coeff);
                if (m == 1) break;
            }
            comp.moduli_[static_cast<size_t>(j)] = m;
            if (m == 0)
                ++free_count;
            else if (m >= 2)
                torsion.push_back(m);
        }
        comp.group.rank = free_count;
        comp.group.torsion = invariant_factors_from_cyclic(std::move(torsion));
        return comp;
    }

    // General slice: every relation times every cofactor monomial, reduced
    // to an integer echelon basis, then Smith form for the group structure.
    std::map<std::vector<int>, long> index;
    for (long j = 0; j < b; ++j) index.emplace(comp.basis[static_cast<size_t>(j)].exponents, j);
    SparseEchelon ech;
    for (size_t ri = 0; ri < p.relations().size(); ++ri) {
        long rd = p.relation_degree(ri);
        if (rd > degree) continue;
        for (const Monomial& cof : monomial_basis(p, degree - rd)) {
            SparseRow row;
            for (const Term& t : p.relations()[ri]) {
                std::vector<int> exps = cof.exponents;
                for (size_t i = 0; i < exps.size(); ++i) exps[i] += t.exponents[i];
                row.emplace_back(index.at(exps), t.coeff);
            }
            normalize_sparse(row);
            ech.insert(std::move(row));
        }
    }
    std::vector<SparseRow> rows = ech.rows();
    IntMatrix rel(static_cast<long>(rows.size()), b);
    for (long i = 0; i < rel.rows(); ++i)
        for (auto& [c, x] : rows[static_cast<size_t>(i)]) rel.at(i, c) = x;
    comp.rel_rows_ = rel;
    SnfResult snf = smith_normal_form(rel);
    comp.V_ = snf.V;
    long k = std::min(rel.rows(), rel.cols());
    comp.diag_.assign(static_cast<size_t>(k), Int(0));
    long nonzero = 0;
    for (long i = 0; i < k; ++i) {
        comp.diag_[static_cast<size_t>(i)] = snf.D.at(i, i);
        if (snf.D.at(i, i) != 0) ++nonzero;
    }
    comp.group.rank = b - nonzero;
    for (long i = 0; i < k; ++i)
        if (snf.D.at(i, i) >= 2) comp.group.torsion.push_back(snf.D.at(i, i));
    return comp;
}

GradedComponent component(const RingPresentation& p, long degree) { return build_component(p, degree, true); }

GradedComponent detail::component_general(const RingPresentation& p, long degree) {
    return build_component(p, degree, false);
}

long GradedComponent::basis_index(const Monomial& m) const {
    for (size_t j = 0; j < basis.size(); ++j)
        if (basis[j] == m) return static_cast<long>(j);
    throw InvalidInput("monomial is not in the basis of this component");
}

std::optional<Int> GradedComponent::order_of(const std::vector<Int>& v) const {
    if (v.size() != basis.size()) throw InvalidInput("order_of: vector length does not match basis");
    Int t = 1;
    if (diagonal_) {
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            const Int& m = moduli_[j];
            if (m == 0) return std::nullopt;
            t = lcm_int(t, m / gcd_int(m, v[j]));
        }
        return t;
    }
    const long b = static_cast<long>(basis.size());
    for (long j = 0; j < b; ++j) {
        Int y = 0;
        for (long i = 0; i < b; ++i)
            if (v[static_cast<size_t>(i)] != 0) y += v[static_cast<size_t>(i)] * V_.at(i, j);
        Int d = j < static_cast<long>(diag_.size()) ? diag_[static_cast<size_t>(j)] : Int(0);
        if (d == 0) {
            if (y != 0) return std::nullopt;
            continue;
        }
        if (y == 0) continue;
        t = lcm_int(t, d / gcd_int(d, y));
    }
    return t;
}

std::optional<Int> GradedComponent::order_of(const Monomial& m, const Int& coeff) const {
    std::vector<Int> v(basis.size(), Int(0));
    v[static_cast<size_t>(basis_index(m))] = coeff;
    return order_of(v);
}

ComponentCoords GradedComponent::coords(const std::vector<Int>& v) const {
    if (v.size() != basis.size()) throw InvalidInput("coords: vector length does not match basis");
    ComponentCoords out;
    if (diagonal_) {
        for (size_t j = 0; j < v.size(); ++j) {
            const Int& m = moduli_[j];
            if (m == 0)
                out.free_part.push_back(v[j]);
            else if (m >= 2) {
                Int r = v[j] % m;
                if (r < 0) r += m;
                out.torsion.emplace_back(m, r);
            }
        }
        return out;
    }
    const long b = static_cast<long>(basis.size());
    for (long j = 0; j < b; ++j) {
        Int y = 0;
        for (long i = 0; i < b; ++i)
            if (v[static_cast<size_t>(i)] != 0) y += v[static_cast<size_t>(i)] * V_.at(i, j);
        Int d = j < static_cast<long>(diag_.size()) ? diag_[static_cast<size_t>(j)] : Int(0);
        if (d == 0)
            out.free_part.push_back(y);
        else if (d >= 2) {
            Int r = y % d;
            if (r < 0) r += d;
            out.torsion.emplace_back(d, r);
        }
    }
    return out;
}

std::vector<std::vector<Int>> GradedComponent::relation_rows() const {
    std::vector<std::vector<Int>> out;
    const long b = static_cast<long>(basis.size());
    if (diagonal_) {
        for (long j = 0; j < b; ++j)
            if (moduli_[static_cast<size_t>(j)] != 0) {
                std::vector<Int> row(static_cast<size_t>(b), Int(0));
                row[static_cast<size_t>(j)] = moduli_[static_cast<size_t>(j)];
                out.push_back(std::move(row));
            }
        return out;
    }
    for (long i = 0; i < rel_rows_.rows(); ++i) out.push_back(rel_rows_.row(i));
    return out;
}

const GradedComponent& CachedRing::component(long degree) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(degree);
        if (it != memo_.end()) return *it->second;
    }
    auto fresh = std::make_shared<const GradedComponent>(covdeg::component(pres_, degree));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(degree, std::move(fresh));
    return *it->second;
}

std::optional<Int> order_of(const RingPresentation& p, const Monomial& m, const Int& coeff) {
    long d = p.monomial_degree(m.exponents);
    if (d % 2 != 0) throw InvalidInput("order_of: monomial has odd degree");
    if (d > p.degree_cap()) {
        std::ostringstream os;
        os << "order_of: degree " << d << " exceeds the degree cap " << p.degree_cap();
        throw InvalidInput(os.str());
    }
    if (p.monomial_relations_only()) {
        // Diagonal slice: no need to assemble the component.
        Int mod = 0;
        for (auto& rel : p.relations()) {
            const Term& t = rel.front();
            bool divides = true;
            for (size_t i = 0; i < m.exponents.size(); ++i)
                if (t.exponents[i] > m.exponents[i]) {
                    divides = false;
                    break;
                }
            if (divides) mod = gcd_int(mod, t.coeff);
            if (mod == 1) break;
        }
        if (mod == 0) return coeff == 0 ? std::optional<Int>(1) : std::nullopt;
        Int g = gcd_int(mod, coeff);
        return mod / g;
    }
    return component(p, d).order_of(m, coeff);
}

const Int& Characteristic::at(long r) const {
    if (r < 1 || r > static_cast<long>(b.size())) throw InvalidInput("characteristic index out of range");
    return b[static_cast<size_t>(r - 1)];
}

namespace {

Characteristic characteristic_impl(const RingPresentation& p, const CachedRing* cached, const std::string& omega,
                                   long max_r, const Int& scale) {
    size_t wi = p.generator_index(omega);
    if (p.generators()[wi].degree != 2) throw InvalidInput("characteristic: '" + omega + "' is not a degree-2 generator");
    if (max_r < 1) throw InvalidInput("characteristic: max_r must be >= 1");
    Characteristic ch;
    ch.omega = omega;
    Int scale_pow = 1;
    for (long r = 1; r <= max_r; ++r) {
        scale_pow *= scale;
        Monomial m{std::vector<int>(p.generators().size(), 0)};
        m.exponents[wi] = static_cast<int>(r);
        std::optional<Int> ord;
        if (p.monomial_relations_only() || cached == nullptr)
            ord = order_of(p, m, scale_pow);
        else
            ord = cached->component(2 * r).order_of(m, scale_pow);
        if (!ord) {
            std::ostringstream os;
            os << "characteristic: " << omega << "^" << r
               << " has infinite order; the presentation is outside the supported class";
            throw InvalidInput(os.str());
        }
        ch.b.push_back(*ord);
    }
    return ch;
}

}  // namespace

Characteristic characteristic(const RingPresentation& p, const std::string& omega, long max_r, const Int& scale) {
    if (p.monomial_relations_only()) return characteristic_impl(p, nullptr, omega, max_r, scale);
    CachedRing ring(p);
    return characteristic_impl(p, &ring, omega, max_r, scale);
}

Characteristic characteristic(const CachedRing& ring, const std::string& omega, long max_r, const Int& scale) {
    return characteristic_impl(ring.presentation(), &ring, omega, max_r, scale);
}

FinAbGroup mult_kernel(const RingPresentation& p, const std::string& omega, long degree) {
    size_t wi = p.generator_index(omega);
    if (p.generators()[wi].degree != 2) throw InvalidInput("mult_kernel: '" + omega + "' is not a degree-2 generator");
    GradedComponent lo = component(p, degree);
    GradedComponent hi = component(p, degree + 2);
    if (degree == 0) return FinAbGroup::trivial();  // torsion of Z{1} is trivial
    if (lo.group.rank != 0 || hi.group.rank != 0)
        throw InvalidInput("mult_kernel: components are not finite");

    const long bl = static_cast<long>(lo.basis.size());
    const long bh = static_cast<long>(hi.basis.size());
    std::map<std::vector<int>, long> hi_index;
    for (long j = 0; j < bh; ++j) hi_index.emplace(hi.basis[static_cast<size_t>(j)].exponents, j);

    // Stack the multiplication map on top of the degree+2 relation slice; the
    // integer kernel of the stack projects onto the lattice K of degree-d
    // vectors that multiply into the slice.
    std::vector<std::vector<Int>> stacked;
    for (long i = 0; i < bl; ++i) {
        std::vector<int> exps = lo.basis[static_cast<size_t>(i)].exponents;
        exps[wi] += 1;
        std::vector<Int> row(static_cast<size_t>(bh), Int(0));
        row[static_cast<size_t>(hi_index.at(exps))] = 1;
        stacked.push_back(std::move(row));
    }
    std::vector<std::vector<Int>> hi_rows = hi.relation_rows();
    for (auto& r : hi_rows) stacked.push_back(r);
    IntMatrix a = IntMatrix::from_rows(stacked, bh);
    SnfResult snf = smith_normal_form(a);
    long r = snf.rank();
    std::vector<std::vector<Int>> kb;  // basis of K, in degree-d coordinates
    for (long i = r; i < a.rows(); ++i) {
        std::vector<Int> v(static_cast<size_t>(bl));
        bool nonzero = false;
        for (long j = 0; j < bl; ++j) {
            v[static_cast<size_t>(j)] = snf.U.at(i, j);
            if (v[static_cast<size_t>(j)] != 0) nonzero = true;
        }
        if (nonzero) kb.push_back(std::move(v));
    }
    if (kb.empty()) return FinAbGroup::trivial();

    // K / L_d: rewrite the degree-d relation rows in the K basis.
    IntMatrix kmat = IntMatrix::from_rows(kb, bl);
    SnfResult ksnf = smith_normal_form(kmat);
    long krank = ksnf.rank();
    std::vector<std::vector<Int>> lo_in_k;
    for (const auto& rel : lo.relation_rows()) {
        std::vector<Int> y(static_cast<size_t>(bl), Int(0));
        for (long j = 0; j < bl; ++j) {
            Int s = 0;
            for (long i = 0; i < bl; ++i) s += rel[static_cast<size_t>(i)] * ksnf.V.at(i, j);
            y[static_cast<size_t>(j)] = s;
        }
        std::vector<Int> w(static_cast<size_t>(kmat.rows()), Int(0));
        for (long j = 0; j < bl; ++j) {
            Int d = j < std::min(kmat.rows(), kmat.cols()) ? ksnf.D.at(j, j) : Int(0);
            if (d == 0) {
                if (y[static_cast<size_t>(j)] != 0)
                    throw VerificationError("mult_kernel: relation outside the kernel lattice");
                continue;
            }
            if (y[static_cast<size_t>(j)] % d != 0)
                throw VerificationError("mult_kernel: relation outside the kernel lattice");
            if (j < kmat.rows()) w[static_cast<size_t>(j)] = y[static_cast<size_t>(j)] / d;
        }
        // x = w * U recovers the K-basis coefficients.
        std::vector<Int> x(static_cast<size_t>(kmat.rows()), Int(0));
        for (long j = 0; j < kmat.rows(); ++j) {
            Int s = 0;
            for (long i = 0; i < kmat.rows(); ++i) s += w[static_cast<size_t>(i)] * ksnf.U.at(i, j);
            x[static_cast<size_t>(j)] = s;
        }
        lo_in_k.push_back(std::move(x));
    }
    (void)krank;
    return abelian_quotient(kmat.rows(), lo_in_k);
}

RingPresentation RingPresentation::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("presentation file: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInput("presentation file: top level must be an object");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw InvalidInput("presentation file: missing 'generators' array");
    if (!j.contains("relations") || !j["relations"].is_array())
        throw InvalidInput("presentation file: missing 'relations' array");
    std::vector<Generator> gens;
    for (size_t i = 0; i < j["generators"].size(); ++i) {
        const auto& g = j["generators"][i];
        std::string at = "generators[" + std::to_string(i) + "]";
        if (!g.is_object() || !g.contains("name") || !g.contains("degree"))
            throw InvalidInput("presentation file: " + at + " must be {\"name\":..,\"degree\":..}");
        if (!g["name"].is_string()) throw InvalidInput("presentation file: " + at + ".name must be a string");
        if (!g["degree"].is_number_integer())
            throw InvalidInput("presentation file: " + at + ".degree must be an integer");
        gens.push_back(Generator{g["name"].get<std::string>(), g["degree"].get<long>()});
    }
    std::vector<Polynomial> rels;
    for (size_t i = 0; i < j["relations"].size(); ++i) {
        const auto& r = j["relations"][i];
        std::string at = "relations[" + std::to_string(i) + "]";
        if (!r.is_array()) throw InvalidInput("presentation file: " + at + " must be an array of terms");
        Polynomial poly;
        for (size_t k = 0; k < r.size(); ++k) {
            const auto& t = r[k];
            std::string tat = at + "[" + std::to_string(k) + "]";
            if (!t.is_object() || !t.contains("coeff") || !t.contains("exponents"))
                throw InvalidInput("presentation file: " + tat + " must be {\"coeff\":..,\"exponents\":[..]}");
            Int coeff;
            if (t["coeff"].is_number_integer())
                coeff = Int(t["coeff"].get<long long>());
            else if (t["coeff"].is_string())
                coeff = Int(t["coeff"].get<std::string>());
            else
                throw InvalidInput("presentation file: " + tat + ".coeff must be an integer or a decimal string");
            if (!t["exponents"].is_array())
                throw InvalidInput("presentation file: " + tat + ".exponents must be an array");
            std::vector<int> exps;
            for (const auto& e : t["exponents"]) {
                if (!e.is_number_integer() || e.get<long long>() < 0)
                    throw InvalidInput("presentation file: " + tat + ".exponents must hold nonnegative integers");
                exps.push_back(e.get<int>());
            }
            poly.push_back(Term{coeff, std::move(exps)});
        }
        rels.push_back(std::move(poly));
    }
    try {
        return RingPresentation(std::move(gens), std::move(rels));
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("presentation file: ") + e.what());
    }
}

std::string RingPresentation::to_json_text() const {
    nlohmann::ordered_json j;
    j["generators"] = nlohmann::ordered_json::array();
    for (const auto& g : gens_) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    j["relations"] = nlohmann::ordered_json::array();
    for (const auto& rel : rels_) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& t : rel) {
            nlohmann::ordered_json term;
            if (t.coeff >= std::numeric_limits<long long>::min() && t.coeff <= std::numeric_limits<long long>::max())
                term["coeff"] = t.coeff.convert_to<long long>();
            else
                term["coeff"] = t.coeff.str();
            term["exponents"] = t.exponents;
            terms.push_back(term);
        }
        j["relations"].push_back(terms);
    }
    return j.dump(2);
}

}  // namespace covdeg
