#ifndef COVDEG_GRING_HPP
#define COVDEG_GRING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "covdeg/common.hpp"
#include "covdeg/zlinalg.hpp"

namespace covdeg {

struct Generator {
    std::string name;
    long degree = 0;  // even, positive
};

/// One summand of a relation polynomial: coeff * prod generator_i^exponents_i.
struct Term {
    Int coeff;
    std::vector<int> exponents;
};

/// A homogeneous integer polynomial in the generators.
using Polynomial = std::vector<Term>;

/// Exponent vector aligned with the generator list.
struct Monomial {
    std::vector<int> exponents;
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator<(const Monomial& o) const { return exponents < o.exponents; }
};

/// Finitely presented graded commutative ring over Z with even-degree
/// generators and homogeneous relations. Immutable after construction and
/// safe to share across threads.
class RingPresentation {
  public:
    RingPresentation() = default;
    RingPresentation(std::vector<Generator> gens, std::vector<Polynomial> rels,
                     std::optional<long> degree_cap = std::nullopt);

    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Polynomial>& relations() const { return rels_; }

    /// Highest graded degree this presentation will compute components for.
    /// Defaults to 4x the largest relation degree (4x the largest generator
    /// degree when there are no relations).
    long degree_cap() const { return degree_cap_; }

    size_t generator_index(const std::string& name) const;
    long monomial_degree(const std::vector<int>& exponents) const;
    long relation_degree(size_t i) const { return rel_degrees_[i]; }

    /// True when every relation is a single term c * monomial; the graded
    /// slices of the relation ideal are then diagonal in the monomial basis.
    bool monomial_relations_only() const { return monomial_only_; }

    bool operator==(const RingPresentation& o) const;

    /// JSON schema: {"generators":[{"name":..,"degree":..}],
    ///               "relations":[[{"coeff":..,"exponents":[..]}]]}
    static RingPresentation from_json_text(const std::string& text);
    std::string to_json_text() const;

  private:
    std::vector<Generator> gens_;
    std::vector<Polynomial> rels_;
    std::vector<long> rel_degrees_;
    long degree_cap_ = 0;
    bool monomial_only_ = true;
};

/// Torsion/free coordinates of an element of a graded component.
struct ComponentCoords {
    std::vector<std::pair<Int, Int>> torsion;  // (modulus >= 2, residue)
    std::vector<Int> free_part;
};

/// One graded piece of the quotient ring, as an abelian group together with
/// enough lattice data to take orders and coordinates of elements.
class GradedComponent {
  public:
    long degree = 0;
    std::vector<Monomial> basis;  // graded-lexicographic, descending
    FinAbGroup group;

    /// Order of the class of the vector v (coordinates in `basis`), nullopt
    /// when infinite.
    std::optional<Int> order_of(const std::vector<Int>& v) const;
    std::optional<Int> order_of(const Monomial& m, const Int& coeff = 1) const;

    ComponentCoords coords(const std::vector<Int>& v) const;

    /// Echelon basis of the degree-d slice of the relation ideal, rows in
    /// `basis` coordinates.
    std::vector<std::vector<Int>> relation_rows() const;

    long basis_index(const Monomial& m) const;

  private:
    friend GradedComponent build_component(const RingPresentation&, long, bool);
    bool diagonal_ = false;
    std::vector<Int> moduli_;  // diagonal form: per-column modulus, 0 = free
    IntMatrix rel_rows_;       // general form: echelon slice of the ideal
    IntMatrix V_;              // general form: Smith right transform
    std::vector<Int> diag_;    // general form: Smith diagonal (length = rows of rel_rows_)
};

/// All monomials of the given even degree, in descending graded-lex order
/// with respect to the generator declaration order.
std::vector<Monomial> monomial_basis(const RingPresentation& p, long degree);

/// The graded component of the quotient at the given degree.
GradedComponent component(const RingPresentation& p, long degree);

namespace detail {
/// Component computation with the diagonal fast path disabled; used by tests
/// to cross-check the two routes.
GradedComponent component_general(const RingPresentation& p, long degree);
}  // namespace detail

/// Memoized per-presentation component table; concurrent lookups are safe.
class CachedRing {
  public:
    explicit CachedRing(RingPresentation p) : pres_(std::move(p)) {}

    const RingPresentation& presentation() const { return pres_; }
    const GradedComponent& component(long degree) const;

  private:
    RingPresentation pres_;
    mutable std::mutex mu_;
    mutable std::map<long, std::shared_ptr<const GradedComponent>> memo_;
};

/// Order of coeff * m in the component of its degree; nullopt when infinite.
std::optional<Int> order_of(const RingPresentation& p, const Monomial& m, const Int& coeff = 1);

/// Sequence b_r of orders of (scale * omega)^r, r = 1..max_r.
struct Characteristic {
    std::string omega;
    std::vector<Int> b;

    const Int& at(long r) const;  // 1-based
};

Characteristic characteristic(const RingPresentation& p, const std::string& omega, long max_r,
                              const Int& scale = 1);
Characteristic characteristic(const CachedRing& ring, const std::string& omega, long max_r,
                              const Int& scale = 1);

/// Isomorphism type of the kernel of multiplication by omega from the
/// component at `degree` to the component at `degree + 2`. At degree 0 the
/// free summand Z*1 is disregarded and the kernel is taken on torsion only.
FinAbGroup mult_kernel(const RingPresentation& p, const std::string& omega, long degree);

}  // namespace covdeg

#endif
