#include "covdeg/zlinalg.hpp"

#include <algorithm>
#include <sstream>

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

// Quotient rounded to nearest, so remainders satisfy |r| <= |b|/2. Keeps
// entry growth under control during the normal-form sweeps.
Int rounded_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    Int half = abs_int(b);
    if (2 * abs_int(r) > half) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

IntMatrix::IntMatrix(long rows, long cols, std::vector<Int> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 0 || cols < 0 || a_.size() != static_cast<size_t>(rows * cols))
        throw InvalidInput("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, long cols) {
    IntMatrix m(static_cast<long>(rows.size()), cols);
    for (long i = 0; i < m.rows(); ++i) {
        if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(cols)) {
            std::ostringstream os;
            os << "row " << i << " has length " << rows[static_cast<size_t>(i)].size() << ", expected " << cols;
            throw InvalidInput(os.str());
        }
        for (long j = 0; j < cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

std::vector<Int> IntMatrix::row(long r) const {
    std::vector<Int> out(static_cast<size_t>(cols_));
    for (long j = 0; j < cols_; ++j) out[static_cast<size_t>(j)] = at(r, j);
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("IntMatrix::operator*: dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& m = at(i, k);
            if (m == 0) continue;
            for (long j = 0; j < o.cols_; ++j) out.at(i, j) += m * o.at(k, j);
        }
    return out;
}

void IntMatrix::swap_rows(long i, long j) {
    if (i == j) return;
    for (long c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(long i, long j) {
    if (i == j) return;
    for (long r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(long i) {
    for (long c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(long i) {
    for (long r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::add_row_multiple(long i, long j, const Int& q) {
    if (q == 0) return;
    for (long c = 0; c < cols_; ++c) at(i, c) += q * at(j, c);
}

void IntMatrix::add_col_multiple(long i, long j, const Int& q) {
    if (q == 0) return;
    for (long r = 0; r < rows_; ++r) at(r, i) += q * at(r, j);
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant: matrix not square");
    long n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

long SnfResult::rank() const {
    long r = 0;
    long k = std::min(D.rows(), D.cols());
    for (long i = 0; i < k; ++i)
        if (D.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SnfResult::nonzero_diagonal() const {
    std::vector<Int> out;
    long k = std::min(D.rows(), D.cols());
    for (long i = 0; i < k; ++i)
        if (D.at(i, i) != 0) out.push_back(D.at(i, i));
    return out;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& d = res.D;
    IntMatrix& u = res.U;
    IntMatrix& v = res.V;
    long limit = std::min(d.rows(), d.cols());

    for (long t = 0; t < limit; ++t) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        long pr = -1, pc = -1;
        for (long i = t; i < d.rows(); ++i)
            for (long j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                if (pr < 0 || abs_int(d.at(i, j)) < abs_int(d.at(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            // Clear column t below the pivot.
            for (long i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = rounded_div(d.at(i, t), d.at(t, t));
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) {
                    // Remainder is strictly smaller; promote it to pivot.
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            // Clear row t right of the pivot.
            for (long j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = rounded_div(d.at(t, j), d.at(t, t));
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: the pivot must divide every trailing entry.
            long br = -1, bc = -1;
            for (long i = t + 1; i < d.rows() && br < 0; ++i)
                for (long j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        br = i;
                        bc = j;
                        break;
                    }
            if (br < 0) break;
            d.add_row_multiple(t, br, 1);
            u.add_row_multiple(t, br, 1);
            (void)bc;
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    // Row echelon over Z via extended-gcd pivot combination, then the usual
    // normalization (positive pivots, entries above reduced into [0, pivot)).
    std::vector<std::vector<Int>> rows;
    for (long i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    long cols = m.cols();

    std::vector<std::vector<Int>> pivots;  // echelon rows, by leading column
    for (auto& r : rows) {
        std::vector<Int> cur = r;
        for (;;) {
            long lead = -1;
            for (long j = 0; j < cols; ++j)
                if (cur[static_cast<size_t>(j)] != 0) {
                    lead = j;
                    break;
                }
            if (lead < 0) break;
            // Find the pivot row with this leading column, if any.
            size_t k = 0;
            bool found = false;
            for (; k < pivots.size(); ++k) {
                long plead = -1;
                for (long j = 0; j < cols; ++j)
                    if (pivots[k][static_cast<size_t>(j)] != 0) {
                        plead = j;
                        break;
                    }
                if (plead == lead) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                if (cur[static_cast<size_t>(lead)] < 0)
                    for (auto& x : cur) x = -x;
                pivots.push_back(cur);
                break;
            }
            Int p = pivots[k][static_cast<size_t>(lead)];
            Int b = cur[static_cast<size_t>(lead)];
            if (b % p == 0) {
                Int q = b / p;
                for (long j = 0; j < cols; ++j) cur[static_cast<size_t>(j)] -= q * pivots[k][static_cast<size_t>(j)];
            } else {
                // Replace the pivot by the gcd combination, keep reducing.
                Int x0, y0;
                {
                    // extended gcd of p and b
                    Int a0 = p, b0 = b, x = 1, y = 0, x1 = 0, y1 = 1;
                    while (b0 != 0) {
                        Int q = a0 / b0;
                        Int t;
                        t = a0 - q * b0;
                        a0 = b0;
                        b0 = t;
                        t = x - q * x1;
                        x = x1;
                        x1 = t;
                        t = y - q * y1;
                        y = y1;
                        y1 = t;
                    }
                    x0 = x;
                    y0 = y;
                }
                Int g = x0 * p + y0 * b;
                std::vector<Int> comb(static_cast<size_t>(cols)), rest(static_cast<size_t>(cols));
                for (long j = 0; j < cols; ++j) {
                    const Int& pj = pivots[k][static_cast<size_t>(j)];
                    const Int& cj = cur[static_cast<size_t>(j)];
                    comb[static_cast<size_t>(j)] = x0 * pj + y0 * cj;
                    rest[static_cast<size_t>(j)] = (p / g) * cj - (b / g) * pj;
                }
                pivots[k] = comb;
                cur = rest;
            }
        }
    }
    // Order rows by leading column.
    std::sort(pivots.begin(), pivots.end(), [cols](const auto& a, const auto& b) {
        long la = cols, lb = cols;
        for (long j = 0; j < cols; ++j)
            if (a[static_cast<size_t>(j)] != 0) {
                la = j;
                break;
            }
        for (long j = 0; j < cols; ++j)
            if (b[static_cast<size_t>(j)] != 0) {
                lb = j;
                break;
            }
        return la < lb;
    });
    // Reduce entries above each pivot.
    for (size_t k = 0; k < pivots.size(); ++k) {
        long lead = -1;
        for (long j = 0; j < cols; ++j)
            if (pivots[k][static_cast<size_t>(j)] != 0) {
                lead = j;
                break;
            }
        for (size_t i = 0; i < k; ++i) {
            Int q = pivots[i][static_cast<size_t>(lead)] / pivots[k][static_cast<size_t>(lead)];
            if (pivots[i][static_cast<size_t>(lead)] % pivots[k][static_cast<size_t>(lead)] < 0) q -= 1;
            if (q == 0) continue;
            for (long j = 0; j < cols; ++j) pivots[i][static_cast<size_t>(j)] -= q * pivots[k][static_cast<size_t>(j)];
        }
    }
    return IntMatrix::from_rows(pivots, cols);
}

bool hnf_contains(const IntMatrix& hnf, std::vector<Int> v) {
    if (static_cast<long>(v.size()) != hnf.cols()) throw InvalidInput("hnf_contains: vector length mismatch");
    for (long i = 0; i < hnf.rows(); ++i) {
        long lead = -1;
        for (long j = 0; j < hnf.cols(); ++j)
            if (hnf.at(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        // Columns left of this pivot must already be exhausted.
        for (long j = 0; j < lead; ++j)
            if (v[static_cast<size_t>(j)] != 0) return false;
        if (v[static_cast<size_t>(lead)] % hnf.at(i, lead) != 0) return false;
        Int q = v[static_cast<size_t>(lead)] / hnf.at(i, lead);
        for (long j = lead; j < hnf.cols(); ++j) v[static_cast<size_t>(j)] -= q * hnf.at(i, j);
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

Int gcd_binomials(long n, long r) {
    if (r < 1 || r > n) throw InvalidInput("gcd_binomials: need 1 <= r <= n");
    Int binom = 1;
    Int g = 0;
    for (long k = 1; k <= r; ++k) {
        binom = binom * (n - k + 1) / k;
        g = gcd_int(g, binom);
        if (g == 1) break;
    }
    return g == 0 ? Int(1) : g;
}

FinAbGroup abelian_quotient(long ambient_rank, const std::vector<std::vector<Int>>& relations) {
    if (ambient_rank < 0) throw InvalidInput("abelian_quotient: negative rank");
    for (const auto& r : relations)
        if (static_cast<long>(r.size()) != ambient_rank)
            throw InvalidInput("abelian_quotient: relation length does not match ambient rank");
    IntMatrix m = IntMatrix::from_rows(relations, ambient_rank);
    SnfResult snf = smith_normal_form(m);
    FinAbGroup g;
    long nonzero = 0;
    long k = std::min(m.rows(), m.cols());
    for (long i = 0; i < k; ++i) {
        const Int& d = snf.D.at(i, i);
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) g.torsion.push_back(d);
    }
    g.rank = ambient_rank - nonzero;
    return g;
}

std::optional<Int> element_order(const std::vector<Int>& v, long ambient_rank,
                                 const std::vector<std::vector<Int>>& relations) {
    if (static_cast<long>(v.size()) != ambient_rank)
        throw InvalidInput("element_order: vector length does not match ambient rank");
    for (const auto& r : relations)
        if (static_cast<long>(r.size()) != ambient_rank)
            throw InvalidInput("element_order: relation length does not match ambient rank");
    IntMatrix m = IntMatrix::from_rows(relations, ambient_rank);
    SnfResult snf = smith_normal_form(m);
    // Smith coordinates: y = v * V; t*v lies in the lattice iff every
    // coordinate t*y_i is a multiple of d_i (with d_i = 0 forcing y_i = 0).
    std::vector<Int> y(static_cast<size_t>(ambient_rank));
    for (long j = 0; j < ambient_rank; ++j) {
        Int s = 0;
        for (long i = 0; i < ambient_rank; ++i) s += v[static_cast<size_t>(i)] * snf.V.at(i, j);
        y[static_cast<size_t>(j)] = s;
    }
    long k = std::min(m.rows(), m.cols());
    Int t = 1;
    for (long j = 0; j < ambient_rank; ++j) {
        const Int& yj = y[static_cast<size_t>(j)];
        Int d = j < k ? snf.D.at(j, j) : Int(0);
        if (d == 0) {
            if (yj != 0) return std::nullopt;
            continue;
        }
        if (yj == 0) continue;
        Int step = d / gcd_int(d, yj);
        t = t / gcd_int(t, step) * step;  // lcm
    }
    return t;
}

}  // namespace covdeg
