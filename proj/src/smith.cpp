#include "sctk/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sctk {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(
    const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged rows in matrix literal");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

const BigInt& IntegerMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_zero() const {
    for (const BigInt& x : data_)
        if (x != 0) return false;
    return true;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix dimensions do not match");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& av = a(i, k);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const BigInt& bv = b(k, j);
                if (bv != 0) c(i, j) += av * bv;
            }
        }
    return c;
}

namespace {

// Elimination state; transform tracking is optional.
struct Eliminator {
    IntegerMatrix& d;
    SNFTransforms* t;
    std::size_t m, n;

    Eliminator(IntegerMatrix& d_, SNFTransforms* t_)
        : d(d_), t(t_), m(d_.rows()), n(d_.cols()) {
        if (t) {
            t->left = IntegerMatrix::identity(m);
            t->left_inv = IntegerMatrix::identity(m);
            t->right = IntegerMatrix::identity(n);
            t->right_inv = IntegerMatrix::identity(n);
        }
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(d(i, k), d(j, k));
        if (t) {
            for (std::size_t k = 0; k < m; ++k) {
                std::swap(t->left(i, k), t->left(j, k));
                std::swap(t->left_inv(k, i), t->left_inv(k, j));
            }
        }
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < m; ++k) std::swap(d(k, i), d(k, j));
        if (t) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(t->right(k, i), t->right(k, j));
                std::swap(t->right_inv(i, k), t->right_inv(j, k));
            }
        }
    }

    // row dst += c * row src
    void add_row(std::size_t dst, std::size_t src, const BigInt& c) {
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt& v = d(src, k);
            if (v != 0) d(dst, k) += c * v;
        }
        if (t) {
            for (std::size_t k = 0; k < m; ++k) {
                const BigInt& v = t->left(src, k);
                if (v != 0) t->left(dst, k) += c * v;
            }
            for (std::size_t k = 0; k < m; ++k) {
                const BigInt& v = t->left_inv(k, dst);
                if (v != 0) t->left_inv(k, src) -= c * v;
            }
        }
    }

    // col dst += c * col src
    void add_col(std::size_t dst, std::size_t src, const BigInt& c) {
        for (std::size_t k = 0; k < m; ++k) {
            const BigInt& v = d(k, src);
            if (v != 0) d(k, dst) += c * v;
        }
        if (t) {
            for (std::size_t k = 0; k < n; ++k) {
                const BigInt& v = t->right(k, src);
                if (v != 0) t->right(k, dst) += c * v;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const BigInt& v = t->right_inv(dst, k);
                if (v != 0) t->right_inv(src, k) -= c * v;
            }
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < n; ++k)
            if (d(i, k) != 0) d(i, k) = -d(i, k);
        if (t) {
            for (std::size_t k = 0; k < m; ++k) {
                if (t->left(i, k) != 0) t->left(i, k) = -t->left(i, k);
                if (t->left_inv(k, i) != 0) t->left_inv(k, i) = -t->left_inv(k, i);
            }
        }
    }

    // Smallest nonzero absolute value in d[from.., from..]; ties broken by
    // sparsity of the pivot's row and column to limit fill-in.
    bool find_pivot(std::size_t from, std::size_t& pi, std::size_t& pj) {
        std::vector<std::size_t> row_nnz(m, 0), col_nnz(n, 0);
        for (std::size_t i = from; i < m; ++i)
            for (std::size_t j = from; j < n; ++j)
                if (d(i, j) != 0) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
        bool found = false;
        BigInt best;
        std::size_t best_fill = 0;
        for (std::size_t i = from; i < m; ++i) {
            if (row_nnz[i] == 0) continue;
            for (std::size_t j = from; j < n; ++j) {
                const BigInt& v = d(i, j);
                if (v == 0) continue;
                BigInt a = abs(v);
                std::size_t fill = row_nnz[i] + col_nnz[j];
                if (!found || a < best || (a == best && fill < best_fill)) {
                    found = true;
                    best = a;
                    best_fill = fill;
                    pi = i;
                    pj = j;
                }
            }
        }
        return found;
    }

    bool is_lone(std::size_t p) {
        for (std::size_t i = p + 1; i < m; ++i)
            if (d(i, p) != 0) return false;
        for (std::size_t j = p + 1; j < n; ++j)
            if (d(p, j) != 0) return false;
        return true;
    }

    std::vector<BigInt> run() {
        std::size_t nmin = std::min(m, n);
        for (std::size_t p = 0; p < nmin; ++p) {
            std::size_t pi, pj;
            if (!find_pivot(p, pi, pj)) {
                // remaining block is zero
                std::vector<BigInt> out;
                for (std::size_t i = 0; i < p; ++i) out.push_back(d(i, i));
                return out;
            }
            swap_rows(p, pi);
            swap_cols(p, pj);
            while (true) {
                // reduce the pivot column and row
                for (std::size_t i = p + 1; i < m; ++i) {
                    if (d(i, p) == 0) continue;
                    BigInt q = d(i, p) / d(p, p);
                    if (q != 0) add_row(i, p, -q);
                }
                for (std::size_t j = p + 1; j < n; ++j) {
                    if (d(p, j) == 0) continue;
                    BigInt q = d(p, j) / d(p, p);
                    if (q != 0) add_col(j, p, -q);
                }
                if (!is_lone(p)) {
                    // some remainder became the new smallest entry
                    std::size_t qi, qj;
                    find_pivot(p, qi, qj);
                    swap_rows(p, qi);
                    swap_cols(p, qj);
                    continue;
                }
                // divisibility: every remaining entry must be a multiple
                bool fixed = true;
                for (std::size_t i = p + 1; i < m && fixed; ++i)
                    for (std::size_t j = p + 1; j < n; ++j)
                        if (d(i, j) % d(p, p) != 0) {
                            add_row(p, i, 1);
                            fixed = false;
                            break;
                        }
                if (fixed) break;
            }
            if (d(p, p) < 0) negate_row(p);
        }
        std::vector<BigInt> out;
        for (std::size_t i = 0; i < nmin; ++i) out.push_back(d(i, i));
        return out;
    }
};

SNFResult run_snf(IntegerMatrix& a, SNFTransforms* t) {
    Eliminator e(a, t);
    std::vector<BigInt> diag = e.run();
    SNFResult res;
    for (BigInt& x : diag)
        if (x != 0) res.invariant_factors.push_back(std::move(x));
    return res;
}

}  // namespace

SNFResult smith_normal_form(IntegerMatrix a) { return run_snf(a, nullptr); }

SNFResult smith_normal_form(IntegerMatrix a, SNFTransforms& out) {
    return run_snf(a, &out);
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
    SNFTransforms t;
    SNFResult snf = smith_normal_form(a, t);
    std::size_t r = snf.rank();
    std::size_t n = a.cols();
    IntegerMatrix kb(n, n - r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = r; j < n; ++j) kb(i, j - r) = t.right(i, j);
    return kb;
}

IntegerMatrix solve_integer(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_integer: dimension mismatch");
    SNFTransforms t;
    IntegerMatrix work = a;
    SNFResult snf = smith_normal_form(work, t);
    std::size_t z = a.cols();
    if (snf.rank() != z)
        throw std::domain_error("solve_integer: matrix not of full column rank");
    IntegerMatrix lb = multiply(t.left, b);
    for (std::size_t i = z; i < lb.rows(); ++i)
        for (std::size_t j = 0; j < lb.cols(); ++j)
            if (lb(i, j) != 0)
                throw std::domain_error("solve_integer: no solution");
    IntegerMatrix y(z, b.cols());
    for (std::size_t i = 0; i < z; ++i) {
        const BigInt& dii = snf.invariant_factors[i];
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (lb(i, j) % dii != 0)
                throw std::domain_error("solve_integer: no integral solution");
            y(i, j) = lb(i, j) / dii;
        }
    }
    return multiply(t.right, y);
}

}  // namespace sctk
