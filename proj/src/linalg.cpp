#include "raag/linalg.hpp"

#include "raag/errors.hpp"

#include <sstream>

namespace raag {

MatQ MatQ::identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ MatZ::identity(std::size_t n) {
    MatZ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatZ::to_q() const {
    MatQ m(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = Rat(a[i]);
    return m;
}

MatQ mul(const MatQ& x, const MatQ& y) {
    check_internal(x.cols == y.rows, "MatQ mul: shape mismatch");
    MatQ r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

MatZ mul(const MatZ& x, const MatZ& y) {
    check_internal(x.cols == y.rows, "MatZ mul: shape mismatch");
    MatZ r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

VecQ mul(const MatQ& x, const VecQ& v) {
    check_internal(x.cols == v.size(), "MatQ*VecQ: shape mismatch");
    VecQ r(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            if (x.at(i, j) != 0) r[i] += x.at(i, j) * v[j];
    return r;
}

MatQ neg(const MatQ& x) {
    MatQ r = x;
    for (auto& e : r.a) e = -e;
    return r;
}

std::vector<std::size_t> rref(MatQ& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && m.at(p, col) == 0) ++p;
        if (p == m.rows) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(MatQ m) { return rref(m).size(); }

std::size_t rank(const MatZ& m) { return rank(m.to_q()); }

std::optional<VecQ> solve(const MatQ& m, const VecQ& b) {
    check_input(b.size() == m.rows, "solve: rhs length mismatch");
    MatQ aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt; // pivot in rhs
    VecQ x(m.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
    return x;
}

std::vector<VecQ> nullspace(const MatQ& m) {
    MatQ r = m;
    auto pivots = rref(r);
    std::vector<char> is_pivot(m.cols, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<VecQ> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        VecQ v(m.cols);
        v[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.at(k, free_col);
        basis.push_back(normalize_primitive(std::move(v)));
    }
    return basis;
}

MatQ invert(const MatQ& m) {
    check_internal(m.rows == m.cols, "invert: not square");
    std::size_t n = m.rows;
    MatQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    check_internal(pivots.size() == n && pivots.back() == n - 1, "invert: singular matrix");
    MatQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Int det_bareiss(MatZ m) {
    check_internal(m.rows == m.cols, "det: not square");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

MatZ hnf_columns(const MatZ& input) {
    MatZ h = input;
    std::size_t n = h.rows, m = h.cols;
    std::size_t col = 0;
    for (std::size_t row = 0; row < n && col < m; ++row) {
        // gcd out everything in this row to the right of `col`
        while (true) {
            std::size_t nz = m;
            for (std::size_t j = col; j < m; ++j)
                if (h.at(row, j) != 0 &&
                    (nz == m || abs(h.at(row, j)) < abs(h.at(row, nz)))) nz = j;
            if (nz == m) break; // row is zero from col on
            if (nz != col)
                for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, col), h.at(i, nz));
            bool reduced = true;
            for (std::size_t j = col + 1; j < m; ++j) {
                if (h.at(row, j) == 0) continue;
                Int q = h.at(row, j) / h.at(row, col); // truncated division is fine here
                if (q != 0)
                    for (std::size_t i = 0; i < n; ++i) h.at(i, j) -= q * h.at(i, col);
                if (h.at(row, j) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (h.at(row, col) == 0) continue; // no pivot in this row
        if (h.at(row, col) < 0)
            for (std::size_t i = 0; i < n; ++i) h.at(i, col) = -h.at(i, col);
        // reduce columns to the left of the pivot
        for (std::size_t j = 0; j < col; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(), h.at(row, col).get_mpz_t());
            if (q != 0)
                for (std::size_t i = 0; i < n; ++i) h.at(i, j) -= q * h.at(i, col);
        }
        ++col;
    }
    return h;
}

std::optional<Int> min_multiple_in_lattice(const MatZ& m, const VecZ& target) {
    check_input(target.size() == m.rows, "lattice: target length mismatch");
    MatZ h = hnf_columns(m);
    // Solve h * y = n * target by forward substitution along pivot rows.
    // Since the solve is linear in n, track each coordinate as a rational
    // multiple of n and collect the denominators.
    std::size_t n_rows = h.rows, n_cols = h.cols;
    VecQ residual(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) residual[i] = Rat(target[i]);
    Int denom_lcm = 1;
    std::size_t col = 0;
    for (std::size_t row = 0; row < n_rows; ++row) {
        if (col < n_cols && h.at(row, col) != 0) {
            Rat coeff = residual[row] / Rat(h.at(row, col));
            for (std::size_t i = 0; i < n_rows; ++i)
                residual[i] -= coeff * Rat(h.at(i, col));
            Int den = coeff.get_den();
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), den.get_mpz_t());
            ++col;
        } else if (residual[row] != 0) {
            return std::nullopt; // target not in the rational column span
        }
    }
    for (std::size_t i = 0; i < n_rows; ++i)
        if (residual[i] != 0) return std::nullopt;
    return denom_lcm;
}

VecQ normalize_primitive(VecQ v) {
    Int den_lcm = 1, num_gcd = 0;
    for (const Rat& x : v) {
        if (x == 0) continue;
        Int d = x.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (Rat& x : v) x *= Rat(den_lcm);
    for (const Rat& x : v) {
        Int n = abs(x.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) return v;
    int lead_sign = 0;
    for (const Rat& x : v)
        if (x != 0) { lead_sign = sgn(x) > 0 ? 1 : -1; break; }
    Rat scale = Rat(lead_sign) / Rat(num_gcd);
    for (Rat& x : v) x *= scale;
    return v;
}

std::string to_string(const MatQ& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < m.cols; ++j)
            os << (j ? " " : "") << m.at(i, j).get_str();
        os << "]" << (i + 1 == m.rows ? "]" : "\n");
    }
    return os.str();
}

std::string to_string(const VecQ& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

} // namespace raag
