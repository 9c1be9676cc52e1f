#include "stpade/pade_exact.hpp"

#include <cstddef>
#include <sstream>

namespace stpade {

namespace {

Rational mu_at(const std::vector<Rational>& moments, long j) {
    if (j < 0 || static_cast<std::size_t>(j) >= moments.size()) return Rational(0);
    return moments[static_cast<std::size_t>(j)];
}

// Plain Gaussian elimination; any nonzero pivot is exact, so no scaling
// strategy is needed.  Returns false when the matrix is singular.
bool solve_linear(std::vector<std::vector<Rational>>& a, std::vector<Rational>& b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) b[i] -= a[i][k] * b[k];
        b[i] /= a[i][i];
    }
    return true;
}

void check_exact_degrees(std::size_t have, int L, int M) {
    if (M < 0 || L < 0 || L - M + 1 < 0)
        throw ConfigError("exact path requires L >= M - 1 >= -1");
    const std::size_t needed = static_cast<std::size_t>(L + M + 1);
    if (have < needed) {
        std::ostringstream os;
        os << "[" << L << "/" << M << "] needs " << needed << " moments, got " << have;
        throw InsufficientDataError(os.str());
    }
}

} // namespace

std::vector<Rational>
exact_atomic_moments(const std::vector<std::pair<Rational, Rational>>& atoms, int count) {
    if (count < 0) throw ConfigError("moment count must be nonnegative");
    std::vector<Rational> out(static_cast<std::size_t>(count), Rational(0));
    for (const auto& [z, lambda] : atoms) {
        Rational power(1);
        for (int m = 0; m < count; ++m) {
            out[static_cast<std::size_t>(m)] += lambda * power;
            power *= z;
        }
    }
    return out;
}

std::vector<Rational>
exact_denominator(const std::vector<Rational>& moments, int L, int M) {
    check_exact_degrees(moments.size(), L, M);
    std::vector<Rational> den(static_cast<std::size_t>(M) + 1, Rational(0));
    den[0] = 1;
    if (M == 0) return den;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(M),
                                         std::vector<Rational>(static_cast<std::size_t>(M)));
    std::vector<Rational> b(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                mu_at(moments, L - M + 1 + i + j);
        b[static_cast<std::size_t>(i)] = -mu_at(moments, L + 1 + i);
    }
    if (!solve_linear(a, b)) {
        std::ostringstream os;
        os << "exact Hankel system for [" << L << "/" << M << "] is singular";
        throw NonExistenceError(os.str(), 0.0);
    }
    for (int k = 1; k <= M; ++k)
        den[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(M - k)];
    return den;
}

std::vector<Rational>
exact_numerator(const std::vector<Rational>& moments,
                const std::vector<Rational>& denominator, int L, int M) {
    check_exact_degrees(moments.size(), L, M);
    std::vector<Rational> num(static_cast<std::size_t>(L) + 1, Rational(0));
    for (int k = 0; k <= L; ++k) {
        Rational a = mu_at(moments, k);
        for (int j = 1; j <= M && j <= k; ++j)
            a += denominator[static_cast<std::size_t>(j)] * mu_at(moments, k - j);
        num[static_cast<std::size_t>(k)] = a;
    }
    return num;
}

Rational exact_delta(const std::vector<Rational>& moments, int M, int J,
                     const Rational& x) {
    if (M < 0) throw ConfigError("Delta_M^(J) requires M >= 0");
    if (J < -1) throw ConfigError("Delta_M^(J) requires J >= -1");
    if (M == 0) return Rational(1);
    const std::size_t needed = static_cast<std::size_t>(2 * M + J + 1);
    if (moments.size() < needed) {
        std::ostringstream os;
        os << "Delta_" << M << "^(" << J << ") needs moments up to mu_" << 2 * M + J
           << ", got " << moments.size();
        throw InsufficientDataError(os.str());
    }
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(M),
                                         std::vector<Rational>(static_cast<std::size_t>(M)));
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                mu_at(moments, i + j + 1 + J) + x * mu_at(moments, i + j + 2 + J);

    // Determinant by elimination; track row-swap parity.
    Rational det(1);
    const std::size_t n = static_cast<std::size_t>(M);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
        }
    }
    return det;
}

} // namespace stpade
