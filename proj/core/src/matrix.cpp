#include <splicequot/matrix.hpp>

namespace splicequot
{

namespace
{

void exact_divide(Integer &value, const Integer &divisor)
{
    if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t())) {
        throw InternalError("Bareiss step produced an inexact division");
    }
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
}

} // namespace

IntMatrix negated(const IntMatrix &m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = -m(i, j);
        }
    }
    return out;
}

Integer determinant(const IntMatrix &input)
{
    if (input.rows() != input.cols()) {
        throw InvalidInput("determinant of a non-square matrix");
    }
    const std::size_t n = input.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                exact_divide(v, prev);
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    return sign > 0 ? det : Integer(-det);
}

Rational determinant(const RatMatrix &input)
{
    if (input.rows() != input.cols()) {
        throw InvalidInput("determinant of a non-square matrix");
    }
    RatMatrix a = input;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != k) {
            a.swap_rows(k, p);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) {
                continue;
            }
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) {
                a(i, j) -= f * a(k, j);
            }
        }
    }
    return det;
}

std::vector<Integer> leading_principal_minors(const IntMatrix &input)
{
    if (input.rows() != input.cols()) {
        throw InvalidInput("minors of a non-square matrix");
    }
    const std::size_t n = input.rows();
    std::vector<Integer> minors;
    minors.reserve(n);
    IntMatrix a = input;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            // Pivot-free elimination cannot continue; fall back to direct
            // determinants for the remaining minors.
            minors.emplace_back(0);
            for (std::size_t r = k + 1; r < n; ++r) {
                std::vector<std::size_t> idx(r + 1);
                for (std::size_t t = 0; t <= r; ++t) {
                    idx[t] = t;
                }
                minors.push_back(determinant(input.submatrix(idx, idx)));
            }
            return minors;
        }
        minors.push_back(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                exact_divide(v, prev);
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return minors;
}

std::optional<RatMatrix> inverse(const IntMatrix &input)
{
    if (input.rows() != input.cols()) {
        throw InvalidInput("inverse of a non-square matrix");
    }
    const std::size_t n = input.rows();
    IntMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = input(i, j);
        }
        a(i, n + i) = 1;
    }
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) {
                ++p;
            }
            if (p == n) {
                return std::nullopt;
            }
            a.swap_rows(k, p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) {
                continue;
            }
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) {
                    continue;
                }
                Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                exact_divide(v, prev);
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    // Left block is now diag(d) with d = +-det; right block is d * A^-1.
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Integer &d = a(i, i);
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = make_rational(a(i, n + j), d);
        }
    }
    return inv;
}

std::size_t rank(RatMatrix a)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) {
                continue;
            }
            const Rational f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                a(i, j) -= f * a(r, j);
            }
        }
        ++r;
    }
    return r;
}

} // namespace splicequot
