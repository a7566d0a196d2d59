#include "hls/qseries.hpp"

#include <string>
#include <utility>

#include <fmt/format.h>

#include "hls/errors.hpp"

namespace hls {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op)
{
    if (a.order() != b.order()) {
        throw PreconditionError(
            fmt::format("{}: order mismatch ({} vs {})", op, a.order(), b.order()));
    }
}

std::vector<Integer> copy_coeffs(const Series& a)
{
    return {a.coeffs().begin(), a.coeffs().end()};
}

// Adds sign * q^shift * b into acc, dropping exponents above acc's order.
void accumulate_shifted(std::vector<Integer>& acc, const Series& b, std::uint64_t shift, int sign)
{
    const std::size_t order = acc.size() - 1;
    if (shift > order) {
        return;
    }
    const auto src = b.coeffs();
    for (std::size_t i = 0; i + shift <= order && i < src.size(); ++i) {
        if (sign > 0) {
            acc[i + shift] += src[i];
        } else {
            acc[i + shift] -= src[i];
        }
    }
}

} // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != order + 1) {
        throw PreconditionError(fmt::format(
            "Series: order {} needs {} coefficients, got {}", order, order + 1, coeffs_.size()));
    }
}

Series Series::constant(std::size_t order, const Integer& c)
{
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::monomial(std::size_t order, std::uint64_t exponent, const Integer& c)
{
    Series s(order);
    if (exponent <= order) {
        s.coeffs_[exponent] = c;
    }
    return s;
}

const Integer& Series::operator[](std::size_t i) const
{
    if (i >= coeffs_.size()) {
        throw PreconditionError(fmt::format("Series: index {} beyond order {}", i, order()));
    }
    return coeffs_[i];
}

bool Series::is_zero() const noexcept
{
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

Series add(const Series& a, const Series& b)
{
    require_same_order(a, b, "add");
    auto c = copy_coeffs(a);
    const auto bc = b.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += bc[i];
    }
    return Series(a.order(), std::move(c));
}

Series negate(const Series& a)
{
    auto c = copy_coeffs(a);
    for (auto& x : c) {
        x = -x;
    }
    return Series(a.order(), std::move(c));
}

Series sub(const Series& a, const Series& b)
{
    require_same_order(a, b, "sub");
    auto c = copy_coeffs(a);
    const auto bc = b.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] -= bc[i];
    }
    return Series(a.order(), std::move(c));
}

Series mul(const Series& a, const Series& b)
{
    require_same_order(a, b, "mul");
    const std::size_t order = a.order();
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<Integer> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(ac[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
        }
    }
    return Series(order, std::move(c));
}

Series mul_geometric(const Series& a, std::uint64_t k)
{
    if (k == 0) {
        throw PreconditionError("mul_geometric: k must be positive");
    }
    auto c = copy_coeffs(a);
    for (std::size_t i = k; i < c.size(); ++i) {
        c[i] += c[i - k];
    }
    return Series(a.order(), std::move(c));
}

Series div_one_plus(const Series& a, std::uint64_t k)
{
    if (k == 0) {
        throw PreconditionError("div_one_plus: k must be positive");
    }
    auto c = copy_coeffs(a);
    for (std::size_t i = k; i < c.size(); ++i) {
        c[i] -= c[i - k];
    }
    return Series(a.order(), std::move(c));
}

Series inverse(const Series& a)
{
    if (a[0] != 1) {
        throw PreconditionError("inverse: constant term must be 1");
    }
    const std::size_t order = a.order();
    const auto ac = a.coeffs();
    std::vector<Integer> b(order + 1);
    b[0] = 1;
    for (std::size_t i = 1; i <= order; ++i) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            if (sgn(ac[j]) != 0) {
                mpz_addmul(acc.get_mpz_t(), ac[j].get_mpz_t(), b[i - j].get_mpz_t());
            }
        }
        b[i] = -acc;
    }
    return Series(order, std::move(b));
}

Series euler_inverse(std::size_t order)
{
    std::vector<Integer> p(order + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Integer acc = 0;
        for (std::uint64_t k = 1;; ++k) {
            const std::uint64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const std::uint64_t g2 = k * (3 * k + 1) / 2;
            const bool plus = (k % 2) == 1;
            if (plus) {
                acc += p[n - g1];
                if (g2 <= n) {
                    acc += p[n - g2];
                }
            } else {
                acc -= p[n - g1];
                if (g2 <= n) {
                    acc -= p[n - g2];
                }
            }
        }
        p[n] = std::move(acc);
    }
    return Series(order, std::move(p));
}

Series euler_product(std::size_t order)
{
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t g1 = k * (3 * k - 1) / 2;
        if (g1 > order) {
            break;
        }
        const int sign = (k % 2) == 1 ? -1 : 1;
        c[g1] = sign;
        const std::uint64_t g2 = k * (3 * k + 1) / 2;
        if (g2 <= order) {
            c[g2] = sign;
        }
    }
    return Series(order, std::move(c));
}

Series pochhammer_negq(std::size_t order)
{
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        for (std::size_t i = order; i >= k; --i) {
            c[i] += c[i - k];
        }
    }
    return Series(order, std::move(c));
}

Series h_series_definition(std::size_t order)
{
    std::vector<Integer> acc(order + 1);
    for (std::uint64_t n = 1; n * (n + 1) / 2 <= order; ++n) {
        const int sign = (n % 2 == 1) ? 1 : -1;
        const Series term = mul_geometric(Series::monomial(order, n * (n + 1) / 2), n);
        accumulate_shifted(acc, term, 0, sign);
    }
    return Series(order, std::move(acc));
}

Series h_series_hecke(std::size_t order)
{
    std::vector<Integer> c(order + 1);
    for (std::uint64_t n = 1; n * n <= order; ++n) {
        for (std::uint64_t j = 1; j + 1 <= n; ++j) {
            const std::uint64_t e = n * n + n * j;
            if (e > order) {
                break;
            }
            c[e] += 1;
        }
        for (std::uint64_t j = 0; j <= n; ++j) {
            const std::uint64_t e = n * n + n * j;
            if (e > order) {
                break;
            }
            c[e] += 1;
        }
    }
    return Series(order, std::move(c));
}

Series h_series_representation(std::size_t order)
{
    std::vector<Integer> c(order + 1);
    for (std::uint64_t n = 1; n * n <= order; ++n) {
        c[n * n] += 1;
        if (2 * n * n <= order) {
            c[2 * n * n] += 1;
        }
        for (std::uint64_t j = 1; j < n; ++j) {
            const std::uint64_t e = n * (n + j);
            if (e > order) {
                break;
            }
            c[e] += 2;
        }
    }
    return Series(order, std::move(c));
}

Series sigma_series_definition(std::size_t order)
{
    std::vector<Integer> acc(order + 1);
    acc[0] = 1;
    // inv holds 1/(-q)_n; each step divides by one more factor (1 + q^n).
    Series inv = Series::constant(order, 1);
    for (std::uint64_t n = 1; n * (n + 1) / 2 <= order; ++n) {
        inv = div_one_plus(inv, n);
        accumulate_shifted(acc, inv, n * (n + 1) / 2, +1);
    }
    return Series(order, std::move(acc));
}

Series sigma_series_hecke(std::size_t order)
{
    std::vector<Integer> c(order + 1);
    // n(3n+1)/2 - j^2 >= n(n+1)/2 for |j| <= n, so that is the cutoff.
    for (std::int64_t n = 0; static_cast<std::uint64_t>(n * (n + 1) / 2) <= order; ++n) {
        const std::int64_t base = n * (3 * n + 1) / 2;
        for (std::int64_t j = -n; j <= n; ++j) {
            const int sign = ((n + j) % 2 == 0) ? 1 : -1;
            const auto e = static_cast<std::uint64_t>(base - j * j);
            if (e <= order) {
                c[e] += sign;
            }
            const std::uint64_t e2 = e + static_cast<std::uint64_t>(2 * n + 1);
            if (e2 <= order) {
                c[e2] -= sign;
            }
        }
    }
    return Series(order, std::move(c));
}

Series crank_series(CrankKind kind, std::size_t order)
{
    Series s = mul(euler_inverse(order), h_series_representation(order));
    if (kind == CrankKind::overpartition) {
        s = mul(s, pochhammer_negq(order));
    }
    return s;
}

SeriesName parse_series_name(std::string_view name)
{
    for (auto candidate : {SeriesName::h_def, SeriesName::h_hecke, SeriesName::h_rep,
                           SeriesName::sigma_def, SeriesName::sigma_hecke, SeriesName::crank_p,
                           SeriesName::crank_op}) {
        if (to_string(candidate) == name) {
            return candidate;
        }
    }
    throw DomainError(fmt::format("unknown series '{}'", name));
}

std::string_view to_string(SeriesName name) noexcept
{
    switch (name) {
    case SeriesName::h_def: return "h-def";
    case SeriesName::h_hecke: return "h-hecke";
    case SeriesName::h_rep: return "h-rep";
    case SeriesName::sigma_def: return "sigma-def";
    case SeriesName::sigma_hecke: return "sigma-hecke";
    case SeriesName::crank_p: return "crank-p";
    case SeriesName::crank_op: return "crank-op";
    }
    return "?";
}

Series generate(SeriesName name, std::size_t order)
{
    switch (name) {
    case SeriesName::h_def: return h_series_definition(order);
    case SeriesName::h_hecke: return h_series_hecke(order);
    case SeriesName::h_rep: return h_series_representation(order);
    case SeriesName::sigma_def: return sigma_series_definition(order);
    case SeriesName::sigma_hecke: return sigma_series_hecke(order);
    case SeriesName::crank_p: return crank_series(CrankKind::partition, order);
    case SeriesName::crank_op: return crank_series(CrankKind::overpartition, order);
    }
    throw DomainError("unknown series");
}

} // namespace hls
