#pragma once

// Truncated formal power series in q with exact integer coefficients.
//
// Every series carries a fixed order N and holds the coefficients of
// q^0 .. q^N. Binary operations require equal orders; nothing is promoted
// or truncated implicitly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hls {

using Integer = mpz_class;

class Series {
public:
    /// The zero series of the given order.
    explicit Series(std::size_t order);

    /// Takes ownership of coefficients q^0..q^order; throws PreconditionError
    /// unless coeffs.size() == order + 1.
    Series(std::size_t order, std::vector<Integer> coeffs);

    static Series constant(std::size_t order, const Integer& c);

    /// c * q^exponent, or zero when exponent > order.
    static Series monomial(std::size_t order, std::uint64_t exponent, const Integer& c = 1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    /// Coefficient of q^i; throws PreconditionError when i > order.
    const Integer& operator[](std::size_t i) const;

    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Integer> coeffs_;
};

Series add(const Series& a, const Series& b);
Series negate(const Series& a);
Series sub(const Series& a, const Series& b);

/// Cauchy product truncated at the common order.
Series mul(const Series& a, const Series& b);

/// a / (1 - q^k), by the in-place recurrence c[i] += c[i-k]. O(N).
Series mul_geometric(const Series& a, std::uint64_t k);

/// a / (1 + q^k), by the recurrence c[i] -= c[i-k]. O(N).
Series div_one_plus(const Series& a, std::uint64_t k);

/// Multiplicative inverse for a series with constant term 1, via
/// b[0] = 1, b[i] = -sum_{j=1..i} a[j] b[i-j]. Throws PreconditionError
/// when a[0] != 1.
Series inverse(const Series& a);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/// 1/(q)_inf: partition numbers p(0..N) from the pentagonal-number recurrence.
Series euler_inverse(std::size_t order);

/// (q)_inf: +-1 at the generalized pentagonal numbers k(3k -+ 1)/2.
Series euler_product(std::size_t order);

/// (-q)_inf = prod_{k>=1} (1 + q^k).
Series pochhammer_negq(std::size_t order);

/// h(q) = sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2} / (1 - q^n).
Series h_series_definition(std::size_t order);

/// h(q) = sum_{n>=1, 1<=j<=n-1} q^{n^2+nj} + sum_{n>=1, 0<=j<=n} q^{n^2+nj}.
Series h_series_hecke(std::size_t order);

/// h(q) = sum_{n>=1} sum_{j=1}^{n-1} 2 q^{n(n+j)} + sum_{n>=1} (q^{n^2} + q^{2n^2}).
Series h_series_representation(std::size_t order);

/// sigma(q) = 1 + sum_{n>=1} q^{n(n+1)/2} / (-q)_n.
Series sigma_series_definition(std::size_t order);

/// sigma(q) = sum_{n>=0, |j|<=n} (-1)^{n+j} q^{n(3n+1)/2 - j^2} (1 - q^{2n+1}).
Series sigma_series_hecke(std::size_t order);

enum class CrankKind { partition, overpartition };

/// Generating function of the first positive crank moment:
/// h(q)/(q)_inf for partitions, h(q)(-q)_inf/(q)_inf for overpartitions.
Series crank_series(CrankKind kind, std::size_t order);

/// Named generators, as accepted by the command line.
enum class SeriesName { h_def, h_hecke, h_rep, sigma_def, sigma_hecke, crank_p, crank_op };

/// Parses "h-def", "h-hecke", "h-rep", "sigma-def", "sigma-hecke", "crank-p",
/// "crank-op"; throws DomainError otherwise.
SeriesName parse_series_name(std::string_view name);
std::string_view to_string(SeriesName name) noexcept;
Series generate(SeriesName name, std::size_t order);

} // namespace hls
