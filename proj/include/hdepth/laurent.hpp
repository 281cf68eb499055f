#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace hdepth {

using Integer = boost::multiprecision::cpp_int;

/// Finite Laurent polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<std::int64_t, Integer>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<std::int64_t, long>> terms);

    static LaurentPoly monomial(std::int64_t exponent, const Integer& coeff = 1);
    /// sum_{k < count} t^(k*step)
    static LaurentPoly geometric_block(std::int64_t step, std::int64_t count);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    /// Smallest / largest exponent with nonzero coefficient. Undefined on zero.
    std::int64_t min_exponent() const { return terms_.begin()->first; }
    std::int64_t max_exponent() const { return terms_.rbegin()->first; }

    Integer coeff(std::int64_t exponent) const;
    void add_term(std::int64_t exponent, const Integer& coeff);

    Integer eval_at_one() const;
    bool is_nonnegative() const;

    LaurentPoly shifted(std::int64_t s) const;
    /// (1 - t^d) * this
    LaurentPoly times_one_minus(std::int64_t d) const;
    /// this / (1 - t^d) when the quotient is a Laurent polynomial.
    std::optional<LaurentPoly> divided_by_one_minus(std::int64_t d) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Integer& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

} // namespace hdepth
