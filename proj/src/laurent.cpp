#include "hdepth/laurent.hpp"

#include <sstream>
#include <vector>

namespace hdepth {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<std::int64_t, long>> terms)
{
    for (const auto& [e, c] : terms)
        add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, const Integer& coeff)
{
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::geometric_block(std::int64_t step, std::int64_t count)
{
    LaurentPoly p;
    for (std::int64_t k = 0; k < count; ++k)
        p.add_term(k * step, 1);
    return p;
}

Integer LaurentPoly::coeff(std::int64_t exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t exponent, const Integer& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer LaurentPoly::eval_at_one() const
{
    Integer sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c;
    return sum;
}

bool LaurentPoly::is_nonnegative() const
{
    for (const auto& [e, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

LaurentPoly LaurentPoly::shifted(std::int64_t s) const
{
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e + s, c);
    return out;
}

LaurentPoly LaurentPoly::times_one_minus(std::int64_t d) const
{
    LaurentPoly out = *this;
    for (const auto& [e, c] : terms_)
        out.add_term(e + d, -c);
    return out;
}

std::optional<LaurentPoly> LaurentPoly::divided_by_one_minus(std::int64_t d) const
{
    if (is_zero())
        return LaurentPoly{};
    const std::int64_t lo = min_exponent();
    const std::int64_t hi = max_exponent();
    if (hi - lo < d)
        return std::nullopt;
    // q = p / (1 - t^d) satisfies q_e = p_e + q_{e-d}; exact iff the tail cancels.
    const std::int64_t qlen = hi - d - lo + 1;
    std::vector<Integer> q(static_cast<std::size_t>(qlen));
    for (std::int64_t i = 0; i < qlen; ++i) {
        q[i] = coeff(lo + i);
        if (i >= d)
            q[i] += q[i - d];
    }
    for (std::int64_t i = qlen; i < hi - lo + 1; ++i) {
        Integer v = coeff(lo + i);
        if (i >= d)
            v += q[i - d];
        if (v != 0)
            return std::nullopt;
    }
    LaurentPoly out;
    for (std::int64_t i = 0; i < qlen; ++i)
        out.add_term(lo + i, q[i]);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

std::string LaurentPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << "t";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

} // namespace hdepth
