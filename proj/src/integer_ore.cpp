#include "orekit/integer_ore.hpp"

#include <algorithm>
#include <vector>

namespace orekit {

IntegerOrePoly IntegerOrePoly::monomial(const Integer& c, long x_power, long d_power)
{
    IntegerOrePoly p;
    p.add_term(c, x_power, d_power);
    return p;
}

void IntegerOrePoly::add_term(const Integer& c, long x_power, long d_power)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{x_power, d_power}, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

long IntegerOrePoly::x_degree() const
{
    long m = -1;
    for (const auto& kv : terms_) m = std::max(m, kv.first.first);
    return m;
}

long IntegerOrePoly::d_degree() const
{
    long m = -1;
    for (const auto& kv : terms_) m = std::max(m, kv.first.second);
    return m;
}

Integer IntegerOrePoly::height() const
{
    Integer h = 0;
    for (const auto& kv : terms_) {
        Integer a = abs(kv.second);
        if (a > h) h = a;
    }
    return h;
}

IntegerOrePoly operator+(const IntegerOrePoly& a, const IntegerOrePoly& b)
{
    IntegerOrePoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(c, k.first, k.second);
    return r;
}

IntegerOrePoly IntegerOrePoly::operator-() const
{
    IntegerOrePoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

IntegerOrePoly operator-(const IntegerOrePoly& a, const IntegerOrePoly& b) { return a + (-b); }

// (x^a d^b)(x^c d^e) = sum_k C(b,k) c!/(c-k)! x^(a+c-k) d^(b+e-k)
IntegerOrePoly operator*(const IntegerOrePoly& a, const IntegerOrePoly& b)
{
    IntegerOrePoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const long db = ka.second;
            const long xc = kb.first;
            for (long k = 0; k <= std::min(db, xc); ++k) {
                const Integer c = ca * cb * binomial(db, k) * falling_factorial(xc, k);
                r.add_term(c, ka.first + xc - k, db + kb.second - k);
            }
        }
    }
    return r;
}

std::string to_string(const IntegerOrePoly& f)
{
    std::vector<std::pair<IntegerOrePoly::Key, Integer>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first < b.first.first;
    });
    std::string out;
    for (const auto& [key, c] : terms) {
        const bool negative = sgn(c) < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Integer mag = abs(c);
        std::vector<std::string> factors;
        if (mag != 1 || (key.first == 0 && key.second == 0)) factors.push_back(mag.get_str());
        if (key.first == 1) factors.emplace_back("x");
        if (key.first > 1) factors.push_back("x^" + std::to_string(key.first));
        if (key.second == 1) factors.emplace_back("d");
        if (key.second > 1) factors.push_back("d^" + std::to_string(key.second));
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace orekit
