#include "orekit/certify.hpp"

#include <cstdlib>

namespace orekit {

namespace {

// Position of c in the sequence 1, -1, 2, -2, ...
long coefficient_rank(long c) { return 2 * (std::labs(c) - 1) + (c < 0 ? 1 : 0); }

struct Candidate {
    long degree;
    long nterms;
    std::vector<std::pair<long, long>> support;
    long height;
    std::vector<long> ranks;
    IntegerOrePoly f;

    auto key() const { return std::tie(degree, nterms, support, height, ranks); }
};

} // namespace

std::vector<IntegerOrePoly> witness_candidates(long bound)
{
    std::vector<IntegerOrePoly> out{IntegerOrePoly()};
    if (bound <= 0) return out;
    std::vector<std::pair<long, long>> monos;
    for (long a = 0; a <= bound; ++a)
        for (long b = 0; b <= bound; ++b) monos.emplace_back(a, b);
    std::vector<long> coefs;
    for (long c = 1; c <= bound; ++c) {
        coefs.push_back(c);
        coefs.push_back(-c);
    }

    std::vector<Candidate> cands;
    for (const auto& m : monos)
        for (long c : coefs)
            cands.push_back({m.first + m.second, 1, {m}, std::labs(c), {coefficient_rank(c)},
                             IntegerOrePoly::monomial(c, m.first, m.second)});
    for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = i + 1; j < monos.size(); ++j)
            for (long c1 : coefs)
                for (long c2 : coefs) {
                    const auto& p = monos[i];
                    const auto& q = monos[j];
                    Candidate cand{std::max(p.first + p.second, q.first + q.second), 2, {p, q},
                                   std::max(std::labs(c1), std::labs(c2)),
                                   {coefficient_rank(c1), coefficient_rank(c2)},
                                   IntegerOrePoly::monomial(c1, p.first, p.second) +
                                       IntegerOrePoly::monomial(c2, q.first, q.second)};
                    cands.push_back(std::move(cand));
                }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.key() < b.key(); });
    for (auto& c : cands) out.push_back(std::move(c.f));
    return out;
}

} // namespace orekit
