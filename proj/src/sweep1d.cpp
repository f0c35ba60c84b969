#include "minkorder/sweep1d.hpp"

#include <algorithm>

#include "minkorder/errors.hpp"

namespace minkorder {

CriticalVelocityTable critical_velocities(const EventSet& es) {
    es.validate();
    if (es.n != 1) throw precondition_error("critical velocities require n = 1");
    const int k = es.k();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (es.events[i].x[0] == es.events[j].x[0])
                throw precondition_error("events " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " share a space coordinate");
            if (classify_pair(es.events[i], es.events[j]) != Separation::Spacelike)
                throw precondition_error("events " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " are not spacelike separated");
        }
    CriticalVelocityTable table;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            table[{i, j}] = (es.events[i].t - es.events[j].t) /
                            (es.events[i].x[0] - es.events[j].x[0]);
    return table;
}

LambdaSequence lambda_sequence(const EventSet& es) {
    CriticalVelocityTable table = critical_velocities(es);

    std::vector<std::pair<Rational, std::pair<int, int>>> sorted;
    sorted.reserve(table.size());
    for (const auto& [pr, v] : table) sorted.push_back({v, pr});
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (size_t i = 0; i < sorted.size(); ++i) {
        const auto& [v, pr] = sorted[i];
        if (!(v.abs() < Rational(1)))
            throw precondition_error("critical velocity v(" + std::to_string(pr.first + 1) + "," +
                                     std::to_string(pr.second + 1) +
                                     ") = " + v.str() + " lies outside (-1, 1)");
        if (i + 1 < sorted.size() && v == sorted[i + 1].first) {
            const auto& qr = sorted[i + 1].second;
            throw precondition_error(
                "critical velocities tie: v(" + std::to_string(pr.first + 1) + "," +
                std::to_string(pr.second + 1) + ") = v(" + std::to_string(qr.first + 1) + "," +
                std::to_string(qr.second + 1) + ") = " + v.str());
        }
    }

    // Exact sample velocities: midpoints of consecutive critical values,
    // with -1 and 1 standing in at the two ends.
    LambdaSequence seq;
    const Rational two(2);
    seq.sample_velocities.push_back((Rational(-1) + sorted.front().first) / two);
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        seq.sample_velocities.push_back((sorted[i].first + sorted[i + 1].first) / two);
    seq.sample_velocities.push_back((sorted.back().first + Rational(1)) / two);

    for (const auto& v : seq.sample_velocities) {
        try {
            seq.perms.push_back(rank_events_by_scaled_time(es, RatVec{v}));
        } catch (const precondition_error&) {
            throw internal_error("tie at a sample velocity strictly between critical values");
        }
    }
    return seq;
}

std::vector<int> reduced_word(const LambdaSequence& lambda) {
    std::vector<int> word;
    for (size_t i = 0; i + 1 < lambda.perms.size(); ++i) {
        const Perm& a = lambda.perms[i];
        const Perm& b = lambda.perms[i + 1];
        if (a.size() != b.size())
            throw internal_error("Lambda entries of unequal length");
        std::vector<int> diff;
        for (size_t p = 0; p < a.size(); ++p)
            if (a[p] != b[p]) diff.push_back(static_cast<int>(p));
        if (diff.size() != 2 || diff[1] != diff[0] + 1 || a[diff[0]] != b[diff[1]] ||
            a[diff[1]] != b[diff[0]])
            throw internal_error("consecutive Lambda entries do not differ by an adjacent swap");
        word.push_back(diff[0] + 1); // 1-based position of the left element
    }
    return word;
}

BigInt staircase_chain_count(int k) {
    if (k < 2) throw input_error("staircase_chain_count needs k >= 2");
    BigInt numer;
    const unsigned long pairs = static_cast<unsigned long>(k) * (k - 1) / 2;
    mpz_fac_ui(numer.get_mpz_t(), pairs);
    BigInt denom = 1;
    for (int j = 1; j <= k - 1; ++j) {
        // (2j-1)^(k-j)
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(2 * j - 1),
                      static_cast<unsigned long>(k - j));
        denom *= p;
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    if (r != 0) throw internal_error("staircase hook product does not divide the factorial");
    return q;
}

BigInt sequence_upper_bound(int k) {
    if (k < 2) throw input_error("sequence_upper_bound needs k >= 2");
    return BigInt(1 + k * (k - 1) / 2) * staircase_chain_count(k);
}

Arrangement ranking_arrangement(const std::vector<Rational>& times) {
    const int k = static_cast<int>(times.size());
    if (k < 3) throw precondition_error("ranking arrangement needs k >= 3 times");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (times[i] == times[j])
                throw precondition_error("times " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " coincide");

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.push_back({i, j});

    Arrangement a;
    a.dim = k;
    for (size_t p = 0; p < pairs.size(); ++p) {
        for (size_t q = p + 1; q < pairs.size(); ++q) {
            const auto [i, j] = pairs[p];
            const auto [r, s] = pairs[q];
            RatVec normal(k, Rational(0));
            const Rational tij = times[i] - times[j];
            const Rational trs = times[r] - times[s];
            normal[r] += tij;
            normal[s] -= tij;
            normal[i] -= trs;
            normal[j] += trs;
            if (is_zero(normal))
                throw internal_error("zero normal in ranking arrangement for distinct times");
            a.add(normal, Rational(0));
        }
    }
    return a;
}

std::optional<std::vector<int>> known_unrealizable_word(int k) {
    if (k == 5) return std::vector<int>{1, 3, 4, 2, 1, 3, 4, 2, 1, 3};
    return std::nullopt;
}

} // namespace minkorder
