#include "minkorder/arrangement.hpp"

#include <algorithm>
#include <deque>

#include "minkorder/errors.hpp"

namespace minkorder {

namespace {

// Scales (normal | offset) to coprime integers with positive leading normal
// entry. Canonical, so set equality of hyperplanes is field equality.
void canonicalize_plane(RatVec& normal, Rational& offset) {
    BigInt l = 1;
    for (const auto& c : normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), offset.den().get_mpz_t());
    BigInt g = 0;
    auto fold = [&](const Rational& c) {
        BigInt v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    };
    for (const auto& c : normal) fold(c);
    fold(offset);
    if (g == 0) throw internal_error("canonicalizing a zero hyperplane");
    Rational f(l, g);
    for (auto& c : normal) c *= f;
    offset *= f;
    for (const auto& c : normal) {
        if (c.is_zero()) continue;
        if (c.sign() < 0) {
            for (auto& d : normal) d = -d;
            offset = -offset;
        }
        break;
    }
}

RatVec augmented_row(const Hyperplane& h) {
    RatVec row = h.normal;
    row.push_back(h.offset);
    return row;
}

std::pair<int, int> canonical_pair(std::pair<int, int> p) {
    if (p.first > p.second) std::swap(p.first, p.second);
    return p;
}

} // namespace

int Arrangement::add(const RatVec& normal, const Rational& offset,
                     std::optional<std::pair<int, int>> label) {
    if (static_cast<int>(normal.size()) != dim)
        throw input_error("hyperplane dimension mismatch");
    if (is_zero(normal)) throw input_error("hyperplane with zero normal");
    RatVec n = normal;
    Rational o = offset;
    canonicalize_plane(n, o);
    for (size_t i = 0; i < planes.size(); ++i) {
        if (planes[i].normal == n && planes[i].offset == o) {
            if (label) planes[i].labels.push_back(canonical_pair(*label));
            return static_cast<int>(i);
        }
    }
    Hyperplane h{std::move(n), std::move(o), {}};
    if (label) h.labels.push_back(canonical_pair(*label));
    planes.push_back(std::move(h));
    return static_cast<int>(planes.size()) - 1;
}

IntersectionPoset intersection_poset(const Arrangement& a) {
    IntersectionPoset ip;
    ip.ambient_dim = a.dim;

    std::map<FlatKey, int> index_of;
    ip.flats.push_back(Flat{{}, a.dim, BigInt(0), {}});
    index_of[{}] = 0;

    // Breadth-first intersection: cutting a flat with a hyperplane either
    // leaves it unchanged, empties it, or drops its dimension by exactly one,
    // so discovery order is codimension order.
    std::deque<int> work{0};
    while (!work.empty()) {
        const int cur = work.front();
        work.pop_front();
        for (size_t h = 0; h < a.planes.size(); ++h) {
            std::vector<RatVec> rows = ip.flats[cur].key;
            rows.push_back(augmented_row(a.planes[h]));
            Rref r = rref(std::move(rows));
            if (augmented_inconsistent(r, a.dim + 1)) continue;
            FlatKey key = r.rows;
            if (key == ip.flats[cur].key) continue; // plane contains the flat
            if (index_of.count(key)) continue;
            Flat f;
            f.dim = a.dim - static_cast<int>(key.size());
            f.key = std::move(key);
            f.defining = ip.flats[cur].defining;
            f.defining.push_back(static_cast<int>(h));
            index_of[f.key] = static_cast<int>(ip.flats.size());
            work.push_back(static_cast<int>(ip.flats.size()));
            ip.flats.push_back(std::move(f));
        }
    }

    const size_t m = ip.flats.size();
    ip.leq.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (i == j) {
                ip.leq[i][j] = true;
                continue;
            }
            if (ip.flats[i].dim <= ip.flats[j].dim) continue;
            ip.leq[i][j] = rowspace_contained(ip.flats[i].key, ip.flats[j].key);
        }
    }

    // mu(ambient) = 1; each down-set sums to zero.
    for (size_t j = 0; j < m; ++j) {
        if (j == 0) {
            ip.flats[0].mu = 1;
            continue;
        }
        BigInt s = 0;
        for (size_t i = 0; i < m; ++i)
            if (i != j && ip.leq[i][j]) s += ip.flats[i].mu;
        ip.flats[j].mu = -s;
    }
    return ip;
}

std::vector<std::vector<int>> IntersectionPoset::covers() const {
    const size_t m = flats.size();
    std::vector<std::vector<int>> cov(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool direct = true;
            for (size_t w = 0; w < m && direct; ++w)
                if (w != i && w != j && leq[i][w] && leq[w][j]) direct = false;
            if (direct) cov[i].push_back(static_cast<int>(j));
        }
    return cov;
}

IntPoly characteristic_polynomial(const Arrangement& a) {
    IntersectionPoset ip = intersection_poset(a);
    IntPoly chi;
    for (const auto& f : ip.flats) chi = chi + IntPoly::monomial(f.mu, f.dim);
    return chi;
}

BigInt region_count(const Arrangement& a) {
    IntPoly chi = characteristic_polynomial(a);
    BigInt r = chi.eval(BigInt(-1));
    if (a.dim % 2 != 0) r = -r;
    if (r <= 0) throw internal_error("nonpositive region count");
    return r;
}

BigInt region_count_coeff_sum(const Arrangement& a) {
    IntPoly chi = characteristic_polynomial(a);
    BigInt s = 0;
    for (const auto& c : chi.coeffs()) s += abs(c);
    return s;
}

Arrangement cone(const Arrangement& a) {
    Arrangement c;
    c.dim = a.dim + 1;
    for (const auto& p : a.planes) {
        RatVec n = p.normal;
        n.push_back(-p.offset);
        int idx = c.add(n, Rational(0));
        for (const auto& lab : p.labels) c.planes[idx].labels.push_back(lab);
    }
    RatVec u(a.dim + 1, Rational(0));
    u.back() = 1;
    c.add(u, Rational(0));
    return c;
}

Arrangement build_event_arrangement(const EventSet& es, const SepGraph& g) {
    es.validate();
    if (g.k != es.k()) throw input_error("separation graph size does not match event set");
    Arrangement a;
    a.dim = es.n;
    for (const auto& [i, j] : g.edges) {
        RatVec normal = sub(es.events[i].x, es.events[j].x);
        if (is_zero(normal))
            throw internal_error("edge between events with equal space coordinates");
        a.add(normal, es.events[i].t - es.events[j].t, std::make_pair(i, j));
    }
    return a;
}

namespace {

std::vector<std::vector<int>> partitions_of(int k) {
    // Restricted growth strings; block id of element i.
    std::vector<std::vector<int>> out;
    std::vector<int> a(k, 0);
    auto rec = [&](auto&& self, int i, int maxb) -> void {
        if (i == k) {
            out.push_back(a);
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            a[i] = b;
            self(self, i + 1, std::max(maxb, b));
        }
    };
    if (k > 0) rec(rec, 1, 0);
    return out;
}

std::vector<std::pair<int, int>> within_block_pairs(const std::vector<int>& part) {
    std::vector<std::pair<int, int>> pairs;
    const int k = static_cast<int>(part.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (part[i] == part[j]) pairs.push_back({i, j});
    return pairs;
}

int rank_of(const std::vector<int>& part) {
    int blocks = *std::max_element(part.begin(), part.end()) + 1;
    return static_cast<int>(part.size()) - blocks;
}

// p finer than or equal to q: merging within p never crosses a block of q.
bool refines(const std::vector<int>& p, const std::vector<int>& q) {
    const int k = static_cast<int>(p.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (p[i] == p[j] && q[i] != q[j]) return false;
    return true;
}

} // namespace

GenericityResult generic_pair_family(
    int k, int dim, const std::map<std::pair<int, int>, std::pair<RatVec, Rational>>& planes) {
    if (k < 1 || dim < 1) throw input_error("generic_pair_family needs k >= 1, dim >= 1");

    auto row_of = [&](std::pair<int, int> pr) {
        auto it = planes.find(pr);
        if (it == planes.end()) throw input_error("missing hyperplane for a pair");
        RatVec row = it->second.first;
        row.push_back(it->second.second);
        return row;
    };

    struct PartFlat {
        std::vector<int> part;
        std::vector<std::pair<int, int>> pairs;
        FlatKey key;
    };
    std::vector<PartFlat> fam;
    for (auto& part : partitions_of(k)) {
        const int rank = rank_of(part);
        if (rank > dim) continue;
        auto pairs = within_block_pairs(part);
        std::vector<RatVec> rows;
        rows.reserve(pairs.size());
        for (auto& pr : pairs) rows.push_back(row_of(pr));
        Rref r = rref(std::move(rows));
        // Every merge pattern of rank <= dim must cut a flat of exactly that
        // corank; the minimal intersecting families are the cycles closing
        // these merges.
        if (augmented_inconsistent(r, dim + 1) || static_cast<int>(r.rows.size()) != rank)
            return {false, pairs};
        fam.push_back(PartFlat{std::move(part), std::move(pairs), r.rows});
    }

    std::map<FlatKey, int> seen;
    for (size_t i = 0; i < fam.size(); ++i) {
        auto [it, fresh] = seen.emplace(fam[i].key, static_cast<int>(i));
        if (!fresh) {
            auto cert = fam[it->second].pairs;
            cert.insert(cert.end(), fam[i].pairs.begin(), fam[i].pairs.end());
            return {false, cert};
        }
    }

    Arrangement a;
    a.dim = dim;
    for (const auto& [pr, ne] : planes) a.add(ne.first, ne.second, pr);
    IntersectionPoset ip = intersection_poset(a);

    auto labels_of = [&](const Flat& f) {
        std::vector<std::pair<int, int>> out;
        for (int idx : f.defining)
            for (const auto& lab : a.planes[idx].labels) out.push_back(lab);
        return out;
    };
    for (const auto& f : ip.flats)
        if (ip.ambient_dim - f.dim > dim) return {false, labels_of(f)};
    if (ip.flats.size() != fam.size()) {
        for (const auto& f : ip.flats)
            if (!seen.count(f.key)) return {false, labels_of(f)};
        throw internal_error("poset/partition count mismatch without witness flat");
    }

    // Reverse inclusion of flats must imply refinement of partitions; the
    // converse holds by construction.
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = 0; j < fam.size(); ++j) {
            if (i == j) continue;
            if (rowspace_contained(fam[i].key, fam[j].key) && !refines(fam[i].part, fam[j].part)) {
                auto cert = fam[i].pairs;
                cert.insert(cert.end(), fam[j].pairs.begin(), fam[j].pairs.end());
                return {false, cert};
            }
        }

    return {true, {}};
}

GenericityResult is_generic(const EventSet& es) {
    es.validate();
    const int k = es.k();
    std::map<std::pair<int, int>, std::pair<RatVec, Rational>> planes;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (classify_pair(es.events[i], es.events[j]) != Separation::Spacelike)
                throw precondition_error("genericity test needs all pairs spacelike; events " +
                                         std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                         " are not");
            planes[{i, j}] = {sub(es.events[i].x, es.events[j].x),
                              es.events[i].t - es.events[j].t};
        }
    if (k == 1) return {true, {}};
    return generic_pair_family(k, es.n, planes);
}

BigInt stirling_c(int k, int i) {
    if (k < 1) throw input_error("stirling_c needs k >= 1");
    if (i < 1 || i > k) return 0;
    // c(k,i) = c(k-1,i-1) + (k-1) c(k-1,i)
    std::vector<BigInt> row(static_cast<size_t>(k) + 1, BigInt(0));
    row[1] = 1; // c(1,1)
    for (int kk = 2; kk <= k; ++kk) {
        for (int ii = kk; ii >= 1; --ii)
            row[ii] = row[ii - 1] + BigInt(kk - 1) * row[ii];
    }
    return row[i];
}

BigInt f_bound(int n, int k) {
    if (k < 1) throw input_error("f_bound needs k >= 1");
    if (n < 0) throw input_error("f_bound needs n >= 0");
    BigInt s = 0;
    for (int i = 0; i <= n; ++i) s += stirling_c(k, k - i);
    return s;
}

} // namespace minkorder
