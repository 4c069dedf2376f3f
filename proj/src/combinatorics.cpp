#include "wronski/combinatorics.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wronski {

bool is_ballot(const BallotSequence& s) {
    if (s.m < 1 || s.p < 1) return false;
    if (s.entries.size() != static_cast<size_t>(s.m) * static_cast<size_t>(s.p)) return false;
    std::vector<int> counts(s.p + 1, 0);
    for (auto e : s.entries) {
        if (e < 1 || e > s.p) return false;
        int v = e;
        ++counts[v];
        if (counts[v] > s.m) return false;
        if (v > 1 && counts[v] > counts[v - 1]) return false;
    }
    for (int i = 1; i <= s.p; ++i)
        if (counts[i] != s.m) return false;
    return true;
}

bool is_standard(const RectTableau& t) {
    if (t.m < 1 || t.p < 1) return false;
    if (t.rows.size() != static_cast<size_t>(t.p)) return false;
    long n = static_cast<long>(t.m) * t.p;
    std::vector<bool> seen(n + 1, false);
    for (const auto& row : t.rows) {
        if (row.size() != static_cast<size_t>(t.m)) return false;
        for (int v : row) {
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
        }
    }
    for (int i = 0; i < t.p; ++i)
        for (int j = 0; j < t.m; ++j) {
            if (j + 1 < t.m && t.rows[i][j] >= t.rows[i][j + 1]) return false;
            if (i + 1 < t.p && t.rows[i][j] >= t.rows[i + 1][j]) return false;
        }
    return true;
}

Int schubert_degree(long m, long p) {
    if (m < 1 || p < 1) throw std::invalid_argument("schubert_degree: m,p must be positive");
    Int num = factorial(m * p);
    for (long i = 1; i < p; ++i) num *= factorial(i);
    Int den = 1;
    for (long i = 0; i < p; ++i) den *= factorial(m + i);
    return divexact(num, den);
}

Int catalan(long n) { return divexact(binomial(2 * n, n), Int(n + 1)); }

namespace {

// Shared DP over prefix count vectors c_1 >= ... >= c_p. Each level holds the
// reachable states with their accumulated (signed or unsigned) weights.
Int ballot_dp(long m, long p, bool signed_sum) {
    if (m < 1 || p < 1) throw std::invalid_argument("ballot_dp: m,p must be positive");
    double states = 1;
    for (long i = 0; i < p; ++i) states *= static_cast<double>(m + 1);
    if (states > 1e8) throw std::runtime_error("signed_sum_dp: state space exceeds memory cap");

    using State = std::vector<int>;
    std::map<State, Int> level;
    level[State(p, 0)] = 1;
    long n = m * p;
    for (long step = 0; step < n; ++step) {
        std::map<State, Int> next;
        for (auto& [c, w] : level) {
            for (int s = 0; s < p; ++s) {
                if (c[s] >= m) continue;
                if (s > 0 && c[s] >= c[s - 1]) continue;
                long added = 0;
                for (int t = s + 1; t < p; ++t) added += c[t];
                State d = c;
                ++d[s];
                if (signed_sum && (added & 1))
                    next[d] -= w;
                else
                    next[d] += w;
            }
        }
        level = std::move(next);
    }
    State full(p, static_cast<int>(m));
    auto it = level.find(full);
    return it == level.end() ? Int(0) : it->second;
}

} // namespace

Int schubert_degree_dp(long m, long p) { return ballot_dp(m, p, false); }

SignedCount signed_sum_dp(long m, long p) {
    Int v = ballot_dp(m, p, true);
    return SignedCount{v, abs(v)};
}

BallotEnumerator::BallotEnumerator(int m, int p) : BallotEnumerator(m, p, {}) {}

BallotEnumerator::BallotEnumerator(int m, int p, std::vector<std::uint8_t> prefix)
    : m_(m), p_(p), n_(m * p), prefix_len_(static_cast<int>(prefix.size())),
      seq_(n_, 0), counts_(p + 1, 0), added_inv_(n_, 0) {
    if (m < 1 || p < 1) throw std::invalid_argument("BallotEnumerator: m,p must be positive");
    if (prefix_len_ > n_) throw std::invalid_argument("BallotEnumerator: prefix too long");
    for (int i = 0; i < prefix_len_; ++i) {
        int s = prefix[static_cast<size_t>(i)];
        if (s < 1 || s > p_ || counts_[s] >= m_ || (s > 1 && counts_[s] >= counts_[s - 1]))
            throw std::invalid_argument("BallotEnumerator: invalid ballot prefix");
        place(i, s);
    }
}

void BallotEnumerator::place(int pos, int s) {
    long added = 0;
    for (int t = s + 1; t <= p_; ++t) added += counts_[t];
    seq_[static_cast<size_t>(pos)] = static_cast<std::uint8_t>(s);
    added_inv_[static_cast<size_t>(pos)] = added;
    inv_ += added;
    ++counts_[s];
}

void BallotEnumerator::remove(int pos) {
    int s = seq_[static_cast<size_t>(pos)];
    --counts_[s];
    inv_ -= added_inv_[static_cast<size_t>(pos)];
}

int BallotEnumerator::next_valid(int from) const {
    for (int s = from; s <= p_; ++s) {
        if (counts_[s] >= m_) continue;
        if (s > 1 && counts_[s] >= counts_[s - 1]) continue;
        return s;
    }
    return 0;
}

bool BallotEnumerator::fill_from(int pos) {
    for (int i = pos; i < n_; ++i) {
        int s = next_valid(1);
        if (s == 0) return false; // cannot happen for a valid prefix
        place(i, s);
    }
    return true;
}

bool BallotEnumerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (!fill_from(prefix_len_)) {
            done_ = true;
            return false;
        }
        return true;
    }
    int pos = n_ - 1;
    while (pos >= prefix_len_) {
        int s = seq_[static_cast<size_t>(pos)];
        remove(pos);
        int t = next_valid(s + 1);
        if (t != 0) {
            place(pos, t);
            fill_from(pos + 1);
            return true;
        }
        --pos;
    }
    done_ = true;
    return false;
}

std::vector<std::vector<std::uint8_t>> ballot_prefixes(int m, int p, int length) {
    int n = m * p;
    length = std::min(length, n);
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> cur;
    std::vector<int> counts(p + 1, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == length) {
            out.push_back(cur);
            return;
        }
        for (int s = 1; s <= p; ++s) {
            if (counts[s] >= m) continue;
            if (s > 1 && counts[s] >= counts[s - 1]) continue;
            cur.push_back(static_cast<std::uint8_t>(s));
            ++counts[s];
            self(self, pos + 1);
            --counts[s];
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<BallotSequence> all_ballot_sequences(int m, int p) {
    std::vector<BallotSequence> out;
    BallotEnumerator e(m, p);
    while (e.next()) out.push_back(e.current_sequence());
    return out;
}

long inversions(const BallotSequence& s) {
    if (!is_ballot(s)) throw std::invalid_argument("inversions: not a ballot sequence");
    long inv = 0;
    for (size_t j = 0; j < s.entries.size(); ++j)
        for (size_t k = j + 1; k < s.entries.size(); ++k)
            if (s.entries[j] > s.entries[k]) ++inv;
    return inv;
}

RectTableau ballot_to_syt(const BallotSequence& s) {
    if (!is_ballot(s)) throw std::invalid_argument("ballot_to_syt: not a ballot sequence");
    RectTableau t;
    t.m = s.m;
    t.p = s.p;
    t.rows.assign(static_cast<size_t>(s.p), {});
    for (size_t j = 0; j < s.entries.size(); ++j)
        t.rows[static_cast<size_t>(s.entries[j] - 1)].push_back(static_cast<int>(j + 1));
    return t;
}

BallotSequence syt_to_ballot(const RectTableau& t) {
    if (!is_standard(t)) throw std::invalid_argument("syt_to_ballot: not a standard tableau");
    BallotSequence s;
    s.m = t.m;
    s.p = t.p;
    s.entries.assign(static_cast<size_t>(t.m) * t.p, 0);
    for (int i = 0; i < t.p; ++i)
        for (int j = 0; j < t.m; ++j)
            s.entries[static_cast<size_t>(t.rows[i][j] - 1)] = static_cast<std::uint8_t>(i + 1);
    return s;
}

namespace {

void check_cap(long m, long p, long cap) {
    Int d = schubert_degree(m, p);
    if (d > cap)
        throw EnumerationCapError(
            "signed_sum_enumerative: degree " + d.get_str() + " exceeds cap " +
            std::to_string(cap) + "; use signed_sum_dp instead");
}

} // namespace

SignedCount signed_sum_enumerative_serial(long m, long p, long cap) {
    check_cap(m, p, cap);
    Int total = 0;
    BallotEnumerator e(static_cast<int>(m), static_cast<int>(p));
    while (e.next()) {
        if (e.current_inversions() & 1) --total; else ++total;
    }
    return SignedCount{total, abs(total)};
}

SignedCount signed_sum_enumerative(long m, long p, long cap, bool parallel) {
    check_cap(m, p, cap);
    if (!parallel) return signed_sum_enumerative_serial(m, p, cap);
    int n = static_cast<int>(m * p);
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    int len = 0;
    auto prefixes = ballot_prefixes(static_cast<int>(m), static_cast<int>(p), len);
    while (len < n && static_cast<int>(prefixes.size()) < 8 * threads) {
        ++len;
        prefixes = ballot_prefixes(static_cast<int>(m), static_cast<int>(p), len);
    }
    Int total = 0;
#ifdef _OPENMP
#pragma omp parallel
    {
        Int local = 0;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) {
            BallotEnumerator e(static_cast<int>(m), static_cast<int>(p),
                               prefixes[static_cast<size_t>(i)]);
            while (e.next()) {
                if (e.current_inversions() & 1) --local; else ++local;
            }
        }
#pragma omp critical
        total += local;
    }
#else
    for (auto& pre : prefixes) {
        BallotEnumerator e(static_cast<int>(m), static_cast<int>(p), pre);
        while (e.next()) {
            if (e.current_inversions() & 1) --total; else ++total;
        }
    }
#endif
    return SignedCount{total, abs(total)};
}

Int ssyt_closed_form(long m, long p) {
    if (m < p) std::swap(m, p);
    if (p < 2) throw std::invalid_argument("ssyt_closed_form: requires min(m,p) >= 2");
    if ((m + p) % 2 == 0)
        throw std::invalid_argument("ssyt_closed_form: m+p must be odd");
    Int num = factorial(m * p / 2);
    for (long i = 1; i < p; ++i) num *= factorial(i);
    for (long j = 1; j < p; ++j) num *= factorial(m - j);
    Int den = 1;
    for (long t = 1; t < p; ++t) den *= factorial(m - p + 2 * t);
    for (long t = 0; t < p; ++t) den *= factorial((m - p + 1 + 2 * t) / 2);
    return divexact(num, den);
}

} // namespace wronski
