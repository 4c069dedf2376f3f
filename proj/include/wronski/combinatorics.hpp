#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wronski/rational.hpp"

namespace wronski {

/// Length-mp word over {1..p} in which every prefix contains at least as
/// many i's as k's whenever i < k, and each symbol occurs exactly m times.
struct BallotSequence {
    int m = 0;
    int p = 0;
    std::vector<std::uint8_t> entries; // 1-based symbols

    bool operator==(const BallotSequence& o) const = default;
};

bool is_ballot(const BallotSequence& s);

/// Standard Young tableau of rectangular shape p rows by m columns.
struct RectTableau {
    int m = 0;
    int p = 0;
    std::vector<std::vector<int>> rows;

    bool operator==(const RectTableau& o) const = default;
};

bool is_standard(const RectTableau& t);

/// Result of a signed enumeration: the raw signed sum and its magnitude.
struct SignedCount {
    Int value;
    Int magnitude;
};

struct EnumerationCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Number of p x m standard Young tableaux (equivalently, of ballot
/// sequences), by the factorial product formula. Exact.
Int schubert_degree(long m, long p);

/// Same count by dynamic programming over prefix count vectors; an
/// independent route used for cross-checks.
Int schubert_degree_dp(long m, long p);

Int catalan(long n);

/// Streams all ballot sequences for (m, p) in lexicographic order, optionally
/// restricted to completions of a fixed valid prefix. Restartable: construct
/// a fresh enumerator. Inversion counts are maintained incrementally.
class BallotEnumerator {
public:
    BallotEnumerator(int m, int p);
    BallotEnumerator(int m, int p, std::vector<std::uint8_t> prefix);

    /// Advances to the next sequence; false when exhausted. Must be called
    /// before the first access.
    bool next();

    const std::vector<std::uint8_t>& current() const { return seq_; }
    long current_inversions() const { return inv_; }
    BallotSequence current_sequence() const { return BallotSequence{m_, p_, seq_}; }

private:
    bool fill_from(int pos);
    void place(int pos, int s);
    void remove(int pos);
    int next_valid(int from) const;

    int m_, p_, n_;
    int prefix_len_;
    bool started_ = false;
    bool done_ = false;
    std::vector<std::uint8_t> seq_;
    std::vector<int> counts_;
    std::vector<long> added_inv_;
    long inv_ = 0;
};

/// All valid ballot prefixes of the given length, lexicographic.
std::vector<std::vector<std::uint8_t>> ballot_prefixes(int m, int p, int length);

std::vector<BallotSequence> all_ballot_sequences(int m, int p);

/// Number of index pairs j < k with s_j > s_k.
long inversions(const BallotSequence& s);

/// Fill rule: the j-th symbol i sends integer j to the leftmost free cell of
/// row i. Bijective with syt_to_ballot.
RectTableau ballot_to_syt(const BallotSequence& s);
BallotSequence syt_to_ballot(const RectTableau& t);

inline constexpr long kDefaultEnumerationCap = 10'000'000;

/// Signed inversion sum over all ballot sequences, by direct enumeration.
/// Parallelizes over prefix blocks; the result is independent of thread
/// count. Throws EnumerationCapError when schubert_degree exceeds cap.
SignedCount signed_sum_enumerative(long m, long p, long cap = kDefaultEnumerationCap,
                                   bool parallel = true);

/// Serial reference implementation of the same sum.
SignedCount signed_sum_enumerative_serial(long m, long p, long cap = kDefaultEnumerationCap);

/// Signed inversion sum by dynamic programming over count vectors; appending
/// symbol i to a prefix adds one inversion per already-placed larger symbol,
/// so the parity is a function of the count vector alone.
SignedCount signed_sum_dp(long m, long p);

/// Closed-form product for the magnitude when m+p is odd and
/// min(m,p) >= 2; evaluates at (p,m) when m < p.
Int ssyt_closed_form(long m, long p);

} // namespace wronski
