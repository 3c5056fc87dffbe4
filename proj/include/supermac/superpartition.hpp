#pragma once

// Super partitions: weakly decreasing sequences of positive half-integers
// where half-odd ("odd") parts are strictly decreasing.  Parts are stored
// doubled (2*Lambda_i) so every index stays integral; a doubled part is odd
// exactly when the row is fermionic.

#include <string>
#include <vector>

namespace supermac {

class SuperPartition {
public:
    SuperPartition() = default;

    // Validates monotonicity and strictness at odd parts; throws
    // std::invalid_argument naming the offending index otherwise.
    static SuperPartition validate(std::vector<int> doubled_parts);

    // Accepts "3/2,1/2", "2,1", "0" (empty); all parts positive.
    static SuperPartition parse(const std::string& text);

    const std::vector<int>& parts2() const { return parts2_; }
    int length() const { return (int)parts2_.size(); }
    int part2(int i) const { return parts2_[i]; }
    bool odd(int i) const { return parts2_[i] % 2 != 0; }
    int sigma(int i) const { return parts2_[i] % 2 != 0 ? 1 : 0; }
    int level2() const;
    int fermion_count() const;
    bool is_bosonic() const { return fermion_count() == 0; }

    // Lambda - sigma/2 (trailing zeros dropped) and Lambda + sigma/2.
    std::vector<int> star() const;
    std::vector<int> circledstar() const;

    // (-1)^{F(k)} with F(k) the number of odd rows above row k; 1 <= k <= length()+1.
    int fermion_sign_prefix(int k) const;

    std::string to_string() const;

    bool operator==(const SuperPartition& o) const { return parts2_ == o.parts2_; }
    bool operator!=(const SuperPartition& o) const { return !(*this == o); }
    // Level first, then descending lexicographic on doubled parts.
    bool operator<(const SuperPartition& o) const;

private:
    std::vector<int> parts2_;
};

// All super partitions of the given doubled level, in descending
// lexicographic order on doubled parts.
std::vector<SuperPartition> enumerate_level(int level2);

// Cached view of enumerate_level.
const std::vector<SuperPartition>& basis_level(int level2);

// Number of super partitions per doubled level, computed independently from
// the product series prod_k (1+x^{2k-1})/(1-x^{2k}).
std::vector<long long> character_series(int max_level2);

}  // namespace supermac
