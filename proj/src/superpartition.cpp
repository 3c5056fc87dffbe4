#include "supermac/superpartition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace supermac {

SuperPartition SuperPartition::validate(std::vector<int> doubled_parts) {
    for (size_t i = 0; i < doubled_parts.size(); ++i) {
        if (doubled_parts[i] <= 0)
            throw std::invalid_argument("super partition: non-positive part at index " +
                                        std::to_string(i));
        if (i > 0) {
            if (doubled_parts[i - 1] < doubled_parts[i])
                throw std::invalid_argument("super partition: parts increase at index " +
                                            std::to_string(i));
            bool odd_pair = doubled_parts[i] % 2 != 0 &&
                            doubled_parts[i - 1] == doubled_parts[i];
            if (odd_pair)
                throw std::invalid_argument("super partition: repeated odd part at index " +
                                            std::to_string(i));
        }
    }
    SuperPartition p;
    p.parts2_ = std::move(doubled_parts);
    return p;
}

SuperPartition SuperPartition::parse(const std::string& text) {
    std::vector<int> parts2;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t slash = tok.find('/');
        if (slash == std::string::npos) {
            int v = std::stoi(tok);
            if (v == 0 && parts2.empty()) continue;  // "0" = empty partition
            parts2.push_back(2 * v);
        } else {
            int num = std::stoi(tok.substr(0, slash));
            int den = std::stoi(tok.substr(slash + 1));
            if (den != 2) throw std::invalid_argument("super partition: only halves allowed: " + tok);
            parts2.push_back(num);
        }
    }
    return validate(std::move(parts2));
}

int SuperPartition::level2() const {
    int s = 0;
    for (int p : parts2_) s += p;
    return s;
}

int SuperPartition::fermion_count() const {
    int n = 0;
    for (int p : parts2_) n += p % 2 != 0;
    return n;
}

std::vector<int> SuperPartition::star() const {
    std::vector<int> r;
    for (int p : parts2_) {
        int v = p / 2;  // floor: Lambda_i - sigma_i/2
        if (v > 0) r.push_back(v);
    }
    return r;
}

std::vector<int> SuperPartition::circledstar() const {
    std::vector<int> r;
    for (int p : parts2_) r.push_back((p + p % 2) / 2);
    return r;
}

int SuperPartition::fermion_sign_prefix(int k) const {
    if (k < 1 || k > length() + 1)
        throw std::out_of_range("fermion_sign_prefix: row index out of range");
    int f = 0;
    for (int i = 0; i < k - 1; ++i) f += sigma(i);
    return f % 2 == 0 ? 1 : -1;
}

std::string SuperPartition::to_string() const {
    if (parts2_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts2_.size(); ++i) {
        if (i) s += ",";
        if (parts2_[i] % 2 == 0)
            s += std::to_string(parts2_[i] / 2);
        else
            s += std::to_string(parts2_[i]) + "/2";
    }
    return s;
}

bool SuperPartition::operator<(const SuperPartition& o) const {
    if (level2() != o.level2()) return level2() < o.level2();
    // Descending lexicographic on doubled parts.
    return std::lexicographical_compare(o.parts2_.begin(), o.parts2_.end(), parts2_.begin(),
                                        parts2_.end());
}

namespace {

void enumerate_rec(int remaining2, int max2, std::vector<int>& acc,
                   std::vector<SuperPartition>& out) {
    if (remaining2 == 0) {
        out.push_back(SuperPartition::validate(acc));
        return;
    }
    for (int p = std::min(max2, remaining2); p >= 1; --p) {
        // Odd parts are strictly decreasing; equal doubled parts of mixed
        // parity cannot occur, so checking the immediate predecessor suffices.
        if (p % 2 != 0 && !acc.empty() && acc.back() == p) continue;
        acc.push_back(p);
        enumerate_rec(remaining2 - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<SuperPartition> enumerate_level(int level2) {
    if (level2 < 0) throw std::invalid_argument("enumerate_level: negative level");
    std::vector<SuperPartition> out;
    std::vector<int> acc;
    enumerate_rec(level2, level2, acc, out);
    // Descending lexicographic order on doubled parts.
    std::sort(out.begin(), out.end(), [](const SuperPartition& x, const SuperPartition& y) {
        return std::lexicographical_compare(y.parts2().begin(), y.parts2().end(),
                                            x.parts2().begin(), x.parts2().end());
    });
    return out;
}

const std::vector<SuperPartition>& basis_level(int level2) {
    static std::map<int, std::vector<SuperPartition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(level2);
    if (it == cache.end()) it = cache.emplace(level2, enumerate_level(level2)).first;
    return it->second;
}

std::vector<long long> character_series(int max_level2) {
    // Coefficients of prod_{k>=1} (1+x^{2k-1})/(1-x^{2k}) up to x^{max_level2}.
    std::vector<long long> c(max_level2 + 1, 0);
    c[0] = 1;
    for (int k = 1; 2 * k - 1 <= max_level2; ++k) {
        int d = 2 * k - 1;
        for (int e = max_level2; e >= d; --e) c[e] += c[e - d];
    }
    for (int k = 1; 2 * k <= max_level2; ++k) {
        int d = 2 * k;
        for (int e = d; e <= max_level2; ++e) c[e] += c[e - d];
    }
    return c;
}

}  // namespace supermac
