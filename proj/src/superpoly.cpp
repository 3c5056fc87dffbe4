#include "supermac/superpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace supermac {

SuperPolynomial::SuperPolynomial(const Scalar& c) {
    if (!c.is_zero()) terms_[SuperPartition()] = c;
}

SuperPolynomial SuperPolynomial::basis(const SuperPartition& p, const Scalar& c) {
    SuperPolynomial f;
    if (!c.is_zero()) f.terms_[p] = c;
    return f;
}

void SuperPolynomial::add_term(const SuperPartition& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar SuperPolynomial::coeff(const SuperPartition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar() : it->second;
}

int SuperPolynomial::max_level2() const {
    int m = -1;
    for (const auto& [p, c] : terms_) m = std::max(m, p.level2());
    return m;
}

bool SuperPolynomial::level_homogeneous(int level2) const {
    for (const auto& [p, c] : terms_)
        if (p.level2() != level2) return false;
    return true;
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial r;
    for (const auto& [p, c] : terms_) r.terms_[p] = -c;
    return r;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

SuperPolynomial SuperPolynomial::operator*(const Scalar& c) const {
    SuperPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [p, k] : terms_) r.terms_[p] = k * c;
    return r;
}

std::string SuperPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Bosonic factors first, matching the usual printed form p_1*pi_1.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [part, c] = *it;
        std::string mono;
        for (int i = 0; i < part.length(); ++i)
            if (!part.odd(i)) mono += (mono.empty() ? "" : "*") + std::string("p_") +
                                      std::to_string(part.part2(i) / 2);
        for (int i = 0; i < part.length(); ++i)
            if (part.odd(i)) mono += (mono.empty() ? "" : "*") + std::string("pi_") +
                                     std::to_string((part.part2(i) + 1) / 2);
        std::string cs = c.to_string();
        std::string term;
        if (mono.empty()) {
            term = cs;
            if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos)
                term = "(" + cs + ")";
        } else if (cs == "1") {
            term = mono;
        } else if (cs == "-1") {
            term = "-" + mono;
        } else {
            bool needs_paren = cs.find(" + ") != std::string::npos ||
                               cs.find(" - ") != std::string::npos ||
                               (cs.find('-') != std::string::npos && cs[0] == '-');
            term = (needs_paren ? "(" + cs + ")" : cs) + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

namespace {

// Index of pi_k's doubled part among the odd rows, or -1 if absent.
int find_part(const std::vector<int>& parts2, int value2) {
    for (size_t i = 0; i < parts2.size(); ++i)
        if (parts2[i] == value2) return (int)i;
    return -1;
}

}  // namespace

SuperPolynomial mul_p_poly(int k, const SuperPolynomial& f) {
    if (k < 1) throw std::invalid_argument("mul_p: k must be >= 1");
    SuperPolynomial r;
    for (const auto& [part, c] : f.terms()) {
        std::vector<int> v = part.parts2();
        v.insert(std::upper_bound(v.begin(), v.end(), 2 * k, std::greater<int>()), 2 * k);
        r.add_term(SuperPartition::validate(std::move(v)), c);
    }
    return r;
}

SuperPolynomial mul_pi_poly(int k, const SuperPolynomial& f) {
    if (k < 1) throw std::invalid_argument("mul_pi: k must be >= 1");
    const int val2 = 2 * k - 1;
    SuperPolynomial r;
    for (const auto& [part, c] : f.terms()) {
        // pi_k^2 = 0.
        if (find_part(part.parts2(), val2) >= 0) continue;
        // Left multiplication: pi_k moves right past every pi with a larger
        // index to reach its slot in the descending canonical order.
        int above = 0;
        for (int i = 0; i < part.length(); ++i)
            if (part.odd(i) && part.part2(i) > val2) ++above;
        std::vector<int> v = part.parts2();
        v.insert(std::upper_bound(v.begin(), v.end(), val2, std::greater<int>()), val2);
        Scalar sc = above % 2 == 0 ? c : -c;
        r.add_term(SuperPartition::validate(std::move(v)), sc);
    }
    return r;
}

SuperPolynomial d_p_poly(int k, const SuperPolynomial& f) {
    if (k < 1) throw std::invalid_argument("d_p: k must be >= 1");
    SuperPolynomial r;
    for (const auto& [part, c] : f.terms()) {
        int mult = 0;
        for (int i = 0; i < part.length(); ++i)
            if (part.part2(i) == 2 * k) ++mult;
        if (mult == 0) continue;
        std::vector<int> v = part.parts2();
        v.erase(std::find(v.begin(), v.end(), 2 * k));
        r.add_term(SuperPartition::validate(std::move(v)), c * Scalar(mult));
    }
    return r;
}

SuperPolynomial d_pi_poly(int k, const SuperPolynomial& f) {
    if (k < 1) throw std::invalid_argument("d_pi: k must be >= 1");
    const int val2 = 2 * k - 1;
    SuperPolynomial r;
    for (const auto& [part, c] : f.terms()) {
        int pos = find_part(part.parts2(), val2);
        if (pos < 0) continue;
        // Left derivative: sign (-1)^{i-1} with i the fermionic slot of pi_k.
        int slot = 0;
        for (int i = 0; i < pos; ++i)
            if (part.odd(i)) ++slot;
        std::vector<int> v = part.parts2();
        v.erase(v.begin() + pos);
        Scalar sc = slot % 2 == 0 ? c : -c;
        r.add_term(SuperPartition::validate(std::move(v)), sc);
    }
    return r;
}

SuperPolynomial mul_basis_poly(const SuperPartition& m, const SuperPolynomial& f) {
    SuperPolynomial r = f;
    // Apply factors right-to-left so the product is p_M * f literally.
    for (int i = m.length() - 1; i >= 0; --i) {
        if (m.odd(i))
            r = mul_pi_poly((m.part2(i) + 1) / 2, r);
        else
            r = mul_p_poly(m.part2(i) / 2, r);
    }
    return r;
}

SuperPolynomial poly_product(const SuperPolynomial& f, const SuperPolynomial& g) {
    SuperPolynomial r;
    for (const auto& [part, c] : f.terms()) r += mul_basis_poly(part, g) * c;
    return r;
}

SuperPolynomial apply_p_derivative_pattern(const SuperPolynomial& pattern,
                                           const SuperPolynomial& f) {
    SuperPolynomial r;
    for (const auto& [part, c] : pattern.terms()) {
        SuperPolynomial g = f;
        for (int i = 0; i < part.length(); ++i) {
            if (part.odd(i))
                throw std::invalid_argument("derivative pattern must be bosonic");
            g = d_p_poly(part.part2(i) / 2, g);
            if (g.is_zero()) break;
        }
        r += g * c;
    }
    return r;
}

GradedOperator GradedOperator::build(
    int degree2, int max_in2,
    const std::function<SuperPolynomial(const SuperPartition&)>& action) {
    GradedOperator op;
    op.degree2_ = degree2;
    op.max_in2_ = max_in2;
    for (int l2 = 0; l2 <= max_in2; ++l2) {
        for (const auto& p : basis_level(l2)) {
            SuperPolynomial img = action(p);
            if (!img.is_zero() && !img.level_homogeneous(l2 + degree2))
                throw std::logic_error("GradedOperator: image not homogeneous of stated degree");
            if (!img.is_zero()) op.images_.emplace(p, std::move(img));
        }
    }
    return op;
}

GradedOperator GradedOperator::identity(int max_in2) {
    return build(0, max_in2, [](const SuperPartition& p) { return SuperPolynomial::basis(p); });
}

GradedOperator GradedOperator::zero(int degree2, int max_in2) {
    GradedOperator op;
    op.degree2_ = degree2;
    op.max_in2_ = max_in2;
    return op;
}

SuperPolynomial GradedOperator::apply(const SuperPartition& p) const {
    if (p.level2() > max_in2_)
        throw std::out_of_range("GradedOperator: input level " + std::to_string(p.level2()) +
                                " beyond window " + std::to_string(max_in2_));
    auto it = images_.find(p);
    return it == images_.end() ? SuperPolynomial() : it->second;
}

SuperPolynomial GradedOperator::apply(const SuperPolynomial& f) const {
    SuperPolynomial r;
    for (const auto& [p, c] : f.terms()) r += apply(p) * c;
    return r;
}

GradedOperator GradedOperator::operator+(const GradedOperator& o) const {
    if (degree2_ != o.degree2_) throw std::logic_error("operator+: degree mismatch");
    GradedOperator r;
    r.degree2_ = degree2_;
    r.max_in2_ = std::min(max_in2_, o.max_in2_);
    for (int l2 = 0; l2 <= r.max_in2_; ++l2)
        for (const auto& p : basis_level(l2)) {
            SuperPolynomial s = apply(p) + o.apply(p);
            if (!s.is_zero()) r.images_.emplace(p, std::move(s));
        }
    return r;
}

GradedOperator GradedOperator::operator-(const GradedOperator& o) const {
    return *this + (o * Scalar(-1));
}

GradedOperator GradedOperator::operator*(const Scalar& c) const {
    GradedOperator r;
    r.degree2_ = degree2_;
    r.max_in2_ = max_in2_;
    if (c.is_zero()) return r;
    for (const auto& [p, img] : images_) r.images_.emplace(p, img * c);
    return r;
}

GradedOperator GradedOperator::restricted(int max_in2) const {
    if (max_in2 > max_in2_) throw std::logic_error("restricted: cannot grow the window");
    GradedOperator r;
    r.degree2_ = degree2_;
    r.max_in2_ = max_in2;
    for (const auto& [p, img] : images_)
        if (p.level2() <= max_in2) r.images_.emplace(p, img);
    return r;
}

bool GradedOperator::is_zero() const {
    for (const auto& [p, img] : images_)
        if (!img.is_zero()) return false;
    return true;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
    GradedOperator r;
    r.degree2_ = a.degree2_ + b.degree2_;
    r.max_in2_ = std::min(b.max_in2_, a.max_in2_ - b.degree2_);
    for (int l2 = 0; l2 <= r.max_in2_; ++l2)
        for (const auto& p : basis_level(l2)) {
            SuperPolynomial img = a.apply(b.apply(p));
            if (!img.is_zero()) r.images_.emplace(p, std::move(img));
        }
    return r;
}

GradedOperator anticommutator(const GradedOperator& a, const GradedOperator& b) {
    return compose(a, b) + compose(b, a);
}

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) {
    return compose(a, b) - compose(b, a);
}

std::optional<GradedOperator::Difference> GradedOperator::first_difference(
    const GradedOperator& a, const GradedOperator& b) {
    if (a.degree2_ != b.degree2_)
        return Difference{SuperPartition(), SuperPolynomial(Scalar(a.degree2_)),
                          SuperPolynomial(Scalar(b.degree2_))};
    int win = std::min(a.max_in2_, b.max_in2_);
    for (int l2 = 0; l2 <= win; ++l2)
        for (const auto& p : basis_level(l2)) {
            SuperPolynomial ia = a.apply(p), ib = b.apply(p);
            if (ia != ib) return Difference{p, std::move(ia), std::move(ib)};
        }
    return std::nullopt;
}

GradedOperator mul_p(int k, int max_in2) {
    return GradedOperator::build(2 * k, max_in2, [k](const SuperPartition& p) {
        return mul_p_poly(k, SuperPolynomial::basis(p));
    });
}

GradedOperator mul_pi(int k, int max_in2) {
    return GradedOperator::build(2 * k - 1, max_in2, [k](const SuperPartition& p) {
        return mul_pi_poly(k, SuperPolynomial::basis(p));
    });
}

GradedOperator d_p(int k, int max_in2) {
    return GradedOperator::build(-2 * k, max_in2, [k](const SuperPartition& p) {
        return d_p_poly(k, SuperPolynomial::basis(p));
    });
}

GradedOperator d_pi(int k, int max_in2) {
    return GradedOperator::build(-(2 * k - 1), max_in2, [k](const SuperPartition& p) {
        return d_pi_poly(k, SuperPolynomial::basis(p));
    });
}

}  // namespace supermac
