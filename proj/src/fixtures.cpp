#include "supermac/fixtures.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace supermac {

namespace {

using Entry = std::pair<SuperPartition, SuperPolynomial>;

// q^a t^b as a Scalar (integer exponents).
Scalar m(int a, int b) {
    return Scalar::mono2(2 * a, 2 * b, 0);
}

// 1 - q^a t^b
Scalar br(int a, int b) {
    return Scalar(1) - m(a, b);
}

// 1 + q^a t^b
Scalar pl(int a, int b) {
    return Scalar(1) + m(a, b);
}

SuperPolynomial make(std::vector<std::pair<std::vector<int>, Scalar>> terms) {
    SuperPolynomial f;
    for (auto& [parts2, c] : terms) f.add_term(SuperPartition::validate(parts2), c);
    return f;
}

std::vector<Entry> build() {
    const Scalar one(1);
    const Scalar q = Scalar::q(), t = Scalar::t();
    const Scalar half(1, 2), third(1, 3), sixth(1, 6), quarter(1, 4), eighth(1, 8),
        tw4(1, 24);
    std::vector<Entry> out;
    auto add = [&](const std::string& label,
                   std::vector<std::pair<std::vector<int>, Scalar>> terms) {
        out.push_back({SuperPartition::parse(label), make(std::move(terms))});
    };

    // ---- up to level 2 ----
    add("1/2", {{{1}, one}});
    add("1", {{{2}, one}});
    add("3/2", {{{2, 1}, m(1, 0) * br(0, 1) / br(1, 1)}, {{3}, br(1, 0) / br(1, 1)}});
    add("1,1/2", {{{2, 1}, one}, {{3}, -one}});
    add("2", {{{2, 2}, half * pl(1, 0) * br(0, 1) / br(1, 1)},
              {{4}, half * pl(0, 1) * br(1, 0) / br(1, 1)}});
    add("1,1", {{{2, 2}, half}, {{4}, -half}});
    add("3/2,1/2", {{{3, 1}, one}});

    // ---- level 5/2 ----
    {
        Scalar d = br(1, 1) * br(2, 1);
        add("5/2", {{{2, 2, 1}, half * m(2, 0) * pl(1, 0) * br(0, 1) * br(0, 1) / d},
                    {{4, 1}, half * m(2, 0) * br(1, 0) * br(0, 2) / d},
                    {{3, 2}, m(1, 0) * br(2, 0) * br(0, 1) / d},
                    {{5}, br(1, 0) * br(1, 0) * pl(1, 0) / d}});
    }
    add("2,1/2", {{{2, 2, 1}, half * pl(1, 0) * br(0, 1) / br(1, 1)},
                  {{4, 1}, half * br(1, 0) * pl(0, 1) / br(1, 1)},
                  {{3, 2}, -m(1, 0) * br(0, 1) / br(1, 1)},
                  {{5}, -br(1, 0) / br(1, 1)}});
    add("3/2,1", {{{2, 2, 1}, half * m(1, 0) * br(0, 2) / br(1, 2)},
                  {{4, 1}, -half * m(1, 0) * br(0, 2) / br(1, 2)},
                  {{3, 2}, br(1, 0) / br(1, 2)},
                  {{5}, -br(1, 0) / br(1, 2)}});
    add("1,1,1/2", {{{2, 2, 1}, half}, {{4, 1}, -half}, {{3, 2}, -one}, {{5}, one}});

    // ---- level 3 ----
    add("5/2,1/2",
        {{{5, 1}, br(1, 0) / br(1, 1)}, {{3, 2, 1}, m(1, 0) * br(0, 1) / br(1, 1)}});
    add("3/2,1,1/2", {{{3, 2, 1}, one}, {{5, 1}, -one}});
    {
        Scalar d = br(1, 1) * br(2, 1);
        add("3", {{{6}, third * br(1, 0) * br(2, 0) * (one + t + t * t) / d},
                  {{4, 2}, half * br(3, 0) * br(0, 2) / d},
                  {{2, 2, 2}, sixth * pl(1, 0) * (one + q + q * q) * br(0, 1) * br(0, 1) / d}});
    }
    add("2,1", {{{6}, -third * br(1, 0) * (one + t + t * t) / br(1, 2)},
                {{4, 2}, half * (t - q) * pl(0, 1) / br(1, 2)},
                {{2, 2, 2},
                 sixth * br(0, 1) * (Scalar(2) + q + t + Scalar(2) * q * t) / br(1, 2)}});
    add("1,1,1", {{{6}, third}, {{4, 2}, -half}, {{2, 2, 2}, sixth}});

    // ---- level 7/2 ----
    {
        Scalar d = br(1, 1) * br(2, 1) * br(3, 1);
        add("7/2",
            {{{7}, br(1, 0) * br(1, 0) * br(3, 0) * pl(1, 0) / d},
             {{6, 1}, third * m(3, 0) * br(1, 0) * br(2, 0) * br(0, 3) / d},
             {{5, 2}, m(1, 0) * br(1, 0) * br(3, 0) * pl(1, 0) * br(0, 1) / d},
             {{4, 3}, half * m(2, 0) * br(1, 0) * br(3, 0) * br(0, 2) / d},
             {{4, 2, 1}, half * m(3, 0) * br(3, 0) * br(0, 1) * br(0, 2) / d},
             {{3, 2, 2}, half * m(2, 0) * br(3, 0) * pl(1, 0) * br(0, 1) * br(0, 1) / d},
             {{2, 2, 2, 1},
              sixth * m(3, 0) * pl(1, 0) * (one + q + q * q) * br(0, 1).pow(3) / d}});
        Scalar d2 = br(1, 1) * br(2, 1);
        add("3,1/2",
            {{{7}, -br(1, 0) * br(1, 0) * pl(1, 0) / d2},
             {{6, 1}, third * br(1, 0) * br(1, 0) * pl(1, 0) * (one + t + t * t) / d2},
             {{5, 2}, -m(1, 0) * br(1, 0) * pl(1, 0) * br(0, 1) / d2},
             {{4, 3}, -half * m(2, 0) * br(1, 0) * br(0, 2) / d2},
             {{4, 2, 1}, half * br(3, 0) * br(0, 2) / d2},
             {{3, 2, 2}, -half * m(2, 0) * pl(1, 0) * br(0, 1) * br(0, 1) / d2},
             {{2, 2, 2, 1},
              sixth * pl(1, 0) * (one + q + q * q) * br(0, 1) * br(0, 1) / d2}});
        Scalar d3 = br(1, 1) * br(1, 1) * pl(1, 1);
        add("5/2,1",
            {{{7}, -br(1, 0) * br(1, 0) * pl(1, 0) / d3},
             {{6, 1}, -third * m(2, 0) * br(1, 0) * br(0, 3) / d3},
             {{5, 2}, br(1, 0) * (one - q - q * q + q * t) / d3},
             {{4, 3}, -half * m(2, 0) * br(1, 0) * br(0, 1) * pl(0, 1) / d3},
             {{4, 2, 1}, half * m(2, 0) * (t - q) * br(0, 1) * pl(0, 1) / d3},
             {{3, 2, 2},
              half * m(1, 0) * br(1, 0) * br(0, 1) * (Scalar(2) + q + q * t) / d3},
             {{2, 2, 2, 1},
              sixth * m(2, 0) * br(0, 1) * br(0, 1) *
                  (Scalar(2) + q + t + Scalar(2) * q * t) / d3}});
        Scalar d4 = br(1, 1) * br(1, 2);
        add("2,3/2",
            {{{7}, br(1, 0) * (q - t) / d4},
             {{6, 1}, -third * m(1, 0) * br(1, 0) * br(0, 3) / d4},
             {{5, 2}, -br(1, 0) * br(0, 1) * (one + q + q * t) / d4},
             {{4, 3},
              half * pl(0, 1) *
                  (one - q + q * q - q * t - q * q * t + q * q * t * t) / d4},
             {{4, 2, 1}, -half * m(1, 0) * (q - t) * br(0, 1) * pl(0, 1) / d4},
             {{3, 2, 2},
              half * br(0, 1) *
                  (one - q - q * q + q * t - q * q * t + q * q * t * t) / d4},
             {{2, 2, 2, 1},
              sixth * m(1, 0) * br(0, 1) * br(0, 1) *
                  (Scalar(2) + q + t + Scalar(2) * q * t) / d4}});
        add("2,1,1/2",
            {{{7}, br(1, 0) * pl(0, 1) / br(1, 2)},
             {{6, 1}, -third * br(1, 0) * (one + t + t * t) / br(1, 2)},
             {{5, 2}, (q - t + q * t - q * t * t) / br(1, 2)},
             {{4, 3}, -half * br(1, 0) * pl(0, 1) / br(1, 2)},
             {{4, 2, 1}, -half * (q - t) * pl(0, 1) / br(1, 2)},
             {{3, 2, 2}, -half * br(0, 1) * (one + q + Scalar(2) * q * t) / br(1, 2)},
             {{2, 2, 2, 1},
              sixth * br(0, 1) * (Scalar(2) + q + t + Scalar(2) * q * t) / br(1, 2)}});
        add("3/2,1,1",
            {{{7}, br(1, 0) / br(1, 3)},
             {{6, 1}, third * m(1, 0) * br(0, 3) / br(1, 3)},
             {{5, 2}, -br(1, 0) / br(1, 3)},
             {{4, 3}, -half * br(1, 0) / br(1, 3)},
             {{4, 2, 1}, -half * m(1, 0) * br(0, 3) / br(1, 3)},
             {{3, 2, 2}, half * br(1, 0) / br(1, 3)},
             {{2, 2, 2, 1}, sixth * m(1, 0) * br(0, 3) / br(1, 3)}});
        add("1,1,1,1/2", {{{7}, -one},
                          {{6, 1}, third},
                          {{5, 2}, one},
                          {{4, 3}, half},
                          {{4, 2, 1}, -half},
                          {{3, 2, 2}, -half},
                          {{2, 2, 2, 1}, sixth}});
    }

    // ---- level 4, bosonic ----
    {
        Scalar d = br(1, 1) * br(2, 1) * br(3, 1);
        Scalar q2 = q * q, t2 = t * t;
        add("4",
            {{{8},
              quarter * br(1, 0).pow(3) * pl(1, 0) * (one + q + q2) * pl(0, 1) *
                  (one + t2) / d},
             {{6, 2},
              third * br(1, 0) * br(1, 0) * pl(1, 0) * pl(1, 0) * (one + q2) * br(0, 1) *
                  (one + t + t2) / d},
             {{4, 4},
              eighth * br(1, 0) * br(1, 0) * pl(1, 0) * (one + q2) * (one + q + q2) *
                  br(0, 1) * pl(0, 1) * pl(0, 1) / d},
             {{4, 2, 2},
              quarter * br(1, 0) * pl(1, 0) * (one + q2) * (one + q + q2) * br(0, 1) *
                  br(0, 1) * pl(0, 1) / d},
             {{2, 2, 2, 2},
              tw4 * pl(1, 0) * pl(1, 0) * (one + q2) * (one + q + q2) * br(0, 1).pow(3) /
                  d}});
        Scalar d31 = br(1, 1) * br(1, 1) * pl(1, 1);
        add("3,1",
            {{{8}, -quarter * br(1, 0) * br(1, 0) * pl(1, 0) * pl(0, 1) * (one + t2) / d31},
             {{6, 2}, -third * br(1, 0) * pl(1, 0) * (q - t) * (one + t + t2) / d31},
             {{4, 4}, -eighth * br(1, 0) * (one + q2) * br(0, 1) * pl(0, 1) * pl(0, 1) / d31},
             {{4, 2, 2},
              quarter * br(0, 1) * pl(0, 1) *
                  (one - q - q2 - q2 * q + t + t * q + q2 * t - q2 * q * t) / d31},
             {{2, 2, 2, 2},
              tw4 * pl(1, 0) * br(0, 1) * br(0, 1) *
                  (Scalar(3) + Scalar(2) * q + q2 + t + Scalar(2) * q * t +
                   Scalar(3) * q2 * t) / d31}});
        Scalar d22 = br(1, 1) * br(1, 2);
        add("2,2",
            {{{8}, -quarter * br(1, 0) * (q - t) * (one + t2) / d22},
             {{6, 2}, -third * br(1, 0) * pl(1, 0) * br(0, 1) * (one + t + t2) / d22},
             {{4, 4},
              eighth * pl(0, 1) *
                  (Scalar(2) - q + q2 - t - Scalar(2) * q * t - q2 * t + t2 - q * t2 +
                   Scalar(2) * q2 * t2) / d22},
             {{4, 2, 2}, -quarter * pl(1, 0) * (q - t) * br(0, 1) * pl(0, 1) / d22},
             {{2, 2, 2, 2},
              tw4 * pl(1, 0) * br(0, 1) * br(0, 1) *
                  (Scalar(2) + q + t + Scalar(2) * q * t) / d22}});
        add("2,1,1",
            {{{8}, quarter * br(1, 0) * pl(0, 1) * (one + t2) / br(1, 3)},
             {{6, 2}, third * (q - t) * (one + t + t2) / br(1, 3)},
             {{4, 4}, -eighth * br(1, 0) * pl(0, 1) * (one + t2) / br(1, 3)},
             {{4, 2, 2},
              -quarter *
                  (one + q - t + q * t - t2 + q * t2 - t2 * t - q * t2 * t) / br(1, 3)},
             {{2, 2, 2, 2},
              tw4 * br(0, 1) *
                  (Scalar(3) + q + Scalar(2) * t + Scalar(2) * q * t + t2 +
                   Scalar(3) * q * t2) / br(1, 3)}});
        add("1,1,1,1", {{{8}, -quarter},
                        {{6, 2}, third},
                        {{4, 4}, eighth},
                        {{4, 2, 2}, -quarter},
                        {{2, 2, 2, 2}, tw4}});
    }

    // ---- level 4, fermionic ----
    {
        Scalar d = br(1, 1) * br(2, 1);
        add("7/2,1/2", {{{7, 1}, br(1, 0) * br(1, 0) * pl(1, 0) / d},
                        {{5, 2, 1}, m(1, 0) * br(1, 0) * pl(1, 0) * br(0, 1) / d},
                        {{4, 3, 1}, half * m(2, 0) * br(1, 0) * br(0, 1) * pl(0, 1) / d},
                        {{3, 2, 2, 1}, half * m(2, 0) * pl(1, 0) * br(0, 1) * br(0, 1) / d}});
        Scalar d2 = br(1, 1) * br(1, 1) * pl(1, 1);
        add("5/2,3/2",
            {{{7, 1}, -m(1, 0) * br(1, 0) * br(0, 1) / d2},
             {{5, 3}, br(1, 0) * br(2, 1) / d2},
             {{5, 2, 1}, m(1, 0) * br(1, 0) * br(0, 1) / (br(1, 1) * br(1, 1))},
             {{4, 3, 1}, -half * m(2, 0) * br(0, 1) * pl(0, 1) / (br(1, 1) * pl(1, 1))},
             {{3, 2, 2, 1}, half * m(2, 0) * br(0, 1) * br(0, 1) / (br(1, 1) * br(1, 1))}});
        add("5/2,1,1/2", {{{7, 1}, -br(1, 0) / br(1, 1)},
                          {{5, 3}, -br(1, 0) / br(1, 1)},
                          {{5, 2, 1}, (one - Scalar(2) * q + q * t) / br(1, 1)},
                          {{3, 2, 2, 1}, m(1, 0) * br(0, 1) / br(1, 1)}});
        add("2,3/2,1/2", {{{7, 1}, -t * br(1, 0) / br(1, 2)},
                          {{5, 3}, one},
                          {{5, 2, 1}, -br(0, 1) * pl(1, 1) / br(1, 2)},
                          {{4, 3, 1}, half * pl(0, 1) * br(1, 1) / br(1, 2)},
                          {{3, 2, 2, 1}, half * br(0, 1) * pl(1, 1) / br(1, 2)}});
        add("3/2,1,1,1/2", {{{7, 1}, one},
                            {{5, 2, 1}, -one},
                            {{4, 3, 1}, -half},
                            {{3, 2, 2, 1}, half}});
    }
    return out;
}

}  // namespace

const std::vector<Entry>& reference_macdonald() {
    static const std::vector<Entry> data = build();
    return data;
}

const SuperPolynomial& reference_macdonald(const SuperPartition& lam) {
    for (const auto& [p, f] : reference_macdonald())
        if (p == lam) return f;
    throw std::out_of_range("reference_macdonald: no fixture for " + lam.to_string());
}

}  // namespace supermac
