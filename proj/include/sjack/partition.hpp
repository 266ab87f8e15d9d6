#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "sjack/ratfunc.hpp"

namespace sjack {

/// Integer partition: weakly decreasing positive parts, trailing zeros stripped
/// at construction. Immutable.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw bad_input("not weakly decreasing: " + to_string(parts_));
        }
    }

    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
    bool empty() const { return parts_.empty(); }
    /// 1-based part access; parts beyond the length are 0.
    int part(int j) const { return (j >= 1 && j <= length()) ? parts_[j - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

    Partition conjugate() const {
        if (parts_.empty()) return Partition();
        std::vector<int> c(static_cast<std::size_t>(parts_[0]));
        for (int j = 1; j <= parts_[0]; ++j)
            c[j - 1] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                      [j](int p) { return p >= j; }));
        return Partition(std::move(c));
    }

    std::string to_string() const { return to_string(parts_); }

private:
    std::vector<int> parts_;

    static std::string to_string(const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    }
};

/// Fat-hook shape parameters: n row slots and m column slots of the corner rectangle.
struct FatHookParams {
    int n = 0;
    int m = 0;
    FatHookParams(int n_, int m_) : n(n_), m(m_) {
        if (n < 0 || m < 0 || n + m < 1) throw bad_input("need n, m >= 0 with n + m >= 1");
    }
};

/// mu <= lambda in the dominance order; both must have the same weight.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw weight_mismatch("dominance order needs equal weights");
    long smu = 0, slam = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int j = 1; j <= len; ++j) {
        smu += mu.part(j);
        slam += lambda.part(j);
        if (smu > slam) return false;
    }
    return true;
}

/// Strict dominance (equal weight required).
inline bool dominance_lt(const Partition& mu, const Partition& lambda) {
    return mu != lambda && dominance_leq(mu, lambda);
}

/// Diagram containment mu subseteq lambda.
inline bool contains(const Partition& mu, const Partition& lambda) {
    for (int j = 1; j <= mu.length(); ++j)
        if (mu.part(j) > lambda.part(j)) return false;
    return true;
}

/// lambda_{n+1} <= m.
inline bool in_fat_hook(const Partition& lambda, const FatHookParams& hp) {
    return lambda.part(hp.n + 1) <= hp.m;
}

/// (m^n) subseteq lambda, i.e. lambda_n >= m.
inline bool contains_rectangle(const Partition& lambda, const FatHookParams& hp) {
    if (hp.n == 0 || hp.m == 0) return true;
    return lambda.part(hp.n) >= hp.m;
}

/// Parts strictly east of the m x n rectangle: (<lambda_1 - m>, ..., <lambda_n - m>).
inline Partition east(const Partition& lambda, const FatHookParams& hp) {
    if (!in_fat_hook(lambda, hp)) throw not_in_fat_hook(lambda.to_string());
    std::vector<int> v;
    for (int j = 1; j <= hp.n; ++j) v.push_back(std::max(0, lambda.part(j) - hp.m));
    return Partition(std::move(v));
}

/// Parts strictly south of the rectangle: east of the conjugate with roles swapped.
inline Partition south(const Partition& lambda, const FatHookParams& hp) {
    if (!in_fat_hook(lambda, hp)) throw not_in_fat_hook(lambda.to_string());
    Partition lc = lambda.conjugate();
    std::vector<int> v;
    for (int k = 1; k <= hp.m; ++k) v.push_back(std::max(0, lc.part(k) - hp.n));
    return Partition(std::move(v));
}

/// The unique lambda = (mu + (m^n), nu') with east(lambda) = mu, south(lambda) = nu.
inline Partition from_particle_hole(const Partition& mu, const Partition& nu,
                                    const FatHookParams& hp) {
    if (mu.length() > hp.n || nu.length() > hp.m)
        throw length_violation("particle/hole parts exceed (n, m)");
    std::vector<int> v;
    for (int j = 1; j <= hp.n; ++j) v.push_back(mu.part(j) + hp.m);
    Partition nuc = nu.conjugate();
    for (int j = 1; j <= nuc.length(); ++j) v.push_back(nuc.part(j));
    return Partition(std::move(v));
}

inline Partition sum_parts(const Partition& mu, const Partition& nu) {
    std::vector<int> v;
    int len = std::max(mu.length(), nu.length());
    for (int j = 1; j <= len; ++j) v.push_back(mu.part(j) + nu.part(j));
    return Partition(std::move(v));
}

inline Partition union_parts(const Partition& mu, const Partition& nu) {
    std::vector<int> v(mu.parts());
    v.insert(v.end(), nu.parts().begin(), nu.parts().end());
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}

namespace detail {
inline void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                          const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) { emit(acc); return; }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, emit);
        acc.pop_back();
    }
}
} // namespace detail

/// All partitions of exactly k, lexicographically descending ((k) first).
inline std::vector<Partition> partitions_of(int k, int max_length = -1, int max_part = -1) {
    std::vector<Partition> out;
    if (k < 0) return out;
    if (k == 0) { out.emplace_back(); return out; }
    std::vector<int> acc;
    detail::enumerate_rec(k, max_part < 0 ? k : max_part, acc, [&](const std::vector<int>& v) {
        if (max_length >= 0 && static_cast<int>(v.size()) > max_length) return;
        out.push_back(Partition(v));
    });
    return out;
}

/// All lambda in the fat hook with |lambda| <= d, graded then lex descending.
inline std::vector<Partition> enumerate_fat_hook(const FatHookParams& hp, int d) {
    std::vector<Partition> out;
    for (int k = 0; k <= d; ++k)
        for (const auto& lam : partitions_of(k))
            if (in_fat_hook(lam, hp)) out.push_back(lam);
    return out;
}

/// Partitions of exactly d inside the fat hook, lex descending.
inline std::vector<Partition> fat_hook_of_weight(const FatHookParams& hp, int d) {
    std::vector<Partition> out;
    for (const auto& lam : partitions_of(d))
        if (in_fat_hook(lam, hp)) out.push_back(lam);
    return out;
}

/// b_lambda(theta): product over boxes (j,k) of
/// (lambda_j - k + theta(lambda'_k - j + 1)) / (lambda_j - k + 1 + theta(lambda'_k - j)).
inline RatFunc b_coeff(const Partition& lambda) {
    Partition lc = lambda.conjugate();
    RatFunc num(1), den(1);
    for (int j = 1; j <= lambda.length(); ++j) {
        for (int k = 1; k <= lambda.part(j); ++k) {
            // linear factors a + theta*b
            num *= RatFunc(IntPoly(std::vector<Int>{Int(lambda.part(j) - k), Int(lc.part(k) - j + 1)}));
            den *= RatFunc(IntPoly(std::vector<Int>{Int(lambda.part(j) - k + 1), Int(lc.part(k) - j)}));
        }
    }
    return num / den;
}

/// b_lambda evaluated at a rational theta > 0.
inline Rat b_coeff_at(const Partition& lambda, const Rat& theta) {
    return b_coeff(lambda).evaluate(theta);
}

} // namespace sjack
