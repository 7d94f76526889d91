#pragma once
// Power series in one variable t truncated at order K (coefficients c_0..c_K).
#include "so4lab/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace so4lab {

inline constexpr int kDefaultSeriesOrder = 30;

template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int K = kDefaultSeriesOrder) : c_(check(K) + 1, R(0)) {}
    TruncatedSeries(std::vector<R> c, int K) : c_(std::move(c)) {
        check(K);
        c_.resize(K + 1, R(0));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int k) const { return c_.at(k); }
    R& operator[](int k) { return c_.at(k); }
    const std::vector<R>& coeffs() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
        same(x, y);
        TruncatedSeries r = x;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
        same(x, y);
        TruncatedSeries r = x;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= y.c_[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
        same(x, y);
        TruncatedSeries r(x.order());
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (is_zero(x.c_[i])) continue;
            for (size_t j = 0; i + j < x.c_.size(); ++j) r.c_[i + j] += x.c_[i] * y.c_[j];
        }
        return r;
    }
    friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) { return x.c_ == y.c_; }
    friend bool operator!=(const TruncatedSeries& x, const TruncatedSeries& y) { return !(x == y); }

private:
    static int check(int K) {
        if (K < 0) throw std::invalid_argument("series order must be non-negative");
        return K;
    }
    static void same(const TruncatedSeries& x, const TruncatedSeries& y) {
        if (x.order() != y.order()) throw std::invalid_argument("series orders differ");
    }
    std::vector<R> c_;
};

struct SingularExpansion : std::domain_error {
    using std::domain_error::domain_error;
};

// Expansion of num(t)/den(t) to order K; polynomials given low degree first.
template <class R>
TruncatedSeries<R> expand_rational_series(const std::vector<R>& num, const std::vector<R>& den, int K) {
    if (den.empty() || is_zero(den[0]))
        throw SingularExpansion("denominator constant term is not invertible");
    TruncatedSeries<R> s(K);
    R inv = R(1) / den[0];
    for (int k = 0; k <= K; ++k) {
        R acc = k < static_cast<int>(num.size()) ? num[k] : R(0);
        for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
            if (!is_zero(den[j])) acc -= den[j] * s[k - j];
        s[k] = acc * inv;
    }
    return s;
}

}  // namespace so4lab
