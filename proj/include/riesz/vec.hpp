#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace riesz {

inline constexpr int kMaxDim = 10;

/// Fixed-capacity Euclidean vector for dimensions 2..10. Stack-only.
class Vec {
public:
    Vec() : n_(0) { data_.fill(0.0); }
    explicit Vec(int n) : n_(n) {
        if (n < 0 || n > kMaxDim) throw std::invalid_argument("Vec: dimension out of range");
        data_.fill(0.0);
    }
    Vec(std::initializer_list<double> xs) : n_(static_cast<int>(xs.size())) {
        if (n_ > kMaxDim) throw std::invalid_argument("Vec: dimension out of range");
        data_.fill(0.0);
        int i = 0;
        for (double x : xs) data_[i++] = x;
    }

    int dim() const { return n_; }
    double& operator[](int i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int i) const { return data_[static_cast<size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n_; ++i) data_[i] += o.data_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n_; ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < n_; ++i) data_[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }

    friend double dot(const Vec& a, const Vec& b) {
        double s = 0.0;
        for (int i = 0; i < a.n_; ++i) s += a.data_[i] * b.data_[i];
        return s;
    }

private:
    std::array<double, kMaxDim> data_;
    int n_;
};

inline double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& v) {
    double m = norm(v);
    if (m == 0.0) throw std::invalid_argument("normalized: zero vector");
    return v * (1.0 / m);
}

inline Vec unit_axis(int n, int j) {
    Vec e(n);
    e[j] = 1.0;
    return e;
}

}  // namespace riesz
