// Nonnegative big-integer coefficient sequences: the algebra (product,
// Zykov combination) and shape analysis (unimodality, log-concavity).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace indpoly {

using BigInt = boost::multiprecision::cpp_int;

// Finite sequence of nonnegative integers; index k holds the k-th
// coefficient. Trailing zeros are trimmed so the leading coefficient is
// nonzero (the all-zero sequence collapses to [0]).
class CoeffSeq {
public:
    CoeffSeq() : c_{BigInt(0)} {}

    explicit CoeffSeq(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("coeffseq: sequence must be nonempty");
        for (const BigInt& v : c_)
            if (v < 0) throw std::invalid_argument("coeffseq: coefficients must be nonnegative");
        while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    }

    static CoeffSeq one() { return CoeffSeq({BigInt(1)}); }

    static CoeffSeq from_ints(const std::vector<long long>& v) {
        std::vector<BigInt> c(v.begin(), v.end());
        return CoeffSeq(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }

    // Bounds-checked access.
    const BigInt& operator[](int k) const {
        if (k < 0 || k > degree()) throw std::out_of_range("coeffseq: index out of range");
        return c_[static_cast<std::size_t>(k)];
    }

    // Zero beyond the degree.
    BigInt coeff(int k) const {
        if (k < 0 || k > degree()) return 0;
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const CoeffSeq& other) const = default;

private:
    std::vector<BigInt> c_;
};

// Convolution product.
inline CoeffSeq seq_mul(const CoeffSeq& p, const CoeffSeq& q) {
    std::vector<BigInt> out(p.size() + q.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            out[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return CoeffSeq(std::move(out));
}

inline CoeffSeq seq_pow(const CoeffSeq& p, int e) {
    if (e < 0) throw std::invalid_argument("seq_pow: exponent must be nonnegative");
    CoeffSeq acc = CoeffSeq::one();
    for (int i = 0; i < e; ++i) acc = seq_mul(acc, p);
    return acc;
}

// Zykov combination p+q-1: constant terms must both be 1; higher
// coefficients add (stable sets cannot cross sides of a join).
inline CoeffSeq seq_zykov(const CoeffSeq& p, const CoeffSeq& q) {
    if (p.coeff(0) != 1 || q.coeff(0) != 1)
        throw std::invalid_argument("seq_zykov: both constant terms must equal 1");
    std::vector<BigInt> out(std::max(p.size(), q.size()), BigInt(0));
    out[0] = 1;
    for (std::size_t k = 1; k < out.size(); ++k)
        out[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return CoeffSeq(std::move(out));
}

// a_t >= a_{t+1} >= ... >= a_degree.
inline bool tail_nonincreasing_from(const CoeffSeq& p, int t) {
    if (t < 0 || t > p.degree())
        throw std::out_of_range("tail_nonincreasing_from: index out of range");
    for (int k = t; k < p.degree(); ++k)
        if (p[k] < p[k + 1]) return false;
    return true;
}

// a_0 <= a_1 <= ... <= a_t.
inline bool head_nondecreasing_through(const CoeffSeq& p, int t) {
    if (t < 0 || t > p.degree())
        throw std::out_of_range("head_nondecreasing_through: index out of range");
    for (int k = 0; k < t; ++k)
        if (p[k] > p[k + 1]) return false;
    return true;
}

struct ShapeReport {
    bool unimodal = false;
    std::vector<int> modes;  // every index attaining the maximum value
    bool log_concave = false;
    std::optional<int> first_log_concavity_violation;
    int head_nondecreasing_through = 0;  // largest t with a_0 <= ... <= a_t
    int tail_nonincreasing_from = 0;     // smallest t with a_t >= ... >= a_deg
};

inline ShapeReport shape(const CoeffSeq& p) {
    ShapeReport r;
    const int deg = p.degree();

    int head = 0;
    while (head < deg && p[head] <= p[head + 1]) ++head;
    int tail = deg;
    while (tail > 0 && p[tail - 1] >= p[tail]) --tail;
    r.head_nondecreasing_through = head;
    r.tail_nonincreasing_from = tail;
    // Unimodal iff some split index lies in both the monotone head and tail.
    r.unimodal = tail <= head;

    BigInt mx = p[0];
    for (int k = 1; k <= deg; ++k)
        if (p[k] > mx) mx = p[k];
    for (int k = 0; k <= deg; ++k)
        if (p[k] == mx) r.modes.push_back(k);

    r.log_concave = true;
    for (int i = 1; i < deg; ++i) {
        if (p[i] * p[i] < p[i - 1] * p[i + 1]) {
            r.log_concave = false;
            r.first_log_concavity_violation = i;
            break;
        }
    }
    return r;
}

// "1 + 4x + 3x^2 + x^3" style rendering; zero terms are skipped.
inline std::string to_polynomial_string(const CoeffSeq& p) {
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        const BigInt& c = p[k];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += c.str();
        } else {
            if (c != 1) out += c.str();
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

inline std::vector<std::string> to_decimal_strings(const CoeffSeq& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const BigInt& c : p.coeffs()) out.push_back(c.str());
    return out;
}

}  // namespace indpoly
