#pragma once

#include <gmpxx.h>

#include <string>

namespace multirank {

// Exact complex number with rational real and imaginary parts. Both parts
// are kept in lowest terms with a positive denominator (mpq canonical form).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational imaginary_unit() { return {0, 1}; }

    const mpq_class& real() const noexcept { return re_; }
    const mpq_class& imag() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_integral() const;

    GaussianRational conj() const { return {re_, -im_}; }
    // |z|^2
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // "3", "-1/2", "2i", "1/2-3/4i", "i", "-i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Element of Z[i]. Used by fraction-free elimination.
struct GaussianInteger {
    mpz_class re{0};
    mpz_class im{0};

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// a*b - c*d, the Bareiss update numerator.
GaussianInteger mul_sub(const GaussianInteger& a, const GaussianInteger& b,
                        const GaussianInteger& c, const GaussianInteger& d);

// Exact quotient a / b in Z[i]. Throws std::logic_error if b does not divide a.
GaussianInteger exact_divide(const GaussianInteger& a, const GaussianInteger& b);

}  // namespace multirank
