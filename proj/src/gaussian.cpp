#include "multirank/gaussian.hpp"

#include <stdexcept>

namespace multirank {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

bool GaussianRational::is_integral() const {
    return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    const mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string im_part;
    if (im_ == 1) {
        im_part = "i";
    } else if (im_ == -1) {
        im_part = "-i";
    } else {
        im_part = im_.get_str() + "i";
    }
    if (sgn(re_) == 0) return im_part;
    if (sgn(im_) > 0) return re_.get_str() + "+" + im_part;
    return re_.get_str() + im_part;
}

GaussianInteger mul_sub(const GaussianInteger& a, const GaussianInteger& b,
                        const GaussianInteger& c, const GaussianInteger& d) {
    GaussianInteger r;
    r.re = a.re * b.re - a.im * b.im - (c.re * d.re - c.im * d.im);
    r.im = a.re * b.im + a.im * b.re - (c.re * d.im + c.im * d.re);
    return r;
}

GaussianInteger exact_divide(const GaussianInteger& a, const GaussianInteger& b) {
    // a / b = a * conj(b) / |b|^2
    const mpz_class n = b.re * b.re + b.im * b.im;
    if (sgn(n) == 0) throw std::logic_error("exact_divide: division by zero");
    const mpz_class re = a.re * b.re + a.im * b.im;
    const mpz_class im = a.im * b.re - a.re * b.im;
    GaussianInteger q;
    mpz_class r;
    mpz_tdiv_qr(q.re.get_mpz_t(), r.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("exact_divide: non-exact quotient");
    mpz_tdiv_qr(q.im.get_mpz_t(), r.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("exact_divide: non-exact quotient");
    return q;
}

}  // namespace multirank
