#include "semisep/linalg/scalar.hpp"

#include "semisep/errors.hpp"

#include <charconv>
#include <ostream>

namespace semisep::linalg {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t reduce(const boost::multiprecision::cpp_int& v, std::uint32_t p) {
    boost::multiprecision::cpp_int m = v % p;
    if (m < 0) m += p;
    return m.convert_to<std::int64_t>();
}

std::int64_t inv_mod(std::int64_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return t;
}

std::int64_t residue(const Rational& q, std::uint32_t p) {
    std::int64_t den = reduce(boost::multiprecision::denominator(q), p);
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    return reduce(boost::multiprecision::numerator(q), p) * inv_mod(den, p) % p;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31)) throw InputError("not a supported prime: " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view tag) {
    if (tag == "Q") return rationals();
    if (tag.starts_with("Fp:")) {
        std::uint32_t p = 0;
        auto body = tag.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec != std::errc() || ptr != body.data() + body.size())
            throw InputError("bad field tag '" + std::string(tag) + "'");
        return prime(p);
    }
    throw InputError("bad field tag '" + std::string(tag) + "'");
}

std::string Field::tag() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Scalar::Scalar(const Rational& q, Field f) : p_(f.characteristic()) {
    if (p_) r_ = residue(q, p_);
    else q_ = q;
}

Scalar::Scalar(long long v, Field f) : p_(f.characteristic()) {
    if (p_) {
        r_ = v % static_cast<long long>(p_);
        if (r_ < 0) r_ += p_;
    } else {
        q_ = v;
    }
}

Scalar Scalar::parse(std::string_view s, Field f) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Scalar(Rational(boost::multiprecision::cpp_int(std::string(s))), f);
        }
        boost::multiprecision::cpp_int num(std::string(s.substr(0, slash)));
        boost::multiprecision::cpp_int den(std::string(s.substr(slash + 1)));
        if (den <= 0) throw InputError("non-positive denominator in '" + std::string(s) + "'");
        return Scalar(Rational(num, den), f);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("not a rational: '" + std::string(s) + "'");
    }
}

std::string Scalar::to_string() const {
    if (p_) return std::to_string(r_);
    return q_.str();
}

void Scalar::unify(const Scalar& o) {
    if (p_ == o.p_ || o.p_ == 0) return;
    if (p_ != 0) throw std::domain_error("mixing scalars of different characteristic");
    r_ = residue(q_, o.p_);
    q_ = 0;
    p_ = o.p_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (p_) s.r_ = inv_mod(r_, p_);
    else s.q_ = 1 / q_;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_) s.r_ = r_ == 0 ? 0 : p_ - r_;
    else s.q_ = -q_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    unify(o);
    if (p_) {
        std::int64_t v = o.p_ ? o.r_ : residue(o.q_, p_);
        r_ = (r_ + v) % p_;
    } else if (q_.is_zero()) {
        q_ = o.q_;
    } else if (!o.q_.is_zero()) {
        q_ += o.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (p_ || o.p_) return *this += -o;
    if (!o.q_.is_zero()) q_ -= o.q_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    unify(o);
    if (p_) {
        std::int64_t v = o.p_ ? o.r_ : residue(o.q_, p_);
        r_ = r_ * v % p_;
    } else if (o.q_.is_zero()) {
        q_ = 0;
    } else if (!q_.is_zero() && o.q_ != 1) {
        q_ *= o.q_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) {
        if (a.p_) return a.r_ == b.r_;
        if (a.q_.is_zero() || b.q_.is_zero()) return a.q_.is_zero() && b.q_.is_zero();
        return a.q_ == b.q_;
    }
    Scalar x = a;
    x.unify(b);
    Scalar y = b;
    y.unify(x);
    return x.r_ == y.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace semisep::linalg
