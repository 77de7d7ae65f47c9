#include "defcat/scalar.hpp"

#include <sstream>

namespace defcat {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::int64_t p) {
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::prime, p);
}

std::string Field::str() const {
    return kind_ == Kind::rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DivisionByZero();
    return mod_reduce(t, p);
}

}  // namespace

Scalar Scalar::from_int(const Field& f, std::int64_t n) {
    Scalar s(f);
    if (f.kind() == Field::Kind::rationals)
        s.rat_ = mpq_class(n);
    else
        s.res_ = mod_reduce(n, f.p());
    return s;
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s(Field::rationals());
    s.rat_ = q;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::residue(std::int64_t value, std::int64_t p) {
    Scalar s(Field::prime(p));
    s.res_ = mod_reduce(value, p);
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind() == Field::Kind::rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind() == Field::Kind::rationals ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check(o);
    Scalar r(field_);
    if (field_.kind() == Field::Kind::rationals) {
        r.rat_ = rat_ + o.rat_;
        r.rat_.canonicalize();
    } else {
        r.res_ = mod_reduce(res_ + o.res_, field_.p());
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check(o);
    Scalar r(field_);
    if (field_.kind() == Field::Kind::rationals) {
        r.rat_ = rat_ * o.rat_;
        r.rat_.canonicalize();
    } else {
        r.res_ = mod_mul(res_, o.res_, field_.p());
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.kind() == Field::Kind::rationals)
        r.rat_ = -rat_;
    else
        r.res_ = res_ == 0 ? 0 : field_.p() - res_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r(field_);
    if (field_.kind() == Field::Kind::rationals)
        r.rat_ = 1 / rat_;
    else
        r.res_ = mod_inv(res_, field_.p());
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.kind() == Field::Kind::rationals ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (field_.kind() == Field::Kind::prime) return std::to_string(res_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (f.kind() == Field::Kind::prime) {
        std::int64_t v = std::stoll(text);
        return residue(v, f.p());
    }
    mpq_class q(text);
    if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    return rational(q);
}

Series Series::constant(const Scalar& c, int order) {
    Series s(c.field(), order);
    s.coeff_[0] = c;
    return s;
}

Series Series::eps(const Field& f, int order) {
    Series s(f, order);
    if (order >= 1) s.coeff_[1] = Scalar::one(f);
    return s;
}

bool Series::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

Series Series::operator+(const Series& o) const {
    check(o);
    Series r = *this;
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

Series Series::operator-(const Series& o) const {
    check(o);
    Series r = *this;
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] -= o.coeff_[i];
    return r;
}

Series Series::operator*(const Series& o) const {
    check(o);
    Series r(field_, order());
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        for (size_t j = 0; i + j < coeff_.size(); ++j)
            r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
    }
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Series Series::inverse() const {
    if (coeff_[0].is_zero()) throw NotInvertible();
    Series r(field_, order());
    r.coeff_[0] = coeff_[0].inverse();
    // b_n = -c_0^{-1} sum_{i=1..n} c_i b_{n-i}
    for (int n = 1; n <= order(); ++n) {
        Scalar acc = Scalar::zero(field_);
        for (int i = 1; i <= n; ++i) acc += coeff_[static_cast<size_t>(i)] * r.coeff_[static_cast<size_t>(n - i)];
        r.coeff_[static_cast<size_t>(n)] = -(r.coeff_[0] * acc);
    }
    return r;
}

Series Series::truncate(int order) const {
    if (order > this->order()) throw OrderMismatch();
    Series r(field_, order);
    for (int i = 0; i <= order; ++i) r.coeff_[static_cast<size_t>(i)] = coeff(i);
    return r;
}

bool Series::operator==(const Series& o) const {
    if (field_ != o.field_ || order() != o.order()) return false;
    for (size_t i = 0; i < coeff_.size(); ++i)
        if (coeff_[i] != o.coeff_[i]) return false;
    return true;
}

std::string Series::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (i) os << ",";
        os << coeff_[i].str();
    }
    os << "]";
    return os.str();
}

}  // namespace defcat
