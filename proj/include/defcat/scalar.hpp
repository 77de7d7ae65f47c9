#ifndef DEFCAT_SCALAR_HPP
#define DEFCAT_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace defcat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

bool is_prime(std::int64_t n);

/// Base field descriptor: the rationals or a prime field GF(p).
class Field {
  public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(std::int64_t p);

    Kind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    std::int64_t characteristic() const { return kind_ == Kind::prime ? p_ : 0; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

/// Exact field element: a reduced rational or a residue mod p.
/// All arithmetic is exact; mixing fields throws FieldMismatch.
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), rat_(0) {}
    explicit Scalar(const Field& f) : field_(f), rat_(0), res_(0) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, std::int64_t n);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(std::int64_t value, std::int64_t p);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "a/b" or "a" over Q, the residue digits over GF(p).
    std::string str() const;
    static Scalar parse(const Field& f, const std::string& text);

    const mpq_class& rat() const { return rat_; }
    std::int64_t res() const { return res_; }

  private:
    void check(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }
    Field field_;
    mpq_class rat_;
    std::int64_t res_ = 0;
};

struct OrderMismatch : Error {
    OrderMismatch() : Error("series truncation orders differ") {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& w = "series has zero constant term") : Error(w) {}
};

/// Element of k[eps]/eps^(N+1): coefficients c_0..c_N, lowest degree first.
class Series {
  public:
    Series() : field_(Field::rationals()), coeff_(1, Scalar()) {}
    Series(const Field& f, int order) : field_(f), coeff_(order + 1, Scalar::zero(f)) {
        if (order < 0) throw Error("negative truncation order");
    }
    static Series constant(const Scalar& c, int order);
    static Series eps(const Field& f, int order);

    const Field& field() const { return field_; }
    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Scalar& coeff(int i) const { return coeff_[static_cast<size_t>(i)]; }
    Scalar& coeff(int i) { return coeff_[static_cast<size_t>(i)]; }

    bool is_zero() const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /// Multiplicative inverse, computed degree by degree; requires c_0 != 0.
    Series inverse() const;

    /// Re-truncate to a lower order.
    Series truncate(int order) const;

    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void check(const Series& o) const {
        if (field_ != o.field_) throw FieldMismatch();
        if (order() != o.order()) throw OrderMismatch();
    }
    Field field_;
    std::vector<Scalar> coeff_;
};

// Ring-element helpers shared by the templated matrix/coherence code.
inline Scalar ring_zero(const Scalar& model) { return Scalar::zero(model.field()); }
inline Scalar ring_one(const Scalar& model) { return Scalar::one(model.field()); }
inline Series ring_zero(const Series& model) { return Series(model.field(), model.order()); }
inline Series ring_one(const Series& model) {
    return Series::constant(Scalar::one(model.field()), model.order());
}

}  // namespace defcat

#endif
