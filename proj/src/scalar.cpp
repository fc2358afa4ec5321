#include "corestar/scalar.hpp"

#include <cctype>
#include <cstddef>
#include <utility>

namespace corestar {

namespace {

[[noreturn]] void bad_text(std::string_view text) {
    throw std::invalid_argument("malformed scalar text: '" + std::string(text) + "'");
}

// U+2212 minus is accepted wherever '-' is.
std::string normalize_minus(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (i + 2 < text.size() &&
            static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 3;
        } else {
            out.push_back(text[i]);
            ++i;
        }
    }
    return out;
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    char take() { return s[pos++]; }
};

mpz_class digits_to_mpz(Cursor& c, std::string_view full) {
    std::string d;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        d.push_back(c.take());
    if (d.empty()) bad_text(full);
    return mpz_class(d, 10);
}

// [sign] digits [/ digits], denominator nonzero.
mpq_class parse_rational(Cursor& c, std::string_view full) {
    bool neg = false;
    if (!c.done() && (c.peek() == '-')) {
        neg = true;
        c.take();
    }
    mpz_class num = digits_to_mpz(c, full);
    mpz_class den = 1;
    if (!c.done() && c.peek() == '/') {
        c.take();
        den = digits_to_mpz(c, full);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(full) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a + b) % p;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a + p - b) % p;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p; // p < 2^31, products fit in 64 bits
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid; a != 0 and p prime, so gcd is 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::logic_error("inv_mod: argument not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

} // namespace

Scalar Scalar::rational(mpq_class re) {
    Scalar s(Field::rationals());
    s.re_ = std::move(re);
    return s;
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
    Scalar s(Field::gaussian_rationals());
    s.re_ = std::move(re);
    s.im_ = std::move(im);
    return s;
}

Scalar Scalar::residue(const Field& field, std::uint64_t value) {
    Scalar s(field);
    s.res_ = value % field.modulus();
    return s;
}

Scalar Scalar::zero(const Field& field) {
    return from_integer(field, 0);
}

Scalar Scalar::one(const Field& field) {
    return from_integer(field, 1);
}

Scalar Scalar::from_integer(const Field& field, long value) {
    switch (field.kind()) {
    case FieldKind::Rationals: return rational(mpq_class(value));
    case FieldKind::GaussianRationals: return gaussian(mpq_class(value), mpq_class(0));
    case FieldKind::PrimeField: {
        const std::uint64_t p = field.modulus();
        std::int64_t v = value % static_cast<std::int64_t>(p);
        if (v < 0) v += static_cast<std::int64_t>(p);
        return residue(field, static_cast<std::uint64_t>(v));
    }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
    const std::string norm = normalize_minus(text);
    Cursor c{norm};
    if (c.done()) bad_text(text);

    switch (field.kind()) {
    case FieldKind::Rationals: {
        mpq_class q = parse_rational(c, norm);
        if (!c.done()) bad_text(text);
        return rational(std::move(q));
    }
    case FieldKind::GaussianRationals: {
        // First component: rational, or a bare (possibly signed) 'i'.
        bool neg = false;
        std::size_t mark = c.pos;
        if (!c.done() && c.peek() == '-') {
            neg = true;
            c.take();
        }
        if (!c.done() && c.peek() == 'i') {
            c.take();
            if (!c.done()) bad_text(text);
            return gaussian(mpq_class(0), mpq_class(neg ? -1 : 1));
        }
        c.pos = mark;
        mpq_class first = parse_rational(c, norm);
        if (c.done()) return gaussian(std::move(first), mpq_class(0));
        if (c.peek() == 'i') {
            c.take();
            if (!c.done()) bad_text(text);
            return gaussian(mpq_class(0), std::move(first));
        }
        char sign = c.take();
        if (sign != '+' && sign != '-') bad_text(text);
        mpq_class second(1);
        if (c.done()) bad_text(text);
        if (c.peek() != 'i') second = parse_rational(c, norm);
        if (c.done() || c.take() != 'i' || !c.done()) bad_text(text);
        if (sign == '-') second = -second;
        return gaussian(std::move(first), std::move(second));
    }
    case FieldKind::PrimeField: {
        bool neg = false;
        if (c.peek() == '-') {
            neg = true;
            c.take();
        }
        if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) bad_text(text);
        mpz_class v = digits_to_mpz(c, norm);
        if (!c.done()) bad_text(text);
        mpz_class p(static_cast<unsigned long>(field.modulus()));
        mpz_class r = v % p;
        if (neg && r != 0) r = p - r;
        return residue(field, r.get_ui());
    }
    }
    throw std::logic_error("unreachable");
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
    case FieldKind::Rationals: return re_ == 0;
    case FieldKind::GaussianRationals: return re_ == 0 && im_ == 0;
    case FieldKind::PrimeField: return res_ == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_.kind()) {
    case FieldKind::Rationals: return re_ == 1;
    case FieldKind::GaussianRationals: return re_ == 1 && im_ == 0;
    case FieldKind::PrimeField: return res_ == 1;
    }
    return false;
}

Scalar Scalar::conj() const {
    if (field_.kind() != FieldKind::GaussianRationals) return *this;
    Scalar s(*this);
    s.im_ = -im_;
    return s;
}

std::string Scalar::str() const {
    switch (field_.kind()) {
    case FieldKind::Rationals: return rational_str(re_);
    case FieldKind::GaussianRationals: {
        if (im_ == 0) return rational_str(re_);
        mpq_class mag = abs(im_);
        std::string out = rational_str(re_);
        out += (im_ < 0) ? '-' : '+';
        if (mag != 1) out += rational_str(mag);
        out += 'i';
        return out;
    }
    case FieldKind::PrimeField: return std::to_string(res_);
    }
    return "?";
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("scalar field mismatch: " + a.field().name() + " vs " +
                                    b.field().name());
}

} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s(a);
    switch (a.field_.kind()) {
    case FieldKind::Rationals:
        s.re_ = mpq_class(a.re_ + b.re_);
        break;
    case FieldKind::GaussianRationals:
        s.re_ = mpq_class(a.re_ + b.re_);
        s.im_ = mpq_class(a.im_ + b.im_);
        break;
    case FieldKind::PrimeField:
        s.res_ = add_mod(a.res_, b.res_, a.field_.modulus());
        break;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s(a);
    switch (a.field_.kind()) {
    case FieldKind::Rationals:
        s.re_ = mpq_class(a.re_ - b.re_);
        break;
    case FieldKind::GaussianRationals:
        s.re_ = mpq_class(a.re_ - b.re_);
        s.im_ = mpq_class(a.im_ - b.im_);
        break;
    case FieldKind::PrimeField:
        s.res_ = sub_mod(a.res_, b.res_, a.field_.modulus());
        break;
    }
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s(a);
    switch (a.field_.kind()) {
    case FieldKind::Rationals:
        s.re_ = mpq_class(a.re_ * b.re_);
        break;
    case FieldKind::GaussianRationals:
        s.re_ = mpq_class(a.re_ * b.re_ - a.im_ * b.im_);
        s.im_ = mpq_class(a.re_ * b.im_ + a.im_ * b.re_);
        break;
    case FieldKind::PrimeField:
        s.res_ = mul_mod(a.res_, b.res_, a.field_.modulus());
        break;
    }
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("scalar division by zero");
    Scalar s(a);
    switch (a.field_.kind()) {
    case FieldKind::Rationals:
        s.re_ = mpq_class(a.re_ / b.re_);
        break;
    case FieldKind::GaussianRationals: {
        mpq_class denom(b.re_ * b.re_ + b.im_ * b.im_);
        s.re_ = mpq_class((a.re_ * b.re_ + a.im_ * b.im_) / denom);
        s.im_ = mpq_class((a.im_ * b.re_ - a.re_ * b.im_) / denom);
        break;
    }
    case FieldKind::PrimeField:
        s.res_ = mul_mod(a.res_, inv_mod(b.res_, a.field_.modulus()), a.field_.modulus());
        break;
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    switch (field_.kind()) {
    case FieldKind::Rationals:
        s.re_ = mpq_class(-re_);
        break;
    case FieldKind::GaussianRationals:
        s.re_ = mpq_class(-re_);
        s.im_ = mpq_class(-im_);
        break;
    case FieldKind::PrimeField:
        s.res_ = sub_mod(0, res_, field_.modulus());
        break;
    }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    switch (a.field_.kind()) {
    case FieldKind::Rationals: return a.re_ == b.re_;
    case FieldKind::GaussianRationals: return a.re_ == b.re_ && a.im_ == b.im_;
    case FieldKind::PrimeField: return a.res_ == b.res_;
    }
    return false;
}

} // namespace corestar
