#include "olm/sdnum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace olm {

namespace {

constexpr int kMaxScale = 124;

int128 checked_shl(int128 v, int k) {
    if (k == 0 || v == 0) return v;
    if (k >= 127) throw std::overflow_error("ExactValue: shift overflow");
    int128 r = v * (int128(1) << k);
    if ((r >> k) != v) throw std::overflow_error("ExactValue: shift overflow");
    return r;
}

int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ExactValue: add overflow");
    return r;
}

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ExactValue: mul overflow");
    return r;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.insert(s.begin(), char('0' + int(v % 10)));
        v /= 10;
    }
    return s;
}

std::string i128_to_string(int128 v) {
    if (v < 0) return "-" + u128_to_string((unsigned __int128)(-(v + 1)) + 1);
    return u128_to_string((unsigned __int128)v);
}

}  // namespace

SignedDigit SignedDigit::from_bits(int plus, int minus) {
    if ((plus != 0 && plus != 1) || (minus != 0 && minus != 1))
        throw std::invalid_argument("SignedDigit: bits must be 0 or 1");
    if (plus == 1 && minus == 1)
        throw std::invalid_argument("SignedDigit: (1,1) is not a valid digit encoding");
    return SignedDigit(std::uint8_t(plus), std::uint8_t(minus));
}

SignedDigit SignedDigit::from_int(int v) {
    switch (v) {
        case 1: return one();
        case 0: return zero();
        case -1: return minus_one();
        default: throw std::invalid_argument("SignedDigit: value must be -1, 0 or 1");
    }
}

char SignedDigit::symbol() const {
    switch (value()) {
        case 1: return '+';
        case -1: return '-';
        default: return '0';
    }
}

// ---------------------------------------------------------------------------

ExactValue::ExactValue(int128 numerator, int scale) : num_(numerator), scale_(scale) {
    if (scale < 0) {
        num_ = checked_shl(num_, -scale);
        scale_ = 0;
    }
    normalize();
}

void ExactValue::normalize() {
    if (num_ == 0) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && (num_ & 1) == 0) {
        num_ >>= 1;
        --scale_;
    }
    if (scale_ > kMaxScale) throw std::overflow_error("ExactValue: scale too large");
}

int128 ExactValue::numerator_at(int scale) const {
    if (scale < scale_) throw std::invalid_argument("ExactValue: target scale below value scale");
    return checked_shl(num_, scale - scale_);
}

ExactValue ExactValue::shifted(int k) const { return ExactValue(num_, scale_ - k); }

ExactValue ExactValue::abs() const { return num_ < 0 ? -*this : *this; }

ExactValue ExactValue::operator-() const {
    if (num_ == std::numeric_limits<int128>::min()) throw std::overflow_error("ExactValue: negate overflow");
    ExactValue r = *this;
    r.num_ = -num_;
    return r;
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
    int s = std::max(a.scale_, b.scale_);
    return ExactValue(checked_add(a.numerator_at(s), b.numerator_at(s)), s);
}

ExactValue operator-(const ExactValue& a, const ExactValue& b) { return a + (-b); }

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
    return ExactValue(checked_mul(a.num_, b.num_), a.scale_ + b.scale_);
}

std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double ExactValue::to_double() const { return std::ldexp(double(num_), -scale_); }

std::string ExactValue::to_string() const {
    if (scale_ == 0) return i128_to_string(num_);
    return i128_to_string(num_) + "/2^" + std::to_string(scale_);
}

std::string ExactValue::to_decimal() const {
    bool neg = num_ < 0;
    unsigned __int128 mag = neg ? (unsigned __int128)(-(num_ + 1)) + 1 : (unsigned __int128)num_;
    unsigned __int128 ip = mag >> scale_;
    unsigned __int128 frac = scale_ == 0 ? 0 : mag & ((((unsigned __int128)1) << scale_) - 1);
    std::string s = (neg ? "-" : "") + u128_to_string(ip);
    if (frac == 0) return s;
    s += '.';
    // 10*frac stays below 2^(scale+4), well inside 128 bits.
    while (frac != 0) {
        frac *= 10;
        s += char('0' + int(frac >> scale_));
        frac &= (((unsigned __int128)1) << scale_) - 1;
    }
    return s;
}

// ---------------------------------------------------------------------------

SDWord SDWord::from_ints(std::initializer_list<int> digits) {
    std::vector<SignedDigit> d;
    d.reserve(digits.size());
    for (int v : digits) d.push_back(SignedDigit::from_int(v));
    return SDWord(std::move(d));
}

SignedDigit SDWord::digit(std::size_t i) const {
    if (i == 0) throw std::out_of_range("SDWord: digits are 1-based");
    return i <= digits_.size() ? digits_[i - 1] : SignedDigit::zero();
}

SDWord SDWord::padded(std::size_t n) const {
    if (digits_.size() > n)
        throw std::invalid_argument("SDWord: operand has " + std::to_string(digits_.size()) +
                                    " digits, more than " + std::to_string(n));
    SDWord r = *this;
    r.digits_.resize(n, SignedDigit::zero());
    return r;
}

int128 SDWord::scaled_value(std::size_t n) const {
    if (digits_.size() > n) throw std::invalid_argument("SDWord: word longer than requested scale");
    if (n > std::size_t(kMaxScale)) throw std::overflow_error("SDWord: scale too large");
    int128 v = 0;
    for (std::size_t i = 0; i < n; ++i) v = 2 * v + (i < digits_.size() ? digits_[i].value() : 0);
    return v;
}

std::string SDWord::to_string() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s += d.symbol();
    return s;
}

ExactValue sd_value(const SDWord& w) { return ExactValue(w.scaled_value(w.size()), int(w.size())); }

SDWord from_binary_fraction(std::span<const int> bits) {
    std::vector<SignedDigit> d;
    d.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("from_binary_fraction: bits must be 0 or 1");
        d.push_back(b ? SignedDigit::one() : SignedDigit::zero());
    }
    return SDWord(std::move(d));
}

SDWord from_unsigned_fraction(std::uint64_t numerator, int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("from_unsigned_fraction: n out of range");
    if (n < 64 && (numerator >> n) != 0)
        throw std::invalid_argument("from_unsigned_fraction: numerator wider than n bits");
    std::vector<SignedDigit> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        if ((numerator >> (n - 1 - i)) & 1u) d[std::size_t(i)] = SignedDigit::one();
    return SDWord(std::move(d));
}

ExactValue exact_product(const SDWord& x, const SDWord& y) { return sd_value(x) * sd_value(y); }

// ---------------------------------------------------------------------------

OtfcPair otfc_update(const OtfcPair& p, SignedDigit z) {
    if (p.j_ >= kMaxOtfcDigits) throw std::overflow_error("otfc_update: register full");
    OtfcPair r;
    r.j_ = p.j_ + 1;
    switch (z.value()) {
        case 1:
            r.q_ = 2 * p.q_ + 1;
            r.qm_ = 2 * p.q_;
            break;
        case 0:
            r.q_ = 2 * p.q_;
            r.qm_ = 2 * p.qm_ + 1;
            break;
        default:
            r.q_ = 2 * p.qm_ + 1;
            r.qm_ = 2 * p.qm_;
            break;
    }
    return r;
}

std::string OtfcPair::render(int128 v) const {
    // j fraction bits plus one sign position; the register value lies in [-1, 1).
    std::string s;
    s += ((v >> j_) & 1) ? '1' : '0';
    s += '.';
    for (int i = j_ - 1; i >= 0; --i) s += ((v >> i) & 1) ? '1' : '0';
    return s;
}

}  // namespace olm
