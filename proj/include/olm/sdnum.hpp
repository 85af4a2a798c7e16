#pragma once
// Radix-2 signed-digit numbers, exact dyadic values and on-the-fly conversion.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace olm {

using int128 = __int128;

/// A radix-2 signed digit held as a (plus, minus) bit pair.  The pair (1,1)
/// is not a valid encoding and is rejected on construction.
class SignedDigit {
public:
    constexpr SignedDigit() = default;

    /// Throws std::invalid_argument for (1,1).
    static SignedDigit from_bits(int plus, int minus);
    /// Throws std::invalid_argument unless v is -1, 0 or +1.
    static SignedDigit from_int(int v);

    static constexpr SignedDigit one() { return SignedDigit(1, 0); }
    static constexpr SignedDigit zero() { return SignedDigit(0, 0); }
    static constexpr SignedDigit minus_one() { return SignedDigit(0, 1); }

    constexpr int plus() const { return plus_; }
    constexpr int minus() const { return minus_; }
    constexpr int value() const { return int(plus_) - int(minus_); }

    /// '+', '0' or '-'.
    char symbol() const;

    friend constexpr bool operator==(SignedDigit, SignedDigit) = default;

private:
    constexpr SignedDigit(std::uint8_t p, std::uint8_t m) : plus_(p), minus_(m) {}
    std::uint8_t plus_ = 0;
    std::uint8_t minus_ = 0;
};

/// Exact dyadic rational numerator * 2^-scale.  Kept normalized: the
/// numerator is odd unless the value is zero, in which case scale is 0.
/// Arithmetic is overflow-checked and throws std::overflow_error.
class ExactValue {
public:
    ExactValue() = default;
    ExactValue(int128 numerator, int scale);
    static ExactValue from_int(long long v) { return ExactValue(v, 0); }

    int128 numerator() const { return num_; }
    int scale() const { return scale_; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    /// Numerator at a fixed scale >= scale(); throws on overflow.
    int128 numerator_at(int scale) const;
    /// Multiply by 2^k (k may be negative).
    ExactValue shifted(int k) const;
    ExactValue abs() const;

    friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator-(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
    ExactValue operator-() const;

    friend bool operator==(const ExactValue&, const ExactValue&) = default;
    friend std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b);

    double to_double() const;
    /// "n/2^s", or an integer when scale is 0.
    std::string to_string() const;
    /// Terminating decimal expansion, e.g. "-0.375".
    std::string to_decimal() const;

private:
    void normalize();
    int128 num_ = 0;
    int scale_ = 0;
};

/// Digits indexed 1..size(), radix point before digit 1, so digit i has
/// weight 2^-i.
class SDWord {
public:
    SDWord() = default;
    explicit SDWord(std::vector<SignedDigit> digits) : digits_(std::move(digits)) {}
    static SDWord from_ints(std::initializer_list<int> digits);
    static SDWord zeros(std::size_t n) { return SDWord(std::vector<SignedDigit>(n)); }

    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    /// 1-based; positions past the end read as zero.
    SignedDigit digit(std::size_t i) const;
    std::span<const SignedDigit> digits() const { return digits_; }
    void push_back(SignedDigit d) { digits_.push_back(d); }

    /// Zero-extended to n digits; throws std::invalid_argument if longer.
    SDWord padded(std::size_t n) const;
    /// Σ d_i 2^(n-i) for a word of at most n digits.
    int128 scaled_value(std::size_t n) const;
    /// Symbols over {+,0,-}.
    std::string to_string() const;

    friend bool operator==(const SDWord&, const SDWord&) = default;

private:
    std::vector<SignedDigit> digits_;
};

ExactValue sd_value(const SDWord& w);
SDWord from_binary_fraction(std::span<const int> bits);
/// n-bit conventional fraction given as its integer numerator (value/2^n).
SDWord from_unsigned_fraction(std::uint64_t numerator, int n);
ExactValue exact_product(const SDWord& x, const SDWord& y);

/// On-the-fly conversion registers.  Q holds Σ z_i 2^-i in two's complement
/// with one integer (sign) position, QM holds Q - 2^-j.  Both are stored as
/// numerators at scale j and grow by one appended bit per digit.
class OtfcPair {
public:
    OtfcPair() = default;

    int digits() const { return j_; }
    int128 q_numerator() const { return q_; }
    int128 qm_numerator() const { return qm_; }
    ExactValue q() const { return ExactValue(q_, j_); }
    ExactValue qm() const { return ExactValue(qm_, j_); }
    /// Two's complement rendering "s.bbbb" of Q or QM.
    std::string q_bits() const { return render(q_); }
    std::string qm_bits() const { return render(qm_); }

    friend bool operator==(const OtfcPair&, const OtfcPair&) = default;

private:
    friend OtfcPair otfc_update(const OtfcPair& p, SignedDigit z);
    std::string render(int128 v) const;

    int j_ = 0;
    int128 q_ = 0;
    int128 qm_ = -1;
};

/// Maximum number of digits an OtfcPair can hold.
inline constexpr int kMaxOtfcDigits = 120;

/// Appends z: +1 → (Q∥1, Q∥0), 0 → (Q∥0, QM∥1), −1 → (QM∥1, QM∥0).
OtfcPair otfc_update(const OtfcPair& p, SignedDigit z);

}  // namespace olm
