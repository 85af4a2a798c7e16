#pragma once
// Two-word carry-save residual of the online multiplier datapath.

#include <cstdint>

#include "olm/sdnum.hpp"

namespace olm {

/// Carry positions a [4:2] compressor built from two 3:2 levels can move a
/// bit toward the MSB within one addition.
inline constexpr int kCompressorCarryReach = 2;

struct CarrySave {
    std::uint64_t sum = 0;
    std::uint64_t carry = 0;
};

/// Bitwise [4:2] compression of four words into sum and carry, truncated to
/// the bits of mask.  Level one adds (a, b, c), level two adds d.
CarrySave compress42(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d,
                     std::uint64_t mask);

/// Residual held as two (ib + W)-bit two's-complement words S and C with W
/// fractional positions.  Position i (1..W) has weight 2^-i.  Words wrap at
/// the datapath width like the hardware registers.
class ResidualCS {
public:
    ResidualCS(int ib, int frac_bits);

    /// Words from exact values; each must be a multiple of 2^-W in
    /// [-2^(ib-1), 2^(ib-1)).  Throws std::invalid_argument.
    static ResidualCS from_values(const ExactValue& s, const ExactValue& c, int ib, int frac_bits);

    int ib() const { return ib_; }
    int frac_bits() const { return w_; }
    int total_bits() const { return ib_ + w_; }
    std::uint64_t s_bits() const { return s_; }
    std::uint64_t c_bits() const { return c_; }

    /// Signed word values numerator·2^-W.
    std::int64_t s_numerator() const { return to_signed(s_); }
    std::int64_t c_numerator() const { return to_signed(c_); }

    /// 2w: both words shift one position toward the MSB.
    void shift_left();
    /// Adds two fixed-point terms (numerators at scale 2^-W) through a [4:2]
    /// compressor together with the two residual words.
    void add_terms(std::int64_t a, std::int64_t b);
    /// Clears positions deeper than keep in both words and returns the
    /// discarded amount (numerator at scale 2^-W, always >= 0).
    std::int64_t chop_below(int keep);
    /// M block: subtracts digit z from the integer part.
    void subtract_integer(int z);

    friend bool operator==(const ResidualCS&, const ResidualCS&) = default;

private:
    std::int64_t to_signed(std::uint64_t v) const;
    std::uint64_t from_signed(std::int64_t v) const { return std::uint64_t(v) & mask_; }

    int ib_;
    int w_;
    std::uint64_t mask_;
    std::uint64_t s_ = 0;
    std::uint64_t c_ = 0;
};

/// (S + C) reduced into [-2^(ib-1), 2^(ib-1)), numerator at scale 2^-W.
std::int64_t residual_numerator(const ResidualCS& r);
ExactValue residual_value(const ResidualCS& r);

/// Selection estimate as a multiple of 2^-t.
struct Estimate {
    int units = 0;
    int t = 2;

    ExactValue value() const { return ExactValue(units, t); }
    friend bool operator==(const Estimate&, const Estimate&) = default;
};

/// Short carry-propagate addition of the top ib + t bits of S and C (each
/// word truncated first), reduced into the ib-integer-bit range.
Estimate estimate(const ResidualCS& r, int t);

}  // namespace olm
