#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "olm/sdnum.hpp"

namespace olm {

/// Parses an operand of at most n digits and zero-pads it to n.
///
/// Two spellings are accepted:
///   - a binary fraction "0.b1b2...", bits over {0,1};
///   - a signed-digit string over {+,0,-}, most significant digit first.
/// Throws std::invalid_argument on malformed text or too many digits.
SDWord parse_operand(std::string_view text, std::size_t n);

struct OperandPair {
    SDWord x;
    SDWord y;
};

enum class OperandClass { Conventional, SignedDigit };

/// All 4^n pairs of n-bit conventional fractions, x-major.  n <= 10.
std::vector<OperandPair> exhaustive_pairs(int n);

/// count pairs drawn from a seeded std::mt19937_64.  Conventional operands
/// are uniform n-bit fractions; signed-digit operands have independent
/// uniform digits.  The stream depends only on (n, count, seed, kind).
std::vector<OperandPair> random_pairs(int n, std::size_t count, std::uint64_t seed, OperandClass kind);

}  // namespace olm
