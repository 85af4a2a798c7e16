#include "olm/operand.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace olm {

SDWord parse_operand(std::string_view text, std::size_t n) {
    if (text.empty()) throw std::invalid_argument("operand: empty string");
    std::vector<SignedDigit> digits;
    if (text.find('.') != std::string_view::npos) {
        if (text.size() < 2 || text.substr(0, 2) != "0.")
            throw std::invalid_argument("operand: binary fraction must start with \"0.\": " + std::string(text));
        for (char ch : text.substr(2)) {
            if (ch == '0') digits.push_back(SignedDigit::zero());
            else if (ch == '1') digits.push_back(SignedDigit::one());
            else throw std::invalid_argument("operand: bad bit '" + std::string(1, ch) + "' in " + std::string(text));
        }
    } else {
        for (char ch : text) {
            if (ch == '+') digits.push_back(SignedDigit::one());
            else if (ch == '0') digits.push_back(SignedDigit::zero());
            else if (ch == '-') digits.push_back(SignedDigit::minus_one());
            else throw std::invalid_argument("operand: bad digit '" + std::string(1, ch) + "' in " + std::string(text));
        }
    }
    if (digits.size() > n)
        throw std::invalid_argument("operand: " + std::string(text) + " has more than " + std::to_string(n) + " digits");
    return SDWord(std::move(digits)).padded(n);
}

}  // namespace olm

namespace olm {

namespace {

SDWord random_signed_digits(std::mt19937_64& rng, int n) {
    std::vector<SignedDigit> d;
    d.reserve(std::size_t(n));
    std::uint64_t bits = 0;
    int left = 0;
    while (int(d.size()) < n) {
        if (left == 0) {
            bits = rng();
            left = 32;
        }
        const auto v = int(bits & 3);
        bits >>= 2;
        --left;
        if (v == 3) continue;  // rejection keeps the three digits equiprobable
        d.push_back(SignedDigit::from_int(v - 1));
    }
    return SDWord(std::move(d));
}

}  // namespace

std::vector<OperandPair> exhaustive_pairs(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("exhaustive_pairs: n must be in [1, 10]");
    const std::uint64_t count = std::uint64_t(1) << n;
    std::vector<SDWord> words;
    words.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) words.push_back(from_unsigned_fraction(v, n));
    std::vector<OperandPair> pairs;
    pairs.reserve(count * count);
    for (const auto& x : words)
        for (const auto& y : words) pairs.push_back({x, y});
    return pairs;
}

std::vector<OperandPair> random_pairs(int n, std::size_t count, std::uint64_t seed, OperandClass kind) {
    if (n < 1 || n > 64) throw std::invalid_argument("random_pairs: n must be in [1, 64]");
    std::mt19937_64 rng(seed);
    std::vector<OperandPair> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (kind == OperandClass::Conventional) {
            SDWord x = from_unsigned_fraction(rng() >> (64 - n), n);
            SDWord y = from_unsigned_fraction(rng() >> (64 - n), n);
            pairs.push_back({std::move(x), std::move(y)});
        } else {
            SDWord x = random_signed_digits(rng, n);
            SDWord y = random_signed_digits(rng, n);
            pairs.push_back({std::move(x), std::move(y)});
        }
    }
    return pairs;
}

}  // namespace olm
