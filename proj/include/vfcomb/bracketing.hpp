#pragma once

// The bracket language. A configuration on 0..n-1 is written as the
// element string with round brackets for homoclinic pairs and square
// brackets for transversal pairs; each bracket binds the element just
// inside its opening token to the element just inside its closing one.
//
//   [01][2[34]5]     (0123)[45](67)     (10 11 ...) once n > 10

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vfcomb/core_model.hpp"
#include "vfcomb/exact.hpp"

namespace vfcomb {

struct BracketToken {
    enum class Kind { Element, OpenRound, CloseRound, OpenSquare, CloseSquare };

    Kind kind;
    int element = -1;          // for Kind::Element
    std::size_t position = 0;  // character offset in the source text
};

/// Lexes `text` into tokens. Digits are single elements unless the text
/// contains whitespace, in which case maximal digit runs are numbers.
/// Throws BracketError (rule 0) on any other character.
std::vector<BracketToken> tokenize(std::string_view text);

/// A violated validity rule. Rules 1-5:
///   1 unbalanced brackets of one type
///   2 a closing bracket with no open bracket of its type before it
///   3 two opening (or two closing) brackets with no element between
///   4 an odd (or zero) number of elements inside a pair
///   5 a square pair crossing a round pair
/// Rule 0 covers lexical problems and out-of-order element indices.
struct BracketIssue {
    int rule = 0;
    std::size_t position = 0;
    std::string message;
};

class BracketError : public std::invalid_argument {
public:
    explicit BracketError(std::vector<BracketIssue> issues);

    const std::vector<BracketIssue>& issues() const noexcept { return issues_; }
    bool violates(int rule) const;

private:
    std::vector<BracketIssue> issues_;
};

struct Bracketing {
    int length = 0;
    std::vector<Pair> pairs;
};

/// Parses a bracket string on any number of elements and returns the
/// element count and the pairs it encodes. Throws BracketError with one
/// issue per violated rule.
Bracketing parse_bracketing(std::string_view text);

/// Parses a degree configuration (an even number of elements, 2d-2).
PairingConfig parse(std::string_view text);

/// Canonical text. Elements are juxtaposed digits when there are at most
/// ten of them, otherwise adjacent elements are separated by one space.
std::string render(const PairingConfig& config);
std::string render(int length, std::span<const Pair> pairs);

/// Visits every valid configuration of degree d in generation order:
/// strings led by a bare element, then by a round pair, then by a
/// square pair, recursing over all splits 2a+b+2 = n. The visitor
/// returns false to stop early. Throws std::domain_error if d < 1.
void enumerate(int degree, const std::function<bool(const PairingConfig&)>& visit);

/// Same walk on any element count, including odd n.
void enumerate_bracketings(int length, const std::function<bool(std::span<const Pair>)>& visit);

/// All configurations of degree d in generation order.
std::vector<PairingConfig> enumerate_all(int degree);

/// Sorts configurations by rendered text.
void sort_lexicographically(std::vector<PairingConfig>& configs);

/// Number of valid configurations on n elements by exhaustive
/// generation. Throws std::domain_error if n < 0.
BigInt brute_count(int length);

}  // namespace vfcomb
