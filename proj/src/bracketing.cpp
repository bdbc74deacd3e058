#include "vfcomb/bracketing.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

namespace vfcomb {

namespace {

using Kind = BracketToken::Kind;

bool is_open(Kind k) { return k == Kind::OpenRound || k == Kind::OpenSquare; }
bool is_close(Kind k) { return k == Kind::CloseRound || k == Kind::CloseSquare; }
bool is_round(Kind k) { return k == Kind::OpenRound || k == Kind::CloseRound; }

std::string describe(const std::vector<BracketIssue>& issues) {
    std::ostringstream os;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i) os << "; ";
        os << "rule " << issues[i].rule << " at " << issues[i].position << ": "
           << issues[i].message;
    }
    return os.str();
}

struct Matched {
    std::size_t open;   // token index
    std::size_t close;  // token index
    bool round;
};

// Backtracking generator following the three-branch construction:
//   s_n = "s" s_{n-1} | "(s" s_{2a} "s)" s_b | "[s" s_{2a} "s]" s_b
class Generator {
public:
    explicit Generator(const std::function<bool(std::span<const Pair>)>& visit) : visit_(visit) {}

    bool run(int length) {
        return fill(0, length, [this] {
            sorted_ = pairs_;
            std::sort(sorted_.begin(), sorted_.end());
            return visit_(sorted_);
        });
    }

private:
    bool fill(int start, int length, const std::function<bool()>& rest) {
        if (length == 0) return rest();
        if (!fill(start + 1, length - 1, rest)) return false;
        for (PairKind kind : {PairKind::Round, PairKind::Square}) {
            for (int inner = 0; inner + 2 <= length; inner += 2) {
                const int tail = length - 2 - inner;
                pairs_.push_back({start, start + inner + 1, kind});
                const bool more = fill(start + 1, inner, [&] {
                    return fill(start + inner + 2, tail, rest);
                });
                pairs_.pop_back();
                if (!more) return false;
            }
        }
        return true;
    }

    const std::function<bool(std::span<const Pair>)>& visit_;
    std::vector<Pair> pairs_;
    std::vector<Pair> sorted_;
};

}  // namespace

BracketError::BracketError(std::vector<BracketIssue> issues)
    : std::invalid_argument(describe(issues)), issues_(std::move(issues)) {}

bool BracketError::violates(int rule) const {
    return std::any_of(issues_.begin(), issues_.end(),
                       [rule](const BracketIssue& i) { return i.rule == rule; });
}

std::vector<BracketToken> tokenize(std::string_view text) {
    const bool spaced = std::any_of(text.begin(), text.end(),
                                    [](unsigned char c) { return std::isspace(c); });
    std::vector<BracketToken> tokens;
    for (std::size_t i = 0; i < text.size();) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i + 1;
            if (spaced) {
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            }
            if (j - i > 9) {
                throw BracketError({{0, i, "element index too long"}});
            }
            tokens.push_back({Kind::Element, std::stoi(std::string(text.substr(i, j - i))), i});
            i = j;
            continue;
        }
        switch (c) {
            case '(': tokens.push_back({Kind::OpenRound, -1, i}); break;
            case ')': tokens.push_back({Kind::CloseRound, -1, i}); break;
            case '[': tokens.push_back({Kind::OpenSquare, -1, i}); break;
            case ']': tokens.push_back({Kind::CloseSquare, -1, i}); break;
            default:
                throw BracketError(
                    {{0, i, std::string("unexpected character '") + text[i] + "'"}});
        }
        ++i;
    }
    return tokens;
}

Bracketing parse_bracketing(std::string_view text) {
    const auto tokens = tokenize(text);
    std::vector<BracketIssue> issues;
    auto report = [&issues](int rule, std::size_t position, std::string message) {
        const bool seen = std::any_of(issues.begin(), issues.end(),
                                      [rule](const BracketIssue& i) { return i.rule == rule; });
        if (!seen) issues.push_back({rule, position, std::move(message)});
    };

    // Element indices must run 0, 1, 2, ... in order.
    int expected = 0;
    for (const auto& t : tokens) {
        if (t.kind != Kind::Element) continue;
        if (t.element != expected) {
            report(0, t.position,
                   "expected element " + std::to_string(expected) + ", found " +
                       std::to_string(t.element));
        }
        ++expected;
    }
    const int length = expected;

    // Rule 3: successive opening (closing) brackets need an element between.
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Kind a = tokens[i - 1].kind;
        const Kind b = tokens[i].kind;
        if ((is_open(a) && is_open(b)) || (is_close(a) && is_close(b))) {
            report(3, tokens[i].position, "no element between successive brackets");
        }
    }

    // Rules 1 and 2, matching each bracket type separately.
    std::vector<Matched> matched;
    for (bool round : {true, false}) {
        std::vector<std::size_t> stack;
        std::size_t opens = 0, closes = 0;
        std::size_t first_unmatched = text.size();
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            const Kind k = tokens[i].kind;
            if (k == Kind::Element || is_round(k) != round) continue;
            if (is_open(k)) {
                ++opens;
                stack.push_back(i);
            } else {
                ++closes;
                if (stack.empty()) {
                    report(2, tokens[i].position,
                           std::string("closing ") + (round ? "')'" : "']'") +
                               " without a matching opening bracket");
                    first_unmatched = std::min(first_unmatched, tokens[i].position);
                } else {
                    matched.push_back({stack.back(), i, round});
                    stack.pop_back();
                }
            }
        }
        if (!stack.empty()) first_unmatched = std::min(first_unmatched, tokens[stack.front()].position);
        if (opens != closes) {
            report(1, first_unmatched == text.size() ? 0 : first_unmatched,
                   std::to_string(opens) + " opening and " + std::to_string(closes) + " closing " +
                       (round ? "round" : "square") + " brackets");
        }
    }
    std::sort(matched.begin(), matched.end(),
              [](const Matched& a, const Matched& b) { return a.open < b.open; });

    // Rule 4: a positive even number of elements inside each pair.
    for (const auto& m : matched) {
        const auto inside = std::count_if(tokens.begin() + static_cast<std::ptrdiff_t>(m.open) + 1,
                                          tokens.begin() + static_cast<std::ptrdiff_t>(m.close),
                                          [](const BracketToken& t) { return t.kind == Kind::Element; });
        if (inside == 0 || inside % 2 != 0) {
            report(4, tokens[m.open].position,
                   "pair encloses " + std::to_string(inside) + " elements");
        }
    }

    // Rule 5: square pairs must not cross round pairs.
    for (std::size_t i = 0; i < matched.size(); ++i) {
        for (std::size_t j = i + 1; j < matched.size(); ++j) {
            const auto& a = matched[i];
            const auto& b = matched[j];
            if (a.round == b.round) continue;
            if (b.open < a.close && a.close < b.close) {
                report(5, tokens[b.open].position, "square and round brackets cross");
            }
        }
    }

    if (!issues.empty()) {
        std::sort(issues.begin(), issues.end(),
                  [](const BracketIssue& a, const BracketIssue& b) { return a.rule < b.rule; });
        throw BracketError(std::move(issues));
    }

    Bracketing out;
    out.length = length;
    for (const auto& m : matched) {
        // Rule 3 guarantees elements just inside both tokens.
        out.pairs.push_back({tokens[m.open + 1].element, tokens[m.close - 1].element,
                             m.round ? PairKind::Round : PairKind::Square});
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    if (auto defect = pairing_defect(length, out.pairs); !defect.empty()) {
        throw BracketError({{0, 0, defect}});
    }
    return out;
}

PairingConfig parse(std::string_view text) {
    auto parsed = parse_bracketing(text);
    if (parsed.length % 2 != 0) {
        throw BracketError({{0, text.size(),
                             "odd element count " + std::to_string(parsed.length) +
                                 " is not 2d-2 for any degree"}});
    }
    return PairingConfig(parsed.length / 2 + 1, std::move(parsed.pairs));
}

std::string render(int length, std::span<const Pair> pairs) {
    std::vector<int> opens(static_cast<std::size_t>(length), -1);
    std::vector<int> closes(static_cast<std::size_t>(length), -1);
    for (const auto& p : pairs) {
        opens[p.low] = p.kind == PairKind::Round ? 0 : 1;
        closes[p.high] = p.kind == PairKind::Round ? 0 : 1;
    }
    const bool spaced = length > 10;
    std::string out;
    bool after_element = false;
    for (int i = 0; i < length; ++i) {
        if (opens[i] >= 0) {
            out += opens[i] == 0 ? '(' : '[';
        } else if (spaced && after_element) {
            out += ' ';
        }
        out += std::to_string(i);
        after_element = true;
        if (closes[i] >= 0) {
            out += closes[i] == 0 ? ')' : ']';
            after_element = false;
        }
    }
    return out;
}

std::string render(const PairingConfig& config) { return render(config.size(), config.pairs()); }

void enumerate_bracketings(int length, const std::function<bool(std::span<const Pair>)>& visit) {
    if (length < 0) throw std::domain_error("element count must be non-negative");
    Generator(visit).run(length);
}

void enumerate(int degree, const std::function<bool(const PairingConfig&)>& visit) {
    if (degree < 1) throw std::domain_error("degree must be at least 1");
    enumerate_bracketings(2 * degree - 2, [&](std::span<const Pair> pairs) {
        return visit(PairingConfig(degree, std::vector<Pair>(pairs.begin(), pairs.end())));
    });
}

std::vector<PairingConfig> enumerate_all(int degree) {
    std::vector<PairingConfig> out;
    enumerate(degree, [&out](const PairingConfig& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

void sort_lexicographically(std::vector<PairingConfig>& configs) {
    std::vector<std::pair<std::string, PairingConfig>> keyed;
    keyed.reserve(configs.size());
    for (auto& c : configs) keyed.emplace_back(render(c), std::move(c));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < keyed.size(); ++i) configs[i] = std::move(keyed[i].second);
}

BigInt brute_count(int length) {
    if (length < 0) throw std::domain_error("element count must be non-negative");
    std::uint64_t count = 0;
    enumerate_bracketings(length, [&count](std::span<const Pair>) {
        ++count;
        return true;
    });
    return BigInt(static_cast<unsigned long>(count));
}

}  // namespace vfcomb
