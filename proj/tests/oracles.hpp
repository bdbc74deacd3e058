#pragma once

// Brute-force references for the unit and acceptance tests. None of
// these call the library routine they are used to check.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vfcomb/core_model.hpp"
#include "vfcomb/exact.hpp"

namespace oracle {

using vfcomb::BigInt;
using vfcomb::Pair;
using vfcomb::PairKind;
using vfcomb::Rational;

inline bool chords_cross(const Pair& x, const Pair& y) {
    return (x.low < y.low && y.low < x.high && x.high < y.high) ||
           (y.low < x.low && x.low < y.high && y.high < x.high);
}

// Every partial matching of 0..n-1 with each chord coloured round or
// square, kept when chords join opposite parities and never cross.
inline std::vector<std::vector<Pair>> typed_matchings(int n) {
    std::vector<std::vector<Pair>> out;
    std::vector<int> partner(static_cast<std::size_t>(n), -2);
    std::vector<Pair> chords;
    std::function<void()> step = [&] {
        int i = 0;
        while (i < n && partner[i] != -2) ++i;
        if (i == n) {
            for (const auto& c : chords) {
                if ((c.high - c.low) % 2 == 0) return;
            }
            for (std::size_t a = 0; a < chords.size(); ++a) {
                for (std::size_t b = a + 1; b < chords.size(); ++b) {
                    if (chords_cross(chords[a], chords[b])) return;
                }
            }
            auto sorted = chords;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(sorted);
            return;
        }
        partner[i] = -1;  // fixed point
        step();
        for (int j = i + 1; j < n; ++j) {
            if (partner[j] != -2) continue;
            partner[i] = j;
            partner[j] = i;
            for (PairKind kind : {PairKind::Round, PairKind::Square}) {
                chords.push_back({i, j, kind});
                step();
                chords.pop_back();
            }
            partner[j] = -2;
        }
        partner[i] = -2;
    };
    step();
    return out;
}

inline int dimension_of(const std::vector<Pair>& pairs) {
    int q = 0;
    for (const auto& p : pairs) q += p.kind == PairKind::Round ? 1 : 2;
    return q;
}

// c_{d,q} by histogram over typed_matchings(2d-2).
inline std::vector<BigInt> dimension_histogram(int degree) {
    std::vector<BigInt> hist(static_cast<std::size_t>(2 * degree - 1), BigInt(0));
    for (const auto& m : typed_matchings(2 * degree - 2)) ++hist[dimension_of(m)];
    return hist;
}

// (s, h) -> count by histogram.
inline std::map<std::pair<int, int>, BigInt> type_histogram(int degree) {
    std::map<std::pair<int, int>, BigInt> hist;
    for (const auto& m : typed_matchings(2 * degree - 2)) {
        int s = 0, h = 0;
        for (const auto& p : m) (p.kind == PairKind::Square ? s : h) += 1;
        ++hist[{s, h}];
    }
    return hist;
}

// All set partitions of 0..n-1 in restricted-growth form.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> step = [&](int i) {
        if (i == n) {
            out.push_back(blocks);
            return;
        }
        // Index loop: the recursion may reallocate `blocks`.
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            step(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        step(i + 1);
        blocks.pop_back();
    };
    step(0);
    return out;
}

inline bool partition_noncrossing(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> owner;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int v : blocks[b]) {
            if (static_cast<std::size_t>(v) >= owner.size()) owner.resize(v + 1, -1);
            owner[v] = static_cast<int>(b);
        }
    }
    const int n = static_cast<int>(owner.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b])
                        return false;
    return true;
}

// Non-crossing partitions with every admissible homoclinic marking: any
// two-element opposite-parity block may or may not be marked.
inline std::vector<vfcomb::SeparatrixData> separatrix_candidates(int degree) {
    std::vector<vfcomb::SeparatrixData> out;
    for (const auto& blocks : set_partitions(2 * degree - 2)) {
        if (!partition_noncrossing(blocks)) continue;
        std::vector<std::size_t> markable;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].size() == 2 && (blocks[b][1] - blocks[b][0]) % 2 != 0) markable.push_back(b);
        }
        for (unsigned long mask = 0; mask < (1ul << markable.size()); ++mask) {
            vfcomb::SeparatrixData data{degree, blocks, {}};
            for (std::size_t k = 0; k < markable.size(); ++k) {
                if (mask & (1ul << k)) {
                    for (int v : blocks[markable[k]]) data.homoclinic.push_back(v);
                }
            }
            out.push_back(std::move(data));
        }
    }
    return out;
}

// Shift by 2m on the raw pairs, independent of vfcomb::rotate.
inline std::vector<Pair> shift_pairs(const std::vector<Pair>& pairs, int n, int m) {
    std::vector<Pair> out;
    for (const auto& p : pairs) {
        const int a = ((p.low + 2 * m) % n + n) % n;
        const int b = ((p.high + 2 * m) % n + n) % n;
        out.push_back({std::min(a, b), std::max(a, b), p.kind});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Orbits under the shift, counted by union-find over typed_matchings.
inline long orbit_count(int degree) {
    const int n = 2 * degree - 2;
    const auto all = typed_matchings(n);
    std::map<std::vector<Pair>, int> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
    std::vector<int> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int j = index.at(shift_pairs(all[i], n, 1));
        parent[find(static_cast<int>(i))] = find(j);
    }
    long roots = 0;
    for (std::size_t i = 0; i < all.size(); ++i) roots += find(static_cast<int>(i)) == static_cast<int>(i);
    return roots;
}

// Terminating 2F1 by explicit products for every term.
inline Rational hyper2f1_products(long a, long b, long c, const Rational& z, int terms) {
    Rational sum(0);
    for (int n = 0; n < terms; ++n) {
        Rational term(1);
        for (int i = 0; i < n; ++i) {
            term *= Rational(a + i) * Rational(b + i);
            term /= Rational(c + i) * Rational(i + 1);
        }
        for (int i = 0; i < n; ++i) term *= z;
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

// Truncated power-series product.
inline std::vector<BigInt> series_mul(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    std::vector<BigInt> out(x.size(), BigInt(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; i + j < x.size(); ++j) out[i + j] += x[i] * y[j];
    return out;
}

// Crude XML check: tags balance and every attribute value is quoted.
inline bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while ((i = text.find('<', i)) != std::string::npos) {
        const std::size_t close = text.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        const bool self_closing = tag.back() == '/';
        const std::string name = tag.substr(0, tag.find_first_of(" /"));
        if (!self_closing) stack.push_back(name);
    }
    return stack.empty();
}

inline int count_substring(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t i = text.find(needle); i != std::string::npos; i = text.find(needle, i + 1)) ++count;
    return count;
}

}  // namespace oracle
