#include "vfcomb/core_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vfcomb {

namespace {

bool in_range(int value, int n) { return value >= 0 && value < n; }

int mod(int value, int n) { return ((value % n) + n) % n; }

std::string join(std::span<const int> values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    return os.str();
}

// Chords (a,b), (c,e) with a<b and c<e interleave as intervals.
bool chords_cross(int a, int b, int c, int e) {
    return (a < c && c < b && b < e) || (c < a && a < e && e < b);
}

// For two disjoint sorted blocks, returns an alternating witness
// x<y<z<w (x,z in one block, y,w in the other), or an empty vector.
std::vector<int> interleaving_witness(const std::vector<int>& lhs, const std::vector<int>& rhs) {
    std::vector<std::pair<int, int>> merged;
    for (int v : lhs) merged.emplace_back(v, 0);
    for (int v : rhs) merged.emplace_back(v, 1);
    std::sort(merged.begin(), merged.end());

    std::vector<int> witness;
    int want = -1;
    for (const auto& [value, side] : merged) {
        if (witness.empty() || side == want) {
            if (witness.empty()) want = side;
            witness.push_back(value);
            want = 1 - side;
            if (witness.size() == 4) return witness;
        }
    }
    return {};
}

void check_marked_range(const std::vector<int>& marked, int n, const char* name,
                        ValidationReport& report) {
    std::vector<int> seen(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (int v : marked) {
        if (!in_range(v, n)) {
            report.violations.push_back({Violation::Kind::Domain, {v},
                                         std::string(name) + " index " + std::to_string(v) +
                                             " out of range"});
            continue;
        }
        if (seen[v]++) {
            report.violations.push_back({Violation::Kind::Domain, {v},
                                         std::string(name) + " index " + std::to_string(v) +
                                             " listed twice"});
        }
    }
}

// Predecessor of each index within its class, in circular order.
// Walking arc e_l counterclockwise reaches s_l; the cell boundary then
// runs in to the landing point and back out along the class member
// just before l.
std::vector<int> class_predecessor(const SeparatrixData& data) {
    const int n = 2 * data.degree - 2;
    std::vector<int> prev(static_cast<std::size_t>(n));
    std::iota(prev.begin(), prev.end(), 0);
    for (auto block : data.classes) {
        std::sort(block.begin(), block.end());
        for (std::size_t i = 0; i < block.size(); ++i) {
            prev[block[(i + 1) % block.size()]] = block[i];
        }
    }
    return prev;
}

void require_valid(const ValidationReport& report, const char* what) {
    if (report.ok()) return;
    std::string message = std::string(what) + ": " + report.violations.front().message;
    if (report.violations.size() > 1) {
        message += " (+" + std::to_string(report.violations.size() - 1) + " more)";
    }
    throw std::invalid_argument(message);
}

}  // namespace

std::string pairing_defect(int n, std::span<const Pair> pairs) {
    std::vector<int> used(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (const auto& p : pairs) {
        if (!in_range(p.low, n) || !in_range(p.high, n) || p.low >= p.high) {
            return "pair (" + std::to_string(p.low) + "," + std::to_string(p.high) +
                   ") out of range or not ordered";
        }
        if ((p.high - p.low) % 2 == 0) {
            return "pair (" + std::to_string(p.low) + "," + std::to_string(p.high) +
                   ") joins indices of equal parity";
        }
        if (used[p.low]++ || used[p.high]++) {
            return "index used by two pairs in (" + std::to_string(p.low) + "," +
                   std::to_string(p.high) + ")";
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (chords_cross(pairs[i].low, pairs[i].high, pairs[j].low, pairs[j].high)) {
                return "pairs (" + std::to_string(pairs[i].low) + "," +
                       std::to_string(pairs[i].high) + ") and (" + std::to_string(pairs[j].low) +
                       "," + std::to_string(pairs[j].high) + ") cross";
            }
        }
    }
    return {};
}

PairingConfig::PairingConfig(int degree, std::vector<Pair> pairs)
    : degree_(degree), pairs_(std::move(pairs)) {
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    std::sort(pairs_.begin(), pairs_.end());
    if (auto defect = pairing_defect(size(), pairs_); !defect.empty()) {
        throw std::invalid_argument(defect);
    }
}

std::vector<int> PairingConfig::unpaired() const {
    std::vector<char> paired(static_cast<std::size_t>(size()), 0);
    for (const auto& p : pairs_) paired[p.low] = paired[p.high] = 1;
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (!paired[i]) out.push_back(i);
    }
    return out;
}

SeparatrixData SeparatrixData::canonical() const {
    SeparatrixData out{degree, classes, homoclinic};
    for (auto& block : out.classes) std::sort(block.begin(), block.end());
    std::sort(out.classes.begin(), out.classes.end());
    std::sort(out.homoclinic.begin(), out.homoclinic.end());
    return out;
}

TransversalData TransversalData::canonical() const {
    TransversalData out{degree, involution, homoclinic, transversal};
    std::sort(out.homoclinic.begin(), out.homoclinic.end());
    std::sort(out.transversal.begin(), out.transversal.end());
    return out;
}

bool ValidationReport::has(Violation::Kind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_separatrix(const SeparatrixData& data) {
    ValidationReport report;
    if (data.degree < 1) {
        report.violations.push_back(
            {Violation::Kind::Domain, {}, "degree " + std::to_string(data.degree) + " < 1"});
        return report;
    }
    const int n = 2 * data.degree - 2;

    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (const auto& block : data.classes) {
        if (block.empty()) {
            report.violations.push_back({Violation::Kind::Partition, {}, "empty class"});
        }
        for (int v : block) {
            if (!in_range(v, n)) {
                report.violations.push_back({Violation::Kind::Domain, {v},
                                             "index " + std::to_string(v) + " out of range"});
            } else {
                ++count[v];
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (count[i] == 0) {
            report.violations.push_back({Violation::Kind::Partition, {i},
                                         "index " + std::to_string(i) + " in no class"});
        } else if (count[i] > 1) {
            report.violations.push_back({Violation::Kind::Partition, {i},
                                         "index " + std::to_string(i) + " in several classes"});
        }
    }

    check_marked_range(data.homoclinic, n, "homoclinic", report);
    std::vector<char> in_h(static_cast<std::size_t>(n), 0);
    for (int v : data.homoclinic) {
        if (in_range(v, n)) in_h[v] = 1;
    }

    std::vector<std::vector<int>> blocks;
    for (auto block : data.classes) {
        std::erase_if(block, [n](int v) { return !in_range(v, n); });
        std::sort(block.begin(), block.end());
        blocks.push_back(block);
    }

    for (const auto& block : blocks) {
        const auto marked = std::count_if(block.begin(), block.end(), [&](int v) { return in_h[v]; });
        if (marked == 0) continue;
        if (marked != static_cast<long>(block.size()) || block.size() != 2) {
            report.violations.push_back({Violation::Kind::HomoclinicPair, block,
                                         "class {" + join(block) +
                                             "} meets H but is not a homoclinic pair"});
        } else if ((block[0] - block[1]) % 2 == 0) {
            report.violations.push_back({Violation::Kind::Parity, block,
                                         "homoclinic pair {" + join(block) +
                                             "} joins indices of equal parity"});
        }
    }

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            auto witness = interleaving_witness(blocks[i], blocks[j]);
            if (!witness.empty()) {
                report.violations.push_back({Violation::Kind::Crossing, witness,
                                             "classes {" + join(blocks[i]) + "} and {" +
                                                 join(blocks[j]) + "} cross"});
            }
        }
    }
    return report;
}

ValidationReport validate_transversal(const TransversalData& data) {
    ValidationReport report;
    if (data.degree < 1) {
        report.violations.push_back(
            {Violation::Kind::Domain, {}, "degree " + std::to_string(data.degree) + " < 1"});
        return report;
    }
    const int n = 2 * data.degree - 2;
    const auto& iota = data.involution;
    if (static_cast<int>(iota.size()) != n) {
        report.violations.push_back({Violation::Kind::Domain, {},
                                     "involution has " + std::to_string(iota.size()) +
                                         " entries, expected " + std::to_string(n)});
        return report;
    }
    bool well_defined = true;
    for (int l = 0; l < n; ++l) {
        if (!in_range(iota[l], n)) {
            report.violations.push_back({Violation::Kind::Domain, {l},
                                         "image of " + std::to_string(l) + " out of range"});
            well_defined = false;
        }
    }
    if (well_defined) {
        for (int l = 0; l < n; ++l) {
            if (iota[iota[l]] != l) {
                report.violations.push_back({Violation::Kind::NotInvolution, {l, iota[l]},
                                             "iota(iota(" + std::to_string(l) + ")) != " +
                                                 std::to_string(l)});
            }
        }
    }

    check_marked_range(data.homoclinic, n, "homoclinic", report);
    check_marked_range(data.transversal, n, "transversal", report);
    std::vector<char> in_h(static_cast<std::size_t>(n), 0), in_t(static_cast<std::size_t>(n), 0);
    for (int v : data.homoclinic) {
        if (in_range(v, n)) in_h[v] = 1;
    }
    for (int v : data.transversal) {
        if (in_range(v, n)) in_t[v] = 1;
    }
    for (int l = 0; l < n; ++l) {
        if (in_h[l] && in_t[l]) {
            report.violations.push_back({Violation::Kind::MarkedSets, {l},
                                         "index " + std::to_string(l) + " is in both H and T"});
        }
    }
    if (!well_defined || report.has(Violation::Kind::NotInvolution)) return report;

    std::vector<std::pair<int, int>> chords;
    for (int l = 0; l < n; ++l) {
        const int m = iota[l];
        if (m == l) {
            if (in_h[l] || in_t[l]) {
                report.violations.push_back({Violation::Kind::MarkedSets, {l},
                                             "fixed point " + std::to_string(l) + " is marked"});
            }
            continue;
        }
        if (l > m) continue;
        chords.emplace_back(l, m);
        if ((m - l) % 2 == 0) {
            report.violations.push_back({Violation::Kind::Parity, {l, m},
                                         "pair " + std::to_string(l) + "<->" + std::to_string(m) +
                                             " joins indices of equal parity"});
        }
        const bool both_h = in_h[l] && in_h[m];
        const bool both_t = in_t[l] && in_t[m];
        if (!both_h && !both_t) {
            report.violations.push_back({Violation::Kind::MarkedSets, {l, m},
                                         "pair " + std::to_string(l) + "<->" + std::to_string(m) +
                                             " is not contained in H or in T"});
        }
    }
    for (std::size_t i = 0; i < chords.size(); ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            const auto [a, b] = chords[i];
            const auto [c, e] = chords[j];
            if (chords_cross(a, b, c, e)) {
                report.violations.push_back(
                    {Violation::Kind::Crossing, {a, b, c, e},
                     "chords " + std::to_string(a) + "-" + std::to_string(b) + " and " +
                         std::to_string(c) + "-" + std::to_string(e) + " cross"});
            }
        }
    }
    return report;
}

std::string_view to_string(CellKind kind) {
    switch (kind) {
        case CellKind::AlphaOmega: return "alpha_omega";
        case CellKind::OddSepal: return "odd_sepal";
        case CellKind::EvenSepal: return "even_sepal";
        case CellKind::OddCenter: return "odd_center";
        case CellKind::EvenCenter: return "even_center";
        case CellKind::Unclassifiable: return "unclassifiable";
    }
    return "unclassifiable";
}

// Walking a cell boundary with the cell on the left: after the arc of end
// e_l comes the separatrix s_l; following its chord or landing star to the
// next member of its class, s_succ(l), we continue along e_{succ(l)+1}.
// Each cell is one cycle of l -> succ(l)+1 on the ends.
std::vector<SeparatrixCell> separatrix_cells(const SeparatrixData& data) {
    require_valid(validate_separatrix(data), "invalid separatrix data");
    const int n = 2 * data.degree - 2;
    if (n == 0) return {};

    const auto prev = class_predecessor(data);
    std::vector<char> in_h(static_cast<std::size_t>(n), 0);
    for (int v : data.homoclinic) in_h[v] = 1;

    std::vector<SeparatrixCell> cells;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        SeparatrixCell cell;
        int flips = 0;
        int landing_steps = 0;
        for (int end = start; !visited[end]; end = mod(prev[end] + 1, n)) {
            visited[end] = 1;
            cell.ends.push_back(end);
            if (in_h[end]) {
                cell.homoclinics.push_back(end);
                continue;
            }
            ++landing_steps;
            cell.free_ends.push_back(end);
            // A landing step preserves end parity exactly when it passes
            // from an incoming to an outgoing separatrix (or back).
            if ((prev[end] - end) % 2 == 0) ++flips;
        }

        const bool odd = cell.ends.front() % 2 != 0;
        if (landing_steps == 0) {
            cell.kind = odd ? CellKind::OddCenter : CellKind::EvenCenter;
        } else if (landing_steps == 1 && flips == 0) {
            cell.kind = odd ? CellKind::OddSepal : CellKind::EvenSepal;
        } else if (landing_steps == 2 && flips == 2) {
            cell.kind = CellKind::AlphaOmega;
        } else {
            cell.kind = CellKind::Unclassifiable;
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

CellReport classify_cells(const SeparatrixData& data) {
    CellReport report;
    for (const auto& cell : separatrix_cells(data)) {
        switch (cell.kind) {
            case CellKind::AlphaOmega: ++report.alpha_omega; break;
            case CellKind::OddSepal: ++report.odd_sepal; break;
            case CellKind::EvenSepal: ++report.even_sepal; break;
            case CellKind::OddCenter: ++report.odd_center; break;
            case CellKind::EvenCenter: ++report.even_center; break;
            case CellKind::Unclassifiable:
                throw std::invalid_argument("cell touching ends {" + join(cell.ends) +
                                            "} is none of the five admissible kinds");
        }
    }
    return report;
}

TransversalData to_transversal(const SeparatrixData& data) {
    const auto cells = separatrix_cells(data);
    const int n = 2 * data.degree - 2;
    TransversalData out;
    out.degree = data.degree;
    out.involution.resize(static_cast<std::size_t>(n));
    std::iota(out.involution.begin(), out.involution.end(), 0);

    for (const auto& block : data.classes) {
        if (block.size() == 2 && std::find(data.homoclinic.begin(), data.homoclinic.end(),
                                           block[0]) != data.homoclinic.end()) {
            out.involution[block[0]] = block[1];
            out.involution[block[1]] = block[0];
        }
    }
    out.homoclinic = data.homoclinic;

    for (const auto& cell : cells) {
        if (cell.kind == CellKind::Unclassifiable) {
            throw std::invalid_argument("cell touching ends {" + join(cell.ends) +
                                        "} is none of the five admissible kinds");
        }
        if (cell.kind != CellKind::AlphaOmega) continue;
        const int a = cell.free_ends[0];
        const int b = cell.free_ends[1];
        out.involution[a] = b;
        out.involution[b] = a;
        out.transversal.push_back(a);
        out.transversal.push_back(b);
    }
    return out.canonical();
}

// Transversal disk model boundary: position 2l holds the end point e_l,
// position 2l+1 the separatrix point s_l. Arc p runs from position p to
// p+1; a cell is a cycle of arcs, jumping across chords at endpoints.
std::vector<TransversalCell> transversal_cells(const TransversalData& data) {
    require_valid(validate_transversal(data), "invalid transversal data");
    const int n = 2 * data.degree - 2;
    if (n == 0) return {TransversalCell{}};

    const int positions = 2 * n;
    std::vector<int> partner(static_cast<std::size_t>(positions), -1);
    std::vector<char> in_h(static_cast<std::size_t>(n), 0);
    for (int v : data.homoclinic) in_h[v] = 1;
    for (int l = 0; l < n; ++l) {
        const int m = data.involution[l];
        if (m == l) continue;
        if (in_h[l]) {
            partner[2 * l + 1] = 2 * m + 1;
        } else {
            partner[2 * l] = 2 * m;
        }
    }

    std::vector<TransversalCell> cells;
    std::vector<char> visited(static_cast<std::size_t>(positions), 0);
    for (int start = 0; start < positions; ++start) {
        if (visited[start]) continue;
        TransversalCell cell;
        int arc = start;
        while (!visited[arc]) {
            visited[arc] = 1;
            if (arc % 2 == 0) cell.ends.push_back(arc / 2);
            const int vertex = (arc + 1) % positions;
            if (partner[vertex] >= 0) {
                if (vertex % 2 == 0) cell.ends.push_back(vertex / 2);
                arc = partner[vertex];
            } else {
                if (vertex % 2 == 1) cell.landing.push_back(vertex / 2);
                arc = vertex;
            }
        }
        std::sort(cell.landing.begin(), cell.landing.end());
        std::sort(cell.ends.begin(), cell.ends.end());
        cell.ends.erase(std::unique(cell.ends.begin(), cell.ends.end()), cell.ends.end());
        cells.push_back(std::move(cell));
    }
    return cells;
}

SeparatrixData to_separatrix(const TransversalData& data) {
    const auto cells = transversal_cells(data);
    SeparatrixData out;
    out.degree = data.degree;
    out.homoclinic = data.homoclinic;
    std::vector<char> in_h(static_cast<std::size_t>(2 * data.degree - 2), 0);
    for (int v : data.homoclinic) in_h[v] = 1;
    for (int l = 0; l < 2 * data.degree - 2; ++l) {
        if (in_h[l] && l < data.involution[l]) out.classes.push_back({l, data.involution[l]});
    }
    for (const auto& cell : cells) {
        if (!cell.landing.empty()) out.classes.push_back(cell.landing);
    }
    return out.canonical();
}

TransversalData to_transversal_data(const PairingConfig& config) {
    TransversalData out;
    out.degree = config.degree();
    out.involution.resize(static_cast<std::size_t>(config.size()));
    std::iota(out.involution.begin(), out.involution.end(), 0);
    for (const auto& p : config.pairs()) {
        out.involution[p.low] = p.high;
        out.involution[p.high] = p.low;
        auto& marked = p.kind == PairKind::Round ? out.homoclinic : out.transversal;
        marked.push_back(p.low);
        marked.push_back(p.high);
    }
    return out.canonical();
}

PairingConfig to_pairing(const TransversalData& data) {
    require_valid(validate_transversal(data), "invalid transversal data");
    std::vector<char> in_h(static_cast<std::size_t>(2 * data.degree - 2), 0);
    for (int v : data.homoclinic) in_h[v] = 1;
    std::vector<Pair> pairs;
    for (int l = 0; l < 2 * data.degree - 2; ++l) {
        const int m = data.involution[l];
        if (l < m) pairs.push_back({l, m, in_h[l] ? PairKind::Round : PairKind::Square});
    }
    return PairingConfig(data.degree, std::move(pairs));
}

Dimension invariants_of(const PairingConfig& config) {
    Dimension out;
    for (const auto& p : config.pairs()) {
        if (p.kind == PairKind::Round) {
            ++out.h;
        } else {
            ++out.s;
        }
    }
    out.q = out.h + 2 * out.s;
    return out;
}

}  // namespace vfcomb
