#pragma once

// Combinatorial data sets of monic centered polynomial vector fields.
//
// Indices 0..2d-3 label the asymptotic directions at infinity. Even
// indices are incoming, odd indices outgoing. A single index universe
// serves both separatrices (for homoclinic marks) and ends (for
// transversal marks and fixed points); the two roles never collide.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vfcomb {

/// Kind of a bracket pair: round = homoclinic separatrix,
/// square = distinguished transversal of an alpha-omega zone.
enum class PairKind { Round, Square };

struct Pair {
    int low = 0;
    int high = 0;
    PairKind kind = PairKind::Round;

    friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Canonical combinatorial class: a typed non-crossing pairing on
/// 0..2d-3. Pairs are kept sorted by `low`; indices not covered by a
/// pair are unpaired (sepal ends).
class PairingConfig {
public:
    /// The degree-1 configuration (empty index set).
    PairingConfig() = default;

    /// Throws std::invalid_argument if the pairs are out of range,
    /// overlap, cross, or join indices of equal parity.
    PairingConfig(int degree, std::vector<Pair> pairs);

    int degree() const noexcept { return degree_; }
    int size() const noexcept { return 2 * degree_ - 2; }
    std::span<const Pair> pairs() const noexcept { return pairs_; }
    std::vector<int> unpaired() const;

    friend bool operator==(const PairingConfig&, const PairingConfig&) = default;

private:
    int degree_ = 1;
    std::vector<Pair> pairs_;
};

/// Human-readable reason why `pairs` is not a valid pairing on `n`
/// elements, or an empty string when it is.
std::string pairing_defect(int n, std::span<const Pair> pairs);

/// Equivalence relation ~ with homoclinic marking H. Stored as a
/// partition; `canonical()` sorts blocks and H for comparison.
struct SeparatrixData {
    int degree = 1;
    std::vector<std::vector<int>> classes;
    std::vector<int> homoclinic;

    SeparatrixData canonical() const;
    friend bool operator==(const SeparatrixData& a, const SeparatrixData& b) {
        const auto x = a.canonical();
        const auto y = b.canonical();
        return x.degree == y.degree && x.classes == y.classes && x.homoclinic == y.homoclinic;
    }
};

/// Involution iota with homoclinic set H and transversal set T.
struct TransversalData {
    int degree = 1;
    std::vector<int> involution;
    std::vector<int> homoclinic;
    std::vector<int> transversal;

    TransversalData canonical() const;
    friend bool operator==(const TransversalData& a, const TransversalData& b) {
        const auto x = a.canonical();
        const auto y = b.canonical();
        return x.degree == y.degree && x.involution == y.involution &&
               x.homoclinic == y.homoclinic && x.transversal == y.transversal;
    }
};

struct Violation {
    enum class Kind {
        Domain,          // degree or index out of range
        Partition,       // classes do not partition the index set
        Parity,          // a pair joins two indices of equal parity
        HomoclinicPair,  // a class meets H without being an H pair
        MarkedSets,      // H/T coherence of the involution
        NotInvolution,   // iota(iota(l)) != l
        Crossing,        // two chords or classes interleave
    };

    Kind kind;
    std::vector<int> indices;
    std::string message;
};

/// All violated constraints; empty means the data passed.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(Violation::Kind kind) const;
};

ValidationReport validate_separatrix(const SeparatrixData& data);
ValidationReport validate_transversal(const TransversalData& data);

enum class CellKind { AlphaOmega, OddSepal, EvenSepal, OddCenter, EvenCenter, Unclassifiable };

std::string_view to_string(CellKind kind);

/// One connected component of the separatrix disk model, identified
/// by the ends (boundary arcs) it touches.
struct SeparatrixCell {
    CellKind kind = CellKind::Unclassifiable;
    std::vector<int> ends;         // in boundary-walk order
    std::vector<int> free_ends;    // ends not indexed by a homoclinic on the boundary
    std::vector<int> homoclinics;  // homoclinic indices crossed on the walk
};

/// One component of the transversal disk model.
struct TransversalCell {
    std::vector<int> landing;  // landing separatrix indices on the boundary
    std::vector<int> ends;     // end points e_l on the boundary
};

struct CellReport {
    int alpha_omega = 0;
    int odd_sepal = 0;
    int even_sepal = 0;
    int odd_center = 0;
    int even_center = 0;

    int sepal_total() const noexcept { return odd_sepal + even_sepal; }
    int center_total() const noexcept { return odd_center + even_center; }
    int total() const noexcept { return alpha_omega + sepal_total() + center_total(); }

    friend bool operator==(const CellReport&, const CellReport&) = default;
};

/// Cells of the separatrix disk model. Requires validate_separatrix to
/// pass; cells outside the five admissible kinds come back as
/// CellKind::Unclassifiable.
std::vector<SeparatrixCell> separatrix_cells(const SeparatrixData& data);

/// Components cut out by the homoclinic and transversal chords; there
/// are h+s+1 of them for valid data.
std::vector<TransversalCell> transversal_cells(const TransversalData& data);

/// Throws std::invalid_argument if a cell is unclassifiable or the data
/// fails validation.
CellReport classify_cells(const SeparatrixData& data);

/// Throws std::invalid_argument on invalid data or an inadmissible cell.
TransversalData to_transversal(const SeparatrixData& data);

/// Throws std::invalid_argument on invalid data.
SeparatrixData to_separatrix(const TransversalData& data);

/// Round -> H, Square -> T, unpaired -> fixed points.
TransversalData to_transversal_data(const PairingConfig& config);

/// Inverse of to_transversal_data. Throws std::invalid_argument if the
/// data is not valid.
PairingConfig to_pairing(const TransversalData& data);

struct Dimension {
    int h = 0;  // round pairs (homoclinic separatrices)
    int s = 0;  // square pairs (alpha-omega zones)
    int q = 0;  // real dimension h + 2s

    friend bool operator==(const Dimension&, const Dimension&) = default;
};

Dimension invariants_of(const PairingConfig& config);

}  // namespace vfcomb
