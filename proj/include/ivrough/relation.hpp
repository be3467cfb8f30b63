#pragma once
// Binary relations over a fixed universe as packed boolean adjacency
// matrices, the lambda-similarity relations RF/RS/RT, neighborhoods,
// structural predicates and transitive closure.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "info_system.hpp"
#include "interval.hpp"

namespace ivrough {

// Square boolean matrix with rows packed into 64-bit words.  Row i holds the
// successor neighborhood of object i.
class BinaryRelation {
public:
    explicit BinaryRelation(std::size_t n, std::vector<std::string> object_ids = {})
        : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0),
          object_ids_(std::move(object_ids)) {
        if (!object_ids_.empty() && object_ids_.size() != n)
            throw Error("relation: object id count does not match size");
    }

    std::size_t size() const { return n_; }
    const std::vector<std::string>& object_ids() const { return object_ids_; }

    bool at(std::size_t i, std::size_t j) const {
        return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool value = true) {
        const std::uint64_t mask = std::uint64_t(1) << (j % 64);
        std::uint64_t& word = bits_[i * words_per_row_ + j / 64];
        if (value)
            word |= mask;
        else
            word &= ~mask;
    }

    // Successor neighborhood of row i, as object indices in canonical order.
    std::vector<std::size_t> row(std::size_t i) const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j)) out.push_back(j);
        return out;
    }

    std::size_t row_count_bits(std::size_t i) const {
        std::size_t count = 0;
        for (std::size_t w = 0; w < words_per_row_; ++w)
            count += static_cast<std::size_t>(__builtin_popcountll(bits_[i * words_per_row_ + w]));
        return count;
    }

    bool reflexive() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!at(i, i)) return false;
        return true;
    }

    bool symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool transitive() const {
        // R transitive iff for every edge (i, k): row(k) subset of row(i).
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k)
                if (at(i, k))
                    for (std::size_t w = 0; w < words_per_row_; ++w)
                        if (bits_[k * words_per_row_ + w] & ~bits_[i * words_per_row_ + w])
                            return false;
        return true;
    }

    // Matrix-wise subset test: every pair of *this is a pair of `other`.
    bool subset_of(const BinaryRelation& other) const {
        if (other.n_ != n_) throw Error("relation: size mismatch");
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~other.bits_[w]) return false;
        return true;
    }

    bool operator==(const BinaryRelation& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const BinaryRelation& o) const { return !(*this == o); }

    // In-place union of row `src` into row `dst` (used by the closure).
    void or_row_into(std::size_t src, std::size_t dst) {
        for (std::size_t w = 0; w < words_per_row_; ++w)
            bits_[dst * words_per_row_ + w] |= bits_[src * words_per_row_ + w];
    }

private:
    std::size_t n_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> object_ids_;
};

// Names a lambda-similarity relation: threshold lambda, interval-similarity
// family, and the attribute subset it quantifies over.
struct RelationSpec {
    std::vector<std::string> attributes;  // may be empty: see lambda_relation
    double lambda{0.0};
    Family family{Family::SF};
};

// (x, y) related iff the chosen similarity of their cell values is >= lambda
// on EVERY attribute of the subset.  The threshold comparison is sharp (no
// epsilon): degrees are compared as computed in double precision.
// An empty subset quantifies over nothing, so the result is the complete
// relation U x U.
inline BinaryRelation lambda_relation(const InformationSystem& s, const RelationSpec& spec) {
    if (spec.lambda < 0.0 || spec.lambda > 1.0)
        throw Error("lambda must lie in [0, 1]");
    const std::size_t n = s.object_count();
    BinaryRelation r(n, s.objects());
    std::vector<std::size_t> cols;
    cols.reserve(spec.attributes.size());
    for (const std::string& name : spec.attributes) cols.push_back(s.attribute_index(name));
    for (std::size_t i = 0; i < n; ++i) {
        r.set(i, i);  // similarity of a value with itself is 1 >= lambda
        for (std::size_t j = i + 1; j < n; ++j) {
            bool related = true;
            for (std::size_t c : cols) {
                if (similarity(spec.family, s.cell(i, c), s.cell(j, c)) < spec.lambda) {
                    related = false;
                    break;
                }
            }
            if (related) {
                r.set(i, j);
                r.set(j, i);  // every similarity degree is symmetric
            }
        }
    }
    return r;
}

// Successor neighborhood by object name.
inline std::vector<std::string> neighborhood(const BinaryRelation& r, const InformationSystem& s,
                                             std::string_view object) {
    const std::size_t i = s.object_index(object);
    std::vector<std::string> out;
    for (std::size_t j : r.row(i)) out.push_back(s.objects()[j]);
    return out;
}

struct RelationProperties {
    bool reflexive{false};
    bool symmetric{false};
    bool transitive{false};
};

inline RelationProperties check_properties(const BinaryRelation& r) {
    return {r.reflexive(), r.symmetric(), r.transitive()};
}

// Minimum transitive relation containing r, by in-place Warshall closure.
// Requires a reflexive input: every relation this library closes arises from
// a lambda-similarity construction and is reflexive by construction, and the
// downstream degree computations divide by closure neighborhood sizes.
inline BinaryRelation transitive_closure(const BinaryRelation& r) {
    if (!r.reflexive()) throw Error("transitive_closure: input relation is not reflexive");
    BinaryRelation t = r;
    const std::size_t n = t.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (t.at(i, k)) t.or_row_into(k, i);
    return t;
}

// ---- relation text forms -------------------------------------------------

// Header line of object identifiers, then one '0 1 ...' row per object.
inline std::string relation_matrix_text(const BinaryRelation& r) {
    std::ostringstream out;
    const auto& ids = r.object_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
    out << '\n';
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << (r.at(i, j) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

// One 'xi,xj' line per related pair, row-major.
inline std::string relation_pairs_text(const BinaryRelation& r) {
    std::ostringstream out;
    const auto& ids = r.object_ids();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r.at(i, j)) out << ids[i] << ',' << ids[j] << '\n';
    return out.str();
}

}  // namespace ivrough
