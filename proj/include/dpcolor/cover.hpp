#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpc {

/// 0-based index inside a fiber L(x) = {(x,0), ..., (x,m-1)}.
using Fiber = std::uint8_t;

inline constexpr Fiber kUnmatched = 0xFF;
/// Fibers are handled as 64-bit masks.
inline constexpr int kMaxFold = 64;

/// An m-fold cover of a base graph.
///
/// Fibers are implicit and internally complete. For each base edge {u, v}
/// with u < v the cover stores the injective partial map from u's fiber to
/// v's fiber (kUnmatched where undefined); the reverse direction is derived
/// on demand. The flat `encoding()` (edge-major, m entries per edge) is the
/// cover's identity for ordering and tie-breaking.
class Cover {
public:
    /// Throws InvalidArgument if `images` has the wrong size, an entry is out
    /// of range, or a matching is not injective.
    Cover(std::shared_ptr<const Graph> base, int m, std::vector<Fiber> images);

    const Graph& base() const noexcept { return *base_; }
    const std::shared_ptr<const Graph>& base_ptr() const noexcept { return base_; }
    int fold() const noexcept { return m_; }

    /// Image of index i of edge(e).u under the low-to-high matching.
    Fiber image(int e, Fiber i) const { return images_[static_cast<std::size_t>(e) * m_ + i]; }
    std::span<const Fiber> matching(int e) const {
        return {images_.data() + static_cast<std::size_t>(e) * m_, static_cast<std::size_t>(m_)};
    }
    /// Image of (from, i) in the fiber of `to` across edge {from, to}.
    Fiber map(Vertex from, Vertex to, Fiber i) const;
    /// True iff (u,i)(v,j) is a cross-edge.
    bool adjacent(Vertex u, Fiber i, Vertex v, Fiber j) const;

    bool is_full() const;
    bool is_full(int e) const;
    /// Total number of cross-edges.
    int cross_edge_count() const;

    const std::vector<Fiber>& encoding() const noexcept { return images_; }

    /// Copy with the matching on {from, to} replaced; `from_images[i]` is the
    /// image of (from, i).
    Cover with_matching(Vertex from, Vertex to, std::span<const Fiber> from_images) const;

    friend bool operator==(const Cover& a, const Cover& b) {
        return a.m_ == b.m_ && *a.base_ == *b.base_ && a.images_ == b.images_;
    }

private:
    friend class FullCoverSpace;

    std::shared_ptr<const Graph> base_;
    int m_ = 0;
    std::vector<Fiber> images_;
};

/// Identity matching on every edge.
Cover canonical_cover(std::shared_ptr<const Graph> g, int m);
Cover canonical_cover(const Graph& g, int m);

inline std::vector<Fiber> identity_permutation(int m) {
    std::vector<Fiber> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[i] = static_cast<Fiber>(i);
    return p;
}

/// j -> j + shift (mod m).
std::vector<Fiber> cyclic_shift(int m, int shift);

/// A choice of one fiber index for some base vertices.
using PartialAssignment = std::map<Vertex, Fiber>;

/// No two assigned vertices are joined by a cross-edge.
bool is_independent(const Cover& c, const PartialAssignment& a);

/// Text form: a line holding `m`, then one line per base edge in edge-index
/// order, `u v : p_1 ... p_m`, where p_i is the 1-based image of (u, i) and 0
/// marks an undefined entry.
void write_cover(std::ostream& out, const Cover& c);
std::string format_cover(const Cover& c);

/// Parses the text form. Without `base`, the base graph is the edge set of
/// the listed lines on vertices 0..max id.
Cover parse_cover(const std::string& text, std::shared_ptr<const Graph> base = nullptr);
Cover read_cover(std::istream& in, std::shared_ptr<const Graph> base = nullptr);

}  // namespace dpc
