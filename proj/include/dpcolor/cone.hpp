#pragma once

#include <vector>

#include "dpcolor/cover.hpp"

namespace dpc {

/// A cover of K_1 v G whose hub edges all carry the identity.
class ConeCover {
public:
    /// Throws InvalidArgument unless `hub` is adjacent to every other vertex
    /// and every hub edge carries the identity bijection.
    ConeCover(Cover cover, Vertex hub);

    const Cover& cover() const noexcept { return cover_; }
    Vertex hub() const noexcept { return hub_; }

private:
    Cover cover_;
    Vertex hub_;
};

/// Relabels a full cover with a universal vertex `hub` into the hub-identity
/// convention (normalization along the star at `hub`).
ConeCover to_cone_convention(const Cover& c, Vertex hub);

/// The (m-1)-fold cover of the base minus the hub obtained by deleting fiber
/// index j everywhere; indices above j shift down by one. Vertex ids follow
/// Graph::remove_vertex.
Cover cone_reduction(const ConeCover& cc, Fiber j);

/// Hub indices t whose cone reduction is full.
std::vector<Fiber> level_vertices(const ConeCover& cc);

}  // namespace dpc
