#include "dpcolor/cover.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "dpcolor/errors.hpp"

namespace dpc {

Cover::Cover(std::shared_ptr<const Graph> base, int m, std::vector<Fiber> images)
    : base_(std::move(base)), m_(m), images_(std::move(images)) {
    if (!base_) throw InvalidArgument("cover needs a base graph");
    if (m_ < 1 || m_ > kMaxFold) throw InvalidArgument("fold size must be in [1, 64], got " + std::to_string(m_));
    if (images_.size() != static_cast<std::size_t>(base_->num_edges()) * m_) {
        throw InvalidArgument("cover encoding has wrong length");
    }
    std::vector<char> hit(static_cast<std::size_t>(m_));
    for (int e = 0; e < base_->num_edges(); ++e) {
        std::fill(hit.begin(), hit.end(), 0);
        for (Fiber t : matching(e)) {
            if (t == kUnmatched) continue;
            if (t >= m_) throw InvalidArgument("fiber image out of range on edge " + std::to_string(e));
            if (hit[t]) throw InvalidArgument("matching on edge " + std::to_string(e) + " is not injective");
            hit[t] = 1;
        }
    }
}

Fiber Cover::map(Vertex from, Vertex to, Fiber i) const {
    const int e = base_->edge_index(from, to);
    if (e < 0) throw InvalidArgument("no base edge between " + std::to_string(from) + " and " + std::to_string(to));
    if (from < to) return image(e, i);
    const auto mt = matching(e);
    for (int k = 0; k < m_; ++k) {
        if (mt[k] == i) return static_cast<Fiber>(k);
    }
    return kUnmatched;
}

bool Cover::adjacent(Vertex u, Fiber i, Vertex v, Fiber j) const {
    if (u == v || !base_->has_edge(u, v)) return false;
    return map(u, v, i) == j;
}

bool Cover::is_full(int e) const {
    const auto mt = matching(e);
    return std::none_of(mt.begin(), mt.end(), [](Fiber t) { return t == kUnmatched; });
}

bool Cover::is_full() const {
    return std::none_of(images_.begin(), images_.end(), [](Fiber t) { return t == kUnmatched; });
}

int Cover::cross_edge_count() const {
    return static_cast<int>(std::count_if(images_.begin(), images_.end(), [](Fiber t) { return t != kUnmatched; }));
}

Cover Cover::with_matching(Vertex from, Vertex to, std::span<const Fiber> from_images) const {
    const int e = base_->edge_index(from, to);
    if (e < 0) throw InvalidArgument("no base edge between " + std::to_string(from) + " and " + std::to_string(to));
    if (static_cast<int>(from_images.size()) != m_) throw InvalidArgument("matching has wrong length");
    std::vector<Fiber> images = images_;
    Fiber* slot = images.data() + static_cast<std::size_t>(e) * m_;
    if (from < to) {
        std::copy(from_images.begin(), from_images.end(), slot);
    } else {
        std::fill(slot, slot + m_, kUnmatched);
        for (int i = 0; i < m_; ++i) {
            const Fiber t = from_images[i];
            if (t == kUnmatched) continue;
            if (t >= m_) throw InvalidArgument("fiber image out of range");
            if (slot[t] != kUnmatched) throw InvalidArgument("matching is not injective");
            slot[t] = static_cast<Fiber>(i);
        }
    }
    return Cover(base_, m_, std::move(images));
}

Cover canonical_cover(std::shared_ptr<const Graph> g, int m) {
    if (!g) throw InvalidArgument("cover needs a base graph");
    std::vector<Fiber> images;
    images.reserve(static_cast<std::size_t>(g->num_edges()) * m);
    const auto id = identity_permutation(m);
    for (int e = 0; e < g->num_edges(); ++e) images.insert(images.end(), id.begin(), id.end());
    return Cover(std::move(g), m, std::move(images));
}

Cover canonical_cover(const Graph& g, int m) { return canonical_cover(std::make_shared<const Graph>(g), m); }

std::vector<Fiber> cyclic_shift(int m, int shift) {
    std::vector<Fiber> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[i] = static_cast<Fiber>(((i + shift) % m + m) % m);
    return p;
}

bool is_independent(const Cover& c, const PartialAssignment& a) {
    for (auto [v, i] : a) {
        if (v < 0 || v >= c.base().num_vertices() || i >= c.fold()) {
            throw InvalidArgument("partial assignment entry out of range");
        }
    }
    for (auto it = a.begin(); it != a.end(); ++it) {
        for (auto jt = std::next(it); jt != a.end(); ++jt) {
            if (c.adjacent(it->first, it->second, jt->first, jt->second)) return false;
        }
    }
    return true;
}

void write_cover(std::ostream& out, const Cover& c) {
    out << c.fold() << '\n';
    for (int e = 0; e < c.base().num_edges(); ++e) {
        const Edge& ed = c.base().edge(e);
        out << ed.u << ' ' << ed.v << " :";
        for (Fiber t : c.matching(e)) out << ' ' << (t == kUnmatched ? 0 : static_cast<int>(t) + 1);
        out << '\n';
    }
}

std::string format_cover(const Cover& c) {
    std::ostringstream out;
    write_cover(out, c);
    return out.str();
}

Cover read_cover(std::istream& in, std::shared_ptr<const Graph> base) {
    int line_no = 0;
    std::string line;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next()) throw ParseError(line_no, "missing fold size header");
    int m = 0;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> m) || (header >> extra) || m < 1 || m > kMaxFold) {
            throw ParseError(line_no, "expected fold size in [1, 64]");
        }
    }
    struct Row {
        Edge edge;
        std::vector<Fiber> images;
        int line;
    };
    std::vector<Row> rows;
    Vertex max_id = -1;
    while (next()) {
        std::istringstream row(line);
        long long a = -1;
        long long b = -1;
        std::string colon;
        if (!(row >> a >> b >> colon) || colon != ":") throw ParseError(line_no, "expected `u v : p_1 ... p_m`");
        if (a < 0 || b < 0 || a == b) throw ParseError(line_no, "invalid edge endpoints");
        Row r{{static_cast<Vertex>(a), static_cast<Vertex>(b)}, {}, line_no};
        long long p = 0;
        while (row >> p) {
            if (p < 0 || p > m) throw ParseError(line_no, "image out of range");
            r.images.push_back(p == 0 ? kUnmatched : static_cast<Fiber>(p - 1));
        }
        if (!row.eof()) throw ParseError(line_no, "non-numeric image");
        if (static_cast<int>(r.images.size()) != m) {
            throw ParseError(line_no, "expected " + std::to_string(m) + " images");
        }
        max_id = std::max({max_id, r.edge.u, r.edge.v});
        rows.push_back(std::move(r));
    }
    if (!base) {
        std::vector<Edge> edges;
        for (const Row& r : rows) edges.push_back(r.edge);
        try {
            base = std::make_shared<const Graph>(max_id + 1, edges);
        } catch (const InvalidArgument& err) {
            throw ParseError(line_no, err.what());
        }
    }
    if (static_cast<int>(rows.size()) != base->num_edges()) {
        throw ParseError(line_no, "cover lists " + std::to_string(rows.size()) + " edges, base has " +
                                      std::to_string(base->num_edges()));
    }
    std::vector<Fiber> images(static_cast<std::size_t>(base->num_edges()) * m, kUnmatched);
    std::vector<char> seen(static_cast<std::size_t>(base->num_edges()), 0);
    for (const Row& r : rows) {
        const int e = base->edge_index(r.edge.u, r.edge.v);
        if (e < 0) throw ParseError(r.line, "edge is not in the base graph");
        if (seen[e]) throw ParseError(r.line, "edge listed twice");
        seen[e] = 1;
        Fiber* slot = images.data() + static_cast<std::size_t>(e) * m;
        if (r.edge.u < r.edge.v) {
            std::copy(r.images.begin(), r.images.end(), slot);
        } else {
            for (int i = 0; i < m; ++i) {
                if (r.images[i] == kUnmatched) continue;
                if (slot[r.images[i]] != kUnmatched) throw ParseError(r.line, "matching is not injective");
                slot[r.images[i]] = static_cast<Fiber>(i);
            }
        }
    }
    try {
        return Cover(std::move(base), m, std::move(images));
    } catch (const InvalidArgument& err) {
        throw ParseError(line_no, err.what());
    }
}

Cover parse_cover(const std::string& text, std::shared_ptr<const Graph> base) {
    std::istringstream in(text);
    return read_cover(in, std::move(base));
}

}  // namespace dpc
