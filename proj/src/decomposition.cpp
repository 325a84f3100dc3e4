#include "nkstar/decomposition.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace nkstar {

const std::vector<std::pair<int, int>>& DecompositionView::cross_edges(int i, int j) const {
    if (i > j) std::swap(i, j);
    return cross[i][j];
}

DecompositionView decompose(const StarGraph& g, int t) {
    const GraphSpec& spec = g.spec();
    if (t < 2 || t > spec.k) {
        throw std::invalid_argument("decompose: t must satisfy 2 <= t <= k, got t=" +
                                    std::to_string(t) + " with k=" + std::to_string(spec.k));
    }
    DecompositionView view;
    view.t = t;
    view.parts.resize(spec.n);
    view.part_symbol.resize(g.vertex_count());
    view.cross.assign(spec.n + 1, std::vector<std::vector<std::pair<int, int>>>(spec.n + 1));

    for (int v = 0; v < g.vertex_count(); ++v) {
        int sym = g.label(v)[t - 1];
        view.part_symbol[v] = sym;
        view.parts[sym - 1].push_back(v);
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (const auto& tn : g.neighbors(u)) {
            if (u >= tn.vertex) continue;
            int a = view.part_symbol[u];
            int b = view.part_symbol[tn.vertex];
            if (a == b) continue;
            // orient the pair as (vertex in the lower-symbol part, other)
            if (a < b) {
                view.cross[a][b].emplace_back(u, tn.vertex);
            } else {
                view.cross[b][a].emplace_back(tn.vertex, u);
            }
        }
    }
    for (int i = 1; i <= spec.n; ++i) {
        for (int j = i + 1; j <= spec.n; ++j) {
            std::sort(view.cross[i][j].begin(), view.cross[i][j].end());
        }
    }
    return view;
}

PartEmbedding part_as_star(const StarGraph& g, const DecompositionView& view, int symbol) {
    const GraphSpec& spec = g.spec();
    if (symbol < 1 || symbol > spec.n) {
        throw std::invalid_argument("part_as_star: symbol " + std::to_string(symbol) +
                                    " outside 1.." + std::to_string(spec.n));
    }
    GraphSpec sub_spec{spec.n - 1, spec.k - 1};
    PartEmbedding emb{view.t, symbol, StarGraph::build(sub_spec), {}, {}};
    emb.parent_of.assign(emb.sub.vertex_count(), -1);
    emb.sub_of.assign(g.vertex_count(), -1);

    for (int v : view.parts[symbol - 1]) {
        const PermLabel& p = g.label(v);
        PermLabel q;
        q.symbols.reserve(spec.k - 1);
        for (int pos = 1; pos <= spec.k; ++pos) {
            if (pos == view.t) continue;
            int s = p[pos - 1];
            q.symbols.push_back(s < symbol ? s : s - 1);
        }
        int sv = emb.sub.index_of(q);
        emb.parent_of[sv] = v;
        emb.sub_of[v] = sv;
    }
    return emb;
}

CliqueHandle clique_of(const StarGraph& g, const PermLabel& alpha) {
    const GraphSpec& spec = g.spec();
    GraphSpec tail_spec{spec.n, spec.k - 1};
    if (spec.k >= 2) {
        validate_label(alpha, tail_spec);
    } else if (!alpha.symbols.empty()) {
        throw std::invalid_argument("clique_of: alpha must be empty when k=1");
    }
    CliqueHandle handle;
    handle.alpha = alpha;
    unsigned used = 0;
    for (int s : alpha.symbols) used |= 1u << s;
    for (int p = 1; p <= spec.n; ++p) {
        if (used & (1u << p)) continue;
        PermLabel member;
        member.symbols.reserve(spec.k);
        member.symbols.push_back(p);
        member.symbols.insert(member.symbols.end(), alpha.symbols.begin(), alpha.symbols.end());
        handle.members.push_back(g.index_of(member));
    }
    std::sort(handle.members.begin(), handle.members.end());
    return handle;
}

std::vector<CliqueHandle> all_cliques(const StarGraph& g) {
    const GraphSpec& spec = g.spec();
    std::vector<CliqueHandle> out;
    if (spec.k == 1) {
        out.push_back(clique_of(g, PermLabel{}));
        return out;
    }
    GraphSpec tail_spec{spec.n, spec.k - 1};
    std::uint64_t count = num_vertices(tail_spec);
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(clique_of(g, unrank(i, tail_spec)));
    }
    return out;
}

std::string decomposition_to_json(const StarGraph& g, const DecompositionView& view) {
    using ordered_json = nlohmann::ordered_json;
    const GraphSpec& spec = g.spec();
    ordered_json j;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["t"] = view.t;
    auto parts = ordered_json::array();
    for (int i = 1; i <= spec.n; ++i) {
        parts.push_back({{"symbol", i}, {"size", view.parts[i - 1].size()}});
    }
    j["parts"] = std::move(parts);
    auto cross = ordered_json::array();
    for (int i = 1; i <= spec.n; ++i) {
        for (int jj = i + 1; jj <= spec.n; ++jj) {
            cross.push_back({{"i", i}, {"j", jj}, {"edges", view.cross[i][jj].size()}});
        }
    }
    j["cross"] = std::move(cross);
    return j.dump(2) + "\n";
}

}  // namespace nkstar
