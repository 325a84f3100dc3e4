#include "nkstar/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <memory>
#include <stdexcept>
#include <thread>

namespace nkstar {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Edge connectivity: unit-capacity augmenting paths over an arc-pair residual.

struct FlowNet {
    std::vector<int> head;              // arc -> target vertex
    std::vector<std::vector<int>> out;  // vertex -> incident arc ids
    std::vector<signed char> cap;       // arc 2e and 2e+1 are each other's reverse

    explicit FlowNet(const SimpleGraph& g) {
        out.resize(g.vertex_count());
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v : g.adj[u]) {
                if (u >= v) continue;
                int id = static_cast<int>(head.size());
                head.push_back(v);
                out[u].push_back(id);
                head.push_back(u);
                out[v].push_back(id + 1);
            }
        }
        cap.assign(head.size(), 1);
    }

    void reset() { std::fill(cap.begin(), cap.end(), 1); }

    bool augment(int s, int t, std::vector<int>& pred_arc, std::vector<int>& queue) {
        std::fill(pred_arc.begin(), pred_arc.end(), -1);
        pred_arc[s] = -2;
        queue.clear();
        queue.push_back(s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int a : out[u]) {
                int v = head[a];
                if (cap[a] > 0 && pred_arc[v] == -1) {
                    pred_arc[v] = a;
                    if (v == t) {
                        for (int w = t; w != s;) {
                            int arc = pred_arc[w];
                            --cap[arc];
                            ++cap[arc ^ 1];
                            w = head[arc ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        return false;
    }
};

}  // namespace

int edge_connectivity(const SimpleGraph& g) {
    int V = g.vertex_count();
    if (V <= 1) return 0;
    FlowNet net(g);
    std::vector<int> pred(V), queue;
    queue.reserve(V);
    int best = INT_MAX;
    for (int t = 1; t < V && best > 0; ++t) {
        net.reset();
        int flow = 0;
        while (flow < best && net.augment(0, t, pred, queue)) ++flow;
        best = std::min(best, flow);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Pruned search. Enumerates every connected subset X with min(X) = root once
// (candidates only grow past the root; skipped candidates stay blocked for
// the rest of the branch). All counters are maintained incrementally and
// undone on backtrack:
//   m[v]     edges from v into X
//   open[v]  neighbors of v neither in X nor blocked
//   boundary |edges(X, complement)|, perm |edges(X, blocked)|
//   def_in   vertices of X with internal degree < h
//   def_out  outside vertices with surviving degree < h
//   def_blk  blocked vertices with surviving degree < h (unfixable)
//   feas_def vertices of X that can no longer reach internal degree h

namespace {

struct SharedSearch {
    const SimpleGraph* g = nullptr;
    int V = 0;
    int h = 0;
    int maxdeg = 0;
    int half_cap = 0;       // enumeration size cap (= floor(V/2) unless probing)
    bool exact_half = false;  // |X| == V/2 allowed only when X contains vertex 0
    std::uint64_t node_limit = 0;
    std::uint64_t time_limit_ms = 0;
    Clock::time_point t0;

    std::atomic<int> incumbent{INT_MAX};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> next_root{0};
    std::atomic<bool> stop{false};
};

struct BestSide {
    int value = INT_MAX;
    std::vector<int> x;  // ascending

    // candidate with equal value wins only if lexicographically smaller
    void offer(int value_in, std::vector<int> x_in) {
        if (value_in < value) {
            value = value_in;
            x = std::move(x_in);
        } else if (value_in == value &&
                   std::lexicographical_compare(x_in.begin(), x_in.end(), x.begin(), x.end())) {
            x = std::move(x_in);
        }
    }
};

class Worker {
  public:
    explicit Worker(SharedSearch& sh)
        : sh_(sh), V_(sh.V), h_(sh.h), in_x_(sh.V, 0), blocked_(sh.V, 0), seen_(sh.V, 0),
          m_(sh.V, 0), open_(sh.V, 0), hist_(sh.maxdeg + 2, 0) {
        ext_.reserve(static_cast<std::size_t>(V_) * 4);
        x_stack_.reserve(V_);
    }

    void run() {
        while (!sh_.stop.load(std::memory_order_relaxed)) {
            int r = sh_.next_root.fetch_add(1, std::memory_order_relaxed);
            if (r >= V_) break;
            search_root(r);
        }
        flush_nodes();
    }

    BestSide best;
    std::uint64_t local_nodes = 0;

  private:
    const SimpleGraph& graph() const { return *sh_.g; }
    int deg(int v) const { return graph().degree(v); }

    void search_root(int r) {
        std::fill(in_x_.begin(), in_x_.end(), 0);
        std::fill(blocked_.begin(), blocked_.end(), 0);
        std::fill(seen_.begin(), seen_.end(), 0);
        std::fill(m_.begin(), m_.end(), 0);
        std::fill(hist_.begin(), hist_.end(), 0);
        x_stack_.clear();
        for (int v = 0; v < V_; ++v) open_[v] = deg(v);
        boundary_ = perm_ = def_in_ = def_out_ = def_blk_ = feas_def_ = 0;
        for (int v = 0; v < V_; ++v) {
            if (deg(v) < h_) ++def_out_;
        }
        hist_[0] = V_;

        cap_ = sh_.half_cap;
        if (sh_.exact_half && r != 0) cap_ = sh_.half_cap - 1;
        if (cap_ < 1) return;

        for (int w = 0; w < r; ++w) {
            seen_[w] = 1;
            block(w);
        }
        if (def_blk_ > 0) return;  // a vertex below the root can never keep degree h

        seen_[r] = 1;
        include(r);
        if (def_blk_ > 0 || feas_def_ > 0) return;  // root can never reach degree h
        ext_.clear();
        for (int u : graph().adj[r]) {
            if (!seen_[u]) {
                seen_[u] = 1;
                ext_.push_back(u);
            }
        }
        rec(0);

        // state is rebuilt per root; no need to unwind
    }

    void rec(std::size_t begin) {
        bump_node();
        if (sh_.stop.load(std::memory_order_relaxed)) return;

        if (def_in_ == 0 && def_out_ == 0) {
            int val = boundary_;
            int cur = sh_.incumbent.load(std::memory_order_relaxed);
            while (val < cur &&
                   !sh_.incumbent.compare_exchange_weak(cur, val, std::memory_order_relaxed)) {
            }
            if (val <= best.value) {
                std::vector<int> xs(x_stack_.begin(), x_stack_.end());
                std::sort(xs.begin(), xs.end());
                best.offer(val, std::move(xs));
            }
        }
        if (static_cast<int>(x_stack_.size()) == cap_) return;

        std::size_t end = ext_.size();
        std::size_t blocks_done = 0;
        for (std::size_t i = begin; i < end; ++i) {
            int v = ext_[i];
            if (sh_.stop.load(std::memory_order_relaxed)) break;
            if (m_[v] + open_[v] >= h_) {  // v could still reach internal degree h
                include(v);
                for (int u : graph().adj[v]) {
                    if (!seen_[u]) {
                        seen_[u] = 1;
                        ext_.push_back(u);
                    }
                }
                if (def_blk_ == 0 && feas_def_ == 0 &&
                    lower_bound() <= sh_.incumbent.load(std::memory_order_relaxed)) {
                    rec(i + 1);
                }
                for (std::size_t j = ext_.size(); j-- > end;) seen_[ext_[j]] = 0;
                ext_.resize(end);
                exclude(v);
            }
            block(v);
            ++blocks_done;
            // every remaining branch keeps v (and everything else blocked here)
            // outside; give up once that alone is hopeless
            if (perm_ > sh_.incumbent.load(std::memory_order_relaxed) || def_blk_ > 0 ||
                feas_def_ > 0) {
                break;
            }
        }
        for (std::size_t j = begin + blocks_done; j-- > begin;) unblock(ext_[j]);
    }

    // sum of boundary edges recoverable by the (cap - |X|) best absorbers
    int lower_bound() {
        int lb = perm_;
        int j = cap_ - static_cast<int>(x_stack_.size());
        int absorb = 0;
        for (int d = sh_.maxdeg; d >= 1 && j > 0; --d) {
            int c = std::min(hist_[d], j);
            absorb += c * d;
            j -= c;
        }
        if (boundary_ - absorb > lb) lb = boundary_ - absorb;
        return lb;
    }

    void include(int v) {
        in_x_[v] = 1;
        x_stack_.push_back(v);
        --hist_[m_[v]];
        boundary_ += deg(v) - 2 * m_[v];
        if (m_[v] < h_) ++def_in_;
        if (deg(v) - m_[v] < h_) --def_out_;
        if (m_[v] + open_[v] < h_) ++feas_def_;
        for (int u : graph().adj[v]) {
            if (in_x_[u]) {
                if (m_[u] == h_ - 1) --def_in_;
            } else {
                if (!blocked_[u]) {
                    --hist_[m_[u]];
                    ++hist_[m_[u] + 1];
                }
                if (deg(u) - m_[u] == h_) {
                    ++def_out_;
                    if (blocked_[u]) ++def_blk_;
                }
                if (blocked_[u]) ++perm_;
            }
            ++m_[u];
            --open_[u];
        }
    }

    void exclude(int v) {  // undo include
        for (int u : graph().adj[v]) {
            --m_[u];
            ++open_[u];
            if (in_x_[u]) {
                if (m_[u] == h_ - 1) ++def_in_;
            } else {
                if (!blocked_[u]) {
                    --hist_[m_[u] + 1];
                    ++hist_[m_[u]];
                }
                if (deg(u) - m_[u] == h_) {
                    --def_out_;
                    if (blocked_[u]) --def_blk_;
                }
                if (blocked_[u]) --perm_;
            }
        }
        in_x_[v] = 0;
        x_stack_.pop_back();
        ++hist_[m_[v]];
        boundary_ -= deg(v) - 2 * m_[v];
        if (m_[v] < h_) --def_in_;
        if (deg(v) - m_[v] < h_) ++def_out_;
        if (m_[v] + open_[v] < h_) --feas_def_;
    }

    void block(int v) {
        blocked_[v] = 1;
        --hist_[m_[v]];
        perm_ += m_[v];
        if (deg(v) - m_[v] < h_) ++def_blk_;
        for (int u : graph().adj[v]) {
            --open_[u];
            if (in_x_[u] && m_[u] + open_[u] == h_ - 1) ++feas_def_;
        }
    }

    void unblock(int v) {
        for (int u : graph().adj[v]) {
            ++open_[u];
            if (in_x_[u] && m_[u] + open_[u] == h_) --feas_def_;
        }
        blocked_[v] = 0;
        ++hist_[m_[v]];
        perm_ -= m_[v];
        if (deg(v) - m_[v] < h_) --def_blk_;
    }

    void bump_node() {
        ++local_nodes;
        if (++batch_ >= 1024) flush_nodes();
    }

    void flush_nodes() {
        if (batch_ == 0) return;
        std::uint64_t total = sh_.nodes.fetch_add(batch_, std::memory_order_relaxed) + batch_;
        batch_ = 0;
        if (sh_.node_limit && total > sh_.node_limit) {
            sh_.stop.store(true, std::memory_order_relaxed);
        }
        if (sh_.time_limit_ms &&
            static_cast<std::uint64_t>(ms_since(sh_.t0)) > sh_.time_limit_ms) {
            sh_.stop.store(true, std::memory_order_relaxed);
        }
    }

    SharedSearch& sh_;
    int V_;
    int h_;
    int cap_ = 0;
    std::vector<char> in_x_, blocked_, seen_;
    std::vector<int> m_, open_, hist_;
    std::vector<int> ext_, x_stack_;
    int boundary_ = 0, perm_ = 0, def_in_ = 0, def_out_ = 0, def_blk_ = 0, feas_def_ = 0;
    std::uint64_t batch_ = 0;
};

}  // namespace

SolverResult lambda_h_exact(const SimpleGraph& g, int h, const SearchBudget& budget, int threads,
                            const std::optional<SeedCut>& seed) {
    int V = g.vertex_count();
    if (V < 1) {
        throw std::invalid_argument("lambda_h_exact: graph has no vertices");
    }
    if (h < 0) {
        throw std::invalid_argument("lambda_h_exact: h must be >= 0, got " + std::to_string(h));
    }
    if (threads < 1) {
        throw std::invalid_argument("lambda_h_exact: threads must be >= 1, got " +
                                    std::to_string(threads));
    }
    Clock::time_point t0 = Clock::now();

    SharedSearch sh;
    sh.g = &g;
    sh.V = V;
    sh.h = h;
    for (int v = 0; v < V; ++v) sh.maxdeg = std::max(sh.maxdeg, g.degree(v));
    int half = V / 2;
    bool probe = budget.max_subset_size > 0 && budget.max_subset_size < half;
    sh.half_cap = probe ? budget.max_subset_size : half;
    sh.exact_half = (V % 2 == 0) && (sh.half_cap == half);
    sh.node_limit = budget.node_limit;
    sh.time_limit_ms = budget.time_limit_ms;
    sh.t0 = t0;

    BestSide merged;
    if (seed) {
        CutWitness check = witness_for_side(g, seed->x, h);
        if (!check.valid || static_cast<int>(check.cut.size()) != seed->value) {
            throw std::invalid_argument("lambda_h_exact: seed is not a valid h-cut of the stated value");
        }
        sh.incumbent.store(seed->value, std::memory_order_relaxed);
        merged.offer(seed->value, check.x);
    }

    std::uint64_t nodes = 0;
    if (threads == 1) {
        Worker w(sh);
        w.run();
        merged.offer(w.best.value, std::move(w.best.x));
        nodes = w.local_nodes;
    } else {
        std::vector<std::unique_ptr<Worker>> workers;
        for (int i = 0; i < threads; ++i) workers.push_back(std::make_unique<Worker>(sh));
        {
            std::vector<std::jthread> pool;
            for (auto& w : workers) pool.emplace_back([&w] { w->run(); });
        }
        for (auto& w : workers) {
            merged.offer(w->best.value, std::move(w->best.x));
            nodes += w->local_nodes;
        }
    }

    SolverResult result;
    result.nodes_explored = nodes;
    result.elapsed_ms = ms_since(t0);
    result.exact = !sh.stop.load() && !probe;
    if (merged.value != INT_MAX) {
        result.value = merged.value;
        result.witness = witness_for_side(g, merged.x, h);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Oracle: same candidate space, no pruning. Every visited subset is scored
// from scratch against the adjacency bitmasks.

namespace {

// ascending-sequence comparison of vertex sets packed in bitmasks
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    int i = std::countr_zero(a ^ b);
    if ((a >> i) & 1) return (b >> i) != 0;  // a's next element is smaller, unless b ended
    return (a >> i) == 0;
}

}  // namespace

SolverResult lambda_h_bruteforce(const SimpleGraph& g, int h) {
    int V = g.vertex_count();
    if (V < 1 || V > 30) {
        throw std::invalid_argument("lambda_h_bruteforce: vertex count " + std::to_string(V) +
                                    " outside the supported 1..30");
    }
    if (h < 0) {
        throw std::invalid_argument("lambda_h_bruteforce: h must be >= 0, got " + std::to_string(h));
    }
    Clock::time_point t0 = Clock::now();

    std::vector<std::uint64_t> nbr(V, 0);
    for (int u = 0; u < V; ++u) {
        for (int v : g.adj[u]) nbr[u] |= std::uint64_t{1} << v;
    }

    std::uint64_t nodes = 0;
    int best_val = INT_MAX;
    std::uint64_t best_mask = 0;

    auto consider = [&](std::uint64_t xmask) {
        ++nodes;
        int boundary = 0;
        for (int v = 0; v < V; ++v) {
            int inside = std::popcount(nbr[v] & xmask);
            if ((xmask >> v) & 1) {
                if (inside < h) return;
                boundary += g.degree(v) - inside;
            } else {
                if (g.degree(v) - inside < h) return;
            }
        }
        if (boundary < best_val ||
            (boundary == best_val && mask_lex_less(xmask, best_mask))) {
            best_val = boundary;
            best_mask = xmask;
        }
    };

    int half = V / 2;
    std::vector<int> ext;
    ext.reserve(static_cast<std::size_t>(V) * 4);
    int cap = 0;

    // candidates after ext[begin..) extend xmask; seen tracks everything offered
    auto rec = [&](auto&& self, std::size_t begin, std::uint64_t xmask, std::uint64_t seen,
                   int xsize) -> void {
        consider(xmask);
        if (xsize == cap) return;
        std::size_t end = ext.size();
        for (std::size_t i = begin; i < end; ++i) {
            int v = ext[i];
            std::uint64_t child_seen = seen;
            for (int u : g.adj[v]) {
                if (!((child_seen >> u) & 1)) {
                    child_seen |= std::uint64_t{1} << u;
                    ext.push_back(u);
                }
            }
            self(self, i + 1, xmask | (std::uint64_t{1} << v), child_seen, xsize + 1);
            ext.resize(end);
        }
    };

    for (int r = 0; r < V; ++r) {
        cap = (V % 2 == 0 && r != 0) ? half - 1 : half;
        if (cap < 1) continue;
        ext.clear();
        std::uint64_t seen = (r == 0) ? 1 : ((std::uint64_t{1} << (r + 1)) - 1);
        for (int u : g.adj[r]) {
            if (!((seen >> u) & 1)) {
                seen |= std::uint64_t{1} << u;
                ext.push_back(u);
            }
        }
        rec(rec, 0, std::uint64_t{1} << r, seen, 1);
    }

    SolverResult result;
    result.nodes_explored = nodes;
    result.elapsed_ms = ms_since(t0);
    result.exact = true;
    if (best_val != INT_MAX) {
        std::vector<int> x;
        for (int v = 0; v < V; ++v) {
            if ((best_mask >> v) & 1) x.push_back(v);
        }
        result.value = best_val;
        result.witness = witness_for_side(g, x, h);
    }
    return result;
}

}  // namespace nkstar
