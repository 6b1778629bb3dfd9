#include "clobber/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <vector>

namespace clobber {

namespace {

using Mask = std::uint64_t;

constexpr int kFree = 2;  // turn value for free move order

struct Key {
    Mask occ;
    Mask black;
    int turn;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = k.occ * 0x9E3779B97F4A7C15ULL;
        h ^= (k.black + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        h ^= static_cast<std::uint64_t>(k.turn) * 0x165667B19E3779F9ULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

struct Entry {
    std::int8_t value;
    std::int8_t from;
    std::int8_t to;
};

// Sharded map; entries are exact facts, so concurrent writers agree.
class Table {
public:
    bool find(const Key& k, Entry& out) {
        Shard& s = shard(k);
        std::lock_guard<std::mutex> lock(s.mu);
        auto it = s.map.find(k);
        if (it == s.map.end()) return false;
        out = it->second;
        return true;
    }

    void insert(const Key& k, Entry e) {
        Shard& s = shard(k);
        std::lock_guard<std::mutex> lock(s.mu);
        s.map.emplace(k, e);
    }

    std::uint64_t size() {
        std::uint64_t n = 0;
        for (Shard& s : shards_) {
            std::lock_guard<std::mutex> lock(s.mu);
            n += s.map.size();
        }
        return n;
    }

private:
    struct Shard {
        std::mutex mu;
        std::unordered_map<Key, Entry, KeyHash> map;
    };

    Shard& shard(const Key& k) { return shards_[KeyHash{}(k) >> 7 & (kShards - 1)]; }

    static constexpr std::size_t kShards = 64;
    std::array<Shard, kShards> shards_;
};

struct Child {
    int from;
    int to;
    Key key;
};

class Search {
public:
    explicit Search(const Configuration& cfg) {
        for (const auto& [c, col] : cfg.stones) {
            int i = static_cast<int>(cells_.size());
            cells_.push_back(c);
            if (col == Color::Black) black0_ |= bit(i);
            if (square_color(c, cfg.parity_anchor) == Color::Black) black_squares_ |= bit(i);
        }
        occ0_ = cells_.empty() ? 0 : (cells_.size() == 64 ? ~Mask{0} : bit(static_cast<int>(cells_.size())) - 1);
        adj_.resize(cells_.size());
        nbr_.assign(cells_.size(), 0);
        constexpr Coord kSteps[4] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
        for (std::size_t i = 0; i < cells_.size(); ++i)
            for (Coord d : kSteps) {
                Coord n{cells_[i].row + d.row, cells_[i].col + d.col};
                auto it = std::lower_bound(cells_.begin(), cells_.end(), n);
                if (it != cells_.end() && *it == n) {
                    int j = static_cast<int>(it - cells_.begin());
                    adj_[i].push_back(j);
                    nbr_[i] |= bit(j);
                }
            }
    }

    Key root(int turn) const { return {occ0_, black0_, turn}; }

    // Per component: all stones if single-colored, else 1, or 2 when its
    // delta is divisible by 3. Moves never merge or split across components.
    int bound(Mask occ, Mask black) const {
        int total = 0;
        Mask rest = occ;
        while (rest) {
            Mask comp = rest & (~rest + 1);
            Mask frontier = comp;
            while (frontier) {
                Mask grow = 0;
                for (Mask f = frontier; f; f &= f - 1) grow |= nbr_[static_cast<std::size_t>(std::countr_zero(f))];
                grow &= rest & ~comp;
                comp |= grow;
                frontier = grow;
            }
            rest &= ~comp;
            int size = std::popcount(comp);
            int blacks = std::popcount(comp & black);
            if (blacks == 0 || blacks == size) {
                total += size;
            } else {
                int clashing = std::popcount(comp & black & ~black_squares_) +
                               std::popcount(comp & ~black & black_squares_);
                total += (size + clashing) % 3 == 0 ? 2 : 1;
            }
        }
        return total;
    }

    std::vector<Child> children(const Key& k) const {
        std::vector<Child> out;
        for (Mask f = k.occ; f; f &= f - 1) {
            int i = std::countr_zero(f);
            bool is_black = (k.black >> i) & 1;
            if (k.turn != kFree && is_black != (k.turn == 1)) continue;
            for (int j : adj_[static_cast<std::size_t>(i)]) {
                if (!((k.occ >> j) & 1) || (((k.black >> j) & 1) != 0) == is_black) continue;
                Mask occ = k.occ & ~bit(i);
                Mask black = k.black & ~bit(i) & ~bit(j);
                if (is_black) black |= bit(j);
                int turn = k.turn == kFree ? kFree : 1 - k.turn;
                out.push_back({i, j, {occ, black, turn}});
            }
        }
        return out;
    }

    int solve(const Key& k) {
        nodes_.fetch_add(1, std::memory_order_relaxed);
        int n = std::popcount(k.occ);
        int lb = bound(k.occ, k.black);
        if (lb >= n) return n;
        Entry e;
        if (table_.find(k, e)) return e.value;
        int best = n;
        int bf = -1, bt = -1;
        for (const Child& c : children(k)) {
            int v = solve(c.key);
            if (v < best) {
                best = v;
                bf = c.from;
                bt = c.to;
            }
            if (best == lb) break;
        }
        table_.insert(k, {static_cast<std::int8_t>(best), static_cast<std::int8_t>(bf), static_cast<std::int8_t>(bt)});
        return best;
    }

    // Root search with children fanned out to workers. The chosen move is the
    // first child in move order attaining the minimum, exactly as serial.
    int solve_root(const Key& k, int jobs) {
        if (jobs <= 1) return solve(k);
        nodes_.fetch_add(1, std::memory_order_relaxed);
        int n = std::popcount(k.occ);
        int lb = bound(k.occ, k.black);
        if (lb >= n) return n;
        Entry e;
        if (table_.find(k, e)) return e.value;
        std::vector<Child> kids = children(k);
        std::vector<int> values(kids.size(), std::numeric_limits<int>::max());
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= kids.size() || i > cutoff.load()) return;
                values[i] = solve(kids[i].key);
                if (values[i] == lb) {
                    std::size_t cur = cutoff.load();
                    while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {}
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        int best = n;
        int bf = -1, bt = -1;
        std::size_t limit = std::min(kids.size(), cutoff.load() == std::numeric_limits<std::size_t>::max()
                                                      ? kids.size()
                                                      : cutoff.load() + 1);
        for (std::size_t i = 0; i < limit; ++i)
            if (values[i] < best) {
                best = values[i];
                bf = kids[i].from;
                bt = kids[i].to;
            }
        table_.insert(k, {static_cast<std::int8_t>(best), static_cast<std::int8_t>(bf), static_cast<std::int8_t>(bt)});
        return best;
    }

    std::vector<Move> witness(Key k) {
        std::vector<Move> out;
        Entry e;
        while (table_.find(k, e) && e.from >= 0) {
            bool is_black = (k.black >> e.from) & 1;
            Color mover = is_black ? Color::Black : Color::White;
            out.push_back({mover, cells_[static_cast<std::size_t>(e.from)], cells_[static_cast<std::size_t>(e.to)]});
            Mask occ = k.occ & ~bit(e.from);
            Mask black = k.black & ~bit(e.from) & ~bit(e.to);
            if (is_black) black |= bit(e.to);
            k = {occ, black, k.turn == kFree ? kFree : 1 - k.turn};
        }
        return out;
    }

    SolverStats stats() { return {nodes_.load(), table_.size()}; }

private:
    static Mask bit(int i) { return Mask{1} << i; }

    std::vector<Coord> cells_;
    std::vector<std::vector<int>> adj_;
    std::vector<Mask> nbr_;
    Mask occ0_ = 0;
    Mask black0_ = 0;
    Mask black_squares_ = 0;
    Table table_;
    std::atomic<std::uint64_t> nodes_{0};
};

int turn_of(Color c) { return c == Color::Black ? 1 : 0; }

}  // namespace

const char* mode_name(Mode mode) {
    switch (mode) {
    case Mode::AlternatingWhiteFirst: return "wfirst";
    case Mode::AlternatingBlackFirst: return "bfirst";
    case Mode::AlternatingEither: return "either";
    case Mode::FreeOrder: return "free";
    }
    return "?";
}

Mode parse_mode(const std::string& text) {
    if (text == "wfirst") return Mode::AlternatingWhiteFirst;
    if (text == "bfirst") return Mode::AlternatingBlackFirst;
    if (text == "either") return Mode::AlternatingEither;
    if (text == "free") return Mode::FreeOrder;
    throw Error("unknown mode '" + text + "' (expected wfirst, bfirst, either or free)");
}

int lower_bound(const Configuration& cfg) {
    if (cfg.empty()) throw EmptyConfiguration("lower_bound needs at least one stone");
    std::vector<Configuration> comps = connected_components(cfg);
    int best = static_cast<int>(comps.size());
    best = std::max(best, delta_class(cfg) == 0 ? 2 : 1);
    for (const Configuration& c : comps) {
        bool has_white = false, has_black = false;
        for (const auto& [at, col] : c.stones) (col == Color::White ? has_white : has_black) = true;
        if (!(has_white && has_black)) best = std::max(best, static_cast<int>(c.size()));
    }
    return best;
}

SolveResult min_stones(const Configuration& cfg, Mode mode, const SolverOptions& opts) {
    int limit = std::min(opts.limit, 64);
    if (static_cast<int>(cfg.size()) > limit)
        throw LimitExceeded(std::to_string(cfg.size()) + " stones exceed the exact-search limit of " +
                            std::to_string(limit));
    SolveResult res;
    res.witness.metadata = std::string("min_stones mode=") + mode_name(mode);
    if (cfg.empty()) return res;
    Search search(cfg);
    int jobs = std::max(1, opts.jobs);
    Key root{};
    switch (mode) {
    case Mode::AlternatingWhiteFirst:
    case Mode::AlternatingBlackFirst: {
        Color first = mode == Mode::AlternatingWhiteFirst ? Color::White : Color::Black;
        root = search.root(turn_of(first));
        res.k = search.solve_root(root, jobs);
        res.witness.first_mover = first;
        break;
    }
    case Mode::AlternatingEither: {
        Key w = search.root(turn_of(Color::White));
        int vw = search.solve_root(w, jobs);
        int lb = search.bound(w.occ, w.black);
        int vb = vw > lb ? search.solve_root(search.root(turn_of(Color::Black)), jobs) : vw;
        root = vb < vw ? search.root(turn_of(Color::Black)) : w;
        res.k = std::min(vw, vb);
        res.witness.first_mover = vb < vw ? Color::Black : Color::White;
        break;
    }
    case Mode::FreeOrder:
        root = search.root(kFree);
        res.k = search.solve_root(root, jobs);
        break;
    }
    res.witness.moves = search.witness(root);
    if (mode == Mode::FreeOrder && !res.witness.moves.empty()) res.witness.first_mover = res.witness.moves.front().mover;
    res.stats = search.stats();
    return res;
}

OneReducibility is_one_reducible(const Configuration& cfg, const SolverOptions& opts, Mode mode) {
    OneReducibility out;
    if (cfg.empty()) return out;
    if (cfg.size() == 1) {
        Plan p;
        p.metadata = "single stone";
        out.reducible = true;
        out.witness = p;
        return out;
    }
    if (delta_class(cfg) == 0) return out;
    SolveResult r = min_stones(cfg, mode, opts);
    if (r.k == 1) {
        out.reducible = true;
        out.witness = r.witness;
    }
    return out;
}

}  // namespace clobber
