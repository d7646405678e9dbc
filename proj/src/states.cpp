#include "ohg/states.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <thread>

namespace ohg {

// ------------------------------------------------------------ TravisMatrix

TravisMatrix::TravisMatrix(std::vector<std::string> columns, const std::vector<Bitset>& rows)
    : columns_(std::move(columns)), rows_(rows.size()),
      stride_(Bitset::word_count(columns_.size())) {
    data_.reserve(rows_ * stride_);
    for (const auto& r : rows) {
        if (r.size() != columns_.size())
            throw Error(Errc::InvalidArgument, "row width does not match column count");
        data_.insert(data_.end(), r.words().begin(), r.words().end());
    }
    std::vector<Bitset> sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::InvalidArgument, "repeated row in state table");
    build_columns();
}

TravisMatrix::TravisMatrix(std::vector<std::string> columns, std::size_t rows,
                           std::vector<Word> data)
    : columns_(std::move(columns)), rows_(rows), stride_(Bitset::word_count(columns_.size())),
      data_(std::move(data)) {
    build_columns();
}

TravisMatrix TravisMatrix::from_ints(std::vector<std::string> columns,
                                     const std::vector<std::vector<int>>& rows) {
    std::vector<Bitset> bits;
    bits.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != columns.size())
            throw Error(Errc::InvalidArgument, "row width does not match column count");
        Bitset b(columns.size());
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (r[c] != 0 && r[c] != 1)
                throw Error(Errc::InvalidArgument, "state table entries must be 0 or 1");
            b.assign(c, r[c] == 1);
        }
        bits.push_back(std::move(b));
    }
    return TravisMatrix(std::move(columns), bits);
}

void TravisMatrix::build_columns() {
    column_bits_.assign(columns_.size(), Bitset(rows_));
    for (std::size_t r = 0; r < rows_; ++r) {
        const Word* w = data_.data() + r * stride_;
        for (std::size_t k = 0; k < stride_; ++k) {
            Word bits = w[k];
            while (bits) {
                int lead = std::countl_zero(bits);
                column_bits_[k * Bitset::kWordBits + static_cast<std::size_t>(lead)].set(r);
                bits &= ~(Word{1} << (Bitset::kWordBits - 1 - static_cast<std::size_t>(lead)));
            }
        }
    }
}

std::optional<std::size_t> TravisMatrix::column_index(std::string_view name) const {
    auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - columns_.begin());
}

Bitset TravisMatrix::row(std::size_t r) const {
    Bitset b(columns_.size());
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), b.words().begin());
    return b;
}

namespace {

bool row_greater(std::span<const Bitset::Word> a, std::span<const Bitset::Word> b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool TravisMatrix::is_canonical() const {
    for (std::size_t r = 1; r < rows_; ++r)
        if (!row_greater(row_words(r - 1), row_words(r))) return false;
    return true;
}

TravisMatrix TravisMatrix::permuted_rows(std::span<const std::size_t> order) const {
    if (order.size() != rows_) throw Error(Errc::InvalidArgument, "row permutation size mismatch");
    std::vector<Word> data;
    data.reserve(data_.size());
    for (std::size_t r : order) {
        auto w = row_words(r);
        data.insert(data.end(), w.begin(), w.end());
    }
    return TravisMatrix(columns_, rows_, std::move(data));
}

TravisMatrix TravisMatrix::canonical() const {
    std::vector<std::size_t> order(rows_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        return row_greater(row_words(a), row_words(b));
    });
    return permuted_rows(order);
}

bool is_two_valued_state(const Hypergraph& h, const Bitset& state) {
    if (state.size() != h.vertex_count()) return false;
    for (const auto& ctx : h.contexts()) {
        std::size_t ones = 0;
        for (VertexId v : ctx) ones += state.test(v) ? 1 : 0;
        if (ones != 1) return false;
    }
    return true;
}

// -------------------------------------------------------------- enumeration

namespace {

constexpr std::int8_t kUnknown = -1;

// Search state for one node of the branching tree.
struct Frame {
    std::vector<std::int8_t> value;      // per vertex: -1, 0, 1
    std::vector<std::uint32_t> zeros;    // per context: vertices fixed to 0
    std::vector<std::uint8_t> satisfied; // per context: holds its 1
};

class Propagator {
public:
    explicit Propagator(const Hypergraph& h) : h_(h) {}

    Frame root() const {
        Frame f;
        f.value.assign(h_.vertex_count(), kUnknown);
        f.zeros.assign(h_.context_count(), 0);
        f.satisfied.assign(h_.context_count(), 0);
        return f;
    }

    /// Sets v true and runs unit propagation; false on contradiction.
    bool assign_true(Frame& f, VertexId v) {
        pending_.clear();
        if (!set_true(f, v)) return false;
        while (!pending_.empty()) {
            ContextId c = pending_.back();
            pending_.pop_back();
            if (f.satisfied[c]) continue;
            const auto& ctx = h_.contexts()[c];
            if (f.zeros[c] == ctx.size()) return false;
            if (f.zeros[c] + 1 == ctx.size()) {
                for (VertexId u : ctx)
                    if (f.value[u] == kUnknown) {
                        if (!set_true(f, u)) return false;
                        break;
                    }
            }
        }
        return true;
    }

    /// Unsatisfied context with the fewest undetermined vertices, lowest index
    /// on ties; context_count() if every context is satisfied.
    ContextId pick_context(const Frame& f) const {
        ContextId best = static_cast<ContextId>(h_.context_count());
        std::size_t best_open = ~std::size_t{0};
        for (ContextId c = 0; c < h_.context_count(); ++c) {
            if (f.satisfied[c]) continue;
            std::size_t open = h_.contexts()[c].size() - f.zeros[c];
            if (open < best_open) {
                best_open = open;
                best = c;
            }
        }
        return best;
    }

    const Hypergraph& hypergraph() const { return h_; }

private:
    bool set_true(Frame& f, VertexId v) {
        if (f.value[v] == 1) return true;
        if (f.value[v] == 0) return false;
        f.value[v] = 1;
        for (ContextId c : h_.contexts_of(v)) {
            if (f.satisfied[c]) return false;
            f.satisfied[c] = 1;
            for (VertexId w : h_.contexts()[c]) {
                if (w == v) continue;
                if (f.value[w] == 1) return false;
                if (f.value[w] == kUnknown) set_false(f, w);
            }
        }
        return true;
    }

    void set_false(Frame& f, VertexId w) {
        f.value[w] = 0;
        for (ContextId c : h_.contexts_of(w)) {
            ++f.zeros[c];
            if (!f.satisfied[c]) pending_.push_back(c);
        }
    }

    const Hypergraph& h_;
    std::vector<ContextId> pending_;
};

struct Shared {
    const EnumerateOptions& options;
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> abort{false};
    std::mutex progress_mutex;

    explicit Shared(const EnumerateOptions& o) : options(o) {}

    // Returns false once the row limit is exceeded.
    bool record() {
        std::uint64_t now = total.fetch_add(1, std::memory_order_relaxed) + 1;
        if (options.row_limit && now > *options.row_limit) {
            abort = true;
            return false;
        }
        if (options.progress_interval && options.progress && now % options.progress_interval == 0) {
            std::lock_guard lock(progress_mutex);
            options.progress(now);
        }
        return true;
    }
};

// Depth-first worker over a list of subtree roots.
class Worker {
public:
    Worker(const Hypergraph& h, Shared& shared, bool store)
        : prop_(h), shared_(shared), store_(store),
          stride_(Bitset::word_count(h.vertex_count())) {}

    void run(const Frame& start) {
        if (stack_.empty()) stack_.resize(prop_.hypergraph().context_count() + 2);
        stack_[0] = start;
        descend(0);
    }

    std::vector<Bitset::Word>& rows() { return rows_; }
    std::uint64_t count() const { return count_; }

private:
    void descend(std::size_t depth) {
        if (shared_.abort.load(std::memory_order_relaxed)) return;
        const Frame& f = stack_[depth];
        ContextId c = prop_.pick_context(f);
        if (c == prop_.hypergraph().context_count()) {
            emit(f);
            return;
        }
        for (VertexId v : prop_.hypergraph().sorted_contexts()[c]) {
            if (stack_[depth].value[v] != kUnknown) continue;
            stack_[depth + 1] = stack_[depth];
            if (prop_.assign_true(stack_[depth + 1], v)) descend(depth + 1);
        }
    }

    void emit(const Frame& f) {
        if (!shared_.record()) return;
        ++count_;
        if (!store_) return;
        std::size_t base = rows_.size();
        rows_.resize(base + stride_, 0);
        for (std::size_t v = 0; v < f.value.size(); ++v)
            if (f.value[v] == 1) rows_[base + v / Bitset::kWordBits] |= Bitset::mask(v);
    }

    Propagator prop_;
    Shared& shared_;
    bool store_;
    std::size_t stride_;
    std::vector<Frame> stack_;
    std::vector<Bitset::Word> rows_;
    std::uint64_t count_ = 0;
};

// Splits the search tree into at least `target` independent subtrees by
// breadth-first expansion. Leaves met on the way are kept as (complete) roots.
std::vector<Frame> frontier(const Hypergraph& h, std::size_t target) {
    Propagator prop(h);
    std::deque<Frame> queue;
    queue.push_back(prop.root());
    std::vector<Frame> done;
    while (!queue.empty() && queue.size() + done.size() < target) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        ContextId c = prop.pick_context(f);
        if (c == h.context_count()) {
            done.push_back(std::move(f));
            continue;
        }
        for (VertexId v : h.sorted_contexts()[c]) {
            if (f.value[v] != kUnknown) continue;
            Frame child = f;
            if (prop.assign_true(child, v)) queue.push_back(std::move(child));
        }
    }
    for (auto& f : queue) done.push_back(std::move(f));
    return done;
}

struct RunResult {
    std::uint64_t count = 0;
    std::vector<Bitset::Word> rows;
};

RunResult run_search(const Hypergraph& h, const EnumerateOptions& options, bool store) {
    Shared shared(options);
    RunResult result;
    const unsigned jobs = std::max(1u, options.jobs);

    if (jobs == 1) {
        Worker w(h, shared, store);
        w.run(Propagator(h).root());
        result.count = w.count();
        result.rows = std::move(w.rows());
    } else {
        std::vector<Frame> roots = frontier(h, 16 * jobs);
        std::vector<Worker> workers;
        workers.reserve(jobs);
        for (unsigned k = 0; k < jobs; ++k) workers.emplace_back(h, shared, store);
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        for (unsigned k = 0; k < jobs; ++k) {
            threads.emplace_back([&, k] {
                for (std::size_t i = next++; i < roots.size(); i = next++) workers[k].run(roots[i]);
            });
        }
        for (auto& t : threads) t.join();
        for (auto& w : workers) {
            result.count += w.count();
            result.rows.insert(result.rows.end(), w.rows().begin(), w.rows().end());
        }
    }
    if (shared.abort)
        throw Error(Errc::RowLimitExceeded,
                    "more than " + std::to_string(*options.row_limit) + " two-valued states");
    return result;
}

}  // namespace

class StateCollector {
public:
    static TravisMatrix make(const Hypergraph& h, std::vector<Bitset::Word> data,
                             std::size_t rows) {
        return TravisMatrix(h.vertex_names(), rows, std::move(data));
    }
};

TravisMatrix enumerate_states(const Hypergraph& h, const EnumerateOptions& options) {
    RunResult r = run_search(h, options, true);
    TravisMatrix raw = StateCollector::make(h, std::move(r.rows), r.count);
    return raw.is_canonical() ? raw : raw.canonical();
}

std::uint64_t count_states(const Hypergraph& h, const EnumerateOptions& options) {
    return run_search(h, options, false).count;
}

// ------------------------------------------------------------ classification

namespace {

void require_columns(const Hypergraph& h, const TravisMatrix& t) {
    if (t.column_count() != h.vertex_count())
        throw Error(Errc::ColumnCountMismatch,
                    "state table has " + std::to_string(t.column_count()) +
                        " columns but the hypergraph has " + std::to_string(h.vertex_count()) +
                        " vertices");
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (t.columns()[v] != h.name(v))
            throw Error(Errc::ColumnCountMismatch, "state table column " + std::to_string(v) + " is " +
                                                       t.columns()[v] + ", expected " + h.name(v));
}

// Some row with column a = va and column b = vb.
bool witness_row(const Bitset& a, bool va, const Bitset& b, bool vb) {
    auto wa = a.words();
    auto wb = b.words();
    const std::size_t bits = a.size();
    for (std::size_t k = 0; k < wa.size(); ++k) {
        Bitset::Word x = va ? wa[k] : ~wa[k];
        Bitset::Word y = vb ? wb[k] : ~wb[k];
        Bitset::Word m = x & y;
        if (k + 1 == wa.size() && bits % Bitset::kWordBits)
            m &= ~Bitset::Word{0} << (Bitset::kWordBits - bits % Bitset::kWordBits);
        if (m) return true;
    }
    return false;
}

}  // namespace

TravisMatrix align_columns(const TravisMatrix& t, const Hypergraph& h) {
    if (t.column_count() != h.vertex_count())
        throw Error(Errc::ColumnCountMismatch,
                    "state table has " + std::to_string(t.column_count()) +
                        " columns but the hypergraph has " + std::to_string(h.vertex_count()) +
                        " vertices");
    std::vector<std::size_t> source(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        auto c = t.column_index(h.name(v));
        if (!c) throw Error(Errc::UnknownVertex, "state table has no column " + h.name(v));
        source[v] = *c;
    }
    std::vector<Bitset> rows;
    rows.reserve(t.row_count());
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        Bitset row(h.vertex_count());
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            if (t.at(r, source[v])) row.set(v);
        rows.push_back(std::move(row));
    }
    std::vector<std::string> names;
    for (VertexId v = 0; v < h.vertex_count(); ++v) names.push_back(h.name(v));
    return TravisMatrix(std::move(names), rows);
}

StateClassification classify(const Hypergraph& h, const TravisMatrix& t) {
    require_columns(h, t);
    const Graph g = two_section(h);
    const std::size_t k = t.column_count();

    StateClassification out;
    out.n_states = t.row_count();
    out.unital = true;
    for (std::size_t c = 0; c < k; ++c)
        if (t.column(c).none()) out.unital = false;

    out.separable = true;
    out.perfectly_separable = true;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const Bitset& ci = t.column(i);
            const Bitset& cj = t.column(j);
            if (ci == cj) out.separable = false;
            int failed = 0;
            if (!witness_row(ci, false, cj, true))
                failed = 1;
            else if (!witness_row(ci, true, cj, false))
                failed = 2;
            else if (!g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)) &&
                     !witness_row(ci, true, cj, true))
                failed = 3;
            if (failed) {
                out.perfectly_separable = false;
                if (!out.fail_witness)
                    out.fail_witness =
                        FailWitness{static_cast<VertexId>(i), static_cast<VertexId>(j), failed};
            }
        }
    }
    return out;
}

GadgetScan gadget_scan(const Hypergraph& h, const TravisMatrix& t) {
    require_columns(h, t);
    const Graph g = two_section(h);
    const std::size_t k = t.column_count();
    GadgetScan out;
    for (VertexId a = 0; a < k; ++a) {
        for (VertexId b = 0; b < k; ++b) {
            if (a == b) continue;
            const Bitset& ca = t.column(a);
            const Bitset& cb = t.column(b);
            if (!g.has_edge(a, b) && !ca.intersects(cb)) out.tifs.emplace(a, b);
            if (ca.any() && ca.is_subset_of(cb)) out.tits.emplace(a, b);
        }
    }
    return out;
}

GadgetProfile gadget_profile(const TravisMatrix& t, std::string_view head, std::string_view tail) {
    if (head == tail) throw Error(Errc::InvalidArgument, "head and tail must differ");
    auto hi = t.column_index(head);
    auto ti = t.column_index(tail);
    if (!hi) throw Error(Errc::UnknownVertex, "unknown vertex '" + std::string(head) + "'");
    if (!ti) throw Error(Errc::UnknownVertex, "unknown vertex '" + std::string(tail) + "'");
    const Bitset& a = t.column(*hi);
    const Bitset& b = t.column(*ti);
    if (a.intersects(b))
        throw Error(Errc::NotAGadgetPair, "some state makes both " + std::string(head) + " and " +
                                              std::string(tail) + " true");
    GadgetProfile p{std::string(head), std::string(tail), a.count(), b.count(), 0};
    p.n_n = t.row_count() - p.n_a - p.n_b;
    return p;
}

}  // namespace ohg
