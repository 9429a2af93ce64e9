// SPDX-License-Identifier: Apache-2.0

#include "scpm/miner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "scpm/error.hpp"

namespace scpm {

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SCPM_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

TimeNodeSet lift_nodes(const NodeSet& nodes) {
  std::vector<TimeNodeSet::Entry> e;
  e.reserve(nodes.size());
  for (NodeId v : nodes) e.push_back({v, IntervalSet(0, 1)});
  return TimeNodeSet::from_entries(std::move(e));
}

NodeSet nodes_of(const TimeNodeSet& x) {
  NodeSet out;
  out.reserve(x.node_count());
  for (const auto& e : x) out.push_back(e.node);
  return out;
}

namespace {

struct Frame {
  Pattern q;
  TimeNodeSet support;
  Pattern excluded;  // EL
  std::size_t next = 0;
  std::size_t record = 0;
  std::size_t depth = 0;
  // Candidate supports computed ahead of time when running multithreaded;
  // indexed by position in the item order.
  std::vector<std::optional<TimeNodeSet>> ahead;
  std::vector<char> ahead_done;
};

class Enumerator {
 public:
  Enumerator(const TimeNodeSet& root, const CoreFunction& core, const AttributeContext& ctx,
             const MinerConfig& cfg)
      : root_(root), core_(core), ctx_(ctx), cfg_(cfg), threads_(resolve_thread_count(cfg.threads)) {
    const std::size_t n = ctx.item_count();
    if (cfg.item_order.empty()) {
      order_.resize(n);
      for (ItemIndex i = 0; i < n; ++i) order_[i] = i;
    } else {
      order_ = cfg.item_order;
      std::vector<char> seen(n, 0);
      if (order_.size() != n) throw ConfigError("item order must be a permutation of all items");
      for (ItemIndex i : order_) {
        if (i >= n || seen[i]) throw ConfigError("item order must be a permutation of all items");
        seen[i] = 1;
      }
    }
  }

  MineResult run() {
    TimeNodeSet x = core_(root_);
    Pattern q0 = intent(x, ctx_);
    ClosedPatternRecord root = make_record(q0, x, std::nullopt, std::nullopt, 0);
    root.below_min_support = measure(x) < cfg_.min_support;
    if (root.below_min_support)
      result_.warnings.push_back("the root pattern's support is below the minimum support");
    emit(std::move(root));
    if (!result_.records.back().below_min_support)
      stack_.push_back(make_frame(std::move(q0), std::move(x), ctx_.empty_pattern(), 0, 0));

    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.next == order_.size()) {
        stack_.pop_back();
        continue;
      }
      const std::size_t pos = f.next++;
      const ItemIndex item = order_[pos];
      if (f.q.test(item) || f.excluded.test(item)) continue;

      std::optional<TimeNodeSet> child_support;
      if (!f.ahead_done.empty() && f.ahead_done[pos]) {
        child_support = std::move(f.ahead[pos]);
      } else {
        child_support = extend(f.support, item);
      }
      if (!child_support) continue;
      Pattern child_q = intent(*child_support, ctx_);
      if (child_q.intersects(f.excluded)) continue;

      Pattern child_excluded = f.excluded;  // children see a snapshot
      f.excluded.set(item);
      const std::size_t parent_record = f.record;
      const std::size_t depth = f.depth + 1;
      ++result_.stats.tree_edges;
      emit(make_record(child_q, *child_support, item, parent_record, depth));
      const std::size_t rec = result_.records.size() - 1;
      // `f` is invalidated by the push below
      stack_.push_back(make_frame(std::move(child_q), std::move(*child_support),
                                  std::move(child_excluded), rec, depth));
    }

    if (cfg_.min_intent_size > 0)
      result_.records = filter_min_intent(result_.records, cfg_.min_intent_size);
    return std::move(result_);
  }

 private:
  Tick measure(const TimeNodeSet& x) const {
    return cfg_.measure == SupportMeasure::Duration ? x.measure()
                                                    : static_cast<Tick>(x.node_count());
  }

  // Core support of q u {item} within the parent's support, or nothing when
  // it is not frequent.
  std::optional<TimeNodeSet> extend(const TimeNodeSet& parent, ItemIndex item) {
    ++result_.stats.candidates;
    TimeNodeSet x = core_(restrict_to_item(parent, item, ctx_));
    if (measure(x) < cfg_.min_support) return std::nullopt;
    return x;
  }

  Frame make_frame(Pattern q, TimeNodeSet support, Pattern excluded, std::size_t record,
                   std::size_t depth) {
    Frame f{std::move(q), std::move(support), std::move(excluded), 0, record, depth, {}, {}};
    if (threads_ > 1) precompute(f);
    return f;
  }

  void precompute(Frame& f) {
    std::vector<std::size_t> todo;
    for (std::size_t pos = 0; pos < order_.size(); ++pos)
      if (!f.q.test(order_[pos]) && !f.excluded.test(order_[pos])) todo.push_back(pos);
    if (todo.size() < 2) return;
    f.ahead.assign(order_.size(), std::nullopt);
    f.ahead_done.assign(order_.size(), 0);
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= todo.size() || failed) return;
        const std::size_t pos = todo[i];
        try {
          TimeNodeSet x = core_(restrict_to_item(f.support, order_[pos], ctx_));
          if (measure(x) >= cfg_.min_support) f.ahead[pos] = std::move(x);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(threads_, static_cast<unsigned>(todo.size()));
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    for (std::size_t pos : todo) f.ahead_done[pos] = 1;
    result_.stats.candidates += todo.size();
  }

  ClosedPatternRecord make_record(const Pattern& q, const TimeNodeSet& x,
                                  std::optional<ItemIndex> item, std::optional<std::size_t> parent,
                                  std::size_t depth) const {
    ClosedPatternRecord r;
    r.intent = q;
    r.support = x;
    r.support_measure = x.measure();
    r.node_count = x.node_count();
    r.parent_item = item;
    r.parent = parent;
    r.depth = depth;
    return r;
  }

  void emit(ClosedPatternRecord r) {
    ++result_.stats.per_depth[r.depth];
    result_.records.push_back(std::move(r));
  }

  const TimeNodeSet& root_;
  const CoreFunction& core_;
  const AttributeContext& ctx_;
  const MinerConfig& cfg_;
  unsigned threads_;
  std::vector<ItemIndex> order_;
  std::vector<Frame> stack_;
  MineResult result_;
};

void validate_config(const MinerConfig& cfg) {
  if (cfg.min_support <= 0) throw ConfigError("minimum support must be positive");
}

}  // namespace

MineResult enumerate_closed(const TimeNodeSet& root, const CoreFunction& core,
                            const AttributeContext& ctx, const MinerConfig& cfg) {
  validate_config(cfg);
  return Enumerator(root, core, ctx, cfg).run();
}

MineResult mine(const StreamGraph& s, const AttributeContext& ctx, const MinerConfig& cfg) {
  validate_config(cfg);
  validate_core(cfg.core, s.directed());
  if (s.empty()) {
    MineResult r;
    r.warnings.push_back("empty stream: nothing to mine");
    return r;
  }
  if (ctx.node_count() < s.node_count())
    throw InputError("attribute context does not cover every node of the stream");
  const CoreFunction core = core_function(cfg.core, s);
  return enumerate_closed(s.presence_set(), core, ctx, cfg);
}

MineResult mine_static(const StaticGraph& g, const AttributeContext& ctx, const MinerConfig& cfg) {
  validate_config(cfg);
  validate_core(cfg.core, g.directed);
  if (g.nodes.empty()) {
    MineResult r;
    r.warnings.push_back("empty graph: nothing to mine");
    return r;
  }
  if (ctx.node_count() < g.universe)
    throw InputError("attribute context does not cover every node of the graph");
  const CoreSpec spec = cfg.core;
  const CoreFunction core = [&g, spec](const TimeNodeSet& x) {
    return lift_nodes(apply_static_core(spec, g, nodes_of(x)));
  };
  return enumerate_closed(lift_nodes(g.nodes), core, ctx, cfg);
}

StaticComparison compare_with_static(const StreamGraph& s, const AttributeContext& ctx,
                                     const MinerConfig& cfg, Tick static_min_support) {
  StaticComparison cmp;
  cmp.stream = mine(s, ctx, cfg);
  MinerConfig static_cfg = cfg;
  static_cfg.min_support = static_min_support;
  static_cfg.measure = SupportMeasure::Nodes;
  cmp.static_graph = mine_static(induced_static_graph(s), ctx, static_cfg);
  std::vector<Pattern> static_intents;
  for (const auto& r : cmp.static_graph.records)
    if (!r.below_min_support) static_intents.push_back(r.intent);
  std::sort(static_intents.begin(), static_intents.end());
  for (const auto& r : cmp.stream.records) {
    if (r.below_min_support) continue;
    if (!std::binary_search(static_intents.begin(), static_intents.end(), r.intent))
      cmp.missing_from_static.push_back(r.intent);
  }
  return cmp;
}

std::map<std::size_t, std::size_t> count_by_intent_size(const std::vector<ClosedPatternRecord>& r) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& rec : r) ++hist[rec.intent.count()];
  return hist;
}

std::vector<ClosedPatternRecord> filter_min_intent(const std::vector<ClosedPatternRecord>& r,
                                                   std::size_t n) {
  std::vector<ClosedPatternRecord> out;
  std::vector<std::optional<std::size_t>> remap(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].intent.count() < n) continue;
    remap[i] = out.size();
    out.push_back(r[i]);
    auto& rec = out.back();
    if (rec.parent) rec.parent = *rec.parent < i ? remap[*rec.parent] : std::nullopt;
  }
  return out;
}

}  // namespace scpm
