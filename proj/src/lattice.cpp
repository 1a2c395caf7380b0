#include "lattice.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "interior/error.hpp"

namespace interior::detail {

// ---------------------------------------------------------------------------
// Transportation feasibility

TransportationChecker::TransportationChecker(const BipartiteGraph& g)
    : g_(g),
      nv_(g.v_count()),
      nw_(g.w_count()),
      flow_(nv_ * nw_),
      supply_(nv_),
      demand_(nw_),
      parent_w_(nw_),
      parent_v_(nv_) {
  queue_.reserve(nv_);
}

bool TransportationChecker::feasible(std::span<const std::uint32_t> supply,
                                     std::span<const std::uint32_t> demand) {
  const auto total_supply = std::accumulate(supply.begin(), supply.end(), std::uint64_t{0});
  const auto total_demand = std::accumulate(demand.begin(), demand.end(), std::uint64_t{0});
  if (total_supply != total_demand) return false;

  std::fill(flow_.begin(), flow_.end(), 0u);
  std::copy(supply.begin(), supply.end(), supply_.begin());
  std::copy(demand.begin(), demand.end(), demand_.begin());

  // Greedy start; augmenting paths repair whatever it gets wrong.
  for (const Edge& e : g_.edges()) {
    const auto x = std::min(supply_[e.v], demand_[e.w]);
    flow_[e.v * nw_ + e.w] += x;
    supply_[e.v] -= x;
    demand_[e.w] -= x;
  }
  while (std::any_of(supply_.begin(), supply_.end(), [](auto s) { return s > 0; }))
    if (!augment()) return false;
  return true;
}

bool TransportationChecker::augment() {
  std::fill(parent_w_.begin(), parent_w_.end(), -2);
  std::fill(parent_v_.begin(), parent_v_.end(), -2);
  queue_.clear();
  for (std::size_t v = 0; v < nv_; ++v) {
    if (supply_[v] > 0) {
      parent_v_[v] = -1;
      queue_.push_back(static_cast<std::uint32_t>(v));
    }
  }

  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const std::size_t v = queue_[head];
    for (Mask rest = g_.neighbors(Side::V, v); rest; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      if (parent_w_[w] != -2) continue;
      parent_w_[w] = static_cast<std::int32_t>(v);

      if (demand_[w] > 0) {
        // Bottleneck: remaining demand, supply at the root, and the flow on
        // every backward step of the path.
        std::uint32_t delta = demand_[w];
        std::size_t cw = w;
        std::size_t cv = v;
        for (;;) {
          if (parent_v_[cv] == -1) {
            delta = std::min(delta, supply_[cv]);
            break;
          }
          const auto pw = static_cast<std::size_t>(parent_v_[cv]);
          delta = std::min(delta, flow_[cv * nw_ + pw]);
          cw = pw;
          cv = static_cast<std::size_t>(parent_w_[cw]);
        }
        demand_[w] -= delta;
        cw = w;
        cv = v;
        for (;;) {
          flow_[cv * nw_ + cw] += delta;
          if (parent_v_[cv] == -1) {
            supply_[cv] -= delta;
            break;
          }
          const auto pw = static_cast<std::size_t>(parent_v_[cv]);
          flow_[cv * nw_ + pw] -= delta;
          cw = pw;
          cv = static_cast<std::size_t>(parent_w_[cw]);
        }
        return true;
      }

      for (Mask back = g_.neighbors(Side::W, w); back; back &= back - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(back));
        if (parent_v_[u] == -2 && flow_[u * nw_ + w] > 0) {
          parent_v_[u] = static_cast<std::int32_t>(w);
          queue_.push_back(static_cast<std::uint32_t>(u));
        }
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Packing

PointCodec::PointCodec(std::size_t v_count, std::size_t w_count, std::size_t max_coordinate)
    : v_count_(v_count),
      w_count_(w_count),
      bits_(std::max<std::size_t>(1, std::bit_width(max_coordinate))),
      per_word_(64 / bits_),
      words_(std::max<std::size_t>(1, (v_count + w_count + per_word_ - 1) / per_word_)) {}

std::vector<std::uint64_t> PointCodec::unit(std::size_t coordinate) const {
  std::vector<std::uint64_t> out(words_);
  out[coordinate / per_word_] = std::uint64_t{1} << ((coordinate % per_word_) * bits_);
  return out;
}

std::vector<std::uint64_t> PointCodec::edge_delta(const Edge& e) const {
  auto out = unit(e.v);
  const auto other = unit(v_count_ + e.w);
  for (std::size_t k = 0; k < words_; ++k) out[k] += other[k];
  return out;
}

void PointCodec::unpack(const std::uint64_t* packed, DegreePair& out) const {
  const std::uint64_t field = bits_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
  auto get = [&](std::size_t c) {
    return static_cast<std::uint32_t>((packed[c / per_word_] >> ((c % per_word_) * bits_)) & field);
  };
  out.a.resize(v_count_);
  out.b.resize(w_count_);
  for (std::size_t i = 0; i < v_count_; ++i) out.a[i] = get(i);
  for (std::size_t j = 0; j < w_count_; ++j) out.b[j] = get(v_count_ + j);
}

// ---------------------------------------------------------------------------
// Layer expansion

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_point(const std::uint64_t* p, std::size_t words) {
  std::uint64_t h = 0;
  for (std::size_t k = 0; k < words; ++k) h = mix(h ^ p[k]);
  return h;
}

// Open-addressing set of packed points. Slots hold 1-based indices into the
// flat point storage.
class PackedPointSet {
 public:
  explicit PackedPointSet(std::size_t words) : words_(words), slots_(1024, 0) {}

  std::size_t size() const noexcept { return count_; }
  std::vector<std::uint64_t>& storage() noexcept { return storage_; }

  void insert(const std::uint64_t* p, std::uint64_t h) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t idx = h & mask;; idx = (idx + 1) & mask) {
      const std::uint32_t slot = slots_[idx];
      if (slot == 0) {
        storage_.insert(storage_.end(), p, p + words_);
        slots_[idx] = static_cast<std::uint32_t>(++count_);
        return;
      }
      if (std::equal(p, p + words_, storage_.data() + (slot - 1) * words_)) return;
    }
  }

 private:
  void grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
    const std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t idx = hash_point(storage_.data() + i * words_, words_) & mask;
      while (fresh[idx] != 0) idx = (idx + 1) & mask;
      fresh[idx] = static_cast<std::uint32_t>(i + 1);
    }
    slots_ = std::move(fresh);
  }

  std::size_t words_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint64_t> storage_;
  std::size_t count_ = 0;
};

// Run `work(t)` for t in [0, n), on threads when n > 1; rethrows the first failure.
template <class F>
void run_sharded(unsigned n, F&& work) {
  if (n <= 1) {
    work(0u);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

PointLayer::PointLayer(const BipartiteGraph& g, std::size_t max_dilation, const EnumerationOptions& options)
    : g_(g),
      max_dilation_(max_dilation),
      options_(options),
      codec_(g.v_count(), g.w_count(), max_dilation) {
  if (max_dilation > 0xFFFF) throw ResourceLimit("dilation " + std::to_string(max_dilation) + " is too large");
  for (const Edge& e : g.edges()) {
    const auto d = codec_.edge_delta(e);
    deltas_.insert(deltas_.end(), d.begin(), d.end());
  }
  points_.assign(codec_.words(), 0);
}

void PointLayer::advance() {
  if (dilation_ >= max_dilation_)
    throw std::logic_error("PointLayer advanced past its configured dilation");

  const std::size_t words = codec_.words();
  const std::size_t n_points = size();
  const std::size_t n_edges = g_.edge_count();
  const unsigned shards = std::max(1u, options_.threads);
  const std::size_t cap = options_.max_points;

  // Shard t owns the candidates whose hash lands in residue class t, so the
  // shards never see the same point and need no merging beyond concatenation.
  std::vector<PackedPointSet> sets(shards, PackedPointSet(words));
  std::atomic<bool> over_cap{false};
  run_sharded(shards, [&](unsigned t) {
    auto& set = sets[t];
    std::vector<std::uint64_t> candidate(words);
    for (std::size_t i = 0; i < n_points; ++i) {
      const std::uint64_t* p = points_.data() + i * words;
      for (std::size_t e = 0; e < n_edges; ++e) {
        const std::uint64_t* d = deltas_.data() + e * words;
        for (std::size_t k = 0; k < words; ++k) candidate[k] = p[k] + d[k];
        const std::uint64_t h = hash_point(candidate.data(), words);
        if (shards > 1 && (h >> 40) % shards != t) continue;
        set.insert(candidate.data(), h);
      }
      if (set.size() > cap || over_cap.load(std::memory_order_relaxed)) {
        over_cap = true;
        return;
      }
    }
  });

  std::size_t total = 0;
  for (const auto& s : sets) total += s.size();
  if (over_cap || total > cap)
    throw ResourceLimit("dilation " + std::to_string(dilation_ + 1) + " of the root polytope exceeds " +
                        std::to_string(cap) + " lattice points");

  std::vector<std::uint64_t> next;
  next.reserve(total * words);
  for (auto& s : sets) next.insert(next.end(), s.storage().begin(), s.storage().end());
  points_ = std::move(next);
  ++dilation_;

  if (options_.verify_membership) verify();
}

DegreePair PointLayer::point(std::size_t i) const {
  DegreePair out;
  codec_.unpack(points_.data() + i * codec_.words(), out);
  return out;
}

void PointLayer::verify() const {
  const unsigned shards = std::max(1u, options_.threads);
  const std::size_t n = size();
  run_sharded(shards, [&](unsigned t) {
    TransportationChecker checker(g_);
    DegreePair p;
    for (std::size_t i = t; i < n; i += shards) {
      codec_.unpack(points_.data() + i * codec_.words(), p);
      if (!checker.feasible(p.a, p.b))
        throw ConsistencyFailure("generated point at dilation " + std::to_string(dilation_) +
                                 " fails the transportation membership test");
    }
  });
}

}  // namespace interior::detail
