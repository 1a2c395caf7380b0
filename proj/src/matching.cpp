#include "interior/matching.hpp"

namespace interior {

namespace {

class Augmenter {
 public:
  Augmenter(const BipartiteGraph& g, Side side)
      : g_(g), side_(side), mate_(g.count(side)), back_(g.count(opposite(side))) {}

  bool augment_from(std::size_t i) {
    seen_ = 0;
    return search(i);
  }

  Matching result() && { return {side_, std::move(mate_)}; }

 private:
  bool search(std::size_t i) {
    for (Mask rest = g_.neighbors(side_, i) & ~seen_; rest; rest &= rest - 1) {
      const auto j = static_cast<std::uint32_t>(std::countr_zero(rest));
      if (seen_ & bit(j)) continue;
      seen_ |= bit(j);
      if (!back_[j] || search(*back_[j])) {
        mate_[i] = j;
        back_[j] = static_cast<std::uint32_t>(i);
        return true;
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  Side side_;
  std::vector<std::optional<std::uint32_t>> mate_;
  std::vector<std::optional<std::uint32_t>> back_;
  Mask seen_ = 0;
};

}  // namespace

std::size_t Matching::size() const { return static_cast<std::size_t>(std::popcount(matched())); }

Mask Matching::matched() const {
  Mask m = 0;
  for (std::size_t i = 0; i < mate.size(); ++i)
    if (mate[i]) m |= bit(i);
  return m;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < mate.size(); ++i) {
    if (!mate[i]) continue;
    const auto self = static_cast<std::uint32_t>(i);
    out.push_back(side == Side::V ? Edge{self, *mate[i]} : Edge{*mate[i], self});
  }
  return out;
}

Matching maximum_matching(const BipartiteGraph& g, const VertexSet& among) {
  Augmenter aug(g, among.side);
  for (Mask rest = among.members & low_bits(g.count(among.side)); rest; rest &= rest - 1)
    aug.augment_from(static_cast<std::size_t>(std::countr_zero(rest)));
  return std::move(aug).result();
}

Matching maximum_matching(const BipartiteGraph& g, Side side) { return maximum_matching(g, g.all(side)); }

std::optional<VertexSet> hall_violator(const BipartiteGraph& g, const VertexSet& s) {
  const Matching m = maximum_matching(g, s);
  const Mask unmatched = s.members & ~m.matched();
  if (!unmatched) return std::nullopt;

  std::vector<std::optional<std::uint32_t>> back(g.count(opposite(s.side)));
  for (std::size_t i = 0; i < m.mate.size(); ++i)
    if (m.mate[i]) back[*m.mate[i]] = static_cast<std::uint32_t>(i);

  // Every neighbor reached is matched (otherwise the path would augment), and
  // its mate lies in s, so |N(X)| = |X| - 1.
  Mask reached = unmatched & -unmatched;
  Mask frontier = reached;
  Mask seen_other = 0;
  while (frontier) {
    const Mask next_other = neighborhood(g, {s.side, frontier}).members & ~seen_other;
    seen_other |= next_other;
    frontier = 0;
    for (Mask rest = next_other; rest; rest &= rest - 1) {
      const auto& mate = back[static_cast<std::size_t>(std::countr_zero(rest))];
      if (mate && !(reached & bit(*mate))) frontier |= bit(*mate);
    }
    reached |= frontier;
  }
  return VertexSet{s.side, reached};
}

std::string_view to_string(NonExpandingStrategy s) {
  switch (s) {
    case NonExpandingStrategy::Leaf: return "leaf";
    case NonExpandingStrategy::LargerClass: return "larger-class";
    case NonExpandingStrategy::Violator: return "violator";
  }
  return "?";
}

std::optional<NonExpandingChoice> choose_nonexpanding(const BipartiteGraph& g) {
  if (g.edge_count() == 0) return std::nullopt;

  for (Side side : {Side::V, Side::W})
    for (std::size_t i = 0; i < g.count(side); ++i)
      if (g.degree(side, i) == 1) return NonExpandingChoice{{side, bit(i)}, NonExpandingStrategy::Leaf};

  auto non_isolated = [&](Side side) {
    Mask m = 0;
    for (std::size_t i = 0; i < g.count(side); ++i)
      if (g.degree(side, i) > 0) m |= bit(i);
    return VertexSet{side, m};
  };

  const Side larger = g.v_count() >= g.w_count() ? Side::V : Side::W;
  const VertexSet big = non_isolated(larger);
  if (is_nonexpanding(g, big)) return NonExpandingChoice{big, NonExpandingStrategy::LargerClass};

  // N(big) is exactly the non-isolated part of the other class and is strictly
  // larger than big, so it cannot be saturated and a violator exists there.
  for (const VertexSet& candidate : {big, non_isolated(opposite(larger))})
    if (auto x = hall_violator(g, candidate)) return NonExpandingChoice{*x, NonExpandingStrategy::Violator};
  return std::nullopt;
}

}  // namespace interior
