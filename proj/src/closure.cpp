#include "zol/constructions.hpp"

#include "zol/errors.hpp"
#include "zol/extensions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace zol {

namespace {

// All size-r combinations of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> c(static_cast<std::size_t>(r));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = r - 1;
    while (i >= 0 && c[i] == n - r + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

struct Core {
  std::vector<Vertex> slots;          // G3 label -> host vertex
  std::vector<std::uint64_t> cand;    // per member of S^{seq}: possible apex vertices
};

constexpr std::size_t kRealizationCap = 1000000;
constexpr int kFamilyElementCap = 20;

class ClosureBuilder {
 public:
  ClosureBuilder(const Graph& host, int k) : host_(host), k_(k) {}

  ClosureResult run(const Graph& a, std::span<const Vertex> embedding) {
    result_.vertices.assign(embedding.begin(), embedding.end());
    for (Vertex v : embedding) closure_ |= bit(v);
    alive_ = fullMask(host_.vertexCount());
    for (const Edge& e : a.edges()) edges_.emplace(embedding[e.u], embedding[e.v]);

    const int d = a.vertexCount();
    if (d >= k_ - 2) {
      for (const auto& c : combinations(d, k_ - 2)) {
        std::vector<Vertex> s;
        for (int i : c) s.push_back(embedding[i]);
        subsets_.push_back(std::move(s));
      }
      for (int step = 1; step <= k_ - 2; ++step) runStep(step);
      finalStep();
    }

    std::vector<Vertex> position(static_cast<std::size_t>(host_.vertexCount()), -1);
    for (std::size_t i = 0; i < result_.vertices.size(); ++i) position[result_.vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> local;
    for (const Edge& e : edges_) local.emplace_back(position[e.u], position[e.v]);
    result_.graph = Graph(static_cast<int>(result_.vertices.size()), local);
    return std::move(result_);
  }

 private:
  std::uint64_t available() const { return alive_ & ~closure_; }

  // Copies of the core whose roots 1..k-2 sit on `order` in that order.
  std::vector<Core> collectCores(const RootedPair& core, const std::vector<std::uint64_t>& members,
                                 const std::vector<Vertex>& order) const {
    std::vector<Core> cores;
    const std::uint64_t avail = available();
    forEachExtension(
        host_, core, order, false, [&](Vertex c) { return (avail & bit(c)) != 0; },
        [&](std::span<const Vertex> w) {
          Core c;
          c.slots = order;
          c.slots.insert(c.slots.end(), w.begin(), w.end());
          std::uint64_t image = 0;
          for (Vertex v : c.slots) image |= bit(v);
          for (std::uint64_t m : members) {
            std::uint64_t common = avail & ~image;
            for (std::uint64_t r = m; r; r &= r - 1) common &= host_.row(c.slots[std::countr_zero(r)]);
            c.cand.push_back(common);
          }
          cores.push_back(std::move(c));
          return true;
        });
    return cores;
  }

  void runStep(int step) {
    const int t = k_ - 1 - step;
    std::vector<int> seq(static_cast<std::size_t>(t));
    std::iota(seq.begin(), seq.end(), 1);
    const RootedPair core = buildG3(k_, seq);
    const int m = core.vertexCount();
    std::vector<std::uint64_t> members;
    for (const auto& c : combinations(m, k_ - 2)) {
      std::uint64_t mask = 0;
      for (int x : c) mask |= bit(x);
      members.push_back(mask);
    }
    const int partCount = static_cast<int>(members.size());
    for (int size = partCount; size >= 1; --size)
      for (const auto& subset : subsets_) runPart(step, core, members, subset, size);
  }

  // Root orientations are enumerated by position in A's embedding, never by
  // host label, so relabeling the host cannot change which one is tried first.
  void runPart(int step, const RootedPair& core, const std::vector<std::uint64_t>& members,
               const std::vector<Vertex>& subset, int size) {
    std::vector<int> perm(subset.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Vertex> order;
      for (int i : perm) order.push_back(subset[i]);
      runOriented(step, core, members, subset, order, size);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void runOriented(int step, const RootedPair& core, const std::vector<std::uint64_t>& members,
                   const std::vector<Vertex>& subset, const std::vector<Vertex>& order, int size) {
    auto cores = collectCores(core, members, order);
    if (cores.empty()) return;
    std::vector<int> usable;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (std::any_of(cores.begin(), cores.end(), [&](const Core& c) { return c.cand[j] != 0; }))
        usable.push_back(static_cast<int>(j));
    if (static_cast<int>(usable.size()) < size) return;
    if (static_cast<int>(usable.size()) > kFamilyElementCap)
      throw RefusalError("closure search space too large (" + std::to_string(usable.size()) +
                         " candidate family members); host is too dense");
    for (const auto& pick : combinations(static_cast<int>(usable.size()), size)) {
      std::vector<int> family;
      for (int i : pick) family.push_back(usable[i]);
      if (tryFamily(step, core, members, subset, cores, family)) cores = collectCores(core, members, order);
      if (cores.empty()) return;
    }
  }

  bool tryFamily(int step, const RootedPair& core, const std::vector<std::uint64_t>& members,
                 const std::vector<Vertex>& subset, const std::vector<Core>& cores, const std::vector<int>& family) {
    std::vector<Vertex> best;
    bool found = false;
    std::set<Edge> bestEdges;
    std::uint64_t everything = 0;
    std::size_t realizations = 0;
    std::vector<Vertex> apex(family.size());

    for (const Core& c : cores) {
      std::uint64_t coreW = 0;
      for (std::size_t i = static_cast<std::size_t>(k_ - 2); i < c.slots.size(); ++i) coreW |= bit(c.slots[i]);
      auto assign = [&](auto&& self, std::size_t i, std::uint64_t used) -> void {
        if (i == family.size()) {
          if (++realizations > kRealizationCap) throw RefusalError("closure search exceeds the realization ceiling");
          const std::uint64_t w = coreW | used;
          everything |= w;
          std::vector<Vertex> sorted;
          for (std::uint64_t r = w; r; r &= r - 1) sorted.push_back(std::countr_zero(r));
          if (found && sorted >= best) return;
          best = std::move(sorted);
          found = true;
          bestEdges.clear();
          for (const Edge& e : core.graph().edges())
            if (e.v >= k_ - 2) bestEdges.emplace(c.slots[e.u], c.slots[e.v]);
          for (std::size_t j = 0; j < family.size(); ++j)
            for (std::uint64_t r = members[family[j]]; r; r &= r - 1)
              bestEdges.emplace(c.slots[std::countr_zero(r)], apex[j]);
          return;
        }
        for (std::uint64_t r = c.cand[family[i]] & ~used; r; r &= r - 1) {
          apex[i] = std::countr_zero(r);
          self(self, i + 1, used | bit(apex[i]));
        }
      };
      assign(assign, 0, 0);
    }
    if (!found) return false;

    edges_.insert(bestEdges.begin(), bestEdges.end());
    ClosureExtension ext;
    ext.step = step;
    ext.subset = subset;
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::vector<Vertex> labels;
      for (std::uint64_t r = members[family[i]]; r; r &= r - 1) labels.push_back(std::countr_zero(r));
      ext.family.push_back(std::move(labels));
    }
    ext.w = best;
    for (Vertex v : best) {
      result_.vertices.push_back(v);
      closure_ |= bit(v);
    }
    alive_ &= ~everything;
    result_.added.push_back(std::move(ext));
    return true;
  }

  void finalStep() {
    for (const auto& subset : subsets_) {
      std::uint64_t common = available();
      for (Vertex v : subset) common &= host_.row(v);
      if (!common) continue;
      const Vertex q = std::countr_zero(common);
      for (Vertex v : subset) edges_.emplace(v, q);
      result_.vertices.push_back(q);
      closure_ |= bit(q);
      alive_ &= ~common;
      result_.added.push_back({k_ - 1, subset, {}, {q}});
    }
  }

  const Graph& host_;
  int k_;
  std::uint64_t alive_ = 0;
  std::uint64_t closure_ = 0;
  std::vector<std::vector<Vertex>> subsets_;
  std::set<Edge> edges_;
  ClosureResult result_;
};

}  // namespace

ClosureResult closure(const Graph& a, const Graph& host, std::span<const Vertex> embedding, int k) {
  if (k < 4) throw ArgumentError("closure needs k >= 4, got " + std::to_string(k));
  if (static_cast<int>(embedding.size()) != a.vertexCount())
    throw ArgumentError("embedding lists " + std::to_string(embedding.size()) + " vertices, A has " +
                        std::to_string(a.vertexCount()));
  detail::validateVertices(host, embedding, "embedding");
  for (const Edge& e : a.edges())
    if (!host.adjacent(embedding[e.u], embedding[e.v]))
      throw ArgumentError("embedding does not map edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " of A onto a host edge");
  return ClosureBuilder(host, k).run(a, embedding);
}

}  // namespace zol
