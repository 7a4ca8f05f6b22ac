#include "braidwalk/cayley.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace braidwalk {

namespace {
constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kDenseLookupLimit = std::uint64_t{1} << 26;
}  // namespace

std::optional<std::size_t> CayleyGraph::find(const Element& e) const {
  if (!group_->contains(e)) return std::nullopt;
  if (!dense_lookup_.empty()) {
    const std::uint32_t v = dense_lookup_[group_->dense_index(e)];
    if (v == kUnseen) return std::nullopt;
    return v;
  }
  const auto it = sparse_lookup_.find(e);
  if (it == sparse_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t CayleyGraph::index_of(const Element& e) const {
  const auto v = find(e);
  if (!v) throw UnknownElement(to_string(e) + " is not an element of " + group_->spec().name());
  return *v;
}

std::optional<CayleyGraph::Parent> CayleyGraph::parent(std::size_t vertex) const {
  if (vertex == 0) return std::nullopt;
  return parent_[vertex];
}

CayleyGraph build_cayley(std::shared_ptr<const ConcreteGroup> group, std::uint64_t cap) {
  if (group->order() > cap || group->order() >= kUnseen) {
    throw CapExceeded(group->spec().name() + ": Cayley graph exceeds the enumeration cap of " + std::to_string(cap));
  }
  CayleyGraph graph;
  graph.group_ = group;
  const auto& alphabet = group->alphabet();
  const std::size_t letters = alphabet.size();
  const auto order = static_cast<std::size_t>(group->order());

  std::vector<Element> step;
  for (const Letter& letter : alphabet) {
    const Element& gen = group->generators()[static_cast<std::size_t>(letter.generator)];
    step.push_back(letter.sign > 0 ? gen : group->inverse(gen));
  }

  const bool dense = group->index_space() != 0 && group->index_space() <= kDenseLookupLimit;
  if (dense) {
    graph.dense_lookup_.assign(static_cast<std::size_t>(group->index_space()), kUnseen);
  } else {
    graph.sparse_lookup_.reserve(order);
  }

  graph.elements_.reserve(order);
  graph.distance_.reserve(order);
  graph.parent_.reserve(order);
  graph.neighbors_.reserve(order * letters);

  graph.elements_.push_back(group->identity());
  graph.distance_.push_back(0);
  graph.parent_.push_back({0, 0});
  if (dense) {
    graph.dense_lookup_[group->dense_index(group->identity())] = 0;
  } else {
    graph.sparse_lookup_.emplace(group->identity(), 0);
  }

  // The element list doubles as the FIFO queue.
  for (std::size_t v = 0; v < graph.elements_.size(); ++v) {
    const std::uint64_t base = dense ? group->dense_index(graph.elements_[v]) : 0;
    for (std::size_t k = 0; k < letters; ++k) {
      std::uint64_t index = base;
      Element next = dense ? group->step(graph.elements_[v], k, index) : group->multiply(graph.elements_[v], step[k]);
      std::uint32_t vertex = static_cast<std::uint32_t>(graph.elements_.size());
      bool inserted = false;
      if (dense) {
        std::uint32_t& slot = graph.dense_lookup_[index];
        inserted = slot == kUnseen;
        if (inserted) slot = vertex;
        vertex = slot;
      } else {
        const auto [it, fresh] = graph.sparse_lookup_.try_emplace(next, vertex);
        inserted = fresh;
        vertex = it->second;
      }
      if (inserted) {
        graph.elements_.push_back(std::move(next));
        graph.distance_.push_back(graph.distance_[v] + 1);
        graph.parent_.push_back({static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(k)});
      }
      graph.neighbors_.push_back(vertex);
    }
  }

  graph.max_distance_ = *std::max_element(graph.distance_.begin(), graph.distance_.end());
  for (std::size_t v = 0; v < graph.elements_.size() && graph.bipartite_; ++v) {
    for (std::uint32_t w : graph.neighbors(v)) {
      if ((graph.distance_[v] - graph.distance_[w]) % 2 == 0) {
        graph.bipartite_ = false;
        break;
      }
    }
  }
  return graph;
}

CayleyGraph build_cayley(const GroupSpec& spec, std::uint64_t cap) {
  return build_cayley(std::make_shared<const ConcreteGroup>(build_group(spec, cap)), cap);
}

int length_of(const CayleyGraph& graph, const Element& g) { return graph.distance(graph.index_of(g)); }

Word reduced_word(const CayleyGraph& graph, std::size_t vertex) {
  Word word;
  word.reserve(static_cast<std::size_t>(graph.distance(vertex)));
  while (auto p = graph.parent(vertex)) {
    word.push_back(graph.letters()[p->letter]);
    vertex = p->vertex;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Word reduced_word(const CayleyGraph& graph, const Element& g) { return reduced_word(graph, graph.index_of(g)); }

bool is_bipartite(const CayleyGraph& graph) { return graph.bipartite(); }

// ---------------------------------------------------------------------------

Functional Functional::length() { return Functional(); }

Functional Functional::constant(Rational value) {
  Functional f;
  f.kind_ = Kind::Constant;
  f.constant_ = std::move(value);
  f.name_ = "constant";
  return f;
}

Functional Functional::of(std::function<Rational(const Element&)> fn, std::string name) {
  Functional f;
  f.kind_ = Kind::General;
  f.f_ = std::move(fn);
  f.name_ = std::move(name);
  return f;
}

Rational Functional::operator()(const CayleyGraph& graph, std::size_t vertex) const {
  switch (kind_) {
    case Kind::Length:
      return graph.distance(vertex);
    case Kind::Constant:
      return constant_;
    case Kind::General:
      return f_(graph.element(vertex));
  }
  return 0;
}

std::vector<double> Functional::tabulate(const CayleyGraph& graph) const {
  std::vector<double> out(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    out[v] = kind_ == Kind::Length ? static_cast<double>(graph.distance(v)) : to_double((*this)(graph, v));
  }
  return out;
}

ParitySums parity_sums(const CayleyGraph& graph, const Functional& f) {
  ParitySums sums;
  if (f.is_length()) {
    std::int64_t even = 0;
    std::int64_t odd = 0;
    for (int d : graph.distances()) (d % 2 == 0 ? even : odd) += d;
    sums.even = even;
    sums.odd = odd;
  } else {
    for (std::size_t v = 0; v < graph.size(); ++v) {
      (graph.distance(v) % 2 == 0 ? sums.even : sums.odd) += f(graph, v);
    }
  }
  sums.total = sums.even + sums.odd;
  return sums;
}

void write_edge_list(std::ostream& out, const CayleyGraph& graph) {
  const auto letters = graph.letters();
  for (std::size_t v = 0; v < graph.size(); ++v) {
    for (std::size_t k = 0; k < letters.size(); ++k) {
      out << v << ' ' << graph.neighbor(v, k) << ' ' << letters[k].generator + 1 << ' ' << letters[k].sign << '\n';
    }
  }
  out << "# distances\n";
  for (std::size_t v = 0; v < graph.size(); ++v) out << v << ' ' << graph.distance(v) << '\n';
}

}  // namespace braidwalk
