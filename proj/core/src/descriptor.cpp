#include "sl2c3/descriptor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sl2c3 {

bool GlueEdge::operator<(const GlueEdge& o) const {
  if (from != o.from) return from < o.from;
  if (to != o.to) return to < o.to;
  return action < o.action;
}

Descriptor Descriptor::leaf(const CanonicalClass& c) {
  Descriptor d;
  d.kind_ = Kind::Leaf;
  d.leaf_ = c;
  return d;
}

Descriptor Descriptor::sum(std::vector<Descriptor> children) {
  Descriptor d;
  d.kind_ = Kind::Sum;
  d.children_ = std::move(children);
  return d;
}

Descriptor Descriptor::semi(const Descriptor& quo, const Descriptor& sub) {
  Descriptor d;
  d.kind_ = Kind::Semi;
  d.children_ = {quo, sub};
  return d;
}

Descriptor Descriptor::glue(std::vector<CanonicalClass> nodes, std::vector<GlueEdge> edges) {
  for (const auto& e : edges)
    if (e.from < 0 || e.to < 0 || e.from >= static_cast<int>(nodes.size()) ||
        e.to >= static_cast<int>(nodes.size()) || e.from == e.to)
      throw Error("glue edge out of range");
  Descriptor d;
  d.kind_ = Kind::Glue;
  d.nodes_ = std::move(nodes);
  d.edges_ = std::move(edges);
  return d;
}

int Descriptor::dim() const {
  int n = 0;
  for (const auto& c : leaves()) n += c.dim();
  return n;
}

std::vector<CanonicalClass> Descriptor::leaves() const {
  std::vector<CanonicalClass> out;
  switch (kind_) {
    case Kind::Leaf:
      out.push_back(leaf_);
      break;
    case Kind::Glue:
      out = nodes_;
      break;
    default:
      for (const auto& ch : children_) {
        auto sub = ch.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int compare_class(const CanonicalClass& a, const CanonicalClass& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

template <class T, class Cmp>
int compare_seq(const std::vector<T>& a, const std::vector<T>& b, Cmp cmp) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = cmp(a[i], b[i])) return c;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int compare_edge(const GlueEdge& a, const GlueEdge& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

int Descriptor::compare(const Descriptor& a, const Descriptor& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
  switch (a.kind_) {
    case Kind::Leaf:
      return compare_class(a.leaf_, b.leaf_);
    case Kind::Glue:
      if (int c = compare_seq(a.nodes_, b.nodes_, compare_class)) return c;
      return compare_seq(a.edges_, b.edges_, compare_edge);
    default:
      return compare_seq(a.children_, b.children_, compare);
  }
}

Descriptor Descriptor::normalized() const {
  switch (kind_) {
    case Kind::Leaf:
      return *this;
    case Kind::Semi:
      return semi(quo().normalized(), sub().normalized());
    case Kind::Sum: {
      std::vector<Descriptor> flat;
      for (const auto& ch : children_) {
        Descriptor n = ch.normalized();
        if (n.kind_ == Kind::Sum)
          flat.insert(flat.end(), n.children_.begin(), n.children_.end());
        else
          flat.push_back(n);
      }
      if (flat.size() == 1) return flat[0];
      std::sort(flat.begin(), flat.end(), [](const Descriptor& x, const Descriptor& y) { return compare(x, y) < 0; });
      return sum(flat);
    }
    case Kind::Glue: {
      if (nodes_.size() == 1 && edges_.empty()) return leaf(nodes_[0]);
      const int n = static_cast<int>(nodes_.size());
      std::vector<int> perm(n);  // perm[new index] = old index
      std::iota(perm.begin(), perm.end(), 0);
      // Only orderings with sorted node classes can be minimal.
      std::sort(perm.begin(), perm.end(), [&](int x, int y) { return nodes_[x] < nodes_[y]; });
      bool have = false;
      Descriptor best;
      do {
        bool sorted = true;
        for (int i = 0; i + 1 < n && sorted; ++i)
          if (nodes_[perm[i + 1]] < nodes_[perm[i]]) sorted = false;
        if (!sorted) continue;
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        std::vector<CanonicalClass> nn(n);
        for (int i = 0; i < n; ++i) nn[i] = nodes_[perm[i]];
        std::vector<GlueEdge> ee;
        for (const auto& e : edges_) ee.push_back({inv[e.from], inv[e.to], e.action});
        std::sort(ee.begin(), ee.end());
        ee.erase(std::unique(ee.begin(), ee.end()), ee.end());
        Descriptor cand = glue(nn, ee);
        if (!have || compare(cand, best) < 0) {
          best = cand;
          have = true;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }
  }
  return *this;
}

Descriptor Descriptor::lifted(const Field& target) const {
  Descriptor d = *this;
  d.leaf_ = leaf_.lifted(target);
  for (auto& ch : d.children_) ch = ch.lifted(target);
  for (auto& n : d.nodes_) n = n.lifted(target);
  return d.normalized();
}

bool descriptor_equal(const Descriptor& a, const Descriptor& b) {
  return Descriptor::compare(a.normalized(), b.normalized()) == 0;
}

std::string class_json(const CanonicalClass& c) {
  switch (c.kind()) {
    case CanonicalClass::Kind::One:
      return "\"One\"";
    case CanonicalClass::Kind::Two:
      return "\"Two\"";
    case CanonicalClass::Kind::Tt:
      return "{\"Tt\":[" + c.b().str() + "]}";
    case CanonicalClass::Kind::T:
      return "{\"T\":[" + c.b().str() + "," + c.c().str() + "," + c.d().str() + "]}";
  }
  return "null";
}

std::string class_pretty(const CanonicalClass& c) {
  switch (c.kind()) {
    case CanonicalClass::Kind::One:
      return "1";
    case CanonicalClass::Kind::Two:
      return "2";
    case CanonicalClass::Kind::T:
      if (c.b().is_zero() && c.c().is_zero() && c.d().is_zero()) return "3";
      return c.str();
    default:
      return c.str();
  }
}

std::string Descriptor::json() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Leaf:
      os << "{\"irr\":" << class_json(leaf_) << "}";
      break;
    case Kind::Sum: {
      os << "{\"sum\":[";
      for (std::size_t i = 0; i < children_.size(); ++i) os << (i ? "," : "") << children_[i].json();
      os << "]}";
      break;
    }
    case Kind::Semi:
      os << "{\"semi\":{\"quo\":" << quo().json() << ",\"sub\":" << sub().json() << "}}";
      break;
    case Kind::Glue: {
      os << "{\"glue\":{\"nodes\":[";
      for (std::size_t i = 0; i < nodes_.size(); ++i) os << (i ? "," : "") << class_json(nodes_[i]);
      os << "],\"edges\":[";
      for (std::size_t i = 0; i < edges_.size(); ++i)
        os << (i ? "," : "") << "[" << edges_[i].from << "," << edges_[i].to << ",\""
           << (edges_[i].action == Action::XPlus ? "X+" : "X-") << "\"]";
      os << "]}}";
      break;
    }
  }
  return os.str();
}

namespace {

// Renders a glue diagram whose underlying graph is a path, reading right
// arrows as X- and left arrows as X+ (a double edge becomes ⊂+).
std::optional<std::string> path_form(const Descriptor& g) {
  const auto& nodes = g.nodes();
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<std::vector<std::vector<GlueEdge>>> between(n, std::vector<std::vector<GlueEdge>>(n));
  for (const auto& e : g.edges()) {
    between[e.from][e.to].push_back(e);
    between[e.to][e.from].push_back(e);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !between[i][j].empty()) adj[i].push_back(j);
  int start = -1, edges = 0;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1 && start < 0) start = i;
    edges += static_cast<int>(adj[i].size());
  }
  if (start < 0 || edges / 2 != n - 1) return std::nullopt;
  std::vector<int> order{start};
  while (static_cast<int>(order.size()) < n) {
    const int cur = order.back();
    int next = -1;
    for (int j : adj[cur])
      if (order.size() < 2 || j != order[order.size() - 2]) next = j;
    if (next < 0) return std::nullopt;
    order.push_back(next);
  }
  const auto render = [&](const std::vector<int>& ord) -> std::optional<std::string> {
    std::string s = class_pretty(nodes[ord[0]]);
    for (std::size_t k = 0; k + 1 < ord.size(); ++k) {
      const int u = ord[k], v = ord[k + 1];
      const auto& es = between[u][v];
      std::string arrow;
      if (es.size() == 1 && es[0].from == u && es[0].action == Action::XMinus)
        arrow = " → ";
      else if (es.size() == 1 && es[0].from == v && es[0].action == Action::XPlus)
        arrow = " ← ";
      else if (es.size() == 2 && es[0].from == u && es[1].from == u)
        arrow = " ⊂+ ";
      else
        return std::nullopt;
      s += arrow + class_pretty(nodes[v]);
    }
    return s;
  };
  if (auto s = render(order)) return s;
  std::reverse(order.begin(), order.end());
  return render(order);
}

std::string wrap(const Descriptor& d) {
  const std::string s = d.pretty();
  if (d.kind() == Descriptor::Kind::Leaf || s == "M1" || s == "P0") return s;
  return "(" + s + ")";
}

}  // namespace

std::string Descriptor::pretty() const {
  switch (kind_) {
    case Kind::Leaf:
      return class_pretty(leaf_);
    case Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < children_.size(); ++i) s += (i ? " ⊕ " : "") + wrap(children_[i]);
      return s;
    }
    case Kind::Semi:
      return wrap(quo()) + " ⊂+ " + wrap(sub());
    case Kind::Glue: {
      if (descriptor_equal(*this, m1_descriptor())) return "M1";
      if (descriptor_equal(*this, p0_descriptor())) return "P0";
      if (auto p = path_form(*this)) return *p;
      std::string s = "glue[";
      for (std::size_t i = 0; i < nodes_.size(); ++i) s += (i ? "," : "") + class_pretty(nodes_[i]);
      s += ";";
      for (std::size_t i = 0; i < edges_.size(); ++i)
        s += (i ? " " : " ") + std::to_string(edges_[i].from) + (edges_[i].action == Action::XPlus ? "+>" : "->") +
             std::to_string(edges_[i].to);
      return s + "]";
    }
  }
  return "?";
}

Descriptor m1_descriptor() {
  // Nodes: top 2, the 1 reached by X-, the 1 reached by X+, bottom 2.  The 1
  // reached by X- lands in the bottom via X+ and the other one via X-.
  const CanonicalClass two = CanonicalClass::two(), one = CanonicalClass::one();
  return Descriptor::glue({two, one, one, two}, {{0, 1, Action::XMinus},
                                                 {0, 2, Action::XPlus},
                                                 {1, 3, Action::XPlus},
                                                 {2, 3, Action::XMinus}})
      .normalized();
}

Descriptor p0_descriptor() {
  const CanonicalClass two = CanonicalClass::two(), one = CanonicalClass::one();
  return Descriptor::glue({one, two, two, one}, {{0, 1, Action::XMinus},
                                                 {0, 2, Action::XPlus},
                                                 {1, 3, Action::XPlus},
                                                 {2, 3, Action::XMinus}})
      .normalized();
}

}  // namespace sl2c3
