#include "ksforge/iso.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ksf {

namespace {

using Colors = std::vector<int>;

// Renumbers arbitrary sortable keys into dense ranks 0..k-1, preserving order.
template <class Key>
int rank_keys(const std::vector<Key>& keys, Colors& out) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

class Search {
 public:
  Search(const ContextHypergraph& h) : nv_(static_cast<int>(h.vertices.size())), ne_(static_cast<int>(h.edges.size())) {
    n_ = nv_ + ne_;
    adj_.resize(n_);
    std::map<int, int> index;
    for (int i = 0; i < nv_; ++i) index[h.vertices[i]] = i;
    for (int k = 0; k < ne_; ++k) {
      for (int v : h.edges[k]) {
        adj_[index.at(v)].push_back(nv_ + k);
        adj_[nv_ + k].push_back(index.at(v));
      }
    }
  }

  // Returns the best labeling (node -> canonical position).
  Colors run() {
    Colors start(n_);
    for (int i = 0; i < n_; ++i) start[i] = i < nv_ ? 0 : 1;
    refine(start);
    std::vector<int> prefix;
    descend(start, prefix);
    return best_labels_;
  }

  std::vector<std::pair<int, int>> certificate(const Colors& lab) const {
    std::vector<std::pair<int, int>> cert;
    for (int v = 0; v < nv_; ++v) {
      for (int e : adj_[v]) cert.emplace_back(lab[v], lab[e] - nv_);
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  long leaves = 0;
  int automorphisms() const { return static_cast<int>(autos_.size()); }

 private:
  void refine(Colors& colors) const {
    int cells = rank_keys(colors, colors);
    for (;;) {
      std::vector<std::pair<int, std::vector<int>>> sig(n_);
      for (int i = 0; i < n_; ++i) {
        sig[i].first = colors[i];
        for (int j : adj_[i]) sig[i].second.push_back(colors[j]);
        std::sort(sig[i].second.begin(), sig[i].second.end());
      }
      const int next = rank_keys(sig, colors);
      if (next == cells) return;
      cells = next;
    }
  }

  // First smallest non-singleton cell, or -1 when discrete.
  int target_cell(const Colors& colors) const {
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int best = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1 && (best < 0 || size[c] < size[best])) best = c;
    }
    return best;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbits of the group generated by known automorphisms fixing `prefix`.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return g[p] == p; });
      if (!fixes) continue;
      for (int i = 0; i < n_; ++i) {
        int a = find(parent, i), b = find(parent, g[i]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int i = 0; i < n_; ++i) parent[i] = find(parent, i);
    return parent;
  }

  void leaf(const Colors& lab) {
    ++leaves;
    auto cert = certificate(lab);
    if (first_labels_.empty()) {
      first_labels_ = best_labels_ = lab;
      first_cert_ = best_cert_ = cert;
      return;
    }
    auto record = [&](const Colors& other) {
      // Automorphism: node -> node with the same label under `other`.
      std::vector<int> inv(n_);
      for (int i = 0; i < n_; ++i) inv[other[i]] = i;
      std::vector<int> g(n_);
      for (int i = 0; i < n_; ++i) g[i] = inv[lab[i]];
      autos_.push_back(std::move(g));
    };
    if (cert == first_cert_) {
      record(first_labels_);
    } else if (cert == best_cert_) {
      record(best_labels_);
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labels_ = lab;
    }
  }

  void descend(const Colors& colors, std::vector<int>& prefix) {
    const int cell = target_cell(colors);
    if (cell < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> members;
    for (int i = 0; i < n_; ++i) {
      if (colors[i] == cell) members.push_back(i);
    }
    std::vector<int> done_roots;
    std::size_t seen_autos = autos_.size();
    std::vector<int> orbit = orbits(prefix);
    for (int v : members) {
      if (autos_.size() != seen_autos) {
        orbit = orbits(prefix);
        seen_autos = autos_.size();
      }
      const int root = orbit[v];
      bool pruned = std::any_of(done_roots.begin(), done_roots.end(), [&](int r) { return orbit[r] == root; });
      if (pruned) continue;
      done_roots.push_back(v);
      Colors child(n_);
      for (int i = 0; i < n_; ++i) child[i] = 2 * colors[i] + (colors[i] == cell && i != v ? 1 : 0);
      refine(child);
      prefix.push_back(v);
      descend(child, prefix);
      prefix.pop_back();
    }
  }

  int nv_, ne_, n_;
  std::vector<std::vector<int>> adj_;
  Colors first_labels_, best_labels_;
  std::vector<std::pair<int, int>> first_cert_, best_cert_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalForm canonical_form(const ContextHypergraph& h) {
  CanonicalForm form;
  form.dimension = h.dimension;
  form.vertex_count = static_cast<int>(h.vertices.size());
  form.edge_count = static_cast<int>(h.edges.size());
  if (h.vertices.empty()) return form;
  Search search(h);
  const Colors lab = search.run();
  form.certificate = search.certificate(lab);
  for (int i = 0; i < form.vertex_count; ++i) form.vertex_label[h.vertices[i]] = lab[i];
  form.leaves = search.leaves;
  form.automorphisms = search.automorphisms();
  return form;
}

bool iso_check(const ContextHypergraph& a, const ContextHypergraph& b) {
  if (a.dimension != b.dimension || a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) {
    return false;
  }
  return canonical_form(a).same_structure(canonical_form(b));
}

std::optional<std::map<int, int>> find_isomorphism(const ContextHypergraph& a, const ContextHypergraph& b) {
  if (a.dimension != b.dimension || a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) {
    return std::nullopt;
  }
  const CanonicalForm fa = canonical_form(a), fb = canonical_form(b);
  if (!fa.same_structure(fb)) return std::nullopt;
  std::map<int, int> by_label;
  for (const auto& [v, l] : fb.vertex_label) by_label[l] = v;
  std::map<int, int> out;
  for (const auto& [v, l] : fa.vertex_label) out[v] = by_label.at(l);
  return out;
}

bool is_isomorphism(const ContextHypergraph& a, const ContextHypergraph& b, const std::map<int, int>& map) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() || map.size() != a.vertices.size()) {
    return false;
  }
  std::set<int> image;
  for (int v : a.vertices) {
    auto it = map.find(v);
    if (it == map.end()) return false;
    image.insert(it->second);
  }
  if (image != std::set<int>(b.vertices.begin(), b.vertices.end())) return false;
  std::set<Edge> target(b.edges.begin(), b.edges.end());
  for (const auto& e : a.edges) {
    Edge m;
    for (int v : e) m.push_back(map.at(v));
    std::sort(m.begin(), m.end());
    if (!target.count(m)) return false;
  }
  return true;
}

}  // namespace ksf
