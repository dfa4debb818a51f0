#include "gemcat/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <set>
#include <thread>

#include "gemcat/census.hpp"

namespace gem {

ThetaResult theta(const ColouredGraph& g, Colour i, const ThetaOptions& options) {
  ThetaResult out{g, 0};
  if (i == 0) return out;
  ThetaResult best = out;
  for (int step = 0;; ++step) {
    auto found = find_generalized_dipoles(out.graph, 0, i, options.max_side, options.max_side);
    bool moved = false;
    for (const auto& gd : found) {
      if (step >= options.loop_guard) return best;
      try {
        auto next = simplify_to_rigid(cancel_generalized_dipole(out.graph, gd));
        out.graph = std::move(next.graph);
        out.h += next.handles;
        moved = true;
        break;
      } catch (const GemError&) {
      }
    }
    if (!moved) return out;
    if (out.graph.order() < best.graph.order()) best = out;
  }
}

const std::vector<ColourPerm>& fixing_zero_perms() {
  static const std::vector<ColourPerm> perms = [] {
    std::vector<ColourPerm> out;
    ColourPerm p{0, 1, 2, 3};
    do out.push_back(p);
    while (std::next_permutation(p.begin() + 1, p.end()));
    return out;
  }();
  return perms;
}

ThetaResult theta_chain(const ColouredGraph& g, const ColourPerm& eps, int i, const ThetaOptions& options) {
  ThetaResult out{g, 0};
  for (int s = 1; s <= i; ++s) {
    auto stage = theta(canonical_code(out.graph).graph, eps[s], options);
    out.graph = std::move(stage.graph);
    out.h += stage.h;
  }
  return out;
}

namespace {

std::string perm_label(const ColourPerm& p) {
  std::string s;
  for (Colour c : p) s += static_cast<char>('0' + c);
  return s;
}

void collect_images(const ColouredGraph& g, int depth, const ThetaOptions& options, const std::string& prefix,
                    int h_prefix, std::map<std::string, ThetaImage>& out) {
  // Stage results keyed by the colours applied so far, shared between
  // permutations with a common prefix.
  std::map<std::string, ThetaResult> stages;
  stages.emplace("", ThetaResult{g, 0});
  for (const auto& eps : fixing_zero_perms()) {
    std::string key;
    for (int s = 0; s <= 3; ++s) {
      if (s > 0) {
        std::string next = key + static_cast<char>('0' + eps[s]);
        auto it = stages.find(next);
        if (it == stages.end()) {
          const auto& prev = stages.at(key);
          auto stage = theta(canonical_code(prev.graph).graph, eps[s], options);
          stage.h += prev.h;
          it = stages.emplace(next, std::move(stage)).first;
        }
        key = next;
      }
      std::string label = prefix + "0" + key + "/" + std::to_string(s);
      if (out.count(label)) continue;
      const auto& r = stages.at(key);
      out.emplace(label, ThetaImage{label, canonical_code_only(r.graph), h_prefix + r.h});
    }
    if (depth > 1) {
      const auto& full = stages.at(key);
      collect_images(full.graph, depth - 1, options, prefix + perm_label(eps) + "/3>", h_prefix + full.h, out);
    }
  }
}

class HandleUnionFind {
 public:
  explicit HandleUnionFind(int n) : parent_(n), diff_(n, 0), base_(n, 0), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    if (parent_[x] == x) return x;
    int root = find(parent_[x]);
    if (parent_[x] != root) {
      diff_[x] += diff_[parent_[x]];
      parent_[x] = root;
    }
    return root;
  }

  int h(int x) {
    int r = find(x);
    return x == r ? base_[r] : base_[r] + diff_[x];
  }

  void shift(int x, int d) { base_[find(x)] += d; }

  void unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (size_[ra] > size_[rb]) std::swap(ra, rb);
    diff_[ra] = base_[ra] - base_[rb];
    parent_[ra] = rb;
    size_[rb] += size_[ra];
  }

 private:
  std::vector<int> parent_, diff_, base_, size_;
};

template <class Fn>
void parallel_for(size_t n, int jobs, Fn fn) {
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < std::max(1, jobs); ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
}

}  // namespace

std::vector<ThetaImage> theta_images(const ColouredGraph& g, int depth, const ThetaOptions& options) {
  std::map<std::string, ThetaImage> images;
  collect_images(g, std::max(1, depth), options, "", 0, images);
  std::vector<ThetaImage> out;
  for (auto& [label, image] : images) out.push_back(std::move(image));
  return out;
}

int ClassPartition::class_of(const Code& code) const {
  for (size_t i = 0; i < classes.size(); ++i)
    for (const auto& m : classes[i].members)
      if (m.code == code) return static_cast<int>(i);
  return -1;
}

const Member* ClassPartition::member(const Code& code) const {
  for (const auto& c : classes)
    for (const auto& m : c.members)
      if (m.code == code) return &m;
  return nullptr;
}

ClassPartition classify(const std::vector<Code>& codes, const ClassifyOptions& options) {
  const int n = static_cast<int>(codes.size());
  std::vector<std::vector<ThetaImage>> images(n);
  parallel_for(codes.size(), options.jobs,
               [&](size_t k) { images[k] = theta_images(decode(codes[k]), options.depth, options.theta); });

  ClassPartition out;
  HandleUnionFind uf(n);
  struct Seen {
    int member;
    int h;
    std::string chain;
  };
  std::map<Code, Seen> first_seen;
  for (int x = 0; x < n; ++x) {
    for (const auto& img : images[x]) {
      auto [it, fresh] = first_seen.emplace(img.code, Seen{x, img.h, img.chain});
      if (fresh) continue;
      const Seen& y = it->second;
      int bx = uf.h(x) - img.h;
      int by = uf.h(y.member) - y.h;
      Witness w{codes[x], img.chain, codes[y.member], y.chain, img.code, 0, false};
      if (uf.find(x) == uf.find(y.member)) {
        if (bx == by) continue;
        w.conflict = true;
      } else if (by >= bx) {
        w.shift = by - bx;
        uf.shift(x, w.shift);
        uf.unite(x, y.member);
      } else {
        w.shift = by - bx;
        uf.shift(y.member, bx - by);
        uf.unite(x, y.member);
      }
      out.witnesses.push_back(std::move(w));
    }
  }

  std::map<int, int> class_index;
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    auto [it, fresh] = class_index.emplace(r, static_cast<int>(out.classes.size()));
    if (fresh) {
      out.classes.emplace_back();
      out.classes.back().id = static_cast<int>(out.classes.size());
    }
    out.classes[it->second].members.push_back({codes[x], uf.h(x)});
  }
  for (auto& c : out.classes) {
    int low = std::numeric_limits<int>::max();
    for (const auto& m : c.members) low = std::min(low, m.h);
    for (auto& m : c.members) m.h -= low;
    std::sort(c.members.begin(), c.members.end(), [](const Member& a, const Member& b) { return a.code < b.code; });
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
  }
  return out;
}

std::vector<Code> subclass(const ManifoldClass& c, int h) {
  std::vector<Code> out;
  for (const auto& m : c.members)
    if (m.h == h) out.push_back(m.code);
  return out;
}

std::string with_handles(const std::string& base, int t, bool orientable) {
  if (t <= 0) return base;
  std::string handle = orientable ? "S2xS1" : "S2~xS1";
  std::string handles = t == 1 ? handle : "#" + std::to_string(t) + "(" + handle + ")";
  if (base.empty() || base == "S3") return handles;
  return base + " # " + handles;
}

std::string sum_name(const std::string& a, const std::string& b) {
  if (a == "S3") return b;
  if (b == "S3") return a;
  return a < b ? a + " # " + b : b + " # " + a;
}

KnownNames base_names() { return {{canonical_code_only(standard_order_two_gem()), "S3"}}; }

namespace {

struct Named {
  std::string base;
  int t = 0;
};

// Orientability of the class base; members with handles may be twisted.
bool class_orientable(const ManifoldClass& c) {
  for (const auto& m : c.members)
    if (m.h == 0) return is_bipartite(decode(m.code));
  return true;
}

}  // namespace

ClassPartition split_and_name(const ClassPartition& part, const KnownNames& known, const NamingOptions& options) {
  ClassPartition out = part;
  // Step (a): members or their theta-images found in `known`.
  for (auto& c : out.classes) {
    if (!c.name.empty()) continue;
    for (const auto& m : c.members) {
      if (auto it = known.find(m.code); it != known.end() && m.h == 0) {
        c.name = it->second;
        break;
      }
      for (const auto& img : theta_images(decode(m.code), options.depth, options.theta)) {
        auto it = known.find(img.code);
        if (it != known.end() && img.h >= m.h) {
          c.name = with_handles(it->second, img.h - m.h, class_orientable(c));
          break;
        }
      }
      if (!c.name.empty()) break;
    }
  }

  // Step (b): connected sums of named pieces, repeated while names spread.
  auto lookup = [&](const ColouredGraph& g) -> std::optional<Named> {
    auto rigid = simplify_to_rigid(g);
    Code code = canonical_code_only(rigid.graph);
    if (auto it = known.find(code); it != known.end()) return Named{it->second, rigid.handles};
    for (const auto& c : out.classes) {
      if (c.name.empty()) continue;
      for (const auto& m : c.members)
        if (m.code == code) return Named{c.name, m.h + rigid.handles};
    }
    return std::nullopt;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& c : out.classes) {
      if (!c.name.empty()) continue;
      for (const auto& m : c.members) {
        auto split = split_connected_sum(decode(m.code));
        if (!split) continue;
        auto a = lookup(split->first);
        if (!a) continue;
        auto b = lookup(split->second);
        if (!b) continue;
        int t = a->t + b->t - m.h;
        if (t < 0) continue;
        c.name = with_handles(sum_name(a->base, b->base), t, class_orientable(c));
        changed = true;
        break;
      }
    }
  }
  return out;
}

std::map<int, std::string> distinguish_chirality(const Code& g1, const std::string& m_name, const Code& g2,
                                                 const std::string& n_name, const ClassPartition& part, int c,
                                                 int c_prime, const ClassifyOptions& options) {
  auto a = decode(g1), b = decode(g2);
  auto side = bipartition(b);
  if (side.empty() || !is_bipartite(a))
    throw GemError(GemError::Kind::InvalidConfiguration, "chirality test needs bipartite summands");
  Vertex w = kNoVertex;
  for (Vertex v = 0; v < b.order() && w == kNoVertex; ++v)
    if (side[v] != side[0]) w = v;

  Code plus = canonical_code_only(simplify_to_rigid(graph_connected_sum(a, 0, b, 0)).graph);
  Code minus = canonical_code_only(simplify_to_rigid(graph_connected_sum(a, 0, b, w)).graph);

  const auto& cls = part.classes.at(c);
  const auto& cls_prime = part.classes.at(c_prime);
  std::set<Code> pool{plus, minus};
  for (const auto& m : cls.members) pool.insert(m.code);
  for (const auto& m : cls_prime.members) pool.insert(m.code);
  auto joint = classify(std::vector<Code>(pool.begin(), pool.end()), options);

  int kp = joint.class_of(plus), km = joint.class_of(minus);
  int kc = joint.class_of(cls.members.front().code), kc2 = joint.class_of(cls_prime.members.front().code);
  std::string label_plus = m_name + "+ # " + n_name + "+";
  std::string label_minus = m_name + "+ # " + n_name + "-";
  if (kp != km && kc != kc2) {
    if (kp == kc && km == kc2) return {{cls.id, label_plus}, {cls_prime.id, label_minus}};
    if (kp == kc2 && km == kc) return {{cls.id, label_minus}, {cls_prime.id, label_plus}};
  }
  throw GemError(GemError::Kind::AmbiguousResult, "the two orientations do not separate the classes");
}

ImageIndex build_image_index(const ClassPartition& part, const ClassifyOptions& options) {
  std::vector<std::pair<int, const Member*>> all;
  for (size_t k = 0; k < part.classes.size(); ++k)
    for (const auto& m : part.classes[k].members) all.push_back({static_cast<int>(k), &m});
  std::vector<std::vector<ThetaImage>> images(all.size());
  parallel_for(all.size(), options.jobs,
               [&](size_t k) { images[k] = theta_images(decode(all[k].second->code), options.depth, options.theta); });
  ImageIndex index;
  for (size_t k = 0; k < all.size(); ++k)
    for (const auto& img : images[k]) index.emplace(img.code, std::make_pair(all[k].first, all[k].second->h - img.h));
  return index;
}

Identification identify(const ColouredGraph& g, const ClassPartition& part, const ClassifyOptions& options,
                        const ImageIndex* index) {
  auto check = manifold_check(g);
  if (!check.is_gem || euler_characteristic(g) != 0)
    throw GemError(GemError::Kind::NotAManifold, "input is not a gem of a closed 3-manifold");

  Identification out;
  ColouredGraph cur = g;
  while (true) {
    auto dipoles = find_dipoles(cur);
    auto it = std::find_if(dipoles.begin(), dipoles.end(), [](const Dipole& d) { return d.size() == 1; });
    if (it == dipoles.end()) break;
    int before = cur.order();
    cur = cancel_dipole(cur, *it);
    out.trace.push_back({"cancel_1_dipole", "v=" + std::to_string(it->v) + " w=" + std::to_string(it->w), before,
                         cur.order()});
  }
  auto rigid = simplify_to_rigid(cur, &out.trace);
  out.rigid_code = canonical_code_only(rigid.graph);

  int largest = 0;
  for (const auto& c : part.classes)
    for (const auto& m : c.members) largest = std::max(largest, m.code.order());
  if (rigid.graph.order() > largest) return out;

  auto finish = [&](int k, int h) {
    const auto& c = part.classes[k];
    out.found = true;
    out.class_id = c.id;
    out.handles = h + rigid.handles;
    if (!c.name.empty()) out.name = with_handles(c.name, out.handles, check.bipartite);
    return out;
  };
  for (size_t k = 0; k < part.classes.size(); ++k)
    for (const auto& m : part.classes[k].members)
      if (m.code == out.rigid_code) return finish(static_cast<int>(k), m.h);

  ImageIndex built;
  if (!index) {
    built = build_image_index(part, options);
    index = &built;
  }
  for (const auto& img : theta_images(rigid.graph, options.depth, options.theta)) {
    auto it = index->find(img.code);
    if (it != index->end()) return finish(it->second.first, it->second.second + img.h);
  }
  return out;
}

}  // namespace gem
