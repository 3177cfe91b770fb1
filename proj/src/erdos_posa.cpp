#include "minorlab/erdos_posa.hpp"

#include <map>
#include <stdexcept>

#include "minorlab/errors.hpp"
#include "minorlab/generators.hpp"
#include "minorlab/io.hpp"

namespace minorlab {

std::int64_t f_w(std::int64_t w, int p, int k) {
  if (k < 1) throw DomainError("f_w needs k >= 1");
  if (w < 1) throw DomainError("f_w needs w >= 1");
  if (k > 62) throw DomainError("f_w overflows for k > 62");
  return k == 1 ? 0 : 2 * f_w(w, p, k - 1) + w;
}

int required_connectivity(int p, int k) {
  if (p < 1 || k < 1) throw DomainError("required_connectivity needs p, k >= 1");
  return k * (p - 3) + 14 * p + 14;
}

int tight_connectivity(int p, int k) {
  if (p < 5) throw DomainError("tight construction needs p >= 5");
  if (k < p) throw DomainError("tight construction needs k >= p");
  return k * (p - 3) - (p - 3) * (p - 4) / 2 - 6;
}

namespace {

struct BudgetHit {};

class Solver {
  struct Side {
    VertexSet nodes, vertices;
    bool minor = false;
  };

 public:
  Solver(const Graph& g, int p, std::int64_t w, const EPOptions& opts)
      : g_(g), kp_(complete_graph(p)), p_(p), w_(w), opts_(opts) {}

  EPCertificate solve(const VertexSet& s, const TreeDecomposition& d, int k) {
    EPCertificate c;
    c.p = p_;
    c.k = k;
    c.w = w_;
    auto whole = model_in(s);
    if (!whole) return hitting(c, {}, k);
    if (k == 1) {
      c.kind = CertificateKind::Packing;
      c.models = {*whole};
      return c;
    }
    const auto edges = d.tree.edges();
    std::vector<std::pair<Side, Side>> sides;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [t1, t2] = edges[e];
      auto [a, b] = split(d, t1, t2);
      a.minor = model_in(a.vertices).has_value();
      b.minor = model_in(b.vertices).has_value();
      if (a.minor && b.minor) {
        auto d1 = subtree_decomposition(restrict_decomposition(d, a.vertices), a.nodes);
        auto d2 = subtree_decomposition(restrict_decomposition(d, b.vertices), b.nodes);
        auto left = solve(a.vertices, d1, k - 1);
        if (left.kind == CertificateKind::Packing) return packing(c, left, *model_in(b.vertices));
        auto right = solve(b.vertices, d2, k - 1);
        if (right.kind == CertificateKind::Packing) return packing(c, right, *model_in(a.vertices));
        VertexSet x = set_union(set_union(left.hitting_set, right.hitting_set),
                                set_intersection(d.bags[t1], d.bags[t2]));
        return hitting(c, x, k);
      }
      sides.emplace_back(std::move(a), std::move(b));
    }
    // No edge is oriented both ways: walk from node 0 along outgoing edges to a sink.
    int t = 0;
    while (true) {
      int next = -1;
      for (std::size_t e = 0; e < edges.size() && next < 0; ++e) {
        auto [t1, t2] = edges[e];
        if (t1 == t && sides[e].second.minor) next = t2;
        if (t2 == t && sides[e].first.minor) next = t1;
      }
      if (next < 0) break;
      t = next;
    }
    const VertexSet& x = d.bags[t];
    if (model_in(set_difference(s, x)))
      throw std::logic_error("sink bag does not meet every K_p model");
    return hitting(c, x, k);
  }

  std::uint64_t searches() const { return searches_; }

 private:
  // Tree nodes on each side of edge t1t2 and the vertex sets of the two side graphs.
  std::pair<Side, Side> split(const TreeDecomposition& d, int t1, int t2) const {
    std::vector<int> side(d.tree.order(), -1);
    std::vector<int> stack{t1};
    side[t1] = 0;
    side[t2] = 1;
    stack.push_back(t2);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : d.tree.neighbors(v))
        if (side[w] < 0) {
          side[w] = side[v];
          stack.push_back(w);
        }
    }
    Side a, b;
    std::vector<Vertex> va, vb, na, nb;
    for (int node = 0; node < d.tree.order(); ++node) {
      (side[node] == 0 ? na : nb).push_back(node);
      auto& target = side[node] == 0 ? va : vb;
      target.insert(target.end(), d.bags[node].begin(), d.bags[node].end());
    }
    a.nodes = VertexSet(na);
    b.nodes = VertexSet(nb);
    a.vertices = set_difference(VertexSet(va), d.bags[t2]);
    b.vertices = set_difference(VertexSet(vb), d.bags[t1]);
    return std::pair{a, b};
  }

  const std::optional<MinorModel>& model_in(const VertexSet& s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    ++searches_;
    auto sub = induced_subgraph(g_, s);
    MinorSearchOptions mo;
    mo.budget = opts_.budget;
    mo.execution = opts_.execution;
    auto r = find_minor(sub.graph, kp_, mo);
    if (r.status == MinorStatus::BudgetExceeded) throw BudgetHit{};
    std::optional<MinorModel> m;
    if (r.status == MinorStatus::Found) {
      MinorModel global;
      for (const auto& b : r.model.branch_sets) {
        std::vector<Vertex> vs;
        for (Vertex v : b) vs.push_back(sub.to_parent[v]);
        global.branch_sets.emplace_back(vs);
      }
      m = std::move(global);
    }
    return cache_.emplace(s, std::move(m)).first->second;
  }

  EPCertificate hitting(EPCertificate c, VertexSet x, int k) const {
    c.kind = CertificateKind::HittingSet;
    c.hitting_set = std::move(x);
    c.bound = f_w(w_, p_, k);
    c.models.clear();
    return c;
  }

  static EPCertificate packing(EPCertificate c, const EPCertificate& part, const MinorModel& extra) {
    c.kind = CertificateKind::Packing;
    c.models = part.models;
    c.models.push_back(extra);
    return c;
  }

  const Graph& g_;
  Graph kp_;
  int p_;
  std::int64_t w_;
  EPOptions opts_;
  std::map<VertexSet, std::optional<MinorModel>> cache_;
  std::uint64_t searches_ = 0;
};

}  // namespace

EPResult ep_solve(const Graph& g, const TreeDecomposition& d, int p, int k, const EPOptions& opts) {
  if (p < 1) throw DomainError("p must be at least 1");
  if (k < 1) throw DomainError("k must be at least 1");
  if (auto bad = validate_decomposition(g, d))
    throw DomainError("decomposition invalid (" + bad->axiom + "): " + bad->message);
  const std::int64_t w = opts.w > 0 ? opts.w : std::max(1, d.width() + 1);
  if (d.width() >= w) throw DomainError("decomposition width must be below w");
  Solver solver(g, p, w, opts);
  EPResult res;
  try {
    res.certificate = solver.solve(VertexSet::range(0, g.order()), d, k);
  } catch (const BudgetHit&) {
    res.budget_exceeded = true;
  }
  res.minor_searches = solver.searches();
  return res;
}

std::optional<CertificateViolation> verify_certificate(const Graph& g, const EPCertificate& c,
                                                       std::uint64_t budget) {
  if (c.p < 1 || c.k < 1 || c.w < 1) return CertificateViolation{"parameters", "p, k and w must be positive"};
  Graph kp = complete_graph(c.p);
  if (c.kind == CertificateKind::Packing) {
    if (static_cast<int>(c.models.size()) != c.k)
      return CertificateViolation{"packing size", "expected " + std::to_string(c.k) + " models, found " +
                                                       std::to_string(c.models.size())};
    std::vector<int> owner(g.order(), -1);
    for (int i = 0; i < c.k; ++i) {
      if (auto bad = verify_model(g, kp, c.models[i]))
        return CertificateViolation{"model", "model " + std::to_string(i) + ": " + bad->invariant + ": " + bad->message};
      for (const auto& b : c.models[i].branch_sets)
        for (Vertex v : b) {
          if (owner[v] >= 0)
            return CertificateViolation{"disjointness", "vertex " + std::to_string(v) + " used by models " +
                                                             std::to_string(owner[v]) + " and " + std::to_string(i)};
          owner[v] = i;
        }
    }
    return std::nullopt;
  }
  if (c.bound != f_w(c.w, c.p, c.k))
    return CertificateViolation{"bound", "bound " + std::to_string(c.bound) + " differs from f_w = " +
                                             std::to_string(f_w(c.w, c.p, c.k))};
  if (static_cast<std::int64_t>(c.hitting_set.size()) > c.bound)
    return CertificateViolation{"hitting set size", "|X| = " + std::to_string(c.hitting_set.size()) +
                                                        " exceeds bound " + std::to_string(c.bound)};
  for (Vertex v : c.hitting_set)
    if (v < 0 || v >= g.order()) return CertificateViolation{"range", "vertex " + std::to_string(v) + " outside graph"};
  MinorSearchOptions mo;
  mo.budget = budget;
  auto rest = remove_vertices(g, c.hitting_set);
  auto r = find_minor(rest.graph, kp, mo);
  if (r.status == MinorStatus::Found)
    return CertificateViolation{"hitting set", "g - X still has a K_" + std::to_string(c.p) + " minor"};
  if (r.status == MinorStatus::BudgetExceeded)
    return CertificateViolation{"indeterminate", "minor search on g - X ran out of budget"};
  return std::nullopt;
}

nlohmann::json certificate_json(const EPCertificate& c) {
  nlohmann::json j;
  j["format"] = "minorlab-ep-certificate";
  j["version"] = 1;
  j["p"] = c.p;
  j["k"] = c.k;
  j["w"] = c.w;
  if (c.kind == CertificateKind::Packing) {
    j["kind"] = "packing";
    j["models"] = nlohmann::json::array();
    for (const auto& m : c.models) j["models"].push_back(model_json(m));
  } else {
    j["kind"] = "hitting-set";
    j["hitting_set"] = c.hitting_set.members();
    j["bound"] = c.bound;
  }
  return j;
}

EPCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    EPCertificate c;
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported certificate version");
    c.p = j.at("p").get<int>();
    c.k = j.at("k").get<int>();
    c.w = j.at("w").get<std::int64_t>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "packing") {
      c.kind = CertificateKind::Packing;
      for (const auto& m : j.at("models")) c.models.push_back(model_from_json(m));
    } else if (kind == "hitting-set") {
      c.kind = CertificateKind::HittingSet;
      c.hitting_set = vertex_set_from_json(j.at("hitting_set"));
      c.bound = j.at("bound").get<std::int64_t>();
    } else {
      throw ParseError("unknown certificate kind '" + kind + "'");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace minorlab
