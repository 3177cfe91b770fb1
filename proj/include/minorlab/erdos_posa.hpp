#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorlab/minor.hpp"
#include "minorlab/treedec.hpp"

namespace minorlab {

// f(w,p,1) = 0, f(w,p,k) = 2 f(w,p,k-1) + w.
std::int64_t f_w(std::int64_t w, int p, int k);
int required_connectivity(int p, int k);
int tight_connectivity(int p, int k);

enum class CertificateKind { Packing, HittingSet };

struct EPCertificate {
  CertificateKind kind = CertificateKind::HittingSet;
  int p = 0;
  int k = 0;
  std::int64_t w = 0;
  std::vector<MinorModel> models;  // Packing: k pairwise disjoint K_p models
  VertexSet hitting_set;           // HittingSet: g - X has no K_p minor
  std::int64_t bound = 0;          // HittingSet: f_w(w,p,k)
};

struct EPOptions {
  std::uint64_t budget = 50'000'000;  // per embedded minor search
  std::int64_t w = 0;                  // 0: decomposition width + 1
  Execution execution = Execution::Parallel;
};

struct EPResult {
  bool budget_exceeded = false;
  EPCertificate certificate;
  std::uint64_t minor_searches = 0;
};

// Orients every tree edge toward the sides that still hold a K_p minor; a sink bag is a hitting
// set, a doubly oriented edge splits the problem into two (k-1)-instances.
EPResult ep_solve(const Graph& g, const TreeDecomposition& d, int p, int k, const EPOptions& opts = {});

struct CertificateViolation {
  std::string check;
  std::string message;
};

std::optional<CertificateViolation> verify_certificate(const Graph& g, const EPCertificate& c,
                                                       std::uint64_t budget = 50'000'000);

nlohmann::json certificate_json(const EPCertificate& c);
EPCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace minorlab
