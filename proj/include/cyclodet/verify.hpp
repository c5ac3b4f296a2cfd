#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclodet/bigint.hpp"

namespace cyclodet {

enum class CheckStatus { kPass, kFail, kSkipped };

const char* to_string(CheckStatus s);

// One verified (p, k) case. Expensive checks that exceed their configured
// caps are reported as skipped, never silently dropped.
struct VerificationReport {
  std::uint64_t p = 0, k = 0, n = 0;
  BigInt det_x, det_y, x, y;
  CheckStatus theorem1 = CheckStatus::kSkipped;
  CheckStatus theorem2 = CheckStatus::kSkipped;
  CheckStatus congruence = CheckStatus::kSkipped;
  CheckStatus k1_closed_form = CheckStatus::kSkipped;
  CheckStatus k2_closed_form = CheckStatus::kSkipped;
  CheckStatus lemma21 = CheckStatus::kSkipped;
  CheckStatus lemma22 = CheckStatus::kSkipped;
  CheckStatus lemma23 = CheckStatus::kSkipped;
  CheckStatus fermat = CheckStatus::kSkipped;
  std::map<std::string, double> timings;

  bool any_fail() const;
};

struct VerifyOptions {
  unsigned precision_bits = 0;       // 0 = per-case policy
  unsigned exact_gauss_phi_cap = 64; // exact Theorem 1.2 only when phi(p(p-1)) <= cap
  std::uint64_t numeric_n_cap = 64;  // Lemma 2.2/2.3 numeric checks only when n <= cap
  std::uint64_t fermat_n_cap = 6;
  std::uint64_t field_cap = 1ULL << 16;
  std::optional<std::uint64_t> generator;
  std::string cache_dir;
  unsigned jobs = 1;
};

VerificationReport verify_pair(std::uint64_t p, std::uint64_t k, const VerifyOptions& opts);

// One report per (prime p <= p_max, valid k), ordered by (p, k). Content is
// deterministic and independent of the worker count.
std::vector<VerificationReport> scan(std::uint64_t p_max, const VerifyOptions& opts);

std::string report_json(const VerificationReport& rep, bool with_timings = true);
std::string report_text(const VerificationReport& rep);
std::string csv_header();
std::string report_csv_row(const VerificationReport& rep);

// Closed forms from the worked examples: k = 1 and k = 2.
BigInt closed_form_det_x_k1(std::uint64_t p);
BigInt closed_form_det_x_k2(std::uint64_t p);
BigInt closed_form_det_y_k2(std::uint64_t p);
BigInt closed_form_y_k2(std::uint64_t p);

// Sign (-1)^{(k+1)(n^2-n)/2} of Theorem 1.1.
BigInt theorem1_sign(std::uint64_t k, std::uint64_t n);

}  // namespace cyclodet
