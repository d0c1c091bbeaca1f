#include "fedlab/rational.hpp"

#include <cctype>

#include "fedlab/error.hpp"

namespace fedlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_params: return "invalid-params";
    case ErrorCode::invalid_graph: return "invalid-graph";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::size_limit_exceeded: return "size-limit-exceeded";
    case ErrorCode::insufficient_connectivity: return "insufficient-connectivity";
    case ErrorCode::not_a_tree: return "not-a-tree";
    case ErrorCode::invalid_partition: return "invalid-partition";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::total_weight_mismatch: return "total-weight-mismatch";
    case ErrorCode::illegal_move: return "illegal-move";
    case ErrorCode::wrong_shape: return "wrong-shape";
    case ErrorCode::invalid_initial: return "invalid-initial";
    case ErrorCode::unknown_fixture: return "unknown-fixture";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  Rat r(mpz_class(std::string(num), 10), q);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat rat(long long p, long long q) {
  Rat r{mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q))};
  r.canonicalize();
  return r;
}

Rat ceil_div(long long num, long long den) {
  mpz_class q;
  mpz_class n(static_cast<long>(num));
  mpz_class d(static_cast<long>(den));
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return Rat(q);
}

Rat sum(const std::vector<Rat>& values) {
  Rat total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace fedlab
