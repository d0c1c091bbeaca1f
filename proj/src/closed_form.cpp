#include <algorithm>

#include "fedlab/error.hpp"
#include "fedlab/fed.hpp"
#include "fedlab/generators.hpp"

namespace fedlab {

namespace {

ClosedForm exact(const Rat& v, std::string reason) {
  ClosedForm c;
  c.exact = true;
  c.lower = v;
  c.upper = v;
  c.reason = std::move(reason);
  return c;
}

ClosedForm interval(const Rat& lo, const Rat& hi, std::string reason, bool lower_open = false) {
  ClosedForm c;
  c.lower = lo;
  c.upper = hi;
  c.lower_open = lower_open;
  c.reason = std::move(reason);
  return c;
}

std::string num(long long v) { return std::to_string(v); }

// (n+2)(n+4) / (2(n+5)), the lower end for the n = 10 (mod 12) prisms and
// n = 4 (mod 12) Moebius ladders
Rat mod12_lower(long long n) { return rat((n + 2) * (n + 4), 2 * (n + 5)); }

// (2n+3)/4: connectivity bound with 2n vertices and connectivity 3
Rat cubic_upper(long long n) { return rat(2 * n + 3, 4); }

Rat static_lower(const Graph& g) { return std::max(gamma_f(g).value, big_F(g).value); }

std::optional<ClosedForm> from_tag(const Graph& g, const ClassTag& tag) {
  const auto& p = tag.params;
  switch (tag.family) {
    case Family::complete: return exact(1, "complete graph");
    case Family::path: return exact(ceil_div(p[0], 2), "path P_" + num(p[0]) + ": ceil(n/2)");
    case Family::cycle: return exact(ceil_div(p[0], 3), "cycle C_" + num(p[0]) + ": ceil(n/3)");
    case Family::complete_multipartite: {
      bool big_part = std::any_of(p.begin(), p.end(), [](long long s) { return s >= 2; });
      if (p.size() == 1) return p[0] == 1 ? std::optional(exact(1, "single vertex")) : std::nullopt;
      return big_part ? exact(2, "complete multipartite with a part of size >= 2") : exact(1, "complete graph");
    }
    case Family::star: return exact(p[0] == 1 ? 1 : 2, "star");
    case Family::kneser:
      if (p[1] == 2 && p[0] == 5) return exact(3, "Petersen graph KG(5,2)");
      if (p[1] == 2 && p[0] >= 6) return exact(rat(2 * p[0] - 6, p[0] - 4), "Kneser KG(n,2), n >= 6: (2n-6)/(n-4)");
      return std::nullopt;
    case Family::hypercube: {
      long long d = p[0];
      Rat lo = Rat(mpz_class(1) << static_cast<unsigned>(d)) / rat(d + 1);
      if (((d + 1) & d) == 0) return exact(lo, "hypercube Q_" + num(d) + " with an efficient dominating set");
      Rat hi = (Rat(mpz_class(1) << static_cast<unsigned>(d)) + rat(d)) / rat(d + 1);
      return interval(lo, hi, "hypercube Q_" + num(d) + ": [2^d/(d+1), (2^d+d)/(d+1)]");
    }
    case Family::prism: {
      long long n = p[0];
      if (n % 4 != 2) return exact(ceil_div(n, 2), "prism C_" + num(n) + "xK_2, n != 2 mod 4: ceil(n/2)");
      if (n == 6) return interval(rat(7, 2), rat(15, 4), "prism C_6xK_2", true);
      if (n == 10) return exact(rat(28, 5), "prism C_10xK_2");
      if (n % 12 == 10) return interval(mod12_lower(n), cubic_upper(n), "prism, n = 10 mod 12");
      return interval(static_lower(g), cubic_upper(n), "prism, n = 2 mod 4");
    }
    case Family::moebius: {
      long long n = p[0];
      if (n % 4 != 0) return exact(ceil_div(n, 2), "Moebius ladder on Z_" + num(2 * n) + ", n != 0 mod 4: ceil(n/2)");
      if (n == 4) return exact(rat(8, 3), "Moebius ladder on Z_8");
      if (n % 12 == 4) return interval(mod12_lower(n), cubic_upper(n), "Moebius ladder, n = 4 mod 12");
      return interval(static_lower(g), cubic_upper(n), "Moebius ladder, n = 0 mod 4");
    }
    case Family::gtd:
    case Family::gq: return exact(1 + rat(p[0], p[1]), "split construction on t = " + num(p[0]) + ", d = " + num(p[1]) + ": 1 + t/d");
    case Family::tree: return exact(med_tree(g), "tree recursion");
    case Family::grid: {
      long long m = std::min(p[0], p[1]), n = std::max(p[0], p[1]);
      if (m == 1) return exact(ceil_div(n, 2), "grid with a side of 1 is a path");
      if (m == 2) return exact(ceil_div(2 * n, 3), "ladder P_" + num(n) + "xP_2: ceil(2n/3)");
      Rat hi = rat(m * n, 5) + rat(2 * (m + n), 15) + rat(39, 15);
      return interval(gamma_f(g).value, hi, "grid upper bound mn/5 + 2(m+n)/15 + 39/15");
    }
    case Family::strong_grid: {
      long long m = std::min(p[0], p[1]), n = std::max(p[0], p[1]);
      if (m == 1) return exact(ceil_div(n, 2), "strong grid with a side of 1 is a path");
      Rat hi = rat(m * n, 9) + rat(16 * (m + n), 9) + rat(114, 9);
      return interval(gamma_f(g).value, hi, "strong grid upper bound mn/9 + 16(m+n)/9 + 114/9");
    }
    case Family::generic: break;
  }
  return std::nullopt;
}

std::optional<ClassTag> trusted_tag(const Graph& g) {
  if (!g.tag() || g.tag()->family == Family::generic) return std::nullopt;
  try {
    if (generate(*g.tag()).same_edges(g)) return g.tag();
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

std::optional<ClosedForm> closed_form_fed(const Graph& g) {
  if (auto tag = trusted_tag(g)) {
    if (auto c = from_tag(g, *tag)) return c;
  }
  Classification c;
  try {
    c = classify(g);
  } catch (const Error&) {
    return std::nullopt;
  }
  int n = g.n();
  if (c.is_complete) return exact(1, "complete graph");
  if (c.is_path) return exact(ceil_div(n, 2), "path P_" + num(n) + ": ceil(n/2)");
  if (c.is_cycle) return exact(ceil_div(n, 3), "cycle C_" + num(n) + ": ceil(n/3)");
  if (c.is_complete_multipartite) return exact(2, "complete multipartite with a part of size >= 2");
  if (c.is_tree) return exact(med_tree(g), "tree recursion");
  if (c.split && n <= kSearchLimit) return exact(big_F(g).value, "split graph: F(G)");
  if (c.cubic_match) return from_tag(g, *c.cubic_match);
  return std::nullopt;
}

}  // namespace fedlab
