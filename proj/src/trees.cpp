#include "fedlab/error.hpp"
#include "fedlab/fed.hpp"

namespace fedlab {

int med_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::not_a_tree, "graph is not a tree");
  int n = t.n();
  if (n <= 2) return 1;
  if (t.max_degree() == n - 1) return 2;
  // a support vertex of largest eccentricity sits at the end of a longest
  // path, so removing it (or its leaves) leaves a tree
  auto ecc = eccentricities(t);
  int x = -1;
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) < 2 || ecc[v] < 2) continue;
    bool support = false;
    for (int u : t.neighbors(v)) support = support || t.degree(u) == 1;
    if (support && (x < 0 || ecc[v] > ecc[x])) x = v;
  }
  VertexSet leaves;
  for (int u : t.neighbors(x))
    if (t.degree(u) == 1) leaves.push_back(u);
  if (leaves.size() == 1) return 1 + med_tree(t.without({x, leaves[0]}));
  return 1 + med_tree(t.without(leaves));
}

}  // namespace fedlab
