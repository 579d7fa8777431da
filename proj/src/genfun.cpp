#include "minrpp/genfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace minrpp {

std::vector<Root> heart_dims(const MinusculeHeap& h, ElemSet region) {
  XiState st = xi_state_for_filter(h, region);
  std::vector<Root> dims(h.size());
  for (int z = 0; z < h.size(); ++z)
    if ((region >> z) & 1u) dims[z] = st.heart_dim(h.el[z].root);
  return dims;
}

Series genfun_rpp_side(const MinusculeHeap& h, ElemSet region, int degree) {
  int n = h.quiver.rank();
  Series out;
  std::vector<int> members;
  for (int z = 0; z < h.size(); ++z)
    if ((region >> z) & 1u) members.push_back(z);
  std::sort(members.begin(), members.end(), [&](int a, int b) {
    return __builtin_popcount(h.upset[a]) < __builtin_popcount(h.upset[b]);
  });
  std::vector<long long> val(h.size(), 0);
  std::function<void(size_t, long long)> rec = [&](size_t i, long long left) {
    if (i == members.size()) {
      std::vector<int> e(n, 0);
      for (int z : members) e[h.el[z].pi - 1] += (int)val[z];
      out[e] += 1;
      return;
    }
    int x = members[i];
    long long lo = 0;
    for (int y : h.el[x].up)
      if ((region >> y) & 1u) lo = std::max(lo, val[y]);
    for (long long v = lo; v <= left; ++v) {
      val[x] = v;
      rec(i + 1, left - v);
    }
    val[x] = 0;
  };
  rec(0, degree);
  return out;
}

Series genfun_object_side(const MinusculeHeap& h, ElemSet region, const std::vector<Root>& dims,
                          int degree) {
  int n = h.quiver.rank();
  Series out;
  std::vector<int> members;
  for (int z = 0; z < h.size(); ++z)
    if ((region >> z) & 1u) members.push_back(z);
  std::function<void(size_t, std::vector<int>, int)> rec = [&](size_t i, std::vector<int> e,
                                                               int left) {
    if (i == members.size()) {
      out[e] += 1;
      return;
    }
    int z = members[i];
    int total = std::accumulate(dims[z].begin(), dims[z].end(), 0);
    for (int k = 0; k * total <= left; ++k) {
      std::vector<int> e2 = e;
      for (int j = 0; j < n; ++j) e2[j] += k * dims[z][j];
      rec(i + 1, e2, left - k * total);
    }
  };
  rec(0, std::vector<int>(n, 0), degree);
  return out;
}

Series genfun_product_side(const MinusculeHeap& h, ElemSet region, const std::vector<Root>& dims,
                           int degree) {
  int n = h.quiver.rank();
  Series s;
  s[std::vector<int>(n, 0)] = 1;
  for (int z = 0; z < h.size(); ++z) {
    if (!((region >> z) & 1u)) continue;
    const Root& d = dims[z];
    int total = std::accumulate(d.begin(), d.end(), 0);
    Series next;
    for (const auto& [expv, coef] : s) {
      int have = std::accumulate(expv.begin(), expv.end(), 0);
      for (int k = 0; have + k * total <= degree; ++k) {
        std::vector<int> e = expv;
        for (int j = 0; j < n; ++j) e[j] += k * d[j];
        next[e] += coef;
      }
    }
    s = std::move(next);
  }
  return s;
}

bool generating_function_check(const MinusculeHeap& h, ElemSet region, int degree) {
  std::vector<Root> dims = heart_dims(h, region);
  Series a = genfun_rpp_side(h, region, degree);
  Series b = genfun_object_side(h, region, dims, degree);
  Series c = genfun_product_side(h, region, dims, degree);
  return a == b && b == c;
}

}  // namespace minrpp
