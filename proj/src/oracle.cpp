#include "minrpp/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace minrpp {

namespace {

long long norm(long long x, long long p) {
  x %= p;
  return x < 0 ? x + p : x;
}

long long inv_mod(long long a, long long p) {
  long long r = 1, b = p - 2;  // p prime
  a = norm(a, p);
  while (b) {
    if (b & 1) r = r * a % p;
    a = a * a % p;
    b >>= 1;
  }
  return r;
}

}  // namespace

FpMatrix FpMatrix::zero(int r, int c, long long p) {
  FpMatrix m;
  m.p = p;
  m.rows = r;
  m.cols = c;
  m.a.assign((size_t)r * c, 0);
  return m;
}

FpMatrix FpMatrix::identity(int n, long long p) {
  FpMatrix m = zero(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::mul(const FpMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix r = zero(rows, o.cols, p);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      long long v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols; ++j)
        r.at(i, j) = (r.at(i, j) + v * o.at(k, j)) % p;
    }
  return r;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(FpMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.a[(size_t)sel * m.cols + j], m.a[(size_t)row * m.cols + j]);
    long long inv = inv_mod(m.at(row, col), m.p);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv % m.p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || !m.at(i, col)) continue;
      long long f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = norm(m.at(i, j) - f * m.at(row, j), m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int FpMatrix::rank() const {
  FpMatrix m = *this;
  return (int)echelon(m).size();
}

FpMatrix FpMatrix::nullspace() const {
  FpMatrix m = *this;
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix basis = zero(cols, (int)free_cols.size(), p);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, (int)k) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], (int)k) = norm(-m.at((int)r, fc), p);
  }
  return basis;
}

FpMatrix FpMatrix::hstack(const FpMatrix& o) const {
  if (rows != o.rows) throw std::invalid_argument("hstack shape mismatch");
  FpMatrix r = zero(rows, cols + o.cols, p);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
  }
  return r;
}

FpMatrix FpMatrix::inverse() const {
  if (rows != cols) throw std::invalid_argument("inverse of non-square matrix");
  FpMatrix aug = hstack(identity(rows, p));
  std::vector<int> piv = echelon(aug);
  for (int i = 0; i < rows; ++i)
    if (i >= (int)piv.size() || piv[i] != i) throw std::invalid_argument("singular matrix");
  FpMatrix inv = zero(rows, rows, p);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) inv.at(i, j) = aug.at(i, rows + j);
  return inv;
}

Root MatrixRep::dim_vector() const {
  Root r(dim.size());
  for (size_t i = 0; i < dim.size(); ++i) r[i] = dim[i];
  return r;
}

MatrixRep simple_rep(const DynkinQuiver& q, int i, long long p) {
  MatrixRep m;
  m.q = q;
  m.p = p;
  m.dim.assign(q.rank(), 0);
  m.dim[i - 1] = 1;
  for (auto [s, t] : q.arrows) m.f.push_back(FpMatrix::zero(m.dim[t - 1], m.dim[s - 1], p));
  return m;
}

MatrixRep direct_sum(const MatrixRep& x, const MatrixRep& y) {
  MatrixRep m;
  m.q = x.q;
  m.p = x.p;
  m.dim.resize(x.dim.size());
  for (size_t i = 0; i < x.dim.size(); ++i) m.dim[i] = x.dim[i] + y.dim[i];
  for (size_t a = 0; a < x.f.size(); ++a) {
    auto [s, t] = x.q.arrows[a];
    FpMatrix f = FpMatrix::zero(m.dim[t - 1], m.dim[s - 1], m.p);
    for (int i = 0; i < x.f[a].rows; ++i)
      for (int j = 0; j < x.f[a].cols; ++j) f.at(i, j) = x.f[a].at(i, j);
    for (int i = 0; i < y.f[a].rows; ++i)
      for (int j = 0; j < y.f[a].cols; ++j)
        f.at(x.f[a].rows + i, x.f[a].cols + j) = y.f[a].at(i, j);
    m.f.push_back(std::move(f));
  }
  return m;
}

namespace {

// Matrix-level reflection functor at a sink k: V_k becomes the kernel of the
// stacked map into k, with the new arrows given by the kernel inclusion.
MatrixRep reflect_plus(const MatrixRep& m, int k) {
  const DynkinQuiver& q = m.q;
  if (!q.is_sink(k)) throw std::invalid_argument("reflect_plus: not a sink");
  std::vector<int> sources;  // arrow indices into k
  for (size_t a = 0; a < q.arrows.size(); ++a)
    if (q.arrows[a].second == k) sources.push_back((int)a);
  int total = 0;
  for (int a : sources) total += m.dim[q.arrows[a].first - 1];
  FpMatrix stacked = FpMatrix::zero(m.dim[k - 1], total, m.p);
  int off = 0;
  for (int a : sources) {
    const FpMatrix& f = m.f[a];
    for (int i = 0; i < f.rows; ++i)
      for (int j = 0; j < f.cols; ++j) stacked.at(i, off + j) = f.at(i, j);
    off += f.cols;
  }
  FpMatrix ker = stacked.nullspace();  // total x newdim

  DynkinQuiver q2 = sigma_vertex(q, k);
  MatrixRep out;
  out.q = q2;
  out.p = m.p;
  out.dim = m.dim;
  out.dim[k - 1] = ker.cols;
  // Match matrices to q2's arrow order.
  std::map<std::pair<int, int>, FpMatrix> table;
  for (size_t a = 0; a < q.arrows.size(); ++a)
    if (q.arrows[a].second != k) table[q.arrows[a]] = m.f[a];
  off = 0;
  for (int a : sources) {
    int s = q.arrows[a].first;
    int d = m.dim[s - 1];
    FpMatrix g = FpMatrix::zero(d, ker.cols, m.p);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < ker.cols; ++j) g.at(i, j) = ker.at(off + i, j);
    table[{k, s}] = std::move(g);
    off += d;
  }
  for (auto [s, t] : q2.arrows) out.f.push_back(table.at({s, t}));
  return out;
}

}  // namespace

MatrixRep indec_matrices(const DynkinQuiver& q, const Root& root, long long p) {
  // Walk the root down to a simple by reflecting at sources along repeated
  // admissible sweeps, then rebuild with matrix-level inverse reflections.
  std::vector<std::pair<DynkinQuiver, int>> steps;  // (quiver before, source k)
  DynkinQuiver cur = q;
  Root w = root;
  int hbound = coxeter_number(q.diagram) + 2;
  auto simple_at = [&](const Root& r) {
    int idx = -1;
    for (int i = 0; i < (int)r.size(); ++i) {
      if (r[i] == 0) continue;
      if (r[i] != 1 || idx != -1) return -1;
      idx = i + 1;
    }
    return idx;
  };
  std::vector<int> sweep = q.vertices_by_numbering();
  int guard = 0;
  while (simple_at(w) < 0) {
    for (int v : sweep) {
      if (simple_at(w) >= 0) break;
      if (!cur.is_source(v))
        throw std::logic_error("indec_matrices: sweep vertex is not a source");
      steps.push_back({cur, v});
      w = simple_reflection(cur.diagram, v, w);
      if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("indec_matrices: input is not a positive root");
      cur = sigma_vertex(cur, v);
    }
    if (++guard > hbound) throw std::logic_error("indec_matrices: reflection walk stuck");
  }
  MatrixRep m = simple_rep(cur, simple_at(w), p);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    // k was a source of `it->first`; it is a sink of the current quiver.
    m = reflect_plus(m, it->second);
    if (m.q.describe() != it->first.describe())
      throw std::logic_error("indec_matrices: quiver mismatch while rebuilding");
  }
  if (m.dim_vector() != root) throw std::logic_error("indec_matrices: dimension vector mismatch");
  if (hom_basis(m, m).size() != 1)
    throw std::logic_error("indec_matrices: endomorphism ring is not one-dimensional");
  return m;
}

std::vector<std::vector<FpMatrix>> hom_basis(const MatrixRep& x, const MatrixRep& y) {
  int n = x.q.rank();
  long long p = x.p;
  // Unknowns: theta_i (dim_y[i] x dim_x[i]); equations per arrow a:
  // theta_t f^x_a = f^y_a theta_s.
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + y.dim[i] * x.dim[i];
  int vars = offset[n];
  int eqs = 0;
  for (size_t a = 0; a < x.q.arrows.size(); ++a) {
    auto [s, t] = x.q.arrows[a];
    eqs += y.dim[t - 1] * x.dim[s - 1];
  }
  FpMatrix sys = FpMatrix::zero(std::max(eqs, 1), vars, p);
  int row = 0;
  for (size_t a = 0; a < x.q.arrows.size(); ++a) {
    auto [s, t] = x.q.arrows[a];
    int ds = x.dim[s - 1], dt = x.dim[t - 1];
    int es = y.dim[s - 1], et = y.dim[t - 1];
    // Equation (r, c) entries for r < et, c < ds:
    //   sum_k theta_t(r,k) f^x_a(k,c) - sum_k f^y_a(r,k) theta_s(k,c) = 0
    for (int r = 0; r < et; ++r)
      for (int c = 0; c < ds; ++c) {
        for (int k = 0; k < dt; ++k) {
          long long coef = x.f[a].at(k, c);
          if (coef)
            sys.at(row, offset[t - 1] + r * x.dim[t - 1] + k) =
                norm(sys.at(row, offset[t - 1] + r * x.dim[t - 1] + k) + coef, p);
        }
        for (int k = 0; k < es; ++k) {
          long long coef = y.f[a].at(r, k);
          if (coef)
            sys.at(row, offset[s - 1] + k * x.dim[s - 1] + c) =
                norm(sys.at(row, offset[s - 1] + k * x.dim[s - 1] + c) - coef, p);
        }
        ++row;
      }
  }
  FpMatrix null = vars ? sys.nullspace() : FpMatrix::zero(0, 0, p);
  std::vector<std::vector<FpMatrix>> basis;
  for (int b = 0; b < null.cols; ++b) {
    std::vector<FpMatrix> theta;
    for (int i = 0; i < n; ++i) {
      FpMatrix t = FpMatrix::zero(y.dim[i], x.dim[i], p);
      for (int r = 0; r < y.dim[i]; ++r)
        for (int c = 0; c < x.dim[i]; ++c)
          t.at(r, c) = null.at(offset[i] + r * x.dim[i] + c, b);
      theta.push_back(std::move(t));
    }
    basis.push_back(std::move(theta));
  }
  return basis;
}

OracleConfig OracleConfig::from_env() {
  OracleConfig cfg;
  if (const char* s = std::getenv("ORACLE_PRIME")) cfg.prime = std::atoll(s);
  if (const char* s = std::getenv("ORACLE_SAMPLES")) cfg.samples = std::atoi(s);
  if (const char* s = std::getenv("ORACLE_SEED")) cfg.seed = std::strtoull(s, nullptr, 10);
  return cfg;
}

Partition jordan_type(const FpMatrix& n) {
  if (n.rows != n.cols) throw std::invalid_argument("jordan_type: non-square");
  std::vector<long long> ranks{n.rows};
  FpMatrix pw = n;
  while (ranks.back() > 0) {
    ranks.push_back(pw.rank());
    if (ranks.size() > (size_t)n.rows + 2) throw std::invalid_argument("matrix is not nilpotent");
    pw = pw.mul(n);
  }
  Partition mult;  // mult[j] = number of blocks of size >= j+1
  for (size_t j = 0; j + 1 < ranks.size(); ++j) mult.push_back(ranks[j] - ranks[j + 1]);
  return normalized(conjugate(normalized(mult)));
}

GenJfResult gen_jf(const DynkinQuiver& q, const std::vector<std::pair<Root, long long>>& summands,
                   const OracleConfig& cfg) {
  long long p = cfg.prime;
  int n = q.rank();
  // Indecomposables sorted along the AR order so that all nonzero Hom point
  // forward (directedness).
  ArQuiver arq = ar_quiver(q);
  std::vector<int> topo_pos(arq.size());
  {
    // Kahn over the AR arrows, sources first.
    std::vector<int> indeg(arq.size(), 0);
    for (const ArVertex& x : arq.v) indeg[x.id] = (int)x.in.size();
    std::set<int> ready;
    for (int i = 0; i < arq.size(); ++i)
      if (!indeg[i]) ready.insert(i);
    int pos = 0;
    while (!ready.empty()) {
      int x = *ready.begin();
      ready.erase(ready.begin());
      topo_pos[x] = pos++;
      for (int z : arq[x].out)
        if (--indeg[z] == 0) ready.insert(z);
    }
  }
  std::map<int, long long> by_pos;  // topological position -> multiplicity
  std::map<int, Root> root_at;
  for (const auto& [root, mult] : summands) {
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult == 0) continue;
    int id = arq.find_root(root);
    if (id < 0) throw std::invalid_argument("not an indecomposable root: " + root_string(root));
    by_pos[topo_pos[id]] += mult;
    root_at[topo_pos[id]] = root;
  }
  std::vector<std::pair<int, long long>> parts(by_pos.begin(), by_pos.end());

  std::vector<MatrixRep> reps;
  for (auto& [pos, mult] : parts) reps.push_back(indec_matrices(q, root_at[pos], p));

  // Copies in order; copy c of part u occupies a block of each vertex space.
  struct Copy {
    int part;
    long long idx;
  };
  std::vector<Copy> copies;
  for (size_t u = 0; u < parts.size(); ++u)
    for (long long c = 0; c < parts[u].second; ++c) copies.push_back({(int)u, c});

  std::vector<int> dim(n, 0);
  // offset[copy][vertex]
  std::vector<std::vector<int>> offset(copies.size(), std::vector<int>(n, 0));
  for (size_t cp = 0; cp < copies.size(); ++cp)
    for (int i = 0; i < n; ++i) {
      offset[cp][i] = dim[i];
      dim[i] += reps[copies[cp].part].dim[i];
    }

  // Hom bases between distinct parts (forward only).
  std::map<std::pair<int, int>, std::vector<std::vector<FpMatrix>>> homs;
  for (size_t u = 0; u < parts.size(); ++u)
    for (size_t v = u + 1; v < parts.size(); ++v)
      homs[{(int)u, (int)v}] = hom_basis(reps[u], reps[v]);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long long> coeff(0, p - 1);

  auto sample_jf = [&]() {
    std::vector<FpMatrix> N;
    for (int i = 0; i < n; ++i) N.push_back(FpMatrix::zero(dim[i], dim[i], p));
    auto add_block = [&](size_t from, size_t to, const std::vector<FpMatrix>& theta,
                         long long scale) {
      for (int i = 0; i < n; ++i) {
        const FpMatrix& t = theta[i];
        for (int r = 0; r < t.rows; ++r)
          for (int c = 0; c < t.cols; ++c)
            N[i].at(offset[to][i] + r, offset[from][i] + c) =
                norm(N[i].at(offset[to][i] + r, offset[from][i] + c) + scale * t.at(r, c), p);
      }
    };
    for (size_t a = 0; a < copies.size(); ++a)
      for (size_t b = 0; b < copies.size(); ++b) {
        if (a == b) continue;
        int ua = copies[a].part, ub = copies[b].part;
        if (ua == ub) {
          // strictly upper triangular scalar blocks between equal copies
          if (copies[a].idx < copies[b].idx) {
            std::vector<FpMatrix> id;
            for (int i = 0; i < n; ++i) id.push_back(FpMatrix::identity(reps[ua].dim[i], p));
            add_block(a, b, id, coeff(rng));
          }
        } else if (ua < ub) {
          for (const auto& theta : homs[{ua, ub}]) add_block(a, b, theta, coeff(rng));
        }
      }
    PartitionTuple jf(n);
    for (int i = 0; i < n; ++i) {
      // structural nilpotency check
      FpMatrix pw = FpMatrix::identity(dim[i], p);
      for (int k = 0; k < dim[i]; ++k) pw = pw.mul(N[i]);
      if (dim[i] && pw.rank() != 0) throw std::logic_error("sampled endomorphism not nilpotent");
      jf[i] = dim[i] ? jordan_type(N[i]) : Partition{};
    }
    return jf;
  };

  GenJfResult res;
  std::vector<PartitionTuple> all;
  for (int s = 0; s < std::max(cfg.samples, 1); ++s) all.push_back(sample_jf());
  res.jf = all[0];
  for (const auto& t : all) {
    if (tuple_dominance_leq(res.jf, t))
      res.jf = t;
    else if (!tuple_dominance_leq(t, res.jf))
      res.samples_agree = false;
  }
  for (const auto& t : all)
    if (!tuple_dominance_leq(t, res.jf)) res.samples_agree = false;
  return res;
}

GenJfResult gen_jf(const MinusculeHeap& h, const MultVector& c, const OracleConfig& cfg) {
  std::vector<std::pair<Root, long long>> summands;
  for (int x = 0; x < h.size(); ++x)
    if (c[x]) summands.push_back({h.el[x].root, c[x]});
  return gen_jf(h.quiver, summands, cfg);
}

Partition generic_coker_jf(int a, int b, int c, long long p, uint64_t seed) {
  if (!(a >= b && b >= c && c >= 0)) throw std::invalid_argument("need a >= b >= c >= 0");
  int dim = a + c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coeff(0, p - 1);
  auto shift = [&](int m) {  // nilpotent Jordan block on k[N]/N^m, N e_i = e_{i+1}
    FpMatrix J = FpMatrix::zero(m, m, p);
    for (int i = 0; i + 1 < m; ++i) J.at(i + 1, i) = 1;
    return J;
  };
  FpMatrix Na = shift(a), Nc = shift(c);
  FpMatrix N = FpMatrix::zero(dim, dim, p);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) N.at(i, j) = Na.at(i, j);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) N.at(a + i, a + j) = Nc.at(i, j);
  if (b == 0) return dim ? jordan_type(N) : Partition{};

  for (int attempt = 0; attempt < 64; ++attempt) {
    // Module map determined by the image of the generator: a vector killed by
    // N^b in each summand.
    std::vector<long long> gen(dim, 0);
    for (int i = a - b; i < a; ++i) gen[i] = coeff(rng);
    for (int i = std::max(c - b, 0); i < c; ++i) gen[a + i] = coeff(rng);
    FpMatrix G = FpMatrix::zero(dim, b, p);
    std::vector<long long> v = gen;
    for (int j = 0; j < b; ++j) {
      for (int i = 0; i < dim; ++i) G.at(i, j) = v[i];
      // v := N v
      std::vector<long long> w(dim, 0);
      for (int i = 0; i < dim; ++i) {
        if (!v[i]) continue;
        for (int r = 0; r < dim; ++r) w[r] = (w[r] + N.at(r, i) * v[i]) % p;
      }
      v = w;
    }
    if (G.rank() != b) continue;  // non-generic sample, retry
    // Extend im(G) to a basis with standard vectors.
    FpMatrix P = G;
    std::vector<int> extra;
    for (int e = 0; e < dim && P.cols < dim; ++e) {
      FpMatrix cand = P.hstack(FpMatrix::zero(dim, 1, p));
      cand.at(e, cand.cols - 1) = 1;
      if (cand.rank() == cand.cols) {
        P = cand;
        extra.push_back(e);
      }
    }
    if (P.cols != dim) continue;
    // im(G) is N-invariant, so M is block triangular; the induced block is
    // the cokernel action.
    FpMatrix M = P.inverse().mul(N.mul(P));
    int q = dim - b;
    FpMatrix induced = FpMatrix::zero(q, q, p);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) induced.at(i, j) = M.at(b + i, b + j);
    return q ? jordan_type(induced) : Partition{};
  }
  throw std::logic_error("generic_coker_jf: failed to sample a generic map");
}

Partition gk_partition(const Poset& p) {
  if (p.size > 25) throw std::invalid_argument("gk_partition: poset too large");
  if (p.size == 0) return {};
  // Min-cost flow: node-split gadget, each node worth -1, k units of flow.
  int n = p.size;
  int S = 2 * n, T = 2 * n + 1, V = 2 * n + 2;
  struct Edge {
    int to, cap, cost, flow = 0;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj(V);
  auto add_edge = [&](int a, int b, int cap, int cost) {
    adj[a].push_back((int)edges.size());
    edges.push_back({b, cap, cost});
    adj[b].push_back((int)edges.size());
    edges.push_back({a, 0, -cost});
  };
  for (int x = 0; x < n; ++x) {
    add_edge(2 * x, 2 * x + 1, 1, -1);
    add_edge(S, 2 * x, 1, 0);
    add_edge(2 * x + 1, T, 1, 0);
    for (int y = 0; y < n; ++y)
      if (x != y && p.leq(x, y)) add_edge(2 * x + 1, 2 * y, 1, 0);
  }
  // Successive shortest augmenting paths (Bellman-Ford); each augmentation
  // adds one more chain to the union.
  std::vector<long long> delta{0};
  long long covered = 0;
  while (true) {
    std::vector<int> dist(V, 1 << 28), pre(V, -1);
    dist[S] = 0;
    for (int it = 0; it < V; ++it)
      for (int a = 0; a < V; ++a)
        for (int id : adj[a]) {
          const Edge& e = edges[id];
          if (e.flow < e.cap && dist[a] + e.cost < dist[e.to]) {
            dist[e.to] = dist[a] + e.cost;
            pre[e.to] = id;
          }
        }
    if (pre[T] < 0 || dist[T] >= 0) break;
    for (int v = T; v != S;) {
      Edge& e = edges[pre[v]];
      e.flow += 1;
      edges[pre[v] ^ 1].flow -= 1;
      v = edges[pre[v] ^ 1].to;
    }
    covered += -dist[T];
    delta.push_back(covered);
  }
  Partition out;
  for (size_t k = 1; k < delta.size(); ++k) out.push_back(delta[k] - delta[k - 1]);
  return normalized(out);
}

Poset build_tilde_poset(const MinusculeHeap& h, const MultVector& c, int i) {
  std::vector<int> members;
  for (int x = 0; x < h.size(); ++x)
    if (c[x] > 0 && h.el[x].root[i - 1] >= 1) members.push_back(x);
  long long total = 0;
  for (int x : members) total += c[x];
  if (total > 25) throw std::invalid_argument("build_tilde_poset: poset too large");
  Poset p;
  p.size = (int)total;
  p.up.resize(p.size);
  // chain_of[x] = ids of the chain replacing x, bottom to top
  std::map<int, std::vector<int>> chain_of;
  int next = 0;
  for (int x : members) {
    for (long long j = 0; j < c[x]; ++j) {
      chain_of[x].push_back(next);
      if (j) p.up[next - 1].push_back(next);
      ++next;
    }
  }
  for (int x : members)
    for (int y : members) {
      if (x == y || !h.leq(x, y)) continue;
      p.up[chain_of[x].back()].push_back(chain_of[y].front());
    }
  p.close();
  return p;
}

}  // namespace minrpp
