#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tfg/gf2.hpp"
#include "tfg/permutation.hpp"

namespace tfg {

/// Leveled vertex/edge graph with a single top vertex. Edges are described by
/// multiplicity matrices; a stationary diagram repeats one pattern forever,
/// a general one is given to finite depth.
class BratteliDiagram {
 public:
  /// Stationary: level-1 multiplicities from the top vertex, then one square
  /// matrix m[v][w] = number of edges from v in V_n to w in V_{n+1}.
  static BratteliDiagram stationary(std::vector<long> level1,
                                    std::vector<std::vector<long>> matrix) {
    BratteliDiagram b;
    b.stationary_ = true;
    b.level1_ = std::move(level1);
    b.matrix_ = std::move(matrix);
    b.validate();
    return b;
  }

  /// General: per-level matrices, levels_[i] connecting V_{i+1} to V_{i+2}.
  static BratteliDiagram general(std::vector<long> level1,
                                 std::vector<std::vector<std::vector<long>>> levels) {
    BratteliDiagram b;
    b.stationary_ = false;
    b.level1_ = std::move(level1);
    b.levels_ = std::move(levels);
    b.validate();
    return b;
  }

  bool is_stationary() const { return stationary_; }

  /// Number of vertices at a level (level >= 1).
  size_t vertex_count(int level) const {
    require(level >= 0, errc::bad_config, "negative level");
    if (level == 0) return 1;
    if (stationary_) return level1_.size();
    if (level == 1) return level1_.size();
    require((size_t)level - 2 < levels_.size(), errc::bad_config, "level beyond given depth");
    return levels_[level - 2][0].size();
  }

  /// Multiplicity matrix between V_level and V_{level+1} (level >= 1).
  const std::vector<std::vector<long>>& incidence(int level) const {
    require(level >= 1, errc::bad_config, "incidence defined between levels >= 1");
    if (stationary_) return matrix_;
    require((size_t)level - 1 < levels_.size(), errc::bad_config, "level beyond given depth");
    return levels_[level - 1];
  }

  const std::vector<long>& level1() const { return level1_; }

  /// Deepest level with known edge data (stationary diagrams are unbounded).
  int known_depth() const {
    return stationary_ ? std::numeric_limits<int>::max() : (int)levels_.size() + 1;
  }

  /// h(v): number of paths from the top vertex to v at the given level.
  mpz_class path_count(int level, size_t v) const {
    auto h = path_counts(level);
    require(v < h.size(), errc::bad_config, "vertex index out of range");
    return h[v];
  }

  std::vector<mpz_class> path_counts(int level) const {
    require(level >= 0, errc::bad_config, "negative level");
    if (level == 0) return {mpz_class(1)};
    std::vector<mpz_class> h(level1_.size());
    for (size_t v = 0; v < level1_.size(); ++v) h[v] = level1_[v];
    for (int l = 1; l < level; ++l) {
      const auto& m = incidence(l);
      std::vector<mpz_class> nh(vertex_count(l + 1), 0);
      for (size_t v = 0; v < m.size(); ++v)
        for (size_t w = 0; w < nh.size(); ++w) nh[w] += h[v] * m[v][w];
      h = std::move(nh);
    }
    return h;
  }

  /// Exact for stationary diagrams (primitivity of the repeating matrix);
  /// for general diagrams the condition is verified within the horizon and
  /// Inconclusive is raised when that fails.
  bool is_simple(int horizon = 64) const {
    if (stationary_) {
      size_t k = matrix_.size();
      auto cur = bool_of(matrix_);
      size_t bound = k <= 1 ? 1 : (k - 1) * (k - 1) + 1;
      for (size_t e = 1; e <= bound; ++e) {
        bool all = true;
        for (size_t i = 0; i < k && all; ++i)
          for (size_t j = 0; j < k && all; ++j) all = cur[i][j];
        if (all) return true;
        cur = bool_mul(cur, bool_of(matrix_));
      }
      return false;
    }
    int depth = std::min(horizon, known_depth());
    for (int n = 1; n < depth; ++n) {
      bool ok = false;
      auto cur = bool_of(incidence(n));
      for (int m = n + 1; m <= depth && !ok; ++m) {
        bool all = true;
        for (auto& row : cur)
          for (bool b : row)
            if (!b) all = false;
        if (all) ok = true;
        if (!ok && m < depth) cur = bool_mul(cur, bool_of(incidence(m)));
      }
      if (!ok) fail(errc::inconclusive, "simplicity not verified within horizon");
    }
    return true;
  }

  /// Connecting map on GF(2) vertex spaces induced by the incidence counts.
  GF2Matrix mod2_connecting(int level) const {
    const auto& m = incidence(level);
    GF2Matrix c(vertex_count(level + 1), vertex_count(level));
    for (size_t v = 0; v < m.size(); ++v)
      for (size_t w = 0; w < m[v].size(); ++w) c.set(w, v, (uint8_t)(m[v][w] & 1));
    return c;
  }

  /// Paths from the top vertex to each vertex of the level, as per-level edge
  /// indices, in lexicographic order (first edge most significant). Edges at a
  /// level are indexed by (source, range, copy).
  std::vector<std::vector<std::vector<int>>> enumerate_paths(int level,
                                                             size_t cap = 40000) const {
    require(level >= 1, errc::bad_config, "paths need level >= 1");
    // level-1 edges: from v0 to w, indexed by (w, copy)
    std::vector<std::vector<std::vector<int>>> paths(level1_.size());
    {
      int idx = 0;
      for (size_t w = 0; w < level1_.size(); ++w)
        for (long c = 0; c < level1_[w]; ++c) paths[w].push_back({idx++});
    }
    for (int l = 1; l < level; ++l) {
      const auto& m = incidence(l);
      size_t wn = vertex_count(l + 1);
      // index edges of this level by (source, range, copy)
      std::vector<std::vector<std::pair<int, size_t>>> edges_into(wn);
      int idx = 0;
      for (size_t v = 0; v < m.size(); ++v)
        for (size_t w = 0; w < m[v].size(); ++w)
          for (long c = 0; c < m[v][w]; ++c) edges_into[w].push_back({idx++, v});
      std::vector<std::vector<std::vector<int>>> nxt(wn);
      for (size_t w = 0; w < wn; ++w) {
        for (auto& [eidx, v] : edges_into[w])
          for (const auto& p : paths[v]) {
            auto q = p;
            q.push_back(eidx);
            nxt[w].push_back(std::move(q));
            require(nxt[w].size() <= cap, errc::resource_cap, "path enumeration cap");
          }
        std::sort(nxt[w].begin(), nxt[w].end());
      }
      paths = std::move(nxt);
    }
    return paths;
  }

 private:
  void validate() {
    require(!level1_.empty(), errc::bad_config, "no level-1 vertices");
    for (long c : level1_) require(c >= 1, errc::bad_config, "top vertex must reach every level-1 vertex");
    auto check_matrix = [&](const std::vector<std::vector<long>>& m, size_t rows) {
      require(m.size() == rows, errc::bad_config, "incidence rows mismatch");
      size_t cols = m.empty() ? 0 : m[0].size();
      require(cols >= 1, errc::bad_config, "empty incidence matrix");
      std::vector<bool> col_hit(cols, false);
      for (const auto& row : m) {
        require(row.size() == cols, errc::bad_config, "ragged incidence matrix");
        bool row_hit = false;
        for (size_t j = 0; j < cols; ++j) {
          require(row[j] >= 0, errc::bad_config, "negative multiplicity");
          if (row[j] > 0) {
            row_hit = true;
            col_hit[j] = true;
          }
        }
        require(row_hit, errc::bad_config, "source map not surjective");
      }
      for (bool b : col_hit) require(b, errc::bad_config, "range map not surjective");
      return cols;
    };
    if (stationary_) {
      require(matrix_.size() == level1_.size(), errc::bad_config, "matrix size mismatch");
      check_matrix(matrix_, level1_.size());
      require(matrix_[0].size() == matrix_.size(), errc::bad_config,
              "stationary matrix must be square");
    } else {
      size_t rows = level1_.size();
      for (const auto& m : levels_) rows = check_matrix(m, rows);
    }
  }

  static std::vector<std::vector<bool>> bool_of(const std::vector<std::vector<long>>& m) {
    std::vector<std::vector<bool>> b(m.size(), std::vector<bool>(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m[i].size(); ++j) b[i][j] = m[i][j] > 0;
    return b;
  }
  static std::vector<std::vector<bool>> bool_mul(const std::vector<std::vector<bool>>& a,
                                                 const std::vector<std::vector<bool>>& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(m, false));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < k; ++l)
        if (a[i][l])
          for (size_t j = 0; j < m; ++j)
            if (b[l][j]) r[i][j] = true;
    return r;
  }

  bool stationary_ = true;
  std::vector<long> level1_;
  std::vector<std::vector<long>> matrix_;
  std::vector<std::vector<std::vector<long>>> levels_;
};

/// Element of the AF full group at a fixed level: one permutation of the
/// enumerated path set per vertex.
class AFGroupElement {
 public:
  AFGroupElement(std::shared_ptr<const BratteliDiagram> diagram, int level,
                 std::vector<Permutation> perms)
      : diagram_(std::move(diagram)), level_(level), perms_(std::move(perms)) {
    require(perms_.size() == diagram_->vertex_count(level_), errc::bad_config,
            "one permutation per vertex required");
    auto h = diagram_->path_counts(level_);
    for (size_t v = 0; v < perms_.size(); ++v)
      require(mpz_class((long)perms_[v].size()) == h[v], errc::bad_config,
              "permutation degree must equal the path count");
  }

  static AFGroupElement identity(std::shared_ptr<const BratteliDiagram> d, int level) {
    auto h = d->path_counts(level);
    std::vector<Permutation> ps;
    for (const auto& c : h) ps.push_back(Permutation(c.get_ui()));
    return AFGroupElement(std::move(d), level, std::move(ps));
  }

  const std::shared_ptr<const BratteliDiagram>& diagram() const { return diagram_; }
  int level() const { return level_; }
  const std::vector<Permutation>& perms() const { return perms_; }

  bool is_identity() const {
    for (const auto& p : perms_)
      if (!p.is_identity()) return false;
    return true;
  }

  friend AFGroupElement operator*(const AFGroupElement& a, const AFGroupElement& b) {
    require(a.diagram_ == b.diagram_ && a.level_ == b.level_, errc::bad_config,
            "elements at different levels (embed first)");
    std::vector<Permutation> ps;
    for (size_t v = 0; v < a.perms_.size(); ++v) ps.push_back(a.perms_[v] * b.perms_[v]);
    return AFGroupElement(a.diagram_, a.level_, std::move(ps));
  }

  AFGroupElement inv() const {
    std::vector<Permutation> ps;
    for (const auto& p : perms_) ps.push_back(p.inv());
    return AFGroupElement(diagram_, level_, std::move(ps));
  }

  friend bool operator==(const AFGroupElement& a, const AFGroupElement& b) {
    return a.level_ == b.level_ && a.perms_ == b.perms_;
  }

  /// Canonical embedding one level down the tower: paths grouped by their new
  /// last edge, the old permutation acting on each group.
  AFGroupElement embed() const {
    int m = level_;
    auto paths_m = diagram_->enumerate_paths(m);
    auto paths_next = diagram_->enumerate_paths(m + 1);
    const auto& inc = diagram_->incidence(m);
    size_t wn = diagram_->vertex_count(m + 1);
    // rebuild the level-(m+1) edge indexing used by enumerate_paths
    std::vector<std::vector<std::pair<int, size_t>>> edges_into(wn);
    {
      int idx = 0;
      for (size_t v = 0; v < inc.size(); ++v)
        for (size_t w = 0; w < inc[v].size(); ++w)
          for (long c = 0; c < inc[v][w]; ++c) edges_into[w].push_back({idx, v}), ++idx;
    }
    std::vector<std::map<std::vector<int>, size_t>> index_m(paths_m.size());
    for (size_t v = 0; v < paths_m.size(); ++v)
      for (size_t i = 0; i < paths_m[v].size(); ++i) index_m[v].emplace(paths_m[v][i], i);
    std::vector<Permutation> ps;
    for (size_t w = 0; w < wn; ++w) {
      std::map<std::vector<int>, size_t> index_w;
      for (size_t i = 0; i < paths_next[w].size(); ++i) index_w.emplace(paths_next[w][i], i);
      std::vector<uint32_t> map(paths_next[w].size());
      for (size_t i = 0; i < paths_next[w].size(); ++i) {
        std::vector<int> p = paths_next[w][i];
        int eidx = p.back();
        p.pop_back();
        size_t v = 0;
        for (size_t vv = 0; vv < edges_into[w].size(); ++vv)
          if (edges_into[w][vv].first == eidx) v = edges_into[w][vv].second;
        size_t pi = index_m[v].at(p);
        std::vector<int> q = paths_m[v][perms_[v](pi)];
        q.push_back(eidx);
        map[i] = (uint32_t)index_w.at(q);
      }
      ps.push_back(Permutation(std::move(map)));
    }
    return AFGroupElement(diagram_, m + 1, std::move(ps));
  }

  AFGroupElement embed_to(int level) const {
    AFGroupElement g = *this;
    require(level >= level_, errc::bad_config, "cannot embed downward");
    while (g.level_ < level) g = g.embed();
    return g;
  }

  /// Per-vertex permutation signs as a GF(2) vector over the level vertices.
  std::vector<uint8_t> parity() const {
    std::vector<uint8_t> out;
    for (const auto& p : perms_) out.push_back((uint8_t)p.parity());
    return out;
  }

  std::string str() const {
    std::string s = "level " + std::to_string(level_) + ":";
    for (size_t v = 0; v < perms_.size(); ++v) {
      s += " v" + std::to_string(v) + "[";
      for (size_t i = 0; i < perms_[v].size(); ++i) {
        if (i) s += ",";
        s += std::to_string(perms_[v](i));
      }
      s += "]";
    }
    return s;
  }

 private:
  std::shared_ptr<const BratteliDiagram> diagram_;
  int level_;
  std::vector<Permutation> perms_;
};

/// Direct limit of the GF(2) vertex spaces under the mod-2 connecting maps,
/// with classes reduced to stable canonical coordinates. Exact (certified)
/// for stationary diagrams.
class Mod2Limit {
 public:
  explicit Mod2Limit(std::shared_ptr<const BratteliDiagram> diagram, int depth = 64)
      : diagram_(std::move(diagram)) {
    if (diagram_->is_stationary()) {
      certified_ = true;
      C_ = diagram_->mod2_connecting(1);
      size_t k = C_.rows();
      // stabilization index: ranks of powers become constant by step k
      GF2Matrix p = GF2Matrix::eye(k);
      size_t prev_rank = k;
      j0_ = 0;
      for (size_t j = 1; j <= k + 1; ++j) {
        p = C_ * p;
        if (p.rank() == prev_rank) {
          j0_ = j - 1;
          break;
        }
        prev_rank = p.rank();
        j0_ = j;
      }
      GF2Matrix pj = GF2Matrix::eye(k);
      for (size_t j = 0; j < j0_; ++j) pj = C_ * pj;
      basis_ = pj.column_space_basis();
      // matrix of C on the stable space
      size_t dim = basis_.size();
      T_ = GF2Matrix(dim, dim);
      for (size_t j = 0; j < dim; ++j) {
        auto im = C_.apply(basis_[j]);
        auto co = gf2_coordinates(basis_, im);
        require(co.has_value(), errc::inconclusive, "stable space not invariant");
        for (size_t i = 0; i < dim; ++i) T_.set(i, j, (*co)[i]);
      }
      // order of T in GL(dim, 2)
      torder_ = 1;
      GF2Matrix t = T_;
      GF2Matrix id = GF2Matrix::eye(dim);
      while (!(t == id)) {
        t = t * T_;
        ++torder_;
        require(torder_ <= (1u << 20), errc::inconclusive, "stable automorphism order too large");
      }
    } else {
      certified_ = false;
      int d = std::min(depth, diagram_->known_depth() - 1);
      require(d >= 1, errc::inconclusive, "diagram too shallow for a limit");
      // cumulative product from level 1 to the top known level
      GF2Matrix p = diagram_->mod2_connecting(1);
      size_t stable_run = 0;
      size_t prev_rank = p.rank();
      for (int l = 2; l <= d; ++l) {
        p = diagram_->mod2_connecting(l) * p;
        if (p.rank() == prev_rank)
          ++stable_run;
        else
          stable_run = 0;
        prev_rank = p.rank();
      }
      require(stable_run >= 1, errc::inconclusive,
              "no rank stabilization within the given depth");
      top_level_ = d + 1;
      basis_ = p.column_space_basis();
    }
  }

  bool certified() const { return certified_; }
  size_t dim() const { return basis_.size(); }

  /// Class of a GF(2) vertex vector living at the given level.
  Mod2Class class_of(std::vector<uint8_t> x, int level) const {
    if (certified_) {
      size_t t = j0_ + ((torder_ - (size_t)((level + (long)j0_) % (long)torder_)) % torder_);
      for (size_t i = 0; i < t; ++i) x = C_.apply(x);
      auto co = gf2_coordinates(basis_, x);
      require(co.has_value(), errc::inconclusive, "vector outside the stable space");
      return Mod2Class(*co);
    }
    for (int l = level; l < top_level_; ++l) x = diagram_->mod2_connecting(l).apply(x);
    auto co = gf2_coordinates(basis_, x);
    require(co.has_value(), errc::inconclusive, "vector outside the tracked image");
    return Mod2Class(*co);
  }

 private:
  std::shared_ptr<const BratteliDiagram> diagram_;
  bool certified_ = false;
  GF2Matrix C_, T_;
  size_t j0_ = 0, torder_ = 1;
  int top_level_ = 1;
  std::vector<std::vector<uint8_t>> basis_;
};

/// Signature of an AF element: the limit class of its parity vector.
inline Mod2Class af_signature(const AFGroupElement& g, const Mod2Limit& lim) {
  return lim.class_of(g.parity(), g.level());
}

/// Membership in the commutator subgroup: the limit class of the parity
/// vanishes exactly on commutators.
inline bool is_commutator_member(const AFGroupElement& g, const Mod2Limit& lim) {
  return af_signature(g, lim).is_zero();
}

}  // namespace tfg
