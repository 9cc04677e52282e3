#include "braidbench/linalg.hpp"

namespace braidbench {

namespace {

// In-place row echelon form; returns pivot columns.
std::vector<unsigned> echelon(std::vector<std::vector<Cyc>>& a) {
  std::vector<unsigned> pivots;
  if (a.empty()) return pivots;
  const size_t cols = a[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < a.size(); ++col) {
    size_t pr = row;
    while (pr < a.size() && a[pr][col].is_zero()) ++pr;
    if (pr == a.size()) continue;
    std::swap(a[row], a[pr]);
    Cyc inv = a[row][col].inv();
    for (size_t c = col; c < cols; ++c) a[row][c] = a[row][c] * inv;
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Cyc factor = a[r][col];
      for (size_t c = col; c < cols; ++c)
        a[r][c] = a[r][c] - factor * a[row][c];
    }
    pivots.push_back(static_cast<unsigned>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned rank_dense(std::vector<std::vector<Cyc>> a) {
  return static_cast<unsigned>(echelon(a).size());
}

LinSolve solve_dense(std::vector<std::vector<Cyc>> a, std::vector<Cyc> b,
                     unsigned order) {
  LinSolve out;
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();
  for (size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
  if (rows == 0) {
    out.consistent = true;
    out.kernel_dim = 0;
    return out;
  }
  auto pivots = echelon(a);
  bool aug_pivot = !pivots.empty() && pivots.back() == cols;
  if (aug_pivot) {
    out.consistent = false;
    out.rank = static_cast<unsigned>(pivots.size()) - 1;
    out.kernel_dim = static_cast<unsigned>(cols) - out.rank;
    return out;
  }
  out.consistent = true;
  out.rank = static_cast<unsigned>(pivots.size());
  out.kernel_dim = static_cast<unsigned>(cols) - out.rank;
  out.x.assign(cols, Cyc::zero(order));
  for (size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = a[i][cols];
  return out;
}

unsigned rank_of(const GrMorphism& f) {
  std::vector<std::vector<Cyc>> a(
      f.dst().total(), std::vector<Cyc>(f.src().total(), Cyc::zero(f.src().n)));
  for (unsigned i = 0; i < f.rows().size(); ++i)
    for (const auto& [j, v] : f.rows()[i]) a[i][j] = v;
  return rank_dense(std::move(a));
}

std::optional<GrMorphism> try_invert(const GrMorphism& f) {
  const unsigned n = f.src().n;
  if (f.dst().n != n || !f.check_graded()) return std::nullopt;
  if (f.src().dims() != f.dst().dims()) return std::nullopt;
  // Invert one degree class at a time; grading makes the map block diagonal
  // with respect to the degree partition of the two bases.
  std::vector<std::vector<unsigned>> src_idx(n), dst_idx(n);
  for (unsigned j = 0; j < f.src().total(); ++j)
    src_idx[f.src().degree_of(j)].push_back(j);
  for (unsigned i = 0; i < f.dst().total(); ++i)
    dst_idx[f.dst().degree_of(i)].push_back(i);
  GrMorphism inv(f.dst(), f.src());
  for (unsigned g = 0; g < n; ++g) {
    const unsigned d = static_cast<unsigned>(src_idx[g].size());
    if (d == 0) continue;
    std::vector<unsigned> col_of(f.src().total(), 0);
    for (unsigned k = 0; k < d; ++k) col_of[src_idx[g][k]] = k;
    // Gauss-Jordan on the degree-g block augmented with the identity.
    std::vector<std::vector<Cyc>> a(d, std::vector<Cyc>(2 * d, Cyc::zero(n)));
    for (unsigned i = 0; i < d; ++i) {
      a[i][d + i] = Cyc::one(n);
      for (const auto& [j, v] : f.rows()[dst_idx[g][i]]) a[i][col_of[j]] = v;
    }
    auto pivots = echelon(a);
    if (pivots.size() < d || pivots[d - 1] != d - 1) return std::nullopt;
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j)
        if (!a[i][d + j].is_zero())
          inv.set(src_idx[g][i], dst_idx[g][j], a[i][d + j]);
  }
  return inv;
}

GrMorphism invert(const GrMorphism& f) {
  auto inv = try_invert(f);
  if (!inv) throw grcat_error("invert: morphism is not invertible");
  return *inv;
}

HomSpace::HomSpace(GrObject src_, GrObject dst_)
    : src(std::move(src_)), dst(std::move(dst_)) {
  for (unsigned i = 0; i < dst.total(); ++i) {
    unsigned g = dst.degree_of(i);
    for (unsigned j = 0; j < src.total(); ++j)
      if (src.degree_of(j) == g) positions.emplace_back(i, j);
  }
}

GrMorphism HomSpace::from_coords(const std::vector<Cyc>& v) const {
  GrMorphism f(src, dst);
  for (size_t k = 0; k < positions.size(); ++k)
    if (!v[k].is_zero()) f.set(positions[k].first, positions[k].second, v[k]);
  return f;
}

std::vector<Cyc> HomSpace::to_coords(const GrMorphism& f) const {
  std::vector<Cyc> v;
  v.reserve(positions.size());
  for (const auto& [i, j] : positions) v.push_back(f.get(i, j));
  return v;
}

MorphismSolve solve_morphism_equations(
    const std::vector<std::function<GrMorphism(const GrMorphism&)>>& ops,
    const HomSpace& unknowns, const std::vector<GrMorphism>& rhss) {
  const unsigned n = unknowns.src.n;
  const unsigned dim = unknowns.dim();
  std::vector<std::vector<Cyc>> a;
  std::vector<Cyc> b;
  // Columns are images of the hom-space basis under each operator.
  std::vector<std::vector<std::vector<Cyc>>> images(ops.size());
  std::vector<HomSpace> out_spaces;
  out_spaces.reserve(ops.size());
  for (size_t o = 0; o < ops.size(); ++o)
    out_spaces.emplace_back(rhss[o].src(), rhss[o].dst());
  for (unsigned k = 0; k < dim; ++k) {
    std::vector<Cyc> e(dim, Cyc::zero(n));
    e[k] = Cyc::one(n);
    GrMorphism basis = unknowns.from_coords(e);
    for (size_t o = 0; o < ops.size(); ++o)
      images[o].push_back(out_spaces[o].to_coords(ops[o](basis)));
  }
  for (size_t o = 0; o < ops.size(); ++o) {
    std::vector<Cyc> rhs = out_spaces[o].to_coords(rhss[o]);
    for (unsigned r = 0; r < out_spaces[o].dim(); ++r) {
      std::vector<Cyc> row(dim, Cyc::zero(n));
      for (unsigned k = 0; k < dim; ++k) row[k] = images[o][k][r];
      a.push_back(std::move(row));
      b.push_back(rhs[r]);
    }
  }
  LinSolve ls = solve_dense(std::move(a), std::move(b), n);
  MorphismSolve out;
  out.consistent = ls.consistent;
  out.rank = ls.rank;
  out.kernel_dim = ls.kernel_dim;
  if (ls.consistent) out.solution = unknowns.from_coords(ls.x);
  return out;
}

MorphismSolve solve_morphism_equation(
    const std::function<GrMorphism(const GrMorphism&)>& op,
    const HomSpace& unknowns, const GrMorphism& rhs) {
  return solve_morphism_equations({op}, unknowns, {rhs});
}

}  // namespace braidbench
