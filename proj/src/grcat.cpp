#include "braidbench/grcat.hpp"

#include <algorithm>
#include <map>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidbench {

GrObject::GrObject(unsigned n_, std::vector<unsigned> degs_)
    : n(n_), degs(std::move(degs_)) {
  if (n == 0) throw grcat_error("GrObject: modulus must be positive");
  for (unsigned& g : degs) g %= n;
}

GrObject GrObject::unit(unsigned n) { return GrObject(n, {0}); }

GrObject GrObject::simple(unsigned n, unsigned g) { return GrObject(n, {g}); }

GrObject GrObject::from_dims(unsigned n, const std::vector<unsigned>& dims) {
  if (dims.size() != n) throw grcat_error("GrObject: dims size mismatch");
  std::vector<unsigned> degs;
  for (unsigned g = 0; g < n; ++g)
    for (unsigned k = 0; k < dims[g]; ++k) degs.push_back(g);
  return GrObject(n, std::move(degs));
}

std::vector<unsigned> GrObject::dims() const {
  std::vector<unsigned> d(n, 0);
  for (unsigned g : degs) ++d[g];
  return d;
}

GrObject tensor_obj(const GrObject& x, const GrObject& y) {
  if (x.n != y.n) throw grcat_error("tensor_obj: modulus mismatch");
  std::vector<unsigned> degs;
  degs.reserve(static_cast<size_t>(x.total()) * y.total());
  for (unsigned g : x.degs)
    for (unsigned h : y.degs) degs.push_back((g + h) % x.n);
  return GrObject(x.n, std::move(degs));
}

GrObject dual_obj(const GrObject& x) {
  std::vector<unsigned> degs;
  degs.reserve(x.degs.size());
  for (unsigned g : x.degs) degs.push_back((x.n - g) % x.n);
  return GrObject(x.n, std::move(degs));
}

GrMorphism::GrMorphism(GrObject src, GrObject dst)
    : src_(std::move(src)), dst_(std::move(dst)), rows_(dst_.total()) {
  if (src_.n != dst_.n) throw grcat_error("GrMorphism: modulus mismatch");
}

GrMorphism GrMorphism::identity(const GrObject& x) {
  GrMorphism f(x, x);
  for (unsigned i = 0; i < x.total(); ++i)
    f.rows_[i].emplace_back(i, Cyc::one(x.n));
  return f;
}

GrMorphism GrMorphism::zero(const GrObject& src, const GrObject& dst) {
  return GrMorphism(src, dst);
}

void GrMorphism::set(unsigned row, unsigned col, const Cyc& value) {
  if (row >= rows_.size() || col >= src_.total())
    throw grcat_error("GrMorphism::set: index out of range");
  auto& r = rows_[row];
  auto it = std::lower_bound(
      r.begin(), r.end(), col,
      [](const auto& e, unsigned c) { return e.first < c; });
  if (it != r.end() && it->first == col) {
    if (value.is_zero())
      r.erase(it);
    else
      it->second = value;
  } else if (!value.is_zero()) {
    r.insert(it, {col, value});
  }
}

void GrMorphism::add_to(unsigned row, unsigned col, const Cyc& value) {
  if (value.is_zero()) return;
  if (row >= rows_.size() || col >= src_.total())
    throw grcat_error("GrMorphism::add_to: index out of range");
  auto& r = rows_[row];
  auto it = std::lower_bound(
      r.begin(), r.end(), col,
      [](const auto& e, unsigned c) { return e.first < c; });
  if (it != r.end() && it->first == col) {
    it->second = it->second + value;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, {col, value});
  }
}

Cyc GrMorphism::get(unsigned row, unsigned col) const {
  const auto& r = rows_.at(row);
  auto it = std::lower_bound(
      r.begin(), r.end(), col,
      [](const auto& e, unsigned c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return Cyc::zero(src_.n);
}

unsigned GrMorphism::nnz() const {
  unsigned t = 0;
  for (const auto& r : rows_) t += static_cast<unsigned>(r.size());
  return t;
}

bool GrMorphism::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

bool GrMorphism::check_graded() const {
  for (unsigned i = 0; i < rows_.size(); ++i) {
    unsigned gi = dst_.degree_of(i);
    for (const auto& [j, v] : rows_[i])
      if (src_.degree_of(j) != gi) return false;
  }
  return true;
}

GrMorphism GrMorphism::operator+(const GrMorphism& o) const {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw grcat_error("GrMorphism: shape mismatch in sum");
  GrMorphism r = *this;
  for (unsigned i = 0; i < rows_.size(); ++i)
    for (const auto& [j, v] : o.rows_[i]) r.add_to(i, j, v);
  return r;
}

GrMorphism GrMorphism::operator-(const GrMorphism& o) const {
  return *this + o.scaled(Cyc::from_rat(src_.n, Rat(-1)));
}

GrMorphism GrMorphism::scaled(const Cyc& c) const {
  GrMorphism r(src_, dst_);
  if (c.is_zero()) return r;
  for (unsigned i = 0; i < rows_.size(); ++i) {
    r.rows_[i].reserve(rows_[i].size());
    for (const auto& [j, v] : rows_[i]) {
      Cyc w = v * c;
      if (!w.is_zero()) r.rows_[i].emplace_back(j, w);
    }
  }
  return r;
}

bool operator==(const GrMorphism& a, const GrMorphism& b) {
  return a.src_ == b.src_ && a.dst_ == b.dst_ && a.rows_ == b.rows_;
}

std::optional<std::pair<unsigned, unsigned>> GrMorphism::first_diff(
    const GrMorphism& a, const GrMorphism& b) {
  if (a.src_ != b.src_ || a.dst_ != b.dst_) return std::make_pair(0u, 0u);
  for (unsigned i = 0; i < a.rows_.size(); ++i) {
    auto ia = a.rows_[i].begin(), ib = b.rows_[i].begin();
    while (ia != a.rows_[i].end() || ib != b.rows_[i].end()) {
      unsigned ca = ia == a.rows_[i].end() ? ~0u : ia->first;
      unsigned cb = ib == b.rows_[i].end() ? ~0u : ib->first;
      if (ca < cb) return std::make_pair(i, ca);
      if (cb < ca) return std::make_pair(i, cb);
      if (ia->second != ib->second) return std::make_pair(i, ca);
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

namespace {

GrMorphism::Row compose_row(const GrMorphism::Row& grow,
                            const std::vector<GrMorphism::Row>& frows) {
  std::map<unsigned, Cyc> acc;
  for (const auto& [j, gv] : grow) {
    for (const auto& [k, fv] : frows[j]) {
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, gv * fv);
      else
        it->second = it->second + gv * fv;
    }
  }
  GrMorphism::Row out;
  out.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.emplace_back(k, std::move(v));
  return out;
}

}  // namespace

GrMorphism compose_serial(const GrMorphism& g, const GrMorphism& f) {
  if (g.src_ != f.dst_) throw grcat_error("compose: domain mismatch");
  GrMorphism r(f.src_, g.dst_);
  for (unsigned i = 0; i < g.rows_.size(); ++i)
    r.rows_[i] = compose_row(g.rows_[i], f.rows_);
  return r;
}

GrMorphism compose_parallel(const GrMorphism& g, const GrMorphism& f) {
  if (g.src_ != f.dst_) throw grcat_error("compose: domain mismatch");
  GrMorphism r(f.src_, g.dst_);
  const long rows = static_cast<long>(g.rows_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (long i = 0; i < rows; ++i)
    r.rows_[static_cast<size_t>(i)] =
        compose_row(g.rows_[static_cast<size_t>(i)], f.rows_);
  return r;
}

GrMorphism compose(const GrMorphism& g, const GrMorphism& f) {
#ifdef _OPENMP
  if (g.dst().total() >= 64) return compose_parallel(g, f);
#endif
  return compose_serial(g, f);
}

GrMorphism compose(const GrMorphism& a, const GrMorphism& b,
                   const GrMorphism& c) {
  return compose(a, compose(b, c));
}

GrMorphism compose(const GrMorphism& a, const GrMorphism& b,
                   const GrMorphism& c, const GrMorphism& d) {
  return compose(a, compose(b, compose(c, d)));
}

GrMorphism tensor_mor(const GrMorphism& f, const GrMorphism& g) {
  GrObject src = tensor_obj(f.src_, g.src_);
  GrObject dst = tensor_obj(f.dst_, g.dst_);
  const unsigned gs = g.src_.total();
  const unsigned gd = g.dst_.total();
  GrMorphism r(src, dst);
  for (unsigned i1 = 0; i1 < f.rows_.size(); ++i1)
    for (unsigned i2 = 0; i2 < g.rows_.size(); ++i2) {
      auto& row = r.rows_[static_cast<size_t>(i1) * gd + i2];
      for (const auto& [j1, v1] : f.rows_[i1])
        for (const auto& [j2, v2] : g.rows_[i2]) {
          Cyc v = v1 * v2;
          if (!v.is_zero())
            row.emplace_back(static_cast<size_t>(j1) * gs + j2, v);
        }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  return r;
}

GrMorphism braiding(const GrObject& x, const GrObject& y) {
  if (x.n != y.n) throw grcat_error("braiding: modulus mismatch");
  const unsigned n = x.n;
  GrMorphism r(tensor_obj(x, y), tensor_obj(y, x));
  for (unsigned i = 0; i < x.total(); ++i) {
    long gi = x.degree_of(i);
    for (unsigned j = 0; j < y.total(); ++j) {
      long gj = y.degree_of(j);
      r.set(static_cast<unsigned>(j * x.total() + i),
            static_cast<unsigned>(i * y.total() + j),
            Cyc::root_pow(n, gi * gj));
    }
  }
  return r;
}

GrMorphism braiding_inv(const GrObject& x, const GrObject& y) {
  if (x.n != y.n) throw grcat_error("braiding_inv: modulus mismatch");
  const unsigned n = x.n;
  GrMorphism r(tensor_obj(y, x), tensor_obj(x, y));
  for (unsigned i = 0; i < x.total(); ++i) {
    long gi = x.degree_of(i);
    for (unsigned j = 0; j < y.total(); ++j) {
      long gj = y.degree_of(j);
      r.set(static_cast<unsigned>(i * y.total() + j),
            static_cast<unsigned>(j * x.total() + i),
            Cyc::root_pow(n, -gi * gj));
    }
  }
  return r;
}

GrMorphism ev(const GrObject& x) {
  GrObject dx = dual_obj(x);
  GrMorphism r(tensor_obj(dx, x), GrObject::unit(x.n));
  for (unsigned i = 0; i < x.total(); ++i)
    r.add_to(0, i * x.total() + i, Cyc::one(x.n));
  return r;
}

GrMorphism coev(const GrObject& x) {
  GrObject dx = dual_obj(x);
  GrMorphism r(GrObject::unit(x.n), tensor_obj(x, dx));
  for (unsigned i = 0; i < x.total(); ++i)
    r.add_to(i * x.total() + i, 0, Cyc::one(x.n));
  return r;
}

GrMorphism rev(const GrObject& x) {
  GrObject dx = dual_obj(x);
  GrMorphism r(tensor_obj(x, dx), GrObject::unit(x.n));
  for (unsigned i = 0; i < x.total(); ++i)
    r.add_to(0, i * x.total() + i, Cyc::one(x.n));
  return r;
}

GrMorphism rcoev(const GrObject& x) {
  GrObject dx = dual_obj(x);
  GrMorphism r(GrObject::unit(x.n), tensor_obj(dx, x));
  for (unsigned i = 0; i < x.total(); ++i)
    r.add_to(i * x.total() + i, 0, Cyc::one(x.n));
  return r;
}

GrMorphism dual_mor(const GrMorphism& f) {
  GrMorphism r(dual_obj(f.dst()), dual_obj(f.src()));
  for (unsigned i = 0; i < f.rows().size(); ++i)
    for (const auto& [j, v] : f.rows()[i]) r.set(j, i, v);
  return r;
}

GrMorphism perm_morphism(const GrObject& src, const GrObject& dst,
                         const std::vector<unsigned>& perm) {
  if (perm.size() != src.total())
    throw grcat_error("perm_morphism: size mismatch");
  GrMorphism r(src, dst);
  for (unsigned i = 0; i < perm.size(); ++i)
    r.set(perm[i], i, Cyc::one(src.n));
  return r;
}

GrMorphism random_homogeneous(const GrObject& src, const GrObject& dst,
                              uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-3, 3);
  GrMorphism r(src, dst);
  for (unsigned i = 0; i < dst.total(); ++i) {
    unsigned g = dst.degree_of(i);
    for (unsigned j = 0; j < src.total(); ++j) {
      if (src.degree_of(j) != g) continue;
      int v = val(rng);
      if (v != 0) r.set(i, j, Cyc::from_rat(src.n, Rat(v)));
    }
  }
  return r;
}

}  // namespace braidbench
