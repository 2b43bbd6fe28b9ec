#include "stralg/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "stralg/errors.hpp"

namespace stralg {

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den.front() == '-') throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw InvariantError("matrix shape mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        if (sgn(other.at(k, j)) != 0) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn(at(i, k)) != 0 && sgn(v[k]) != 0) out[i] += at(i, k) * v[k];
  return out;
}

void RowSpace::reduce(std::vector<Rational>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(row[p]) == 0) continue;
    Rational factor = row[p];
    const auto& basis = rows_[k];
    for (std::size_t j = p; j < width_; ++j)
      if (sgn(basis[j]) != 0) row[j] -= factor * basis[j];
  }
}

bool RowSpace::insert(std::vector<Rational> row) {
  reduce(row);
  auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == row.end()) return false;
  const auto p = static_cast<std::size_t>(it - row.begin());
  Rational inv = 1 / row[p];
  for (std::size_t j = p; j < width_; ++j)
    if (sgn(row[j]) != 0) row[j] *= inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::vector<Rational> row) const {
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const Rational& x) { return sgn(x) == 0; });
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && sgn(m.at(pr, c)) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m.at(i, c)) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m.at(r, j)) != 0) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  RowSpace space(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    space.insert(std::move(row));
  }
  return space.rank();
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& basis,
                                                   const std::vector<Rational>& v) {
  const std::size_t k = basis.size();
  QMatrix aug(v.size(), k + 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = basis[j][i];
    aug.at(i, k) = v[i];
  }
  auto pivots = rref(aug);
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return std::nullopt;
    x[pivots[r]] = aug.at(r, k);
  }
  return x;
}

MatrixModule::MatrixModule(const AlgebraSpec& spec, std::vector<VertexId> grading, std::vector<QMatrix> arrows,
                           std::vector<std::string> labels)
    : spec_(&spec), grading_(std::move(grading)), arrows_(std::move(arrows)), labels_(std::move(labels)) {
  const std::size_t d = grading_.size();
  if (arrows_.size() != spec.arrow_count()) throw InvariantError("one matrix per arrow expected");
  for (auto v : grading_)
    if (v >= spec.vertex_count()) throw InvariantError("grading refers to an unknown vertex");
  for (ArrowId a = 0; a < arrows_.size(); ++a) {
    const QMatrix& m = arrows_[a];
    if (m.rows() != d || m.cols() != d) throw InvariantError("arrow matrix of wrong size");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(m.at(i, j)) != 0 && (grading_[i] != spec.arrow(a).target || grading_[j] != spec.arrow(a).source))
          throw InvariantError("arrow " + spec.arrow(a).name + " leaves its grading block");
  }
  for (const auto& rel : spec.relations())
    if (!path_matrix(rel).is_zero()) throw InvariantError("relation " + format_path(spec, rel) + " does not vanish");
}

std::vector<std::size_t> MatrixModule::basis_at(VertexId u) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grading_.size(); ++i)
    if (grading_[i] == u) out.push_back(i);
  return out;
}

QMatrix MatrixModule::path_matrix(const Path& path) const {
  QMatrix out = arrows_.at(path.at(0));
  for (std::size_t k = 1; k < path.size(); ++k) out = out * arrows_.at(path[k]);
  return out;
}

namespace {

std::vector<QMatrix> zero_arrows(const AlgebraSpec& spec, std::size_t d) {
  return std::vector<QMatrix>(spec.arrow_count(), QMatrix(d, d));
}

void check_same_spec(const MatrixModule& x, const MatrixModule& y) {
  if (&x.spec() != &y.spec()) throw DomainError(ErrorCode::SpecMismatch, "modules over different algebras");
}

}  // namespace

MatrixModule realize_string(const AlgebraSpec& spec, const Word& c) {
  if (!is_string(spec, c)) throw DomainError(ErrorCode::NotAString, format_word(spec, c) + " is not a string");
  const std::size_t d = c.length() + 1;
  std::vector<VertexId> grading(d);
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < d; ++i) {
    grading[i] = vertex_at(spec, c, i);
    labels[i] = "e_" + format_word(spec, subword(spec, c, 0, i));
  }
  auto arrows = zero_arrows(spec, d);
  for (std::size_t k = 0; k < c.length(); ++k) {
    const Letter l = c[k];
    if (l.inverse)
      arrows[l.arrow].at(k + 1, k) = 1;
    else
      arrows[l.arrow].at(k, k + 1) = 1;
  }
  return MatrixModule(spec, std::move(grading), std::move(arrows), std::move(labels));
}

MatrixModule realize_band(const AlgebraSpec& spec, const QuasiBand& qb, const Rational& lambda) {
  if (sgn(lambda) == 0) throw DomainError(ErrorCode::ZeroParameter, "band parameter must be nonzero");
  if (!is_quasi_band(spec, qb))
    throw DomainError(ErrorCode::NotQuasiBand, format_cyclic(spec, qb) + " is not a quasi-band");
  const std::size_t m = qb.period();
  std::vector<VertexId> grading(m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    grading[i] = spec.source(qb.letter(static_cast<std::ptrdiff_t>(i) - 1));
    labels[i] = "e" + std::to_string(i);
  }
  auto arrows = zero_arrows(spec, m);
  auto set = [&](ArrowId a, std::size_t r, std::size_t col, const Rational& value) {
    if (sgn(arrows[a].at(r, col)) != 0) throw InvariantError("band realization hits one entry twice");
    arrows[a].at(r, col) = value;
  };
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const Letter l = qb.letter(static_cast<std::ptrdiff_t>(k));
    if (l.inverse)
      set(l.arrow, k + 1, k, 1);
    else
      set(l.arrow, k, k + 1, 1);
  }
  // e_m = λ^{-1}·ē_0.
  const Letter seam = qb.letter(static_cast<std::ptrdiff_t>(m) - 1);
  if (seam.inverse)
    set(seam.arrow, 0, m - 1, Rational(1 / lambda));
  else
    set(seam.arrow, m - 1, 0, lambda);
  return MatrixModule(spec, std::move(grading), std::move(arrows), std::move(labels));
}

std::size_t dim_hom(const MatrixModule& x, const MatrixModule& y) {
  check_same_spec(x, y);
  const AlgebraSpec& spec = x.spec();
  // Unknowns f[i][j] with i in Y_u, j in X_u.
  std::vector<std::vector<std::size_t>> bx(spec.vertex_count()), by(spec.vertex_count());
  for (VertexId u = 0; u < spec.vertex_count(); ++u) {
    bx[u] = x.basis_at(u);
    by[u] = y.basis_at(u);
  }
  std::vector<std::size_t> var(y.dim() * x.dim(), SIZE_MAX);
  std::size_t nvars = 0;
  for (VertexId u = 0; u < spec.vertex_count(); ++u)
    for (auto i : by[u])
      for (auto j : bx[u]) var[i * x.dim() + j] = nvars++;
  if (nvars == 0) return 0;

  RowSpace space(nvars);
  for (ArrowId a = 0; a < spec.arrow_count(); ++a) {
    const VertexId s = spec.arrow(a).source;
    const VertexId t = spec.arrow(a).target;
    const QMatrix& xa = x.arrow(a);
    const QMatrix& ya = y.arrow(a);
    // (f·X(α) − Y(α)·f)[r][c] = 0 for r in Y_t, c in X_s.
    for (auto r : by[t])
      for (auto c : bx[s]) {
        std::vector<Rational> row(nvars);
        bool any = false;
        for (auto j : bx[t])
          if (sgn(xa.at(j, c)) != 0) {
            row[var[r * x.dim() + j]] += xa.at(j, c);
            any = true;
          }
        for (auto i : by[s])
          if (sgn(ya.at(r, i)) != 0) {
            row[var[i * x.dim() + c]] -= ya.at(r, i);
            any = true;
          }
        if (any) space.insert(std::move(row));
      }
  }
  return nvars - space.rank();
}

MatrixModule direct_sum(const MatrixModule& x, const MatrixModule& y) {
  check_same_spec(x, y);
  const std::size_t d = x.dim() + y.dim();
  std::vector<VertexId> grading = x.grading();
  grading.insert(grading.end(), y.grading().begin(), y.grading().end());
  auto arrows = zero_arrows(x.spec(), d);
  for (ArrowId a = 0; a < x.spec().arrow_count(); ++a) {
    for (std::size_t i = 0; i < x.dim(); ++i)
      for (std::size_t j = 0; j < x.dim(); ++j) arrows[a].at(i, j) = x.arrow(a).at(i, j);
    for (std::size_t i = 0; i < y.dim(); ++i)
      for (std::size_t j = 0; j < y.dim(); ++j) arrows[a].at(x.dim() + i, x.dim() + j) = y.arrow(a).at(i, j);
  }
  std::vector<std::string> labels;
  if (x.labels().size() == x.dim() && y.labels().size() == y.dim()) {
    labels = x.labels();
    labels.insert(labels.end(), y.labels().begin(), y.labels().end());
  }
  return MatrixModule(x.spec(), std::move(grading), std::move(arrows), std::move(labels));
}

namespace {

std::vector<Rational> unit(std::size_t d, std::size_t i) {
  std::vector<Rational> v(d);
  v[i] = 1;
  return v;
}

std::vector<Rational> column(const QMatrix& m, std::size_t c) {
  std::vector<Rational> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, c);
  return v;
}

// Index of the top basis vector e_{w1} in M(w1·w2^{-1}).
std::size_t top_index(const Word& projective) {
  std::size_t k = 0;
  while (k < projective.length() && !projective[k].inverse) ++k;
  return k;
}

}  // namespace

Syzygy syzygy(const MatrixModule& x) {
  const AlgebraSpec& spec = x.spec();
  const std::size_t d = x.dim();

  RowSpace radical(d);
  for (ArrowId a = 0; a < spec.arrow_count(); ++a)
    for (std::size_t c = 0; c < d; ++c) radical.insert(column(x.arrow(a), c));
  std::vector<std::size_t> generators;
  std::vector<std::size_t> top(spec.vertex_count(), 0);
  for (std::size_t i = 0; i < d; ++i)
    if (radical.insert(unit(d, i))) {
      generators.push_back(i);
      ++top[x.vertex_of(i)];
    }

  MatrixModule p0(spec, {}, zero_arrows(spec, 0));
  std::vector<std::size_t> gen_in_p0;
  for (auto g : generators) {
    Word pw = projective_word(spec, x.vertex_of(g));
    gen_in_p0.push_back(p0.dim() + top_index(pw));
    p0 = direct_sum(p0, realize_string(spec, pw));
  }
  const std::size_t n = p0.dim();

  // π: P0 → X, sending each projective top to its chosen lift.
  std::vector<std::optional<std::vector<Rational>>> image(n);
  std::deque<std::size_t> queue;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    image[gen_in_p0[k]] = unit(d, generators[k]);
    queue.push_back(gen_in_p0[k]);
  }
  while (!queue.empty()) {
    const std::size_t j = queue.front();
    queue.pop_front();
    for (ArrowId a = 0; a < spec.arrow_count(); ++a)
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(p0.arrow(a).at(r, j)) != 0 && !image[r]) {
          image[r] = x.arrow(a).apply(*image[j]);
          queue.push_back(r);
        }
  }
  QMatrix pi(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!image[j]) throw InvariantError("projective cover is not generated by its top");
    for (std::size_t i = 0; i < d; ++i) pi.at(i, j) = (*image[j])[i];
  }

  // Kernel of π, vertex by vertex.
  std::vector<std::vector<std::vector<Rational>>> kernel(spec.vertex_count());
  std::vector<VertexId> grading;
  std::vector<std::pair<VertexId, std::size_t>> position;
  for (VertexId u = 0; u < spec.vertex_count(); ++u) {
    auto rows = x.basis_at(u);
    auto cols = p0.basis_at(u);
    QMatrix block(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) block.at(i, j) = pi.at(rows[i], cols[j]);
    for (auto& v : nullspace(block)) {
      std::vector<Rational> full(n);
      for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j];
      kernel[u].push_back(std::move(full));
    }
  }
  std::vector<std::size_t> offset(spec.vertex_count(), 0);
  std::size_t k_dim = 0;
  for (VertexId u = 0; u < spec.vertex_count(); ++u) {
    offset[u] = k_dim;
    k_dim += kernel[u].size();
    grading.insert(grading.end(), kernel[u].size(), u);
  }
  auto arrows = zero_arrows(spec, k_dim);
  for (ArrowId a = 0; a < spec.arrow_count(); ++a) {
    const VertexId s = spec.arrow(a).source;
    const VertexId t = spec.arrow(a).target;
    for (std::size_t j = 0; j < kernel[s].size(); ++j) {
      auto moved = p0.arrow(a).apply(kernel[s][j]);
      auto coords = solve_in_span(kernel[t], moved);
      if (!coords) throw InvariantError("kernel is not a submodule");
      for (std::size_t i = 0; i < coords->size(); ++i) arrows[a].at(offset[t] + i, offset[s] + j) = (*coords)[i];
    }
  }
  MatrixModule omega(spec, std::move(grading), std::move(arrows));
  return {std::move(p0), std::move(omega), std::move(top)};
}

std::size_t dim_ext1(const MatrixModule& x, const MatrixModule& y) {
  check_same_spec(x, y);
  Syzygy syz = syzygy(x);
  // Hom(P_u, Y) ≅ Y_u.
  std::size_t hom_p0 = 0;
  for (VertexId u = 0; u < x.spec().vertex_count(); ++u) hom_p0 += syz.top[u] * y.basis_at(u).size();
  return dim_hom(syz.omega, y) + dim_hom(x, y) - hom_p0;
}

std::size_t rank_sum(const MatrixModule& x) {
  std::size_t r = 0;
  for (ArrowId a = 0; a < x.spec().arrow_count(); ++a) r += rank(x.arrow(a));
  return r;
}

bool is_regular(const MatrixModule& x) { return rank_sum(x) == x.dim(); }

std::size_t orbit_dimension(const MatrixModule& x) { return x.dim() * x.dim() - dim_hom(x, x); }

}  // namespace stralg
