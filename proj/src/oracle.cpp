#include "amalgam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace amalgam {

void Residual::note(const std::string& cls, double value, const std::string& label) {
  auto [it, inserted] = per_class.emplace(cls, value);
  if (!inserted) it->second = std::max(it->second, value);
  if (worst_label.empty() || value > worst) {
    worst = value;
    worst_label = cls + ":" + label;
  }
}

void Residual::merge(const Residual& other) {
  for (const auto& [cls, value] : other.per_class) {
    auto [it, inserted] = per_class.emplace(cls, value);
    if (!inserted) it->second = std::max(it->second, value);
  }
  if (other.worst > worst) {
    worst = other.worst;
    worst_label = other.worst_label;
  }
}

const CMatrix& FactorImages::unit(int row, int col) const {
  const auto it = units.find({row, col});
  if (it == units.end()) {
    throw UnresolvableWord("matrix unit e_{" + std::to_string(row) + "," + std::to_string(col) +
                           "} is not defined in this factor");
  }
  return it->second;
}

namespace {

std::string unit_label(int i, int j) {
  return "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string pair_label(int i, int j, int l, int m) {
  return unit_label(i, j) + unit_label(l, m);
}

// Matrix-unit relations over an arbitrary key set closed under products and
// adjoints.
Residual check_unit_relations(const FactorImages& f, int target_size,
                              const std::string& prefix = {}) {
  Residual r;
  const CMatrix zero(target_size);
  for (const auto& [ab, img_ab] : f.units) {
    const auto& [i, j] = ab;
    r.note(prefix + "adjoint", max_abs_diff(img_ab.adjoint(), f.unit(j, i)), unit_label(i, j));
    for (const auto& [cd, img_cd] : f.units) {
      const auto& [l, m] = cd;
      const CMatrix product = img_ab * img_cd;
      const CMatrix& expected = (j == l) ? f.unit(i, m) : zero;
      r.note(prefix + "mult", max_abs_diff(product, expected), pair_label(i, j, l, m));
    }
  }
  return r;
}

CMatrix sum_diagonal_units(const FactorImages& f, const std::vector<int>& indices, int target_size) {
  CMatrix sum(target_size);
  for (int i : indices) sum = sum + f.unit(i, i);
  return sum;
}

}  // namespace

Residual check_star_rep(const std::map<UnitKey, CMatrix>& images, int n) {
  if (images.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("check_star_rep needs the full n x n unit system");
  }
  int size = -1;
  for (const auto& [key, img] : images) {
    if (size < 0) size = img.size();
    if (img.size() != size) throw std::invalid_argument("matrix unit images differ in size");
  }
  FactorImages f{images};
  return check_unit_relations(f, size);
}

Residual validate_rep_pair(const RepPair& p) {
  Residual r;
  for (int f = 0; f < 2; ++f) {
    Residual rf = check_unit_relations(p.factors[f], p.target_size);
    Residual renamed;
    for (const auto& [cls, value] : rf.per_class) {
      renamed.note("factor" + std::to_string(f) + "-" + cls, value, "");
    }
    if (rf.worst >= renamed.worst) {
      renamed.worst = rf.worst;
      renamed.worst_label = "factor" + std::to_string(f) + "-" + rf.worst_label;
    }
    r.merge(renamed);
  }
  for (std::size_t c = 0; c < p.amalgam_columns.size(); ++c) {
    const auto& [left, right] = p.amalgam_columns[c];
    const CMatrix a = sum_diagonal_units(p.factors[0], left, p.target_size);
    const CMatrix b = sum_diagonal_units(p.factors[1], right, p.target_size);
    r.note("agreement", max_abs_diff(a, b), "column" + std::to_string(c + 1));
    if (c < p.shared_diagonal.size()) {
      r.note("agreement", max_abs_diff(a, p.shared_diagonal[c]), "column" + std::to_string(c + 1) + "-cache");
    }
  }
  return r;
}

namespace {

std::vector<UnitKey> corner_factor0_keys(int k) {
  std::vector<UnitKey> keys;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) keys.push_back({i, j});
  }
  keys.push_back({k + 1, k + 1});
  return keys;
}

std::vector<UnitKey> corner_factor1_keys(int k) {
  std::vector<UnitKey> keys;
  for (int i = 1; i <= k - 1; ++i) keys.push_back({i, i});
  keys.push_back({k, k});
  keys.push_back({k, k + 1});
  keys.push_back({k + 1, k});
  keys.push_back({k + 1, k + 1});
  return keys;
}

}  // namespace

RepPair corner_rep_pair_with_twists(int k, int m, const std::vector<CMatrix>& w1_blocks,
                                    const std::vector<CMatrix>& w2_blocks) {
  if (k < 2 || m < 1) throw std::invalid_argument("corner pair needs k >= 2 and m >= 1");
  if (w1_blocks.size() != static_cast<std::size_t>(k + 1) ||
      w2_blocks.size() != static_cast<std::size_t>(k + 1)) {
    throw std::invalid_argument("one twist block per diagonal eigenspace");
  }
  const CMatrix w1 = block_diagonal(w1_blocks);
  const CMatrix w2 = block_diagonal(w2_blocks);

  RepPair p;
  p.target_size = m * (k + 1);
  for (const UnitKey& key : corner_factor0_keys(k)) {
    p.factors[0].units[key] = conjugate(w1, amplify(CMatrix::unit(k + 1, key.first, key.second), m));
  }
  for (const UnitKey& key : corner_factor1_keys(k)) {
    p.factors[1].units[key] = conjugate(w2, amplify(CMatrix::unit(k + 1, key.first, key.second), m));
  }
  for (int i = 1; i <= k + 1; ++i) {
    p.shared_diagonal.push_back(conjugate(w1, amplify(CMatrix::unit(k + 1, i, i), m)));
    p.amalgam_columns.push_back({{i}, {i}});
  }
  return p;
}

RepPair random_corner_rep_pair(int k, int m, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<CMatrix> w1, w2;
  for (int i = 0; i <= k; ++i) w1.push_back(haar_unitary(m, rng));
  for (int i = 0; i <= k; ++i) w2.push_back(haar_unitary(m, rng));
  return corner_rep_pair_with_twists(k, m, w1, w2);
}

RepPair corner_rep_pair_agreement_broken(int k, int m, std::uint64_t seed) {
  RepPair p = random_corner_rep_pair(k, m, seed);
  CMatrix swap = CMatrix::identity(k + 1);
  swap.at(1, 1) = 0.0;
  swap.at(k + 1, k + 1) = 0.0;
  swap.at(1, k + 1) = 1.0;
  swap.at(k + 1, 1) = 1.0;
  const CMatrix perm = amplify(swap, m);
  for (auto& [key, img] : p.factors[1].units) img = conjugate(perm, img);
  return p;
}

std::map<UnitKey, CMatrix> build_corner_product_rep(const RepPair& p, int k) {
  std::map<UnitKey, CMatrix> pi;
  const FactorImages& f0 = p.factors[0];
  const FactorImages& f1 = p.factors[1];
  for (int i = 1; i <= k + 1; ++i) {
    for (int j = 1; j <= k + 1; ++j) {
      if (i <= k && j <= k) {
        pi[{i, j}] = f0.unit(i, j);
      } else if (i == k + 1 && j == k + 1) {
        pi[{i, j}] = f1.unit(k + 1, k + 1);
      } else if (j == k + 1) {
        pi[{i, j}] = f0.unit(i, k) * f1.unit(k, k + 1);
      } else {
        pi[{i, j}] = f1.unit(k + 1, k) * f0.unit(k, j);
      }
    }
  }
  return pi;
}

Residual check_corner_product(int k, int m, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  Residual r;
  for (int t = 0; t < trials; ++t) {
    const RepPair p = random_corner_rep_pair(k, m, RandomStream::derive(seed, t));
    r.merge(validate_rep_pair(p));
    r.merge(check_star_rep(build_corner_product_rep(p, k), k + 1));
  }
  return r;
}

namespace {

void require_unit_modulus(Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-9) {
    throw std::invalid_argument("the evaluation point must lie on the unit circle");
  }
}

}  // namespace

std::map<UnitKey, CMatrix> m2_rep_offdiag_twist(Complex z) {
  require_unit_modulus(z);
  std::map<UnitKey, CMatrix> pi;
  pi[{1, 1}] = CMatrix::unit(2, 1, 1);
  pi[{2, 2}] = CMatrix::unit(2, 2, 2);
  pi[{1, 2}] = CMatrix::unit(2, 1, 2).scaled(z);
  pi[{2, 1}] = CMatrix::unit(2, 2, 1).scaled(std::conj(z));
  return pi;
}

std::map<UnitKey, CMatrix> m2_rep_hadamard_twist(Complex z) {
  require_unit_modulus(z);
  const Complex zbar = std::conj(z);
  const auto image = [&](Complex a, Complex b, Complex c, Complex d) {
    CMatrix out(2);
    out.at(1, 1) = (a + d + b * z + c * zbar) / 2.0;
    out.at(1, 2) = (a - d - b * z + c * zbar) / 2.0;
    out.at(2, 1) = (a - d + b * z - c * zbar) / 2.0;
    out.at(2, 2) = (a + d - b * z - c * zbar) / 2.0;
    return out;
  };
  std::map<UnitKey, CMatrix> pi;
  pi[{1, 1}] = image(1, 0, 0, 0);
  pi[{1, 2}] = image(0, 1, 0, 0);
  pi[{2, 1}] = image(0, 0, 1, 0);
  pi[{2, 2}] = image(0, 0, 0, 1);
  return pi;
}

CMatrix m2_hadamard_e11() { return m2_rep_hadamard_twist(1.0).at({1, 1}); }

Residual check_m2_pair_identities(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  Residual r;
  RandomStream rng(seed);
  const CMatrix id = CMatrix::identity(2);

  for (int s = 0; s < samples; ++s) {
    const Complex z1 = rng.unit_phase();
    const Complex z2 = rng.unit_phase();
    const auto pa = m2_rep_offdiag_twist(z1);
    const auto pb = m2_rep_hadamard_twist(z2);

    r.merge(check_star_rep(pa, 2));
    r.merge(check_star_rep(pb, 2));

    r.note("unit", max_abs_diff(pa.at({1, 1}) + pa.at({2, 2}), id), "twist");
    r.note("unit", max_abs_diff(pb.at({1, 1}) + pb.at({2, 2}), id), "hadamard");

    // Scalars land on scalars, identically in both representations.
    const Complex a{rng.gaussian(), rng.gaussian()};
    const CMatrix scalar = id.scaled(a);
    r.note("agreement", max_abs_diff((pa.at({1, 1}) + pa.at({2, 2})).scaled(a), scalar), "twist-scalar");
    r.note("agreement", max_abs_diff((pb.at({1, 1}) + pb.at({2, 2})).scaled(a), scalar), "hadamard-scalar");

    CMatrix target1(2);
    target1.at(1, 1) = z1;
    const CMatrix lhs1 = pa.at({1, 2}) * (pb.at({1, 1}) - pb.at({2, 2}));
    r.note("identity", max_abs_diff(lhs1, target1), "corner-z1");

    CMatrix target2(2);
    target2.at(1, 1) = z2;
    const CMatrix lhs2 = pa.at({1, 1}) * pb.at({1, 2}).scaled(2.0) * pa.at({1, 1});
    r.note("identity", max_abs_diff(lhs2, target2), "corner-z2");
  }
  return r;
}

namespace {

// 1-based diagonal indices of column c on the given row.
std::vector<int> column_indices(const BlockRow& row, int c) {
  int offset = 0;
  for (int i = 0; i < c; ++i) offset += row.blocks[i];
  std::vector<int> out;
  for (int t = 1; t <= row.blocks[c]; ++t) out.push_back(offset + t);
  return out;
}

struct ColumnLayout {
  int col = 0;       // 0-based column
  int position = 0;  // 1-based position inside the block
};

ColumnLayout locate(const BlockRow& row, int index) {
  int offset = 0;
  for (int c = 0; c < static_cast<int>(row.blocks.size()); ++c) {
    if (index <= offset + row.blocks[c]) return {c, index - offset};
    offset += row.blocks[c];
  }
  throw std::invalid_argument("diagonal index out of range");
}

}  // namespace

bool diagram_has_nonzero_rep_pair(const AmalgamationDiagram& d) {
  const BlockRow& top = d.rows[0];
  const BlockRow& bottom = d.rows[1];
  const int g = std::gcd(top.blocks[0], bottom.blocks[0]);
  const int p = bottom.blocks[0] / g;  // r1 ~ p
  const int q = top.blocks[0] / g;     // r2 ~ q
  for (int c = 0; c < d.dimension(); ++c) {
    if (top.blocks[c] * p != bottom.blocks[c] * q) return false;
  }
  return true;
}

RepPair random_diagram_rep_pair(const AmalgamationDiagram& d, int mult, std::uint64_t seed) {
  if (d.rows.size() != 2 || !unitality_profile(d).all_unital()) {
    throw std::invalid_argument("representation pairs are built for unital two-row diagrams");
  }
  if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");

  const BlockRow& top = d.rows[0];
  const BlockRow& bottom = d.rows[1];
  const int n = d.dimension();

  RepPair p;
  for (int c = 0; c < n; ++c) {
    p.amalgam_columns.push_back({column_indices(top, c), column_indices(bottom, c)});
  }

  if (!diagram_has_nonzero_rep_pair(d)) {
    // The zero pair is the only finite-dimensional representation pair.
    p.target_size = 1;
    p.degenerate = true;
    const CMatrix zero(1);
    for (int i = 1; i <= top.ambient; ++i) {
      for (int j = 1; j <= top.ambient; ++j) p.factors[0].units[{i, j}] = zero;
    }
    for (int i = 1; i <= bottom.ambient; ++i) {
      for (int j = 1; j <= bottom.ambient; ++j) p.factors[1].units[{i, j}] = zero;
    }
    p.shared_diagonal.assign(n, zero);
    return p;
  }

  const int g = std::gcd(top.blocks[0], bottom.blocks[0]);
  const int r1 = (bottom.blocks[0] / g) * mult;
  const int r2 = (top.blocks[0] / g) * mult;
  const int target = top.ambient * r1;
  p.target_size = target;

  std::vector<int> column_offset{0};  // start of each column subspace
  for (int c = 0; c < n; ++c) column_offset.push_back(column_offset.back() + top.blocks[c] * r1);

  const auto base_image = [&](const BlockRow& row, int copies, int s, int t) {
    const ColumnLayout ls = locate(row, s);
    const ColumnLayout lt = locate(row, t);
    CMatrix img(target);
    for (int copy = 1; copy <= copies; ++copy) {
      img.at(column_offset[ls.col] + (ls.position - 1) * copies + copy,
             column_offset[lt.col] + (lt.position - 1) * copies + copy) = 1.0;
    }
    return img;
  };

  RandomStream rng(seed);
  std::vector<CMatrix> w1_blocks, w2_blocks;
  for (int c = 0; c < n; ++c) {
    const int block = top.blocks[c] * r1;
    w1_blocks.push_back(haar_unitary(block, rng));
    w2_blocks.push_back(haar_unitary(block, rng));
  }
  const CMatrix w1 = block_diagonal(w1_blocks);
  const CMatrix w2 = block_diagonal(w2_blocks);

  for (int i = 1; i <= top.ambient; ++i) {
    for (int j = 1; j <= top.ambient; ++j) {
      p.factors[0].units[{i, j}] = conjugate(w1, base_image(top, r1, i, j));
    }
  }
  for (int i = 1; i <= bottom.ambient; ++i) {
    for (int j = 1; j <= bottom.ambient; ++j) {
      p.factors[1].units[{i, j}] = conjugate(w2, base_image(bottom, r2, i, j));
    }
  }
  for (int c = 0; c < n; ++c) {
    CMatrix proj(target);
    for (int i = column_offset[c] + 1; i <= column_offset[c + 1]; ++i) proj.at(i, i) = 1.0;
    p.shared_diagonal.push_back(conjugate(w1, proj));
  }
  return p;
}

Residual check_ck_relations(const CKAssignment& a, const RepPair& p) {
  Residual r;
  std::map<std::string, CMatrix> edge_images;
  for (const auto& [id, word] : a.edge_word) {
    CMatrix img = CMatrix::identity(p.target_size);
    for (const MatrixUnitRef& u : word.letters) {
      img = img * p.factors[u.factor].unit(u.row, u.col);
    }
    edge_images.emplace(id, std::move(img));
  }
  std::map<std::string, CMatrix> vertex_images;
  for (const auto& [v, proj] : a.vertex_projection) {
    vertex_images.emplace(v, sum_diagonal_units(p.factors[proj.factor], proj.diagonal_indices,
                                                p.target_size));
  }

  for (const GraphEdge& e : a.graph.edges) {
    const CMatrix& s = edge_images.at(e.id);
    r.note("ck-source", max_abs_diff(s.adjoint() * s, vertex_images.at(e.source)), e.id);
  }
  for (const std::string& v : a.graph.vertices) {
    CMatrix sum(p.target_size);
    bool receives = false;
    for (const GraphEdge& e : a.graph.edges) {
      if (e.range != v) continue;
      receives = true;
      const CMatrix& s = edge_images.at(e.id);
      sum = sum + s * s.adjoint();
    }
    if (receives) r.note("ck-range", max_abs_diff(vertex_images.at(v), sum), v);
  }
  return r;
}

}  // namespace amalgam
