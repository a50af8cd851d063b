#include "goa2/catalog.hpp"

#include <algorithm>
#include <utility>

#include "goa2/classical.hpp"
#include "goa2/octonion.hpp"

namespace goa2 {

namespace {

const std::complex<double> kI(0.0, 1.0);

std::vector<SpaceDescriptor> build_registry() {
  using Kind = SpaceDescriptor::Kind;
  std::vector<SpaceDescriptor> reg;
  auto add = [&reg](SpaceDescriptor d) { reg.push_back(std::move(d)); };

  add({"T1.1", "so(2n+1)", "so(2n)", "u(n)", {{"n", 2, 2}}});
  add({"T1.2", "so(4n+1)", "so(4n)", "su(2n)", {{"n", 1, 1}}});
  add({"T1.3", "so(8)", "so(7)", "g2", {}});
  add({"T1.4", "so(9)", "so(8)", "spin(7)", {}, true, false, Kind::Triple,
       "spin embedding of so(7) in so(8)"});
  add({"T1.4std", "so(9)", "so(8)", "so(7)", {}, true, true, Kind::Triple,
       "standard block so(7); contrast entry, fails the commuting-pair condition"});
  add({"T1.5", "su(n+1)", "u(n)", "su(n)", {{"n", 2, 2}}});
  add({"T1.6", "su(2n+1)", "u(2n)", "u(1)+sp(n)", {{"n", 2, 2}}});
  add({"T1.7", "su(2n+1)", "u(2n)", "sp(n)", {{"n", 2, 2}}});
  add({"T1.8", "sp(n+1)", "sp(1)+sp(n)", "u(1)+sp(n)", {{"n", 1, 1}}});
  add({"T1.9", "sp(n+1)", "sp(1)+sp(n)", "sp(n)", {{"n", 1, 1}}});
  add({"T2.1", "su(2r+n)", "su(r)+su(r+n)+R", "su(r)+su(r+n)",
       {{"r", 2, 2}, {"n", 1, 1}}, true, false, Kind::Triple,
       "block-diagonal embedding; R is the traceless diagonal direction"});
  add({"T2.2", "so(4r+2)", "u(2r+1)", "su(2r+1)", {{"r", 2, 2}}});
  add({"T2.3", "e6", "so(10)+R", "so(10)", {}, false, false, Kind::Triple,
       "exceptional algebra, not constructed at desk scale"});
  add({"T3.1", "so(9)", "so(7)+so(2)", "g2+so(2)", {}});
  add({"T3.2", "so(10)", "so(8)+so(2)", "spin(7)+so(2)", {}});
  add({"T3.3", "so(11)", "so(8)+so(3)", "spin(7)+so(3)", {}});
  add({"W6", "su(3)", "-", "t^2", {}, true, false, Kind::Wallach});
  add({"W12", "sp(3)", "-", "sp(1)^3", {}, true, false, Kind::Wallach});
  add({"W24", "f4", "-", "spin(8)", {}, false, false, Kind::Wallach,
       "exceptional algebra, not constructed at desk scale"});
  return reg;
}

// Pads a real matrix into the top-left corner of a size x size zero matrix.
Matrix pad(const Matrix& m, int size, int offset = 0) {
  return embed_block(m, size, offset);
}

DecomposedSpace finish_chain(const std::string& label, AlgebraPtr g,
                             const std::vector<Matrix>& h_gens,
                             const std::vector<Matrix>& k_gens) {
  Subspace h = Subspace::from_matrices(g, h_gens);
  Subspace k = Subspace::from_matrices(g, k_gens);
  Subspace m_f = orthogonal_complement(h, k);
  Subspace m_b = orthogonal_complement(k, Subspace::full(g));
  if (m_f.dim() < 1 || m_b.dim() < 1)
    throw ConstructionError(label + ": chain must have dim h < dim k < dim g");
  return DecomposedSpace::build(label, std::move(g), std::move(h), std::move(m_f),
                                std::move(m_b), /*require_triple=*/true);
}

std::vector<Matrix> block_so_gens(int block, int size, int offset) {
  std::vector<Matrix> out;
  for (const Matrix& m : so_generators(block)) out.push_back(pad(m, size, offset));
  return out;
}

// T1.1 / T1.2: so(d) with a block so(d-1), h a realified unitary-type
// subalgebra of the block.
DecomposedSpace build_so_chain(const std::string& label, int d,
                               const std::vector<CMatrix>& h_complex) {
  AlgebraPtr g = make_so(d);
  std::vector<Matrix> k_gens = block_so_gens(d - 1, d, 0);
  std::vector<Matrix> h_gens;
  for (const CMatrix& z : h_complex) h_gens.push_back(pad(realify(z), d, 0));
  return finish_chain(label, std::move(g), h_gens, k_gens);
}

// T1.5 / T1.6 / T1.7 / T2.1: realified su(N) chains described by complex
// generators.
DecomposedSpace build_su_chain(const std::string& label, int N,
                               const std::vector<CMatrix>& h_complex,
                               const std::vector<CMatrix>& k_complex) {
  std::vector<Matrix> g_gens;
  for (const CMatrix& z : su_generators(N)) g_gens.push_back(realify(z));
  AlgebraPtr g = LieAlgebra::from_generators("su(" + std::to_string(N) + ")", g_gens,
                                             trace_product(), N * N - 1);
  std::vector<Matrix> h_gens, k_gens;
  for (const CMatrix& z : h_complex) h_gens.push_back(realify(z));
  for (const CMatrix& z : k_complex) k_gens.push_back(realify(z));
  return finish_chain(label, std::move(g), h_gens, k_gens);
}

CMatrix su_center_direction(int N, int head) {
  // i * diag(1,...,1, -head/(N-head),...) scaled to be traceless:
  // head entries (N-head), remaining entries -head.
  CMatrix z = CMatrix::Zero(N, N);
  for (int i = 0; i < head; ++i) z(i, i) = kI * static_cast<double>(N - head);
  for (int i = head; i < N; ++i) z(i, i) = -kI * static_cast<double>(head);
  return z;
}

std::vector<CMatrix> su_block(int N, int block, int offset) {
  std::vector<CMatrix> out;
  for (const CMatrix& z : su_generators(block)) out.push_back(embed_block(z, N, offset));
  return out;
}

// sp(n) generators sitting in the top-left quaternionic block of sp(N),
// written as complex 2N x 2N matrices.
std::vector<CMatrix> sp_subblock(int N, int positions_from, int positions_to) {
  std::vector<CMatrix> out;
  for (int i = positions_from; i <= positions_to; ++i)
    for (int j = i; j <= positions_to; ++j)
      for (const CMatrix& z : sp_position_generators(N, i, j)) out.push_back(z);
  return out;
}

// sp(n) inside su(2n), embedded as a complex block at `offset` of an
// N x N ambient (used by rows with h = sp(n) in su(2n+1)).
std::vector<CMatrix> sp_in_su_block(int n, int N, int offset) {
  std::vector<CMatrix> out;
  for (const CMatrix& z : sp_generators(n)) out.push_back(embed_block(z, N, offset));
  return out;
}

DecomposedSpace build_sp_chain(const std::string& label, int n, bool with_u1) {
  const int N = n + 1;
  std::vector<Matrix> g_gens;
  for (const CMatrix& z : sp_generators(N)) g_gens.push_back(realify(z));
  AlgebraPtr g = LieAlgebra::from_generators("sp(" + std::to_string(N) + ")", g_gens,
                                             trace_product(), N * (2 * N + 1));

  std::vector<CMatrix> k_c = sp_position_generators(N, 0, 0);
  for (const CMatrix& z : sp_subblock(N, 1, n)) k_c.push_back(z);

  std::vector<CMatrix> h_c;
  if (with_u1) {
    // u(1) inside the sp(1) factor: the i-direction of position (0,0).
    CMatrix a = CMatrix::Zero(2 * N, 2 * N);
    a(0, 0) = kI;
    a(N, N) = -kI;
    h_c.push_back(a);
  }
  for (const CMatrix& z : sp_subblock(N, 1, n)) h_c.push_back(z);

  std::vector<Matrix> h_gens, k_gens;
  for (const CMatrix& z : h_c) h_gens.push_back(realify(z));
  for (const CMatrix& z : k_c) k_gens.push_back(realify(z));
  return finish_chain(label, std::move(g), h_gens, k_gens);
}

// Rows T1.3/T1.4/T1.4std/T3.x: so(d) chains whose h involves g2 or spin(7).
DecomposedSpace build_octonionic_chain(const std::string& key) {
  if (key == "T1.3") {
    AlgebraPtr g = make_so(8);
    // so(7) fixes the octonion unit e0; g2 acts on the imaginary units.
    std::vector<Matrix> k_gens = block_so_gens(7, 8, 1);
    std::vector<Matrix> h_gens;
    for (const Matrix& d : g2_derivation_basis()) h_gens.push_back(pad(d, 8, 1));
    return finish_chain(key, std::move(g), h_gens, k_gens);
  }
  if (key == "T1.4" || key == "T1.4std") {
    AlgebraPtr g = make_so(9);
    std::vector<Matrix> k_gens = block_so_gens(8, 9, 0);
    std::vector<Matrix> h_gens;
    if (key == "T1.4") {
      for (const Matrix& s : spin7_basis()) h_gens.push_back(pad(s, 9, 0));
    } else {
      h_gens = block_so_gens(7, 9, 0);
    }
    return finish_chain(key, std::move(g), h_gens, k_gens);
  }
  if (key == "T3.1") {
    AlgebraPtr g = make_so(9);
    std::vector<Matrix> k_gens = block_so_gens(7, 9, 0);
    for (const Matrix& m : block_so_gens(2, 9, 7)) k_gens.push_back(m);
    std::vector<Matrix> h_gens;
    for (const Matrix& d : g2_derivation_basis()) h_gens.push_back(pad(d, 9, 0));
    for (const Matrix& m : block_so_gens(2, 9, 7)) h_gens.push_back(m);
    return finish_chain(key, std::move(g), h_gens, k_gens);
  }
  const int extra = (key == "T3.2") ? 2 : 3;  // T3.2 / T3.3
  const int d = 8 + extra;
  AlgebraPtr g = make_so(d);
  std::vector<Matrix> k_gens = block_so_gens(8, d, 0);
  for (const Matrix& m : block_so_gens(extra, d, 8)) k_gens.push_back(m);
  std::vector<Matrix> h_gens;
  for (const Matrix& s : spin7_basis()) h_gens.push_back(pad(s, d, 0));
  for (const Matrix& m : block_so_gens(extra, d, 8)) h_gens.push_back(m);
  return finish_chain(key, std::move(g), h_gens, k_gens);
}

DecomposedSpace build_triple(const std::string& key, const Params& p) {
  if (key == "T1.1") {
    const int n = p.at("n");
    return build_so_chain(key, 2 * n + 1, u_generators(n));
  }
  if (key == "T1.2") {
    const int n = p.at("n");
    return build_so_chain(key, 4 * n + 1, su_generators(2 * n));
  }
  if (key == "T1.3" || key == "T1.4" || key == "T1.4std" || key == "T3.1" ||
      key == "T3.2" || key == "T3.3") {
    return build_octonionic_chain(key);
  }
  if (key == "T1.5") {
    const int n = p.at("n");
    const int N = n + 1;
    std::vector<CMatrix> h_c = su_block(N, n, 0);
    std::vector<CMatrix> k_c = h_c;
    k_c.push_back(su_center_direction(N, n));
    return build_su_chain(key, N, h_c, k_c);
  }
  if (key == "T1.6" || key == "T1.7") {
    const int n = p.at("n");
    const int N = 2 * n + 1;
    std::vector<CMatrix> k_c = su_block(N, 2 * n, 0);
    k_c.push_back(su_center_direction(N, 2 * n));
    std::vector<CMatrix> h_c = sp_in_su_block(n, N, 0);
    if (key == "T1.6") h_c.push_back(su_center_direction(N, 2 * n));
    return build_su_chain(key, N, h_c, k_c);
  }
  if (key == "T1.8") return build_sp_chain(key, p.at("n"), /*with_u1=*/true);
  if (key == "T1.9") return build_sp_chain(key, p.at("n"), /*with_u1=*/false);
  if (key == "T2.1") {
    const int r = p.at("r"), n = p.at("n");
    const int N = 2 * r + n;
    std::vector<CMatrix> h_c = su_block(N, r, 0);
    for (const CMatrix& z : su_block(N, r + n, r)) h_c.push_back(z);
    std::vector<CMatrix> k_c = h_c;
    k_c.push_back(su_center_direction(N, r));
    return build_su_chain(key, N, h_c, k_c);
  }
  if (key == "T2.2") {
    const int r = p.at("r");
    const int N = 2 * r + 1;
    AlgebraPtr g = make_so(2 * N);
    std::vector<Matrix> h_gens, k_gens;
    for (const CMatrix& z : su_generators(N)) h_gens.push_back(realify(z));
    k_gens = h_gens;
    k_gens.push_back(realify(kI * CMatrix::Identity(N, N)));
    return finish_chain(key, std::move(g), h_gens, k_gens);
  }
  throw UnknownKeyError("no builder for key '" + key + "'");
}

WallachSpace build_wallach_impl(const std::string& key) {
  WallachSpace w;
  std::array<std::vector<Matrix>, 3> part_gens;
  std::vector<Matrix> h_gens;

  if (key == "W6") {
    std::vector<Matrix> g_gens;
    for (const CMatrix& z : su_generators(3)) g_gens.push_back(realify(z));
    w.algebra = LieAlgebra::from_generators("su(3)", g_gens, trace_product(), 8);
    for (int k = 0; k < 2; ++k) {
      CMatrix z = CMatrix::Zero(3, 3);
      z(k, k) = kI;
      z(k + 1, k + 1) = -kI;
      h_gens.push_back(realify(z));
    }
    // m_i is the off-diagonal position omitting row/column i-1, so that
    // [m_i, m_j] lands in m_k for {i,j,k} = {1,2,3}.
    const std::array<std::pair<int, int>, 3> positions{{{1, 2}, {0, 2}, {0, 1}}};
    for (int i = 0; i < 3; ++i) {
      auto [a, b] = positions[i];
      CMatrix re = CMatrix::Zero(3, 3), im = CMatrix::Zero(3, 3);
      re(a, b) = 1.0;
      re(b, a) = -1.0;
      im(a, b) = kI;
      im(b, a) = kI;
      part_gens[i] = {realify(re), realify(im)};
    }
  } else {  // W12
    std::vector<Matrix> g_gens;
    for (const CMatrix& z : sp_generators(3)) g_gens.push_back(realify(z));
    w.algebra = LieAlgebra::from_generators("sp(3)", g_gens, trace_product(), 21);
    for (int k = 0; k < 3; ++k)
      for (const CMatrix& z : sp_position_generators(3, k, k))
        h_gens.push_back(realify(z));
    const std::array<std::pair<int, int>, 3> positions{{{1, 2}, {0, 2}, {0, 1}}};
    for (int i = 0; i < 3; ++i) {
      auto [a, b] = positions[i];
      for (const CMatrix& z : sp_position_generators(3, a, b))
        part_gens[i].push_back(realify(z));
    }
  }

  w.h = Subspace::from_matrices(w.algebra, h_gens);
  for (int i = 0; i < 3; ++i)
    w.m_parts[i] = Subspace::from_matrices(w.algebra, part_gens[i]);

  for (const InvariantResidual& inv : w.certify())
    if (!inv.pass)
      throw ConstructionError(key + ": invariant '" + inv.name + "' failed (residual " +
                              std::to_string(inv.residual) + ")");

  for (int i = 0; i < 3; ++i) {
    std::vector<Vector> rest;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      for (int c = 0; c < w.m_parts[j].dim(); ++c)
        rest.push_back(w.m_parts[j].basis_vector(c));
    }
    w.derived_triples[i] = DecomposedSpace::build(
        key + "#" + std::to_string(i + 1), w.algebra, w.h, w.m_parts[i],
        Subspace::from_span(w.algebra, rest), /*require_triple=*/true);
  }
  return w;
}

int checked_dim_cap(const AlgebraPtr& g) {
  if (g->matrix_size() > 64)
    throw ContractError("parameters exceed desk scale (matrix size " +
                        std::to_string(g->matrix_size()) + " > 64)");
  return g->dim();
}

}  // namespace

const std::vector<SpaceDescriptor>& list_catalog() {
  static const std::vector<SpaceDescriptor> registry = build_registry();
  return registry;
}

const SpaceDescriptor& find_descriptor(const std::string& key) {
  for (const SpaceDescriptor& d : list_catalog())
    if (d.key == key) return d;
  throw UnknownKeyError("unknown catalog key '" + key + "'");
}

Params resolve_params(const SpaceDescriptor& desc, const Params& overrides) {
  Params out;
  for (const ParamSpec& spec : desc.params) {
    int value = spec.default_value;
    auto it = overrides.find(spec.name);
    if (it != overrides.end()) value = it->second;
    if (value < spec.min_value)
      throw ContractError(desc.key + ": parameter " + spec.name + " = " +
                          std::to_string(value) + " below admissible minimum " +
                          std::to_string(spec.min_value));
    out[spec.name] = value;
  }
  for (const auto& [name, value] : overrides) {
    if (!out.count(name))
      throw ContractError(desc.key + ": unknown parameter '" + name + "'");
  }
  return out;
}

std::string format_params(const SpaceDescriptor& desc, const Params& params) {
  std::string out;
  for (const ParamSpec& spec : desc.params) {
    if (!out.empty()) out += ",";
    out += spec.name + "=" + std::to_string(params.at(spec.name));
  }
  return out.empty() ? "-" : out;
}

DecomposedSpace WallachSpace::metric_split(int i) const {
  if (i < 1 || i > 3) throw ContractError("metric_split: index must be 1..3");
  return derived_triples[i - 1].swapped();
}

std::vector<InvariantResidual> WallachSpace::certify() const {
  std::vector<InvariantResidual> out;
  auto push = [&out](const std::string& name, double residual) {
    out.push_back({name, residual, residual < kTolAlgebra});
  };
  for (int i = 0; i < 3; ++i)
    push("[h,m" + std::to_string(i + 1) + "] in m" + std::to_string(i + 1),
         bracket_residual_off(h, m_parts[i], m_parts[i]));
  for (int i = 0; i < 3; ++i)
    push("[m" + std::to_string(i + 1) + ",m" + std::to_string(i + 1) + "] in h",
         bracket_residual_off(m_parts[i], m_parts[i], h));
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    push("[m" + std::to_string(i + 1) + ",m" + std::to_string(j + 1) + "] in m" +
             std::to_string(k + 1),
         bracket_residual_off(m_parts[i], m_parts[j], m_parts[k]));
  }
  return out;
}

DecomposedSpace build_space(const std::string& key, const Params& overrides) {
  const SpaceDescriptor& desc = find_descriptor(key);
  if (!desc.constructed)
    throw NotConstructedError(key + " is registered but not constructed (" + desc.note + ")");
  const Params p = resolve_params(desc, overrides);
  if (desc.kind == SpaceDescriptor::Kind::Wallach)
    return build_wallach(key).derived_triples[2];
  DecomposedSpace space = build_triple(key, p);
  checked_dim_cap(space.algebra());
  return space;
}

WallachSpace build_wallach(const std::string& key) {
  const SpaceDescriptor& desc = find_descriptor(key);
  if (desc.kind != SpaceDescriptor::Kind::Wallach)
    throw ContractError(key + " is not a Wallach-space key");
  if (!desc.constructed)
    throw NotConstructedError(key + " is registered but not constructed (" + desc.note + ")");
  return build_wallach_impl(key);
}

Subspace build_g2_in_so7(const AlgebraPtr& algebra, int offset) {
  std::vector<Matrix> gens;
  for (const Matrix& d : g2_derivation_basis())
    gens.push_back(embed_block(d, algebra->matrix_size(), offset));
  Subspace s = Subspace::from_matrices(algebra, gens);
  if (s.dim() != 14)
    throw ConstructionError("g2 subspace has dimension " + std::to_string(s.dim()));
  return s;
}

Subspace build_spin7_in_so8(const AlgebraPtr& algebra, int offset) {
  std::vector<Matrix> gens;
  for (const Matrix& m : spin7_basis())
    gens.push_back(embed_block(m, algebra->matrix_size(), offset));
  Subspace s = Subspace::from_matrices(algebra, gens);
  if (s.dim() != 21)
    throw ConstructionError("spin(7) subspace has dimension " + std::to_string(s.dim()));
  return s;
}

}  // namespace goa2
