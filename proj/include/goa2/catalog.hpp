#ifndef GOA2_CATALOG_HPP
#define GOA2_CATALOG_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goa2/algebra.hpp"

namespace goa2 {

using Params = std::map<std::string, int>;

struct ParamSpec {
  std::string name;
  int min_value = 1;
  int default_value = 1;
};

/// One registry entry: a nested-subalgebra chain h in k in g, or a Wallach
/// space with its three-summand isotropy decomposition.
struct SpaceDescriptor {
  std::string key;
  std::string g_name, k_name, h_name;  // with parameter placeholders
  std::vector<ParamSpec> params;
  bool constructed = true;  // false: registered but not built at desk scale
  bool variant = false;     // contrast entry, not part of the summary table
  enum class Kind { Triple, Wallach } kind = Kind::Triple;
  std::string note;
};

/// All registry entries in deterministic order.
const std::vector<SpaceDescriptor>& list_catalog();
/// Throws UnknownKeyError.
const SpaceDescriptor& find_descriptor(const std::string& key);
/// Validates overrides against the descriptor and fills defaults.
Params resolve_params(const SpaceDescriptor& desc, const Params& overrides);
/// "n=2" / "r=2,n=1" / "" for display.
std::string format_params(const SpaceDescriptor& desc, const Params& params);
/// Substitutes resolved parameter values into a name placeholder,
/// e.g. "so(2n+1)" with n=2 -> "so(5)".
std::string instantiate_name(const std::string& name, const Params& params);

/// Wallach space: g = h + m1 + m2 + m3 with [m_i, m_i] in h and
/// [m_i, m_j] in m_k for {i,j,k} = {1,2,3}.
struct WallachSpace {
  AlgebraPtr algebra;
  Subspace h;
  std::array<Subspace, 3> m_parts;
  /// Derived triple for summand i (1-based): m_F = m_i, m_B = m_j + m_k.
  std::array<DecomposedSpace, 3> derived_triples;

  /// The same split with slots swapped: m1 = m_j + m_k, m2 = m_i. This is
  /// the two-summand decomposition carrying the deformed metrics.
  DecomposedSpace metric_split(int i) const;

  /// Residuals of the nine bracket relations [h,m_i] in m_i,
  /// [m_i,m_i] in h, [m_i,m_j] in m_k.
  std::vector<InvariantResidual> certify() const;
};

/// Builds a certified chain decomposition for a Triple-kind key. For a
/// Wallach key, returns the default derived triple (i = 3). Throws
/// UnknownKeyError / NotConstructedError / ConstructionError.
DecomposedSpace build_space(const std::string& key, const Params& overrides = {});

/// Builds a Wallach space ("W6" or "W12"; "W24" is not constructed).
WallachSpace build_wallach(const std::string& key);

/// g2 inside so(7): derivation algebra of the octonions acting on the
/// imaginary units, embedded at `offset` of a size x size block.
Subspace build_g2_in_so7(const AlgebraPtr& algebra, int offset = 0);
/// spin(7) inside so(8): span of the gamma_i gamma_j products, embedded at
/// `offset` of the algebra's matrix block.
Subspace build_spin7_in_so8(const AlgebraPtr& algebra, int offset = 0);

}  // namespace goa2

#endif
