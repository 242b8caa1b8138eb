#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphfano/exact.hpp"
#include "graphfano/graph.hpp"
#include "graphfano/nested.hpp"

namespace graphfano {

/// Sorted ray indices.
using Cone = std::vector<std::size_t>;

/// A simplicial fan in Z^dim given by its rays and maximal cones.
///
/// Graph fans additionally record, for every ray, the node set I with
/// ray == e_I, in the labels of the original (possibly disconnected) graph.
template <typename Scalar>
struct BasicFan {
  int dim = 0;
  std::vector<Vector<Scalar>> rays;
  std::vector<Cone> max_cones;
  std::vector<NodeSet> generators;

  std::size_t ray_count() const { return rays.size(); }

  std::optional<std::size_t> ray_index(const NodeSet& generator) const {
    auto it = std::find(generators.begin(), generators.end(), generator);
    if (it == generators.end()) return std::nullopt;
    return static_cast<std::size_t>(it - generators.begin());
  }

  /// Rays of a cone as the columns of a dim x |cone| matrix.
  Matrix<Scalar> cone_matrix(const Cone& cone) const {
    Matrix<Scalar> m(dim, static_cast<Eigen::Index>(cone.size()));
    for (std::size_t k = 0; k < cone.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = rays[cone[k]];
    return m;
  }
};

using Fan = BasicFan<std::int64_t>;

/// The fan of a finite simple graph. Connected graphs get rays e_I for
/// I in B(G) without V(G), where e_1..e_n is the standard basis and
/// e_{n+1} = -(e_1 + ... + e_n). Disconnected graphs get the product of
/// their component fans in component order, each component eliminating its
/// own largest label.
Fan build_fan(const Graph& g, Budget* budget = nullptr);
/// Fan of a connected graph from its precomputed building set. Ray k is
/// e_I for the k-th member I of B(G) other than V(G).
Fan build_fan(const BuildingSet& building, Budget* budget = nullptr);

/// Product fan: rays of each factor zero-padded into joint coordinates,
/// maximal cones are unions of one maximal cone per factor.
template <typename Scalar>
BasicFan<Scalar> product_fan(const BasicFan<Scalar>& first, const BasicFan<Scalar>& second) {
  BasicFan<Scalar> out;
  out.dim = first.dim + second.dim;
  for (const auto& r : first.rays) {
    Vector<Scalar> padded = Vector<Scalar>::Zero(out.dim);
    padded.head(first.dim) = r;
    out.rays.push_back(std::move(padded));
  }
  for (const auto& r : second.rays) {
    Vector<Scalar> padded = Vector<Scalar>::Zero(out.dim);
    padded.tail(second.dim) = r;
    out.rays.push_back(std::move(padded));
  }
  if (first.generators.size() == first.rays.size() &&
      second.generators.size() == second.rays.size()) {
    out.generators = first.generators;
    out.generators.insert(out.generators.end(), second.generators.begin(),
                          second.generators.end());
  }
  const std::size_t offset = first.rays.size();
  for (const auto& a : first.max_cones) {
    for (const auto& b : second.max_cones) {
      Cone cone = a;
      for (std::size_t idx : b) cone.push_back(idx + offset);
      out.max_cones.push_back(std::move(cone));
    }
  }
  return out;
}

/// The fan of a point: dimension 0, one empty maximal cone.
template <typename Scalar>
BasicFan<Scalar> point_fan() {
  BasicFan<Scalar> out;
  out.max_cones.push_back({});
  return out;
}

/// Every maximal cone is spanned by dim rays forming a lattice basis.
template <typename Scalar>
bool is_smooth(const BasicFan<Scalar>& fan) {
  for (const auto& cone : fan.max_cones) {
    if (static_cast<int>(cone.size()) != fan.dim) return false;
    const Scalar det = exact_determinant(fan.cone_matrix(cone));
    if (det != Scalar{1} && det != Scalar{-1}) return false;
  }
  return true;
}

/// Every stored ray is nonzero with coprime entries.
template <typename Scalar>
bool rays_primitive(const BasicFan<Scalar>& fan) {
  return std::all_of(fan.rays.begin(), fan.rays.end(),
                     [](const Vector<Scalar>& r) { return content(r) == Scalar{1}; });
}

struct Location {
  std::vector<std::size_t> containing;
  std::vector<std::size_t> interior;
};

/// Maximal cones containing x (all coordinates in the cone's ray basis
/// nonnegative) and those containing it in their interior (all positive).
/// Cones with dependent rays are skipped.
template <typename Scalar, typename Derived>
Location locate(const BasicFan<Scalar>& fan, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != fan.dim) throw std::invalid_argument("point dimension does not match fan");
  Location out;
  const Vector<Scalar> point = x.template cast<Scalar>();
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto basis = fan.cone_matrix(fan.max_cones[c]);
    if (basis.cols() != basis.rows()) continue;
    const auto [numerators, det] = cramer_coordinates(basis, point);
    if (det == Scalar{0}) continue;
    bool nonnegative = true;
    bool positive = true;
    for (Eigen::Index i = 0; i < numerators.size(); ++i) {
      const Scalar signed_num = det > 0 ? numerators(i) : -numerators(i);
      if (signed_num < 0) nonnegative = false;
      if (signed_num <= 0) positive = false;
    }
    if (nonnegative) out.containing.push_back(c);
    if (positive) out.interior.push_back(c);
  }
  return out;
}

/// A codimension-one cone and the maximal cones having it as a facet.
struct FacetIncidence {
  Cone facet;
  std::vector<std::size_t> cones;
};

/// All facets of maximal cones with their incident maximal cones, ordered by
/// facet. In a complete simplicial fan every facet has exactly two.
template <typename Scalar>
std::vector<FacetIncidence> facet_incidence(const BasicFan<Scalar>& fan) {
  std::map<Cone, std::vector<std::size_t>> incidence;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      Cone facet;
      facet.reserve(cone.size() - 1);
      for (std::size_t k = 0; k < cone.size(); ++k) {
        if (k != drop) facet.push_back(cone[k]);
      }
      std::sort(facet.begin(), facet.end());
      incidence[facet].push_back(c);
    }
  }
  std::vector<FacetIncidence> out;
  out.reserve(incidence.size());
  for (auto& [facet, cones] : incidence) out.push_back({facet, std::move(cones)});
  return out;
}

template <typename Scalar>
struct WallRelation {
  /// Coefficients a_i on the wall rays, in the wall's index order.
  Vector<Scalar> coefficients;
  Scalar a_sum{0};
};

/// Solves v + v' + sum_i a_i v_i = 0 where v_i are the wall rays and v, v'
/// the rays of the two adjacent maximal cones outside the wall. Throws
/// ExactSolveError when no integral solution exists.
template <typename Scalar>
WallRelation<Scalar> wall_relation(const BasicFan<Scalar>& fan, const Cone& wall,
                                   std::size_t cone_a, std::size_t cone_b) {
  auto outside = [&](std::size_t c) {
    const auto& cone = fan.max_cones.at(c);
    std::vector<std::size_t> extra;
    for (std::size_t idx : cone) {
      if (!std::binary_search(wall.begin(), wall.end(), idx)) extra.push_back(idx);
    }
    if (extra.size() != 1 || cone.size() != wall.size() + 1) {
      throw std::invalid_argument("wall is not a facet of the given cone");
    }
    return extra.front();
  };
  const std::size_t v = outside(cone_a);
  const std::size_t v_prime = outside(cone_b);
  if (v == v_prime) throw std::invalid_argument("adjacent cones coincide");
  const Vector<Scalar> rhs = -(fan.rays[v] + fan.rays[v_prime]);
  WallRelation<Scalar> out;
  out.coefficients = solve_integral(fan.cone_matrix(wall), rhs);
  out.a_sum = out.coefficients.sum();
  return out;
}

}  // namespace graphfano
