#pragma once

#include <memory>

#include "rrp/amplitude.hpp"
#include "rrp/sector.hpp"
#include "rrp/skeleton.hpp"

namespace rrp {

/*
 * Tree data phi^t: per-tree linear functionals of sector measures used to
 * rebuild rough paths. The three defining conditions are
 *   (a) level 1 reproduces increments,
 *   (b) multiplicativity over the forest product,
 *   (c) invariance under topology-preserving relabelings.
 * (b) holds by construction here (forests are always evaluated as products
 * over component trees); (a) and (c) are property-tested per
 * implementation.
 */
class TreeData {
 public:
  explicit TreeData(const PathModel& path) : path_(&path) {}
  virtual ~TreeData() = default;

  // value on one tree piece whose i-th vertex carries frequency freq[i]
  virtual cplx tree_value(const LabeledForest& piece, const std::vector<int>& freq,
                          double t) const = 0;

  const PathModel& path() const { return *path_; }

 private:
  const PathModel* path_;
};

// phi^t of a labeled forest on one atom: product over component trees,
// slots read by original vertex label.
cplx phi_forest_atom(const TreeData& data, const LabeledForest& forest,
                     const std::vector<int>& freq_by_label, double t);

// Skeleton integrals as tree data (the canonical choice for smooth paths).
class SkeletonData : public TreeData {
 public:
  using TreeData::TreeData;
  cplx tree_value(const LabeledForest& piece, const std::vector<int>& freq,
                  double t) const override;
};

// Arbitrary hash-derived measure functionals: level 1 is forced by (a),
// trees with >= 2 vertices get deterministic pseudo-random values that
// depend only on the decorated topology, so (c) holds.
class MockData : public TreeData {
 public:
  MockData(const PathModel& path, unsigned long long salt)
      : TreeData(path), salt_(salt) {}
  cplx tree_value(const LabeledForest& piece, const std::vector<int>& freq,
                  double t) const override;

 private:
  unsigned long long salt_;
};

// BPHZ-subtracted skeleton functionals: the per-vertex spectral weights
// |xi|^{1/2-alpha} of the associated uncontracted half-diagram are run
// through the forest formula and evaluated on the atom frequencies. Level
// 1 stays the plain skeleton (first-order integrals are not regularized).
class RenormalizedData : public TreeData {
 public:
  RenormalizedData(const PathModel& path, double alpha)
      : TreeData(path), alpha_(alpha) {}
  cplx tree_value(const LabeledForest& piece, const std::vector<int>& freq,
                  double t) const override;

 private:
  double alpha_;
};

std::unique_ptr<TreeData> make_tree_data(const std::string& name, const PathModel& path,
                                         double alpha);

}  // namespace rrp
