#pragma once

#include <vector>

namespace bielliptic {

// One of the seven bielliptic families, indexed 1..7.
class SurfaceType {
 public:
  explicit SurfaceType(int index);  // throws InvalidSurfaceError outside 1..7
  int index() const { return index_; }
  friend bool operator==(SurfaceType, SurfaceType) = default;

 private:
  int index_;
};

struct SurfaceData {
  int ord_k;     // order of the canonical class
  int lambda;    // g_order / ord_k, the degree A_X.B_X on the canonical cover
  int g_order;
  std::vector<int> multiplicities;  // singular fibres of the fibration over A/G
};

SurfaceData surface_invariants(SurfaceType t);

inline int ord_k(SurfaceType t) { return surface_invariants(t).ord_k; }
inline int lambda(SurfaceType t) { return surface_invariants(t).lambda; }

}  // namespace bielliptic
