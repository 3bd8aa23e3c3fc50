#pragma once
// Verification layer on top of the derived R-matrix: fusion data, channel
// decomposition, crossing, Yang-Baxter sampling, and export plumbing.
#include "e8r/numeric.hpp"
#include <iosfwd>
#include <optional>
#include <random>

namespace e8r {

// one verification line: name, source anchor, status, optional witness
struct Check {
  std::string name, anchor;
  bool ok = false;
  std::string witness;  // empty when ok
  double seconds = 0;
};

struct Report {
  std::vector<Check> checks;
  bool ok() const;
  void add(std::string name, std::string anchor, bool ok, std::string witness = "");
  std::string to_string(bool timings = false) const;
};

// ---- channel decomposition ----------------------------------------------

// multiplicity blocks of a 16-coefficient element, z-dependent
struct ChannelsZ {
  std::array<std::array<RatZ, 2>, 2> triv;
  std::array<std::array<RatZ, 3>, 3> adj;
  std::array<RatZ, 3> scalars;  // omega7, 2omega1, omega2
};
ChannelsZ channels_of(const WRing& wr, const Vec16& c);

// the fusion-channel form of the R-matrix and the residual 3x3/2x2 blocks
Report check_channels(const WRing& wr, const RMatrix& rm);

// ---- fusion data ---------------------------------------------------------

struct FusionData {
  std::array<int, 4> a = {2, 12, 20, 30};
  std::array<QVec16, 4> f, g;        // residue at q^-a, value at q^a
  std::array<long, 4> rank_f, rank_g;
};
FusionData fusion_data(const WRing& wr, const RMatrix& rm);

// degeneration structure: complementary ranks, module dimensions, the
// trivial and W-embeddings with their printed coefficient ratios, and the
// kernel combinations at a = 2
Report check_fusion(const WRing& wr, const RMatrix& rm);

// ---- crossing ------------------------------------------------------------

// the 90-degree rotation against the exact prefactor, the dashed cup and
// cap constants, and the Laurent-polynomial normalization
Report check_crossing(const WRing& wr, const RMatrix& rm);

// the R-matrix re-expanded over the basis with over/under crossings, checked
// against the printed simplified form, symbolically and at numeric points
Report check_crossing_basis(const WRing& wr, const RMatrix& rm);

// ---- unitarity -----------------------------------------------------------

// symbolic product in the 16-dim algebra plus a full numeric spot check
Report check_unitarity(const WRing& wr, const RMatrix& rm, bool numeric_spot);

// ---- Yang-Baxter ---------------------------------------------------------

struct YbeOptions {
  int samples = 5;
  unsigned seed = 7;
  bool trivial_points = true;  // include z=w=1 and w=1/z reductions
};
// exact evaluation at seeded rational (q,z,w) triples; per point, equality
// on probe columns upgrades to the full 249^3 space through a certified
// basis of the commutant of the finite-type action
Report check_ybe(const WRing& wr, const RMatrix& rm, const YbeOptions& opt);

// ---- export --------------------------------------------------------------

void export_coeffs(std::ostream& os, const Vec16& c);
Vec16 parse_coeffs(std::istream& is);

struct SparsityInfo {
  size_t nonzero = 0;
  size_t total = 0;
};
// entry list of the realized operator at numeric q, z: row, column, value
// (x + y kappa0), and the z-degree bookkeeping of the evaluated coefficient
SparsityInfo export_sparse(std::ostream& os, const WRing& wr, const RMatrix& rm,
                           const mpq_class& q0, const mpq_class& z0, bool entries = true);

}  // namespace e8r
