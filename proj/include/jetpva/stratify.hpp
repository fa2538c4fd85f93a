#ifndef JETPVA_STRATIFY_HPP
#define JETPVA_STRATIFY_HPP

#include <string>
#include <vector>

#include "jetpva/vpa.hpp"

namespace jetpva {

// The ((n+1)r)-square matrix of brackets between jet generators:
// entry ((i,p),(j,q)) = x^i_(p)(T^q x^j), laid out row p*r+i, column q*r+j.
struct RankMatrix {
    int level = 0;
    std::vector<VarId> generators; // the base variables, in presentation order
    std::vector<std::vector<Polynomial>> entries;

    size_t size() const { return entries.size(); }
};

// Entries via the closed formula q!/(q-p)! T^(q-p){x^i, x^j}.
RankMatrix build_rank_matrix(const JetRing& jr);

// Rank of the matrix evaluated at a jet point, by fraction-free elimination.
int rank_at_point(const RankMatrix& M, const JetPoint& x);

struct RankInfo {
    int rank = 0; // rank of the evaluated matrix
    int rk = 0;   // rank / (n+1)
};

// rank plus the normalized rank rk = rank/(n+1). The divisibility is forced
// by the block structure; its failure is an internal error.
RankInfo rank_at(const RankMatrix& M, const JetPoint& x);

struct BlockCheckResult {
    bool ok = true;
    int p = -1, q = -1; // offending block when not ok
    std::string reason;
};

// Symbolic check of the block structure, with every entry recomputed through
// apply_mode as an independent path:
//   - blocks below the diagonal vanish,
//   - diagonal block (p,p) equals p! * M0,
//   - block (p,q), q > p, equals q!/(q-p)! * T^(q-p) M0 entrywise.
BlockCheckResult verify_block_structure(const JetRing& jr, const RankMatrix& M);

// Rank stratum {x : rank M0(x) <= j} and its preimage in the jet scheme.
struct Stratum {
    int j = 0;
    Ideal base_ideal; // (j+1)-minors of M0 plus the base relations
    Ideal jet_ideal;  // the same generators at jet level 0, plus jet relations
};

Stratum stratum(const JetRing& jr, int j);

} // namespace jetpva

#endif
