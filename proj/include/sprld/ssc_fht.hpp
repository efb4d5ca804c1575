#pragma once

#include <cstdint>

#include "sprld/cost_model.hpp"
#include "sprld/gf2_perm.hpp"
#include "sprld/rm_code.hpp"
#include "sprld/sp_rld.hpp"

namespace sprld {

// Single-path simplified SC decode with FHT at first-order nodes and SPC
// handling at single parity-check nodes. Same tree decomposition as the list
// decoder, no permutations, no list.
DecodeResult ssc_fht_decode(const LlrVec& alpha, const RmCode& code, CostLedger& ledger);

// P independent SSC-FHT decodes over random codeword permutations sampled
// from the full symmetry group (index 0 = identity); the candidate with the
// smallest accumulated path metric wins.
DecodeResult aut_ssc_fht_decode(const LlrVec& alpha_channel, const RmCode& code, int P,
                                std::uint64_t seed, CostLedger& ledger);

}  // namespace sprld
