/** @file verify.hpp
 *  @brief Per-n consistency harness behind the `verify` command.
 *
 *  For each n in the requested range the harness checks, where the caps
 *  allow: equality of the cover-based and theorem-based arrow relations
 *  with the definitional brute force, the 2n-4 count of one-generated
 *  1x1 subcontexts, the double-arrow bijection between object types
 *  A/B/C and attribute types I/II/III, type segregation (doubles connect
 *  D only with IV, single downs end in IV, single ups start in D) and
 *  the two forbidden pairings (B with II, C with III, any arrow kind).
 */

#ifndef DOMLAT_VERIFY_HPP
#define DOMLAT_VERIFY_HPP

#include <string>
#include <vector>

namespace domlat {

struct VerifyOptions {
    int bf_cap = 25;      // largest n for the definitional brute force
    int lattice_cap = 15; // unused by verify itself, recorded for symmetry
    int threads = 0;      // 0: DOMLAT_THREADS or hardware concurrency
};

struct VerifyResult {
    int n = 0;
    bool pass = false;
    std::string line;
};

VerifyResult verify_single(int n, const VerifyOptions& options);

/// Runs the per-n jobs in parallel (bounded by options.threads) and
/// returns the results ordered by n.
std::vector<VerifyResult> verify_range(int lo, int hi, const VerifyOptions& options);

} // namespace domlat

#endif
