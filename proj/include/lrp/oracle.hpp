/*
   Copyright 2026 The lrpencil Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file oracle.hpp
 * @brief Brute force over small prime fields.
 *
 * A pencil over F_p of size n is indexed by the base-p digits of its
 * coefficients, A0 row-major first and then A1. PencilTable records, for
 * every index, the normal rank and the id of the Weierstrass structure (or
 * −1 for singular pencils). With the table, deciding whether A + P can reach
 * a structure for some P of rank ≤ r is a scan over indices with no linear
 * algebra in the loop.
 */

#ifndef LRP_ORACLE_HPP
#define LRP_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lrp/feasibility.hpp"
#include "lrp/synth.hpp"

namespace lrp {

struct OracleOptions {
    /// Largest pencil space scanned, p^{2n²} for the table or the r-factored count.
    std::uint64_t guard = std::uint64_t{1} << 24;
    /// Largest structure list enumerate_structures() may produce.
    std::uint64_t structure_guard = 100000;
    unsigned jobs = 1;
};

/// Every Weierstrass structure of size n over F_p exactly once, in a fixed
/// order: by total infinite degree, then q chain, then finite chain.
std::vector<WeierstrassStructure<Zp>> enumerate_structures(const FieldSpec& f, std::size_t n,
                                                           const OracleOptions& opt = {});

class PencilTable {
   public:
    /// Shared table for (f, n), built on first use. Throws InputError past the guard.
    static const PencilTable& get(const FieldSpec& f, std::size_t n, const OracleOptions& opt = {});

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return count_; }

    Pencil<Zp> decode(std::uint64_t index) const;
    std::uint64_t encode(const Pencil<Zp>& a) const;
    /// Index of decode(a) + decode(b).
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;

    /// −1 for a singular pencil.
    std::int32_t structure_id(std::uint64_t index) const { return sid_[index]; }
    std::uint8_t rank(std::uint64_t index) const { return rank_[index]; }

    const std::vector<WeierstrassStructure<Zp>>& structures() const noexcept { return structures_; }
    std::optional<std::int32_t> id_of(const WeierstrassStructure<Zp>& s) const;

   private:
    PencilTable(const FieldSpec& f, std::size_t n, const OracleOptions& opt);

    FieldSpec field_;
    std::size_t n_;
    std::uint64_t count_;
    std::size_t digits_;
    std::vector<std::uint64_t> place_;
    std::vector<std::int32_t> sid_;
    std::vector<std::uint8_t> rank_;
    std::vector<WeierstrassStructure<Zp>> structures_;
    std::map<std::vector<std::uint32_t>, std::int32_t> ids_;
};

/// Order-independent key of a structure, usable in ordered containers.
std::vector<std::uint32_t> structure_key(const WeierstrassStructure<Zp>& s);

/// First P of normal rank ≤ r with structure(A + P) = S_B. The full scan goes
/// through all pencils in index order; when (2p^{3n})^r is smaller, sums of
/// r rank-one pencils u(v0 + s·v1)ᵀ or (u0 + s·u1)vᵀ are scanned instead,
/// which also covers every pencil of normal rank ≤ r. Throws InputError when
/// both spaces exceed the guard.
std::optional<Pencil<Zp>> exhaustive_exists(const Pencil<Zp>& a, const WeierstrassStructure<Zp>& sb, std::size_t r,
                                            const OracleOptions& opt = {});

/// Sorted monic determinants det(A + P) over all P of rank ≤ r with A + P
/// regular. Scans the same space as exhaustive_exists().
std::vector<Poly<Zp>> reachable_determinants(const Pencil<Zp>& a, std::size_t r, const OracleOptions& opt = {});

struct SweepCase {
    std::size_t source;  ///< index into SweepReport::structures
    std::size_t target;
    bool predicted = false;
    bool found = false;
    std::optional<Route<Zp>> route;
    /// Present iff found; a perturbation of the canonical source pencil.
    std::optional<Pencil<Zp>> witness;
    bool witness_verified = false;
    /// Weyr form, geometric bound and placement condition for det(A + P); found cases only.
    bool cascade = true;
};

struct SweepReport {
    FieldSpec field = FieldSpec::prime(2);
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<WeierstrassStructure<Zp>> structures;
    std::vector<SweepCase> cases;

    std::size_t agreements = 0;
    /// found ∧ ¬predicted
    std::size_t necessity_violations = 0;
    /// predicted ∧ route ∧ ¬found
    std::size_t sufficiency_violations = 0;
    /// predicted ∧ no route, split by outcome
    std::size_t open_found = 0;
    std::size_t open_not_found = 0;
    std::size_t cascade_violations = 0;
    std::size_t unverified_witnesses = 0;
};

/// All ordered structure pairs, with the canonical pencil of each source.
SweepReport theorem_sweep(const FieldSpec& f, std::size_t n, std::size_t r, const OracleOptions& opt = {});

}  // namespace lrp

#endif
