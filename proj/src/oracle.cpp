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

#include "lrp/oracle.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "lrp/factor.hpp"

namespace lrp {

namespace {

using Chain = std::vector<HomogeneousFactor<Zp>>;

void q_chains(std::size_t n, std::size_t total, std::size_t low, std::vector<std::size_t>& cur,
              std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == n) {
        if (total == 0) out.push_back(cur);
        return;
    }
    const std::size_t left = n - cur.size();
    for (std::size_t q = low; q * left <= total; ++q) {
        cur.push_back(q);
        q_chains(n, total - q, q, cur, out);
        cur.pop_back();
    }
}

void gamma_chains(const FieldSpec& f, std::size_t n, std::size_t total, const Poly<Zp>& prev,
                  std::vector<Poly<Zp>>& cur, std::vector<std::vector<Poly<Zp>>>& out, std::uint64_t guard) {
    if (cur.size() == n) {
        if (total == 0) out.push_back(cur);
        return;
    }
    const std::size_t left = n - cur.size();
    const std::size_t base = *prev.degree();
    for (std::size_t e = 0; (base + e) * left <= total; ++e) {
        for (const auto& h : MonicPolys(f, e)) {
            const Poly<Zp> next = prev * h;
            cur.push_back(next);
            gamma_chains(f, n, total - base - e, next, cur, out, guard);
            cur.pop_back();
            if (out.size() > guard) throw InputError("structure enumeration exceeds the guard");
        }
    }
}

void check_prime(const FieldSpec& f) {
    if (!f.is_finite()) throw InputError("the oracle works over prime fields only");
}

template <class Fn>
void parallel_for(std::uint64_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1) {
        for (std::uint64_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            for (std::uint64_t k = w; k < count; k += jobs) fn(k);
        });
}

struct RankOneSpace {
    std::uint64_t vec_count;   // p^n
    std::uint64_t term_count;  // 2·p^{3n}
};

Matrix<Zp> column(const FieldSpec& f, std::size_t n, std::uint64_t k) {
    Matrix<Zp> v(f, n, 1);
    for (std::size_t i = 0; i < n; ++i, k /= f.characteristic())
        v(i, 0) = Zp(static_cast<std::uint32_t>(k % f.characteristic()), f.characteristic());
    return v;
}

Pencil<Zp> rank_one_term(const FieldSpec& f, std::size_t n, const RankOneSpace& sp, std::uint64_t t) {
    const bool row_form = t >= sp.term_count / 2;
    t %= sp.term_count / 2;
    const Matrix<Zp> u = column(f, n, t % sp.vec_count);
    t /= sp.vec_count;
    const Matrix<Zp> w0 = column(f, n, t % sp.vec_count);
    const Matrix<Zp> w1 = column(f, n, t / sp.vec_count);
    if (!row_form) return Pencil<Zp>(u * w0.transpose(), u * w1.transpose());
    return Pencil<Zp>(w0 * u.transpose(), w1 * u.transpose());
}

// Index of the first successful candidate for each (structure id, exact rank).
struct ReachTable {
    std::vector<std::vector<std::optional<std::uint64_t>>> first;
};

ReachTable reach_from(const PencilTable& t, std::uint64_t a) {
    ReachTable out;
    out.first.assign(t.structures().size(), std::vector<std::optional<std::uint64_t>>(t.n() + 1));
    for (std::uint64_t k = 0; k < t.size(); ++k) {
        const std::int32_t sid = t.structure_id(t.add(a, k));
        if (sid < 0) continue;
        auto& slot = out.first[static_cast<std::size_t>(sid)][t.rank(k)];
        if (!slot) slot = k;
    }
    return out;
}

std::optional<std::uint64_t> first_within(const ReachTable& reach, std::size_t sid, std::size_t r) {
    std::optional<std::uint64_t> best;
    const auto& row = reach.first[sid];
    for (std::size_t k = 0; k <= r && k < row.size(); ++k)
        if (row[k] && (!best || *row[k] < *best)) best = row[k];
    return best;
}

std::uint64_t full_space(const FieldSpec& f, std::size_t n) { return saturating_pow(f.characteristic(), 2 * n * n); }

std::uint64_t factored_space(const FieldSpec& f, std::size_t n, std::size_t r) {
    const std::uint64_t terms = saturating_pow(f.characteristic(), 3 * n);
    const std::uint64_t t = terms > UINT64_MAX / 2 ? UINT64_MAX : 2 * terms;
    return saturating_pow(t, r);
}

}  // namespace

std::vector<WeierstrassStructure<Zp>> enumerate_structures(const FieldSpec& f, std::size_t n,
                                                           const OracleOptions& opt) {
    check_prime(f);
    std::vector<WeierstrassStructure<Zp>> out;
    if (n == 0) {
        out.emplace_back(f, Chain{});
        return out;
    }
    for (std::size_t qt = 0; qt <= n; ++qt) {
        std::vector<std::vector<std::size_t>> qs;
        std::vector<std::size_t> qcur;
        q_chains(n, qt, 0, qcur, qs);
        std::vector<std::vector<Poly<Zp>>> gs;
        std::vector<Poly<Zp>> gcur;
        gamma_chains(f, n, n - qt, Poly<Zp>::one(f), gcur, gs, opt.structure_guard);
        if (out.size() + qs.size() * gs.size() > opt.structure_guard)
            throw InputError("structure enumeration exceeds the guard");
        for (const auto& q : qs)
            for (const auto& g : gs) {
                Chain e;
                for (std::size_t i = 0; i < n; ++i) e.push_back({g[i], q[i]});
                out.emplace_back(f, std::move(e));
            }
    }
    return out;
}

std::vector<std::uint32_t> structure_key(const WeierstrassStructure<Zp>& s) {
    std::vector<std::uint32_t> key;
    for (const auto& e : s.entries()) {
        key.push_back(static_cast<std::uint32_t>(e.q));
        key.push_back(static_cast<std::uint32_t>(*e.gamma.degree()));
        for (std::size_t i = 0; i <= *e.gamma.degree(); ++i) key.push_back(e.gamma.coeff(i).value());
    }
    return key;
}

const PencilTable& PencilTable::get(const FieldSpec& f, std::size_t n, const OracleOptions& opt) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::size_t>, std::unique_ptr<PencilTable>> cache;
    check_prime(f);
    std::lock_guard lock(mu);
    auto& slot = cache[{f.characteristic(), n}];
    if (!slot) slot.reset(new PencilTable(f, n, opt));
    return *slot;
}

PencilTable::PencilTable(const FieldSpec& f, std::size_t n, const OracleOptions& opt)
    : field_(f), n_(n), count_(full_space(f, n)), digits_(2 * n * n) {
    if (count_ > opt.guard) throw InputError("pencil space exceeds the oracle guard");
    structures_ = enumerate_structures(f, n, opt);
    for (std::size_t i = 0; i < structures_.size(); ++i)
        ids_.emplace(structure_key(structures_[i]), static_cast<std::int32_t>(i));
    place_.resize(digits_);
    for (std::size_t d = 0; d < digits_; ++d) place_[d] = saturating_pow(f.characteristic(), d);
    sid_.assign(count_, -1);
    rank_.assign(count_, 0);
    parallel_for(count_, opt.jobs, [&](std::uint64_t k) {
        const Pencil<Zp> a = decode(k);
        rank_[k] = static_cast<std::uint8_t>(normal_rank(a));
        if (rank_[k] < n_) return;
        const auto s = try_compute_structure(a);
        if (!s) return;
        const auto it = ids_.find(structure_key(*s));
        if (it == ids_.end()) throw InvariantViolation("computed structure is missing from the enumeration");
        sid_[k] = it->second;
    });
}

Pencil<Zp> PencilTable::decode(std::uint64_t index) const {
    const std::uint32_t p = field_.characteristic();
    Pencil<Zp> a = Pencil<Zp>::zero(field_, n_);
    for (Matrix<Zp>* m : {&a.A0, &a.A1})
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j, index /= p) (*m)(i, j) = Zp(static_cast<std::uint32_t>(index % p), p);
    return a;
}

std::uint64_t PencilTable::encode(const Pencil<Zp>& a) const {
    if (!(a.field() == field_) || a.n() != n_) throw InputError("pencil does not match the table");
    std::uint64_t k = 0;
    std::size_t d = 0;
    for (const Matrix<Zp>* m : {&a.A0, &a.A1})
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) k += (*m)(i, j).value() * place_[d++];
    return k;
}

std::uint64_t PencilTable::add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t p = field_.characteristic();
    if (p == 2) return a ^ b;
    std::uint64_t out = 0;
    for (std::size_t d = 0; d < digits_; ++d, a /= p, b /= p) out += ((a % p + b % p) % p) * place_[d];
    return out;
}

std::optional<std::int32_t> PencilTable::id_of(const WeierstrassStructure<Zp>& s) const {
    const auto it = ids_.find(structure_key(s));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<Pencil<Zp>> exhaustive_exists(const Pencil<Zp>& a, const WeierstrassStructure<Zp>& sb, std::size_t r,
                                            const OracleOptions& opt) {
    const FieldSpec& f = a.field();
    check_prime(f);
    if (!(sb.field() == f) || sb.n() != a.n()) throw InputError("target structure does not match the pencil");
    const std::size_t n = a.n();
    r = std::min(r, n);
    const std::uint64_t full = full_space(f, n);
    const std::uint64_t factored = factored_space(f, n, r);
    if (factored < full && factored <= opt.guard) {
        const RankOneSpace sp{saturating_pow(f.characteristic(), n), 2 * saturating_pow(f.characteristic(), 3 * n)};
        auto hit = first_hit<Pencil<Zp>>(factored, opt.jobs, [&](std::uint64_t k) -> std::optional<Pencil<Zp>> {
            Pencil<Zp> p = Pencil<Zp>::zero(f, n);
            for (std::size_t j = 0; j < r; ++j, k /= sp.term_count) p = add(p, rank_one_term(f, n, sp, k % sp.term_count));
            if (normal_rank(p) > r) return std::nullopt;
            const auto s = try_compute_structure(add(a, p));
            if (!s || !(*s == sb)) return std::nullopt;
            return p;
        });
        if (hit) return std::move(hit->value);
        return std::nullopt;
    }
    if (full > opt.guard) throw InputError("perturbation space exceeds the oracle guard");
    const PencilTable& t = PencilTable::get(f, n, opt);
    const auto target = t.id_of(sb);
    if (!target) throw InvariantViolation("target structure is missing from the enumeration");
    const std::uint64_t base = t.encode(a);
    for (std::uint64_t k = 0; k < t.size(); ++k)
        if (t.rank(k) <= r && t.structure_id(t.add(base, k)) == *target) return t.decode(k);
    return std::nullopt;
}

std::vector<Poly<Zp>> reachable_determinants(const Pencil<Zp>& a, std::size_t r, const OracleOptions& opt) {
    const FieldSpec& f = a.field();
    check_prime(f);
    const std::size_t n = a.n();
    r = std::min(r, n);
    const std::uint64_t factored = factored_space(f, n, r);
    if (factored < full_space(f, n) && factored <= opt.guard) {
        const RankOneSpace sp{saturating_pow(f.characteristic(), n), 2 * saturating_pow(f.characteristic(), 3 * n)};
        std::set<Poly<Zp>> dets;
        for (std::uint64_t k = 0; k < factored; ++k) {
            Pencil<Zp> p = Pencil<Zp>::zero(f, n);
            std::uint64_t rest = k;
            for (std::size_t j = 0; j < r; ++j, rest /= sp.term_count)
                p = add(p, rank_one_term(f, n, sp, rest % sp.term_count));
            const Poly<Zp> d = pencil_det(add(a, p));
            if (!d.is_zero()) dets.insert(d.monic());
        }
        return {dets.begin(), dets.end()};
    }
    const PencilTable& t = PencilTable::get(f, n, opt);
    const std::uint64_t base = t.encode(a);
    std::vector<bool> seen(t.structures().size(), false);
    for (std::uint64_t k = 0; k < t.size(); ++k) {
        if (t.rank(k) > r) continue;
        const std::int32_t sid = t.structure_id(t.add(base, k));
        if (sid >= 0) seen[static_cast<std::size_t>(sid)] = true;
    }
    std::set<Poly<Zp>> dets;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) dets.insert(finite_product(t.structures()[i]));
    return {dets.begin(), dets.end()};
}

SweepReport theorem_sweep(const FieldSpec& f, std::size_t n, std::size_t r, const OracleOptions& opt) {
    check_prime(f);
    const PencilTable& t = PencilTable::get(f, n, opt);
    SweepReport rep;
    rep.field = f;
    rep.n = n;
    rep.r = r;
    rep.structures = t.structures();
    const std::size_t m = rep.structures.size();
    const std::size_t rr = std::min(r, n);

    std::vector<std::vector<SweepCase>> rows(m);
    parallel_for(m, opt.jobs, [&](std::uint64_t i) {
        const auto& sa = rep.structures[i];
        const Pencil<Zp> a = weierstrass_canonical(sa);
        const ReachTable reach = reach_from(t, t.encode(a));
        for (std::size_t j = 0; j < m; ++j) {
            const auto& sb = rep.structures[j];
            SweepCase c;
            c.source = i;
            c.target = j;
            c.predicted = check_interlacing(sa, sb, r);
            if (c.predicted) c.route = sa == sb ? Route<Zp>::equal() : sufficiency_hypothesis(sa, sb);
            if (const auto k = first_within(reach, j, rr)) {
                c.found = true;
                c.witness = t.decode(*k);
                Certificate<Zp> cert{*c.witness, r, sb, Route<Zp>::search(), 0};
                c.witness_verified = verify_certificate(a, cert);
                const Poly<Zp> d = pencil_det(add(a, *c.witness)).monic();
                c.cascade = check_weyr_form(sa, sb, r) && geometric_bound(sa, sb, r) && check_placement(sa, d, r);
            }
            rows[i].push_back(std::move(c));
        }
    });
    for (auto& row : rows)
        for (auto& c : row) {
            if (c.found && !c.predicted) ++rep.necessity_violations;
            else if (c.predicted && c.route && !c.found) ++rep.sufficiency_violations;
            else ++rep.agreements;
            if (c.predicted && !c.route) ++(c.found ? rep.open_found : rep.open_not_found);
            if (c.found && !c.cascade) ++rep.cascade_violations;
            if (c.found && !c.witness_verified) ++rep.unverified_witnesses;
            rep.cases.push_back(std::move(c));
        }
    return rep;
}

}  // namespace lrp
