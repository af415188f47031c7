#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bw/grassmann.hpp"

using namespace bw;

namespace {

/* Example data: the two n = 2 solutions with z = (2,3). */
PluckerVector<Rat> first_solution() {
    PluckerVector<Rat> d;
    d.nu = Partition{2};
    d.set(Partition{}, Rat(6));
    d.set(Partition{1}, Rat(5));
    d.set(Partition{2}, Rat(2));
    return d;
}

PluckerVector<Rat> second_solution() {
    PluckerVector<Rat> d;
    d.nu = Partition{1, 1};
    d.set(Partition{}, Rat(6));
    d.set(Partition{1}, Rat(5));
    d.set(Partition{1, 1}, Rat(2));
    return d;
}

using Sig = std::vector<std::tuple<int, std::vector<int>, std::vector<int>>>;

Sig key_of(const PluckerRelation& r) {
    Sig key;
    for (auto& t : relation_signature(r)) key.emplace_back(t.coeff, t.a.parts(), t.b.parts());
    return key;
}

/* set-theoretic generation of the relations: the de-duplication oracle */
std::set<Sig> setform_signatures(int d, int m) {
    std::set<Sig> sigs;
    auto partition_of = [&](const std::vector<int>& idx) {
        int dd = static_cast<int>(idx.size());
        std::vector<int> parts(dd);
        for (int k = 1; k <= dd; ++k) parts[k - 1] = idx[dd - k] - (dd - k + 1);
        return Partition(std::move(parts));
    };
    std::vector<int> I(d + 1), J(d - 1);
    std::function<void(int, int)> chooseJ = [&](int start, int depth) {
        if (depth == d - 1) {
            PluckerRelation rel;
            for (int si = 0; si < d + 1; ++si) {
                int k = I[si];
                if (std::binary_search(J.begin(), J.end(), k)) continue;
                int sign1 = ((d + 1 - (si + 1)) % 2 == 0) ? 1 : -1;
                std::vector<int> A;
                for (int v : I)
                    if (v != k) A.push_back(v);
                int p = static_cast<int>(std::lower_bound(J.begin(), J.end(), k) - J.begin());
                int sign2 = ((d - 1 - p) % 2 == 0) ? 1 : -1;
                std::vector<int> B = J;
                B.insert(B.begin() + p, k);
                rel.terms.push_back(RelationTerm{sign1 * sign2, partition_of(A), partition_of(B)});
            }
            auto key = key_of(rel);
            if (!key.empty()) sigs.insert(std::move(key));
            return;
        }
        for (int v = start; v <= m - (d - 1 - depth - 1); ++v) {
            J[depth] = v;
            chooseJ(v + 1, depth + 1);
        }
    };
    std::function<void(int, int)> chooseI = [&](int start, int depth) {
        if (depth == d + 1) {
            chooseJ(1, 0);
            return;
        }
        for (int v = start; v <= m - (d + 1 - depth - 1); ++v) {
            I[depth] = v;
            chooseI(v + 1, depth + 1);
        }
    };
    chooseI(1, 0);
    return sigs;
}

Rat random_rat_entry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("plucker_relations: pinned counts and the rank-2 relation") {
    auto r24 = plucker_relations(2, 4, RelationFamily::all);
    REQUIRE(r24.size() == 1);
    const auto& t = r24[0].terms;
    REQUIRE(t.size() == 3);
    CHECK(t[0].coeff == -1);
    CHECK(t[0].a == Partition{});
    CHECK(t[0].b == Partition{2, 2});
    CHECK(t[1].coeff == 1);
    CHECK(t[1].a == Partition{1});
    CHECK(t[1].b == Partition{2, 1});
    CHECK(t[2].coeff == -1);
    CHECK(t[2].a == Partition{1, 1});
    CHECK(t[2].b == Partition{2});

    CHECK(plucker_relations(1, 3, RelationFamily::all).empty());
    CHECK(plucker_relations(1, 6, RelationFamily::all).empty());
    CHECK(plucker_relations(2, 5, RelationFamily::all).size() == 5);
}

TEST_CASE("plucker_relations match the set-theoretic generation") {
    for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
        auto oracle = setform_signatures(d, m);
        std::set<Sig> got;
        for (const auto& r : plucker_relations(d, m, RelationFamily::all)) got.insert(key_of(r));
        CHECK(got == oracle);
    }
}

TEST_CASE("relation families are subsets of the full family") {
    std::set<Sig> allsigs;
    for (const auto& r : plucker_relations(3, 6, RelationFamily::all)) allsigs.insert(key_of(r));
    for (auto fam : {RelationFamily::single_column, RelationFamily::single_row}) {
        auto rels = plucker_relations(3, 6, fam);
        CHECK(!rels.empty());
        for (const auto& r : rels) CHECK(allsigs.count(key_of(r)) == 1);
    }
}

TEST_CASE("degree bookkeeping: every relation is homogeneous quadratic") {
    for (const auto& r : plucker_relations(3, 7, RelationFamily::all)) {
        REQUIRE(!r.terms.empty());
        int deg = r.terms[0].a.size() + r.terms[0].b.size();
        for (const auto& t : r.terms) CHECK(t.a.size() + t.b.size() == deg);
    }
}

TEST_CASE("eval_relations: solutions satisfy, perturbations fail") {
    auto rels = plucker_relations(2, 4, RelationFamily::all);
    CHECK(eval_relations(first_solution(), rels) == Rat(0));

    /* minors of ((1,1,0,0),(0,1,1,1)): a point of the full box, where the
     * relation actually constrains the entries */
    PluckerVector<Rat> full;
    full.nu = Partition{2, 2};
    full.set(Partition{}, Rat(1));
    full.set(Partition{1}, Rat(1));
    full.set(Partition{2}, Rat(1));
    full.set(Partition{1, 1}, Rat(1));
    full.set(Partition{2, 1}, Rat(1));
    full.set(Partition{2, 2}, Rat(0));
    CHECK(eval_relations(full, rels) == Rat(0));

    auto bad = full;
    bad.set(Partition{2, 1}, Rat(2));  // +1 perturbation
    CHECK(eval_relations(bad, rels) != Rat(0));
}

TEST_CASE("relation closure on minors of random matrices") {
    std::mt19937_64 rng(23);
    for (int d = 2; d <= 4; ++d) {
        int m = 2 * d;
        auto rels = plucker_relations(d, m, RelationFamily::all);
        int done = 0;
        while (done < 50) {
            Matrix<Rat> A(d, m);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < m; ++c) A(r, c) = random_rat_entry(rng);
            PluckerVector<Rat> delta;
            delta.nu = Partition(std::vector<int>(d, m - d));  // full box
            bool nonzero = false;
            std::vector<int> I(d);
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == d) {
                    Matrix<Rat> sub(d, d);
                    for (int r = 0; r < d; ++r)
                        for (int c = 0; c < d; ++c) sub(r, c) = A(r, I[c] - 1);
                    Rat v = determinant(sub);
                    if (v != 0) {
                        nonzero = true;
                        std::vector<int> parts(d);
                        for (int k = 1; k <= d; ++k) parts[k - 1] = I[d - k] - (d - k + 1);
                        delta.entries[Partition(std::move(parts))] = v;
                    }
                    return;
                }
                for (int v = start; v <= m - (d - depth - 1); ++v) {
                    I[depth] = v;
                    rec(v + 1, depth + 1);
                }
            };
            rec(1, 0);
            if (!nonzero) continue;
            CHECK(eval_relations(delta, rels) == Rat(0));
            ++done;
        }
    }
}

TEST_CASE("wronskian_from_pluckers: pinned examples") {
    Poly<Rat> expect({Rat(6), Rat(5), Rat(1)});  // (u+2)(u+3)
    CHECK(wronskian_from_pluckers(first_solution()) == expect);
    CHECK(wronskian_from_pluckers(second_solution()) == expect);

    PluckerVector<Rat> empty_cell;
    empty_cell.nu = Partition{};
    empty_cell.set(Partition{}, Rat(1));
    CHECK(wronskian_from_pluckers(empty_cell) == Poly<Rat>::constant(Rat(1)));
}

TEST_CASE("translate_pluckers: identity at zero, group action, wronskian link") {
    auto d = first_solution();
    auto same = translate_pluckers(d, Rat(0));
    CHECK(same.entries == d.entries);

    Rat s = rat(1, 3), t = rat(-2, 5);
    auto one = translate_pluckers(d, Rat(s + t));
    auto two = translate_pluckers(translate_pluckers(d, s), t);
    CHECK(one.entries == two.entries);

    auto w = wronskian_from_pluckers(d);
    for (Rat tt : {rat(1, 2), Rat(2), Rat(-7)})
        CHECK(translate_pluckers(d, tt).at(Partition{}) == w.eval(tt));
}

TEST_CASE("translate_pluckers matches re-minoring the shifted representative") {
    std::vector<PolyVector<Rat>> basis(2);
    basis[0].coeffs = {Rat(1), Rat(0), Rat(0), Rat(0)};
    basis[1].coeffs = {Rat(0), Rat(6), Rat(5), Rat(2)};
    auto delta = pluckers_from_basis(basis, Partition{2});
    CHECK(delta.entries == first_solution().entries);

    Rat t = rat(1, 2);
    /* shift the representative: new_a[i] = sum_j a[j] t^{j-i}/(j-i)! */
    std::vector<PolyVector<Rat>> shifted(2);
    for (int r = 0; r < 2; ++r) {
        shifted[r].coeffs.assign(4, Rat(0));
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j)
                shifted[r].coeffs[i] +=
                    basis[r].coeffs[j] * rat_pow(t, j - i) / factorial_rat(j - i);
    }
    auto moved = pluckers_from_basis(shifted, Partition{2});
    auto expect = translate_pluckers(delta, t);
    CHECK(moved.entries == expect.entries);
}

TEST_CASE("pluckers_from_basis: rejections") {
    std::vector<PolyVector<Rat>> dep(2);
    dep[0].coeffs = {Rat(1), Rat(2)};
    dep[1].coeffs = {Rat(2), Rat(4)};
    CHECK_THROWS(pluckers_from_basis(dep, Partition{1}));

    /* span outside the closed cell: u has a coordinate off the diagram */
    std::vector<PolyVector<Rat>> off(1);
    off[0].coeffs = {Rat(0), Rat(1)};
    CHECK_THROWS(pluckers_from_basis(off, Partition{}));
}

TEST_CASE("echelon_basis: pinned bases") {
    auto d = first_solution();
    auto basis = echelon_basis(d, 2);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].to_poly() == Poly<Rat>::constant(Rat(1)));
    /* u^3/6 + (z1+z2)/4 u^2 + z1z2/2 u with z = (2,3) */
    Poly<Rat> f2({Rat(0), Rat(3), rat(5, 4), rat(1, 6)});
    CHECK(basis[1].to_poly() == f2);

    PluckerVector<Rat> e;
    e.nu = Partition{1};
    e.set(Partition{}, Rat(2));
    e.set(Partition{1}, Rat(1));
    auto b1 = echelon_basis(e, 1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].to_poly() == Poly<Rat>({Rat(2), Rat(1)}));

    CHECK_THROWS(echelon_basis(d, 0));
    auto unnormalized = d;
    unnormalized.set(Partition{2}, Rat(7));
    CHECK_THROWS(echelon_basis(unnormalized, 2));
}

TEST_CASE("echelon basis wronskian reproduces the coordinate wronskian") {
    for (const auto& d : {first_solution(), second_solution()}) {
        auto basis = echelon_basis(d, 2);
        auto w = wronskian_of_polys(basis, true);
        CHECK(w == wronskian_from_pluckers(d));
    }
}

TEST_CASE("minors of the echelon basis round-trip the coordinates exactly") {
    for (const auto& d : {first_solution(), second_solution()}) {
        auto back = pluckers_from_basis(echelon_basis(d, 2), d.nu);
        CHECK(back.nu == d.nu);
        CHECK(back.entries == d.entries);
    }
}

TEST_CASE("beta_eval_poly: the empty shape recovers the wronskian polynomial") {
    for (const auto& d : {first_solution(), second_solution()})
        CHECK(beta_eval_poly(d, Partition{}) == wronskian_from_pluckers(d));
}

TEST_CASE("h_basis: pinned polynomials for both cells") {
    Rat z1(2), z2(3), t = rat(1, 2);
    std::vector<Rat> z{z1, z2};
    Poly<Rat> upt({t, Rat(1)});  // u + t
    Poly<Rat> g0 = Poly<Rat>::constant((z1 - t) * (z2 - t));

    {
        auto d = first_solution();
        auto hb = h_basis(single_row_eval_polys(d, 2), 2, 4, t, z);
        REQUIRE(hb.size() == 2);
        Poly<Rat> expect = g0 * upt + upt * upt * ((z1 + z2 - Rat(2) * t) / Rat(2)) +
                           upt * upt * upt * rat(1, 3);
        CHECK(hb[0].to_poly() == expect);
        CHECK(hb[1].to_poly() == g0);
    }
    {
        auto d = second_solution();
        auto hb = h_basis(single_row_eval_polys(d, 2), 2, 4, t, z);
        Poly<Rat> expect = g0 * upt + upt * upt * ((z1 + z2 - Rat(2) * t) / Rat(2));
        CHECK(hb[0].to_poly() == expect);
        Poly<Rat> d1 = g0 - upt * upt;
        CHECK(hb[1].to_poly() == d1);
    }
    CHECK_THROWS(h_basis(single_row_eval_polys(first_solution(), 2), 2, 4, Rat(2), z));
}

TEST_CASE("echelon and shifted bases span the same space") {
    for (const auto& d : {first_solution(), second_solution()}) {
        auto ech = echelon_basis(d, 2);
        auto hb = h_basis(single_row_eval_polys(d, 2), 2, 4, Rat(-1),
                          std::vector<Rat>{Rat(2), Rat(3)});
        Matrix<Rat> stack(4, 4);
        for (int r = 0; r < 2; ++r)
            for (size_t c = 0; c < ech[r].coeffs.size(); ++c) stack(r, c) = ech[r].coeffs[c];
        for (int r = 0; r < 2; ++r)
            for (size_t c = 0; c < hb[r].coeffs.size(); ++c) stack(2 + r, c) = hb[r].coeffs[c];
        CHECK(rank_exact(stack) == 2);
    }
}

TEST_CASE("dual_pluckers: the two pinned solutions are dual to each other") {
    auto a = dual_pluckers(first_solution());
    CHECK(a.nu == Partition{1, 1});
    CHECK(a.entries == second_solution().entries);
    auto back = dual_pluckers(a);
    CHECK(back.entries == first_solution().entries);
    CHECK(wronskian_from_pluckers(a) == wronskian_from_pluckers(first_solution()));
}

TEST_CASE("duality commutes with translation") {
    Rat t = rat(3, 7);
    auto lhs = dual_pluckers(translate_pluckers(first_solution(), t));
    auto rhs = translate_pluckers(dual_pluckers(first_solution()), t);
    CHECK(lhs.nu == rhs.nu);
    CHECK(lhs.entries == rhs.entries);
}

TEST_CASE("positivity_check: pinned verdicts") {
    auto make = [](Rat z1, Rat z2) {
        PluckerVector<Rat> d;
        d.nu = Partition{2};
        d.set(Partition{}, z1 * z2);
        d.set(Partition{1}, z1 + z2);
        d.set(Partition{2}, Rat(2));
        return d;
    };
    auto both = make(Rat(1), Rat(1));
    CHECK(positivity_check(both, PositivityMode::tnn, 1e-9).ok);
    CHECK(positivity_check(both, PositivityMode::tp_in_cell, 1e-9).ok);

    auto neg = make(Rat(-1), Rat(1));
    auto v1 = positivity_check(neg, PositivityMode::tnn, 1e-9);
    CHECK(!v1.ok);
    REQUIRE(v1.witness.has_value());
    CHECK(*v1.witness == Partition{});

    auto zero = make(Rat(0), Rat(1));
    CHECK(positivity_check(zero, PositivityMode::tnn, 1e-9).ok);
    auto v2 = positivity_check(zero, PositivityMode::tp_in_cell, 1e-9);
    CHECK(!v2.ok);
    REQUIRE(v2.witness.has_value());
    CHECK(*v2.witness == Partition{});
}

TEST_CASE("wronskian_of_polys: basics and rejection") {
    std::vector<PolyVector<Rat>> one_u(2);
    one_u[0].coeffs = {Rat(1)};
    one_u[1].coeffs = {Rat(0), Rat(1)};
    CHECK(wronskian_of_polys(one_u) == Poly<Rat>::constant(Rat(1)));

    std::vector<PolyVector<Rat>> dep(2);
    dep[0].coeffs = {Rat(1), Rat(1)};
    dep[1].coeffs = {Rat(2), Rat(2)};
    CHECK_THROWS(wronskian_of_polys(dep));

    /* float mode uses evaluation-interpolation; compare with exact */
    std::vector<PolyVector<double>> fb(2);
    fb[0].coeffs = {1.0, 0.0, 0.0, 0.0};
    fb[1].coeffs = {0.0, 6.0, 5.0, 2.0};
    auto wf = wronskian_of_polys(fb, true);
    CHECK(std::abs(wf.coeff(0) - 6.0) < 1e-9);
    CHECK(std::abs(wf.coeff(1) - 5.0) < 1e-9);
    CHECK(std::abs(wf.coeff(2) - 1.0) < 1e-9);
}

TEST_CASE("embedding into a larger Grassmannian changes nothing") {
    auto d = first_solution();
    auto e1 = echelon_basis(d, 1);
    auto e2 = echelon_basis(d, 2);
    auto w1 = wronskian_of_polys(e1, true);
    auto w2 = wronskian_of_polys(e2, true);
    CHECK(w1 == w2);
    /* derivative of the rank-2 echelon basis spans the rank-1 one */
    Matrix<Rat> stack(3, 4);
    for (size_t c = 0; c < e1[0].coeffs.size(); ++c) stack(0, c) = e1[0].coeffs[c];
    int row = 1;
    for (const auto& f : e2) {
        Poly<Rat> df = f.to_poly().derivative();
        auto pv = PolyVector<Rat>::from_poly(df);
        for (size_t c = 0; c < pv.coeffs.size(); ++c) stack(row, c) = pv.coeffs[c];
        ++row;
    }
    CHECK(rank_exact(stack) == 1);

    Rat t = rat(2, 3);
    auto tr = translate_pluckers(d, t);
    auto e2t = echelon_basis(tr, 2);
    CHECK(wronskian_of_polys(e2t, true) == wronskian_from_pluckers(tr));
}
