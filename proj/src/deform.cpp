#include "defcat/deform.hpp"

namespace defcat {

AssocProvider<Series> deformed_assoc(const FusionCat& cat, const std::vector<Cochain>& alphas,
                                     const CochainSpace& sp3, int order) {
    return [&cat, &alphas, &sp3, order](int a, int b, int c, int d) {
        MatrixS m = promote(cat.F(a, b, c, d), cat.field, order);
        std::vector<int> tup{a, b, c};
        int tid = sp3.tuple_index(tup);
        for (size_t i = 0; i < alphas.size() && static_cast<int>(i) < order; ++i) {
            const MatrixK& blk = alphas[i].blocks[static_cast<size_t>(tid)][static_cast<size_t>(d)];
            for (int r = 0; r < m.rows(); ++r)
                for (int cc2 = 0; cc2 < m.cols(); ++cc2) m.at(r, cc2).coeff(static_cast<int>(i) + 1) += blk.at(r, cc2);
        }
        return m;
    };
}

namespace {

PairBlocks<Series> deformed_ftilde(const MonFunctor& f, const std::vector<Cochain>& ftildes,
                                   const CochainSpace& sp2, int order) {
    return [&f, &ftildes, &sp2, order](int a, int b, int x) {
        MatrixS m = promote(f.Ftilde[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(x)],
                            f.dst->field, order);
        std::vector<int> tup{a, b};
        int tid = sp2.tuple_index(tup);
        for (size_t i = 0; i < ftildes.size() && static_cast<int>(i) < order; ++i) {
            const MatrixK& blk = ftildes[i].blocks[static_cast<size_t>(tid)][static_cast<size_t>(x)];
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m.at(r, c).coeff(static_cast<int>(i) + 1) += blk.at(r, c);
        }
        return m;
    };
}

}  // namespace

DeformReport check_deformation(const DeformationState& s) {
    DeformReport rep;
    int order = s.order;
    if (s.kind == DeformKind::category) {
        const FusionCat& cat = *s.cat;
        MonFunctor idf = identity_functor(cat);
        Bimodule reg = regular_bimodule(idf);
        CochainSpace sp3 = make_space(idf, reg, 3);
        Series model(cat.field, order);
        // verify at every truncation up to the declared order so the first
        // failing order is reported
        for (int m = 1; m <= order; ++m) {
            Series mm(cat.field, m);
            CheckReport r = check_pentagons<Series>(cat, deformed_assoc(cat, s.alphas, sp3, m), mm);
            if (!r.ok) {
                rep.ok = false;
                rep.failed_order = m;
                rep.failure = r.failure;
                return rep;
            }
        }
        (void)model;
        return rep;
    }
    const MonFunctor& f = *s.functor;
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    MonFunctor idc = identity_functor(C), idd = identity_functor(D);
    Bimodule regc = regular_bimodule(idc), regd = regular_bimodule(idd);
    CochainSpace spc3 = make_space(idc, regc, 3);
    CochainSpace spd3 = make_space(idd, regd, 3);
    Bimodule regf = regular_bimodule(f);
    CochainSpace spf2 = make_space(f, regf, 2);
    std::vector<Cochain> no_alphas, no_as;
    const std::vector<Cochain>& alphas = s.kind == DeformKind::functor_purely ? no_alphas : s.alphas;
    const std::vector<Cochain>& as = s.kind == DeformKind::functor_total ? s.as : no_as;
    for (int m = 1; m <= order; ++m) {
        Series mm(C.field, m);
        CheckReport r = check_pentagons<Series>(C, deformed_assoc(C, alphas, spc3, m), mm);
        if (r.ok && s.kind == DeformKind::functor_total)
            r = check_pentagons<Series>(D, deformed_assoc(D, as, spd3, m), mm);
        if (r.ok)
            r = check_functor_hexagons<Series>(f, deformed_assoc(C, alphas, spc3, m),
                                               deformed_assoc(D, as, spd3, m), deformed_ftilde(f, s.ftildes, spf2, m),
                                               mm);
        if (!r.ok) {
            rep.ok = false;
            rep.failed_order = m;
            rep.failure = r.failure;
            return rep;
        }
    }
    return rep;
}

ExtendResult extend_order(const DeformationState& s, const CategoryComplex& cc) {
    if (s.kind != DeformKind::category) throw KindMismatch("extend_order expects a category deformation state");
    const FusionCat& cat = *s.cat;
    DeformReport pre = check_deformation(s);
    if (!pre.ok) throw LowerOrderNotDeformation(pre.failed_order);
    int M = s.order + 1;
    const CochainSpace& sp3 = cc.tower.spaces[3];
    const CochainSpace& sp4 = cc.tower.spaces[4];
    ExtendResult out;
    out.obstruction = obstruction_category(cat, s.alphas, sp3, sp4, M);
    MatrixK d3 = cc.tower.complex.diff(3);
    auto sol = solve_linear(d3, vec(sp4, out.obstruction), cat.field);
    if (!sol.x) {
        out.obstructed = true;
        // class coordinates on the deterministic H^4 representatives
        CohomologyResult h4 = cohomology(cc.tower.complex, 4);
        int ncols = static_cast<int>(h4.representatives.size());
        auto img = rank_kernel_image(d3, cat.field).image;
        MatrixK basis(sp4.total_dim, ncols + static_cast<int>(img.size()), Scalar::zero(cat.field));
        for (int c = 0; c < ncols; ++c)
            for (int r = 0; r < sp4.total_dim; ++r) basis.at(r, c) = h4.representatives[static_cast<size_t>(c)][static_cast<size_t>(r)];
        for (size_t c = 0; c < img.size(); ++c)
            for (int r = 0; r < sp4.total_dim; ++r) basis.at(r, ncols + static_cast<int>(c)) = img[c][static_cast<size_t>(r)];
        auto cls = solve_linear(basis, vec(sp4, out.obstruction), cat.field);
        if (!cls.x) throw Error("obstruction class not expressible (internal)");
        out.h4_class.assign(cls.x->begin(), cls.x->begin() + ncols);
        return out;
    }
    out.next = s;
    out.next.order = M;
    out.next.alphas.push_back(unvec(sp3, *sol.x));
    DeformReport post = check_deformation(out.next);
    if (!post.ok) throw Error("extended state fails the coherence oracle (internal)");
    return out;
}

namespace {

Classification cohomology_of(const GradedComplex& g, int degree) {
    CohomologyResult h = cohomology(g, degree);
    return {degree, h.dimension, h.representatives};
}

}  // namespace

Classification classify_category(const FusionCat& cat, int threads) {
    CategoryComplex cc = build_category_tower(cat, 4, threads);
    return cohomology_of(cc.tower.complex, 3);
}

Classification classify_functor_purely(const MonFunctor& f, int threads) {
    Bimodule reg = regular_bimodule(f);
    BuiltComplex bc = build_tower(f, reg, 3, threads);
    return cohomology_of(bc.complex, 2);
}

Classification classify_fibred(const MonFunctor& f, int threads) {
    CategoryComplex cc = build_category_tower(*f.src, 5, threads);
    Bimodule reg = regular_bimodule(f);
    BuiltComplex bf = build_tower(f, reg, 4, threads);
    std::map<int, MatrixK> mats;
    for (int n = 0; n <= 4; ++n)
        mats.emplace(n, chain_map_F_of(cc.tower.spaces[static_cast<size_t>(n)], bf.spaces[static_cast<size_t>(n)]));
    ComplexMap u(&cc.tower.complex, &bf.complex, mats);
    ConeComplex cn = cone(u);
    return cohomology_of(cn.complex, 3);
}

Classification classify_total(const MonFunctor& f, int threads) {
    CategoryComplex cc = build_category_tower(*f.src, 5, threads);
    CategoryComplex cd = build_category_tower(*f.dst, 5, threads);
    Bimodule reg = regular_bimodule(f);
    BuiltComplex bf = build_tower(f, reg, 4, threads);
    // A = X(C) (+) X(D) with u = ceil(F(-)) - ceil((-)_{F.})
    std::vector<int> adims;
    std::vector<MatrixK> adiffs;
    Scalar model = Scalar::zero(f.dst->field);
    for (int n = 0; n <= 5; ++n) adims.push_back(cc.tower.complex.dim(n) + cd.tower.complex.dim(n));
    for (int n = 0; n < 5; ++n) {
        MatrixK d = MatrixK::zero(adims[static_cast<size_t>(n + 1)], adims[static_cast<size_t>(n)], model);
        MatrixK dc = cc.tower.complex.diff(n), dd = cd.tower.complex.diff(n);
        for (int i = 0; i < dc.rows(); ++i)
            for (int j = 0; j < dc.cols(); ++j) d.at(i, j) = dc.at(i, j);
        for (int i = 0; i < dd.rows(); ++i)
            for (int j = 0; j < dd.cols(); ++j) d.at(dc.rows() + i, dc.cols() + j) = dd.at(i, j);
        adiffs.push_back(std::move(d));
    }
    GradedComplex A(f.dst->field, 0, adims, adiffs);
    std::map<int, MatrixK> mats;
    for (int n = 0; n <= 4; ++n) {
        MatrixK mf = chain_map_F_of(cc.tower.spaces[static_cast<size_t>(n)], bf.spaces[static_cast<size_t>(n)]);
        MatrixK mr = chain_map_restriction(cd.tower.spaces[static_cast<size_t>(n)], bf.spaces[static_cast<size_t>(n)]);
        MatrixK u = MatrixK::zero(mf.rows(), mf.cols() + mr.cols(), model);
        for (int i = 0; i < mf.rows(); ++i) {
            for (int j = 0; j < mf.cols(); ++j) u.at(i, j) = mf.at(i, j);
            for (int j = 0; j < mr.cols(); ++j) u.at(i, mf.cols() + j) = -mr.at(i, j);
        }
        mats.emplace(n, std::move(u));
    }
    // A lives one degree higher in the cone; supply degree-5 component as zero
    ComplexMap u(&A, &bf.complex, mats);
    ConeComplex cn = cone(u);
    return cohomology_of(cn.complex, 3);
}

Classification classify_coarse(const MonFunctor& mult, const FusionCat& base, const FusionCat& prod, int threads) {
    // mult : base (x) base -> base, a verified semigroupal functor
    CategoryComplex cc = build_category_tower(base, 5, threads);
    CategoryComplex cp = build_category_tower(prod, 4, threads);
    Bimodule reg = regular_bimodule(mult);
    BuiltComplex bphi = build_tower(mult, reg, 4, threads);
    std::map<int, MatrixK> mats;
    for (int n = 0; n <= 4; ++n) {
        MatrixK diag = diagonal_matrix(cc.tower.spaces[static_cast<size_t>(n)], base, prod,
                                       cp.tower.spaces[static_cast<size_t>(n)]);
        MatrixK phi_of = chain_map_F_of(cp.tower.spaces[static_cast<size_t>(n)], bphi.spaces[static_cast<size_t>(n)]);
        MatrixK rest = chain_map_restriction(cc.tower.spaces[static_cast<size_t>(n)], bphi.spaces[static_cast<size_t>(n)]);
        mats.emplace(n, phi_of * diag - rest);
    }
    ComplexMap u(&cc.tower.complex, &bphi.complex, mats);
    ConeComplex cn = cone(u);
    return cohomology_of(cn.complex, 3);
}

EquivalenceResult equivalence_check(const DeformationState& s1, const DeformationState& s2,
                                    const CategoryComplex& cc) {
    if (s1.kind != DeformKind::category || s2.kind != DeformKind::category)
        throw KindMismatch("equivalence_check expects category deformation states");
    if (s1.order < 1 || s2.order < 1) throw Error("equivalence_check expects first-order states");
    const FusionCat& cat = *s1.cat;
    const CochainSpace& sp3 = cc.tower.spaces[3];
    Cochain diff = cochain_sub(s1.alphas[0], s2.alphas[0]);
    MatrixK d2 = cc.tower.complex.diff(2);
    EquivalenceResult out;
    auto sol = solve_linear(d2, vec(sp3, diff), cat.field);
    if (sol.x) {
        out.equivalent = true;
        out.witness = *sol.x;
        return out;
    }
    // certificate: class coordinates of the difference in H^3
    CohomologyResult h3 = cohomology(cc.tower.complex, 3);
    auto img = rank_kernel_image(d2, cat.field).image;
    int ncols = static_cast<int>(h3.representatives.size());
    MatrixK basis(sp3.total_dim, ncols + static_cast<int>(img.size()), Scalar::zero(cat.field));
    for (int c = 0; c < ncols; ++c)
        for (int r = 0; r < sp3.total_dim; ++r) basis.at(r, c) = h3.representatives[static_cast<size_t>(c)][static_cast<size_t>(r)];
    for (size_t c = 0; c < img.size(); ++c)
        for (int r = 0; r < sp3.total_dim; ++r) basis.at(r, ncols + static_cast<int>(c)) = img[c][static_cast<size_t>(r)];
    auto cls = solve_linear(basis, vec(sp3, diff), cat.field);
    if (!cls.x) throw Error("class difference not expressible (internal)");
    out.certificate.assign(cls.x->begin(), cls.x->begin() + ncols);
    return out;
}

UnitTransport unit_transport(const DeformationState& s, const CategoryComplex& cc) {
    if (s.kind != DeformKind::category) throw KindMismatch("unit transport expects a category deformation state");
    const FusionCat& cat = *s.cat;
    DeformReport pre = check_deformation(s);
    if (!pre.ok) throw LowerOrderNotDeformation(pre.failed_order);
    int order = s.order;
    const CochainSpace& sp3 = cc.tower.spaces[3];
    auto assoc = deformed_assoc(cat, s.alphas, sp3, order);

    Series nu(cat.field, order);
    nu.coeff(0) = cat.lambda[static_cast<size_t>(cat.unit)];
    for (int i = 1; i <= order && i <= static_cast<int>(s.nus.size()); ++i) nu.coeff(i) = s.nus[static_cast<size_t>(i - 1)];

    UnitTransport out;
    int I = cat.unit;
    for (int b = 0; b < cat.count(); ++b) {
        MatrixS blk = assoc(I, I, b, b);  // 1x1
        out.lambda.push_back(blk.at(0, 0).inverse() * nu);
    }
    for (int a = 0; a < cat.count(); ++a) {
        MatrixS blk = assoc(a, I, I, a);  // 1x1
        out.rho.push_back(blk.at(0, 0) * nu);
    }
    // triangle and bigon over the series ring
    Series model(cat.field, order);
    out.report = check_triangles<Series>(cat, assoc, out.lambda, out.rho, model);
    if (out.report.ok && !(out.rho[static_cast<size_t>(I)] == out.lambda[static_cast<size_t>(I)]))
        out.report.fail("bigon fails after transport");
    return out;
}

NatTransfClassification nat_transf_first_order(const MonFunctor& f, const MonFunctor& g,
                                               const std::vector<DecMorK>& phi, int threads) {
    if (!nat_transformation_check(phi, f, g)) throw NotMonoidalTransformation();
    Bimodule m = bimodule_along_nat(f, g, phi);
    BuiltComplex bc = build_tower(f, m, 3, threads);
    NatTransfClassification out;
    CohomologyResult h1 = cohomology(bc.complex, 1);
    CohomologyResult h2 = cohomology(bc.complex, 2);
    out.dim_h1 = h1.dimension;
    out.dim_h2 = h2.dimension;
    out.h1_representatives = h1.representatives;
    return out;
}

}  // namespace defcat
