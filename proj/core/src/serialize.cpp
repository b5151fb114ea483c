#include "crosscaps/serialize.hpp"

#include "crosscaps/errors.hpp"

namespace crosscaps {

namespace {

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InputError("complex numbers must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

std::map<int, Bit> bitmap_from_json(const Json& j) {
    std::map<int, Bit> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[std::stoi(it.key())] = static_cast<Bit>(it.value().get<int>() & 1);
    return out;
}

}  // namespace

void to_json(Json& j, const ShSurface& s) {
    Json boundary = Json::array();
    for (BoundaryKind k : s.boundary()) boundary.push_back(to_string(k));
    j = Json{{"genus", s.genus()}, {"boundary", boundary}};
}

void from_json(const Json& j, ShSurface& s) {
    std::vector<BoundaryKind> boundary;
    for (const auto& item : j.at("boundary"))
        boundary.push_back(boundary_kind_from_string(item.get<std::string>()));
    s = ShSurface(j.at("genus").get<int>(), std::move(boundary));
}

void to_json(Json& j, const ClosedSurfaceInfo& info) {
    j = Json{{"orientable", info.orientable},
             {"genus_or_crosscap_number", info.genus_or_crosscap_number},
             {"boundary_count", info.boundary_count}};
}

void from_json(const Json& j, ClosedSurfaceInfo& info) {
    info.orientable = j.at("orientable").get<bool>();
    info.genus_or_crosscap_number = j.at("genus_or_crosscap_number").get<int>();
    info.boundary_count = j.at("boundary_count").get<int>();
}

void to_json(Json& j, const SurfaceCohomology& ring) {
    Json form = Json::array();
    for (std::size_t r = 0; r < ring.intersection_form.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < ring.intersection_form.cols(); ++c)
            row.push_back(static_cast<int>(ring.intersection_form.at(r, c)));
        form.push_back(row);
    }
    Json torsion = Json::array();
    for (Bit b : ring.torsion_class) torsion.push_back(static_cast<int>(b));
    j = Json{{"orientable", ring.orientable},
             {"h1_rank", ring.h1_rank},
             {"intersection_form", form},
             {"torsion_class", torsion}};
}

void from_json(const Json& j, SurfaceCohomology& ring) {
    ring.orientable = j.at("orientable").get<bool>();
    ring.h1_rank = j.at("h1_rank").get<std::size_t>();
    const auto& form = j.at("intersection_form");
    if (form.size() != ring.h1_rank)
        throw InputError("SurfaceCohomology: form row count != rank");
    ring.intersection_form = BitMatrix(ring.h1_rank, ring.h1_rank);
    for (std::size_t r = 0; r < ring.h1_rank; ++r) {
        if (form[r].size() != ring.h1_rank)
            throw InputError("SurfaceCohomology: form must be square");
        for (std::size_t c = 0; c < ring.h1_rank; ++c)
            ring.intersection_form.set(r, c, static_cast<Bit>(form[r][c].get<int>() & 1));
    }
    ring.torsion_class.clear();
    for (const auto& b : j.at("torsion_class"))
        ring.torsion_class.push_back(static_cast<Bit>(b.get<int>() & 1));
    if (ring.torsion_class.size() != ring.h1_rank)
        throw InputError("SurfaceCohomology: torsion length != rank");
}

void to_json(Json& j, const H1Presentation& h) {
    Json torsion = Json::array();
    for (const auto& [m, r] : h.torsion_orders)
        torsion.push_back(Json{{"order", m}, {"multiplicity", r}});
    j = Json{{"free_rank", h.free_rank}, {"torsion", torsion}};
}

void from_json(const Json& j, H1Presentation& h) {
    h.free_rank = j.at("free_rank").get<long>();
    h.torsion_orders.clear();
    for (const auto& item : j.at("torsion"))
        h.torsion_orders.emplace_back(item.at("order").get<long>(),
                                      item.at("multiplicity").get<long>());
    validate(h);
}

void to_json(Json& j, const RealBundlePair& p) {
    Json bits = Json::array();
    for (Bit b : p.std_w1()) bits.push_back(static_cast<int>(b));
    j = Json{{"rank", p.rank()}, {"maslov", p.maslov()}, {"std_w1", bits}};
}

RealBundlePair real_bundle_pair_from_json(const Json& j) {
    std::vector<Bit> bits;
    for (const auto& b : j.at("std_w1"))
        bits.push_back(static_cast<Bit>(b.get<int>() & 1));
    return RealBundlePair(j.at("rank").get<int>(), j.at("maslov").get<int>(), std::move(bits));
}

void to_json(Json& j, const KleinTorusPair& k) {
    j = Json{{"rank", k.rank}, {"twist", static_cast<int>(k.twist)}};
}

void from_json(const Json& j, KleinTorusPair& k) {
    k.rank = j.at("rank").get<int>();
    k.twist = static_cast<Bit>(j.at("twist").get<int>() & 1);
    validate(k);
}

void to_json(Json& j, const OperatorLoop& loop) {
    Json std_part = Json::array();
    for (const auto& s : loop.std_data)
        std_part.push_back(Json{{"w1_b", static_cast<int>(s.w1_b)},
                                {"w1_alpha", static_cast<int>(s.w1_alpha)},
                                {"w2_beta", static_cast<int>(s.w2_beta)}});
    Json cc_part = Json::array();
    for (const auto& c : loop.crosscap_data)
        cc_part.push_back(Json{{"eqw2", static_cast<int>(c.eqw2)}});
    j = Json{{"surface", loop.base}, {"std", std_part}, {"cc", cc_part}};
}

void from_json(const Json& j, OperatorLoop& loop) {
    loop.base = j.at("surface").get<ShSurface>();
    loop.std_data.clear();
    for (const auto& item : j.at("std"))
        loop.std_data.push_back(
            StdBoundaryLoopData{static_cast<Bit>(item.at("w1_b").get<int>() & 1),
                                static_cast<Bit>(item.at("w1_alpha").get<int>() & 1),
                                static_cast<Bit>(item.at("w2_beta").get<int>() & 1)});
    loop.crosscap_data.clear();
    for (const auto& item : j.at("cc"))
        loop.crosscap_data.push_back(
            CrosscapLoopData{static_cast<Bit>(item.at("eqw2").get<int>() & 1)});
    validate(loop);
}

void from_json(const Json& j, TrivializationSignInput& in) {
    in.change.rank = j.value("rank", 1);
    in.change.o_real = bitmap_from_json(j.value("o_real", Json::object()));
    in.change.s_real = bitmap_from_json(j.value("s_real", Json::object()));
    in.change.o_complex = bitmap_from_json(j.value("o_complex", Json::object()));
    validate(in.change);
    in.boundary.clear();
    for (const auto& item : j.at("boundary")) {
        BoundaryClassRef ref;
        ref.kind = boundary_kind_from_string(item.at("kind").get<std::string>());
        ref.w1_b = static_cast<Bit>(item.value("w1_b", 0) & 1);
        ref.component_id = item.value("component", 0);
        ref.class_id = item.value("class", 0);
        in.boundary.push_back(ref);
    }
}

void to_json(Json& j, const SampledLoop& loop) {
    Json samples = Json::array();
    for (const auto& m : loop.samples) {
        Json mat = Json::array();
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) mat.push_back(complex_to_json(m(r, c)));
        samples.push_back(mat);
    }
    j = Json{{"n", loop.n}, {"samples", samples}};
}

void from_json(const Json& j, SampledLoop& loop) {
    loop.n = j.at("n").get<int>();
    if (loop.n < 1) throw InputError("SampledLoop: matrix size must be >= 1");
    loop.samples.clear();
    for (const auto& mat : j.at("samples")) {
        if (mat.size() != static_cast<std::size_t>(loop.n) * loop.n)
            throw InputError("SampledLoop: each sample needs n*n [re,im] entries");
        Eigen::MatrixXcd m(loop.n, loop.n);
        std::size_t idx = 0;
        for (int r = 0; r < loop.n; ++r)
            for (int c = 0; c < loop.n; ++c) m(r, c) = complex_from_json(mat[idx++]);
        loop.samples.push_back(std::move(m));
    }
    validate(loop);
}

void to_json(Json& j, const RealMapParams& p) {
    Json roots = Json::array();
    for (const auto& list : p.roots) {
        Json inner = Json::array();
        for (const Complex& b : list) inner.push_back(complex_to_json(b));
        roots.push_back(inner);
    }
    j = Json{{"n", p.n}, {"d", p.degree}, {"A", p.coeffs}, {"roots", roots}};
}

void from_json(const Json& j, RealMapParams& p) {
    p.n = j.at("n").get<int>();
    p.degree = j.at("d").get<int>();
    p.coeffs = j.at("A").get<std::vector<double>>();
    p.roots.clear();
    for (const auto& list : j.at("roots")) {
        std::vector<Complex> inner;
        for (const auto& b : list) inner.push_back(complex_from_json(b));
        p.roots.push_back(std::move(inner));
    }
    validate(p);
}

void to_json(Json& j, const PolyTuple& t) {
    Json coords = Json::array();
    for (const auto& poly : t.coords) {
        Json inner = Json::array();
        for (const Complex& c : poly) inner.push_back(complex_to_json(c));
        coords.push_back(inner);
    }
    j = Json{{"degree", t.degree}, {"coords", coords}};
}

void from_json(const Json& j, PolyTuple& t) {
    t.degree = j.at("degree").get<int>();
    t.coords.clear();
    for (const auto& poly : j.at("coords")) {
        std::vector<Complex> inner;
        for (const auto& c : poly) inner.push_back(complex_from_json(c));
        t.coords.push_back(std::move(inner));
    }
    validate(t);
}

void to_json(Json& j, const DiskProblem& p) {
    j = Json{{"d", p.twist},
             {"truncation", p.truncation},
             {"collocation", p.collocation},
             {"tolerance", p.tolerance}};
}

void from_json(const Json& j, DiskProblem& p) {
    p.twist = j.at("d").get<int>();
    p.truncation = j.at("truncation").get<int>();
    p.collocation = j.at("collocation").get<int>();
    p.tolerance = j.value("tolerance", 1e-8);
    validate(p);
}

}  // namespace crosscaps
