#include "vexil/json_io.hpp"

#include <json.hpp>

#include "vexil/free_ring.hpp"
#include "vexil/schur_ring.hpp"
#include "vexil/theta_ring.hpp"

namespace vexil {

using nlohmann::json;

namespace {

json ypoly_terms(const YPolynomial& p) {
    json arr = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        arr.push_back(json::array({it->second.str(), it->first}));
    return arr;
}

YPolynomial ypoly_from(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("coeff: expected an array");
    YPolynomial p;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("coeff: expected [rational, exponent] pairs");
        p += YPolynomial::monomial(pair[1].get<int>(),
                                   Rational::parse(pair[0].get<std::string>()));
    }
    return p;
}

json ring_descriptor(const AmbientRing& ring) {
    if (auto* t = dynamic_cast<const ThetaRing*>(&ring))
        return json{{"kind", "theta"}, {"g", t->genus()}};
    if (auto* s = dynamic_cast<const SchurRing*>(&ring))
        return json{{"kind", "grassmannian"}, {"k", s->k()}, {"n", s->n()}};
    if (auto* f = dynamic_cast<const FreeChernRing*>(&ring)) {
        json gens = json::array();
        for (int i = 0; i < f->generator_count(); ++i)
            gens.push_back(json{{"name", f->generator_name(i)}, {"degree", f->generator_degree(i)}});
        return json{{"kind", "free"}, {"generators", gens}, {"dim", f->dimension()}};
    }
    throw std::invalid_argument("ring_descriptor: unknown ring kind");
}

RingPtr ring_from_descriptor(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "theta") return theta_ring(j.at("g").get<int>());
    if (kind == "grassmannian") return schur_ring(j.at("k").get<int>(), j.at("n").get<int>());
    if (kind == "free") {
        std::vector<std::pair<std::string, int>> gens;
        for (const auto& g : j.at("generators"))
            gens.emplace_back(g.at("name").get<std::string>(), g.at("degree").get<int>());
        return free_ring(std::move(gens), j.at("dim").get<int>());
    }
    throw std::invalid_argument("geometry/ring: unknown kind '" + kind + "'");
}

BasisKey key_from_label(const AmbientRing& ring, const std::string& label) {
    if (dynamic_cast<const ThetaRing*>(&ring)) {
        if (label == "1") return {0};
        if (label == "theta") return {1};
        if (label.rfind("theta^", 0) == 0) return {std::stoi(label.substr(6))};
        throw std::invalid_argument("basis: bad theta label '" + label + "'");
    }
    if (dynamic_cast<const SchurRing*>(&ring)) {
        if (label == "1") return {};
        if (label.rfind("schur:[", 0) != 0 || label.back() != ']')
            throw std::invalid_argument("basis: bad schur label '" + label + "'");
        std::string body = label.substr(7, label.size() - 8);
        BasisKey key;
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            key.push_back(std::stoi(body.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return key;
    }
    if (auto* f = dynamic_cast<const FreeChernRing*>(&ring)) {
        BasisKey key(f->generator_count(), 0);
        if (label == "1") return key;
        size_t pos = 0;
        while (pos < label.size()) {
            size_t star = label.find('*', pos);
            if (star == std::string::npos) star = label.size();
            std::string piece = label.substr(pos, star - pos);
            size_t caret = piece.find('^');
            std::string name = caret == std::string::npos ? piece : piece.substr(0, caret);
            int e = caret == std::string::npos ? 1 : std::stoi(piece.substr(caret + 1));
            int idx = f->generator_index(name);
            if (idx < 0) throw std::invalid_argument("basis: unknown generator '" + name + "'");
            key[idx] += e;
            pos = star + 1;
        }
        return key;
    }
    throw std::invalid_argument("basis: unknown ring kind");
}

}  // namespace

std::string class_to_json(const GradedClass& c) {
    json terms = json::array();
    for (const BasisKey& key : c.sorted_keys())
        terms.push_back(json{{"basis", c.ring()->label_json(key)},
                             {"coeff", ypoly_terms(c.coeff(key))}});
    json out{{"ring", ring_descriptor(*c.ring())}, {"terms", terms}};
    return out.dump();
}

GradedClass class_from_json(const std::string& text) {
    json j = json::parse(text);
    RingPtr ring = ring_from_descriptor(j.at("ring"));
    GradedClass c(ring);
    for (const auto& term : j.at("terms"))
        c.add_term(key_from_label(*ring, term.at("basis").get<std::string>()),
                   ypoly_from(term.at("coeff")));
    return c;
}

std::string ypoly_to_json(const YPolynomial& p) {
    return json{{"poly", ypoly_terms(p)}}.dump();
}

std::pair<BNProblem, std::optional<int>> bn_problem_from_json(const std::string& text) {
    json j = json::parse(text);
    BNProblem prob = bn_problem(j.at("g").get<int>(), j.at("d").get<int>(),
                                j.at("a").get<std::vector<int>>());
    std::optional<int> n;
    if (j.contains("n")) n = j.at("n").get<int>();
    return {prob, n};
}

Triple triple_from_json(const std::string& text) {
    json j = json::parse(text);
    return Triple(j.at("k").get<std::vector<int>>(), j.at("p").get<std::vector<int>>(),
                  j.at("q").get<std::vector<int>>());
}

std::string triple_to_json(const Triple& t) {
    return json{{"k", t.k}, {"p", t.p}, {"q", t.q}}.dump();
}

std::shared_ptr<DegeneracyGeometry> geometry_from_json(const std::string& text,
                                                       const Triple& triple) {
    json j = json::parse(text);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "theta") return std::make_shared<ThetaGeometry>(j.at("g").get<int>());
    if (kind == "grassmannian")
        return std::make_shared<GrassmannianGeometry>(j.at("k").get<int>(), j.at("n").get<int>());
    if (kind != "free") throw std::invalid_argument("geometry: unknown kind '" + kind + "'");

    Triple reduced = reduce_triple(triple);
    int dim = j.contains("dim") ? j.at("dim").get<int>()
                                : partition_weight(lambda_of(reduced)) + 2;
    // One power-sum generator per degree for every source and target rank
    // the triple or its strata can reach.
    int pmin = reduced.empty() ? 1 : reduced.p.front();
    int pmax = reduced.empty() ? 1 : reduced.p.back();
    int qmin = reduced.empty() ? 1 : reduced.q.back();
    int qmax = reduced.empty() ? 1 : reduced.q.front();
    pmin = std::max(1, pmin - dim);
    qmax += dim;
    std::vector<std::pair<std::string, int>> gens;
    if (j.contains("generators"))
        for (const auto& g : j.at("generators")) {
            if (g.is_string())
                gens.emplace_back(g.get<std::string>(), 1);
            else
                gens.emplace_back(g.at("name").get<std::string>(), g.at("degree").get<int>());
        }
    for (int p = pmin; p <= pmax; ++p)
        for (int d = 1; d <= dim; ++d) gens.emplace_back("e" + std::to_string(d) + "[" + std::to_string(p) + "]", d);
    for (int q = qmin; q <= qmax; ++q)
        for (int d = 1; d <= dim; ++d) gens.emplace_back("f" + std::to_string(d) + "[" + std::to_string(q) + "]", d);
    RingPtr ring = free_ring(std::move(gens), dim);
    auto chars = [ring, dim, pmin, pmax, qmin, qmax](int p, int q) {
        BundleCharacter v(ring, q - p);
        for (int d = 1; d <= dim; ++d) {
            GradedClass ps(ring);
            if (q >= qmin && q <= qmax)
                ps += free_gen(ring, "f" + std::to_string(d) + "[" + std::to_string(q) + "]");
            if (p >= pmin && p <= pmax)
                ps -= free_gen(ring, "e" + std::to_string(d) + "[" + std::to_string(p) + "]");
            v.p[d] = ps;
        }
        return v;
    };
    return std::make_shared<CustomGeometry>(ring, GradedClass::unit(ring), chars);
}

}  // namespace vexil
