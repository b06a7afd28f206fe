#include "linrel/instance.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "linrel/decompose.hpp"
#include "linrel/ww.hpp"

namespace linrel::cli {

namespace {

Scalar scalar_from_json(const FieldSpec& field, const Json& j) {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
    throw ParseError("scalar entries must be integers or strings");
}

Matrix matrix_from_json(const FieldSpec& field, std::size_t cols, const Json& j,
                        const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": basis must be an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const Json& row : j) {
        if (!row.is_array() || row.size() != cols) {
            throw ParseError(what + ": each row must have " + std::to_string(cols) + " entries");
        }
        std::vector<Scalar> r;
        for (const Json& e : row) r.push_back(scalar_from_json(field, e));
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(field, cols, rows);
}

template <typename Map>
const typename Map::mapped_type& resolve(const Map& map, const std::string& name,
                                         const std::string& what) {
    auto it = map.find(name);
    if (it == map.end()) throw ValidationError("unknown " + what + " '" + name + "'");
    return it->second;
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");

    Instance inst;
    if (!doc.contains("field")) throw ParseError("instance document needs a 'field' entry");
    inst.field = FieldSpec::parse(doc.at("field").get<std::string>());

    if (doc.contains("objects")) {
        for (const auto& [name, spec] : doc.at("objects").items()) {
            if (spec.value("symplectic", false)) {
                if (spec.contains("form")) {
                    const Json& form = spec.at("form");
                    std::size_t dim = form.size();
                    inst.symp_objects.emplace(
                        name, SymplecticSpace::with_form(
                                  matrix_from_json(inst.field, dim, form, "object " + name)));
                } else if (spec.contains("n")) {
                    inst.symp_objects.emplace(
                        name, SymplecticSpace::standard(spec.at("n").get<std::size_t>(), inst.field));
                } else {
                    throw ParseError("symplectic object '" + name + "' needs 'n' or 'form'");
                }
            } else {
                if (!spec.contains("dim")) throw ParseError("object '" + name + "' needs 'dim'");
                inst.objects.emplace(name,
                                     VectorSpaceObj{spec.at("dim").get<std::size_t>(), inst.field, name});
            }
        }
    }

    if (doc.contains("subspaces")) {
        for (const auto& [name, spec] : doc.at("subspaces").items()) {
            std::size_t ambient = 0;
            if (spec.contains("ambient_dim")) {
                ambient = spec.at("ambient_dim").get<std::size_t>();
            } else if (spec.contains("ambient")) {
                const std::string obj = spec.at("ambient").get<std::string>();
                if (inst.symp_objects.count(obj)) {
                    ambient = inst.symp_objects.at(obj).dim();
                } else {
                    ambient = resolve(inst.objects, obj, "object").dim;
                }
            } else {
                throw ParseError("subspace '" + name + "' needs 'ambient' or 'ambient_dim'");
            }
            inst.subspaces.emplace(
                name, Subspace::span(
                          matrix_from_json(inst.field, ambient, spec.at("basis"), "subspace " + name),
                          ambient));
        }
    }

    if (doc.contains("relations")) {
        for (const auto& [name, spec] : doc.at("relations").items()) {
            const std::string target = spec.at("target").get<std::string>();
            const std::string source = spec.at("source").get<std::string>();
            const bool symp = inst.symp_objects.count(target) > 0;
            if (symp != (inst.symp_objects.count(source) > 0)) {
                throw ValidationError("relation '" + name + "' mixes plain and symplectic objects");
            }
            std::size_t dt = symp ? inst.symp_objects.at(target).dim()
                                  : resolve(inst.objects, target, "object").dim;
            std::size_t ds = symp ? inst.symp_objects.at(source).dim()
                                  : resolve(inst.objects, source, "object").dim;
            Subspace space = Subspace::zero(dt + ds, inst.field);
            if (spec.value("identity", false)) {
                if (dt != ds) throw ValidationError("identity relation '" + name + "' needs equal objects");
                space = LinearRelation::identity(VectorSpaceObj{dt, inst.field, {}}).space();
            } else if (spec.value("full", false)) {
                space = Subspace::full(dt + ds, inst.field);
            } else if (spec.value("zero", false)) {
                space = Subspace::zero(dt + ds, inst.field);
            } else if (spec.contains("basis")) {
                space = Subspace::span(
                    matrix_from_json(inst.field, dt + ds, spec.at("basis"), "relation " + name));
            } else {
                throw ParseError("relation '" + name + "' needs a basis or identity/zero/full flag");
            }
            if (symp) {
                inst.symp_relations.emplace(
                    name, SympRelation(inst.symp_objects.at(target), inst.symp_objects.at(source),
                                       std::move(space)));
            } else {
                inst.relations.emplace(name,
                                       LinearRelation(resolve(inst.objects, target, "object"),
                                                      resolve(inst.objects, source, "object"),
                                                      std::move(space)));
            }
        }
    }

    if (doc.contains("chains")) {
        for (const auto& [name, list] : doc.at("chains").items()) {
            std::vector<std::string> links;
            for (const Json& l : list) links.push_back(l.get<std::string>());
            if (links.empty()) throw ValidationError("chain '" + name + "' is empty");
            inst.chains.emplace(name, std::move(links));
        }
    }

    if (doc.contains("ww_morphisms")) {
        for (const auto& [name, spec] : doc.at("ww_morphisms").items()) {
            auto index = [&](const char* key) -> std::size_t {
                long long v = spec.value(key, 0ll);
                if (v < 0) throw ValidationError("ww morphism '" + std::string(name) + "' has negative " + key);
                return static_cast<std::size_t>(v);
            };
            Instance::WWEntry entry{parse_tag(spec.at("tag").get<std::string>()),
                                    spec.at("shadow").get<std::string>(), index("defect"),
                                    index("excess")};
            inst.ww_morphisms.emplace(name, std::move(entry));
        }
    }

    if (doc.contains("triples")) {
        for (const auto& [name, spec] : doc.at("triples").items()) {
            inst.triples.emplace(name, Instance::TripleEntry{spec.at("ambient_dim").get<std::size_t>(),
                                                             spec.at("a").get<std::string>(),
                                                             spec.at("b").get<std::string>(),
                                                             spec.at("c").get<std::string>()});
        }
    }

    if (doc.contains("isotropic_pairs")) {
        for (const auto& [name, spec] : doc.at("isotropic_pairs").items()) {
            inst.isotropic_pairs.emplace(name, Instance::IsoPairEntry{spec.at("space").get<std::string>(),
                                                                      spec.at("a").get<std::string>(),
                                                                      spec.at("b").get<std::string>()});
        }
    }

    return inst;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.str();
    return s.residue();
}

Json basis_to_json(const Matrix& basis) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < basis.cols(); ++j) row.push_back(scalar_to_json(basis.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    j["dim"] = s.dim();
    j["basis"] = basis_to_json(s.basis());
    return j;
}

namespace {

struct ResolvedChain {
    std::optional<RelationChain> plain;
    std::optional<SympChain> symp;
};

ResolvedChain resolve_chain(const Instance& inst, const std::string& name) {
    const std::vector<std::string>& names = resolve(inst.chains, name, "chain");
    bool symp = inst.symp_relations.count(names.front()) > 0;
    ResolvedChain out;
    if (symp) {
        std::vector<SympRelation> links;
        for (const std::string& n : names) links.push_back(resolve(inst.symp_relations, n, "relation"));
        out.symp = SympChain(std::move(links));
    } else {
        std::vector<LinearRelation> links;
        for (const std::string& n : names) links.push_back(resolve(inst.relations, n, "relation"));
        out.plain = RelationChain(std::move(links));
    }
    return out;
}

Json report_header(const std::string& command, std::uint64_t seed) {
    Json j;
    j["command"] = command;
    j["seed"] = seed;
    return j;
}

void finish(Json& report, std::size_t passes, std::size_t failures) {
    report["passes"] = passes;
    report["failures"] = failures;
}

AnyRelation resolve_shadow(const Instance& inst, CategoryTag tag, const std::string& name) {
    if (tag == CategoryTag::LREL) {
        if (inst.relations.count(name)) return inst.relations.at(name);
        // Symplectic relations embed in LREL by forgetting the forms.
        if (inst.symp_relations.count(name)) return inst.symp_relations.at(name).as_linear();
        throw ValidationError("unknown relation '" + name + "'");
    }
    return resolve(inst.symp_relations, name, "relation");
}

}  // namespace

CommandResult cmd_compose(const Instance& inst, const std::string& chain_name, std::uint64_t seed) {
    ResolvedChain rc = resolve_chain(inst, chain_name);
    RelationChain chain = rc.plain ? *rc.plain : rc.symp->as_linear_chain();

    Json report = report_header("compose", seed);
    report["chain"] = chain_name;
    report["field"] = inst.field.str();
    LinearRelation composite = compose_chain(chain);
    Json comp;
    comp["target_dim"] = composite.target().dim;
    comp["source_dim"] = composite.source().dim;
    comp["space"] = subspace_to_json(composite.space());
    report["composite"] = std::move(comp);
    const std::size_t e = excess_seq(chain), d = defect_seq(chain);
    report["excess"] = e;
    report["defect"] = d;

    std::size_t passes = 0, failures = 0;
    Json splits = Json::array();
    for (std::size_t j = 1; j < chain.size(); ++j) {
        std::vector<LinearRelation> left(chain.links().begin(), chain.links().begin() + j);
        std::vector<LinearRelation> right(chain.links().begin() + j, chain.links().end());
        RelationChain lc{left}, rc2{right};
        LinearRelation lcomp = compose_chain(lc), rcomp = compose_chain(rc2);
        Json split;
        split["j"] = j;
        split["excess_left"] = excess_seq(lc);
        split["excess_pair"] = excess_pair(lcomp, rcomp);
        split["excess_right"] = excess_seq(rc2);
        split["defect_left"] = defect_seq(lc);
        split["defect_pair"] = defect_pair(lcomp, rcomp);
        split["defect_right"] = defect_seq(rc2);
        bool ok = excess_seq(lc) + excess_pair(lcomp, rcomp) + excess_seq(rc2) == e &&
                  defect_seq(lc) + defect_pair(lcomp, rcomp) + defect_seq(rc2) == d;
        split["additivity_ok"] = ok;
        ok ? ++passes : ++failures;
        splits.push_back(std::move(split));
    }
    report["splits"] = std::move(splits);
    finish(report, passes, failures);
    return CommandResult{failures == 0 ? 0 : 1, std::move(report)};
}

CommandResult cmd_ww(const Instance& inst, const std::string& chain_name, CategoryTag tag,
                     std::uint64_t seed) {
    ResolvedChain rc = resolve_chain(inst, chain_name);
    WWMorphism m = rc.plain ? ww_from_chain(*rc.plain, tag) : ww_from_chain(*rc.symp, tag);
    Json report = report_header("ww", seed);
    report["chain"] = chain_name;
    report["tag"] = tag_name(tag);
    report["field"] = inst.field.str();
    report["shadow"] = subspace_to_json(m.shadow_linear().space());
    report["defect"] = m.defect();
    report["excess"] = m.excess();
    finish(report, 1, 0);
    return CommandResult{0, std::move(report)};
}

CommandResult cmd_ww_two_term(const Instance& inst, const std::string& name,
                              const std::optional<CategoryTag>& tag, std::uint64_t seed) {
    std::optional<WWMorphism> m;
    if (inst.ww_morphisms.count(name)) {
        const Instance::WWEntry& entry = inst.ww_morphisms.at(name);
        m = WWMorphism(entry.tag, resolve_shadow(inst, entry.tag, entry.shadow), entry.defect,
                       entry.excess);
    } else if (inst.chains.count(name)) {
        if (!tag) throw ValidationError("two-term from a chain needs --tag");
        ResolvedChain rc = resolve_chain(inst, name);
        m = rc.plain ? ww_from_chain(*rc.plain, *tag) : ww_from_chain(*rc.symp, *tag);
    } else {
        throw ValidationError("unknown ww morphism or chain '" + name + "'");
    }

    TwoTermRep rep = ww_two_term(*m);
    LinearRelation a = any_as_linear(rep.a), b = any_as_linear(rep.b);

    Json report = report_header("ww-two-term", seed);
    report["name"] = name;
    report["tag"] = tag_name(m->tag());
    report["field"] = inst.field.str();
    Json q;
    q["dim"] = a.source().dim;
    if (const auto* symp = std::get_if<SympRelation>(&rep.a)) {
        q["form"] = basis_to_json(symp->source().form());
    }
    report["Q"] = std::move(q);
    report["A"] = subspace_to_json(a.space());
    report["B"] = subspace_to_json(b.space());

    Json checks;
    checks["A_is_reduction"] = is_reduction(a);
    checks["B_is_coreduction"] = is_coreduction(b);
    checks["composite_equals_shadow"] = any_equal(any_compose(rep.a, rep.b), m->shadow());
    checks["pair_defect_matches"] = defect_pair(a, b) == m->defect();
    checks["pair_excess_matches"] = excess_pair(a, b) == m->excess();
    std::size_t passes = 0, failures = 0;
    for (const auto& [key, value] : checks.items()) value.get<bool>() ? ++passes : ++failures;
    report["checks"] = std::move(checks);
    finish(report, passes, failures);
    return CommandResult{failures == 0 ? 0 : 1, std::move(report)};
}

CommandResult cmd_check(const std::string& suite, const SuiteParams& params) {
    SuiteResult result = run_suite(suite, params);
    Json report = report_header("check", params.seed);
    report["suite"] = result.name;
    report["cases"] = result.cases;
    report["field"] = params.field.str();
    report["max_dim"] = params.max_dim;
    Json failures = Json::array();
    for (const CaseFailure& f : result.failures) {
        Json j;
        j["case"] = f.index;
        j["case_seed"] = f.case_seed;
        j["message"] = f.message;
        failures.push_back(std::move(j));
    }
    report["failure_details"] = std::move(failures);
    finish(report, result.passes, result.failures.size());
    return CommandResult{result.ok() ? 0 : 3, std::move(report)};
}

CommandResult cmd_decompose(const Instance& inst, const std::string& item, std::uint64_t seed) {
    Json report = report_header("decompose", seed);
    report["item"] = item;
    report["field"] = inst.field.str();
    if (inst.triples.count(item)) {
        const Instance::TripleEntry& t = inst.triples.at(item);
        TripleMultiplicities m = triple_multiplicities(
            t.ambient_dim, resolve(inst.subspaces, t.a, "subspace"),
            resolve(inst.subspaces, t.b, "subspace"), resolve(inst.subspaces, t.c, "subspace"));
        report["kind"] = "triple";
        Json mult;
        mult["n1"] = m.n1;
        mult["n2"] = m.n2;
        mult["n4"] = m.n4;
        mult["n6"] = m.n6;
        mult["n7"] = m.n7;
        mult["n8"] = m.n8;
        report["multiplicities"] = std::move(mult);
        WWIndices idx = ww_indices_from_multiplicities(m);
        report["predicted"] = Json{{"defect", idx.defect}, {"excess", idx.excess},
                                   {"shadow_dim", idx.shadow_dim}};
    } else if (inst.isotropic_pairs.count(item)) {
        const Instance::IsoPairEntry& p = inst.isotropic_pairs.at(item);
        IsoPairMultiplicities m = isotropic_pair_multiplicities(
            resolve(inst.symp_objects, p.space, "symplectic object"),
            resolve(inst.subspaces, p.a, "subspace"), resolve(inst.subspaces, p.b, "subspace"));
        report["kind"] = "isotropic_pair";
        Json mult;
        mult["n1"] = m.n1;
        mult["n2"] = m.n2;
        mult["n3"] = m.n3;
        mult["n4"] = m.n4;
        mult["n5"] = m.n5;
        report["multiplicities"] = std::move(mult);
        WWIndices idx = ww_indices_from_multiplicities(m);
        report["predicted"] = Json{{"defect", idx.defect}, {"excess", idx.excess},
                                   {"shadow_dim", idx.shadow_dim}};
    } else {
        throw ValidationError("unknown triple or isotropic pair '" + item + "'");
    }
    finish(report, 1, 0);
    return CommandResult{0, std::move(report)};
}

CommandResult cmd_cotangent(const Instance& inst, const std::string& relation,
                            const std::string& second, std::uint64_t seed) {
    const LinearRelation& f = resolve(inst.relations, relation, "relation");
    SympRelation tf = cotangent(f);
    Json report = report_header("cotangent", seed);
    report["relation"] = relation;
    report["field"] = inst.field.str();
    report["target_dim"] = tf.target().dim();
    report["source_dim"] = tf.source().dim();
    report["space"] = subspace_to_json(tf.space());
    std::size_t passes = 0, failures = 0;
    bool lag = check_morphism(tf, CategoryTag::SLREL);
    report["lagrangian"] = lag;
    lag ? ++passes : ++failures;
    if (!second.empty()) {
        const LinearRelation& g = resolve(inst.relations, second, "relation");
        SympRelation tg = cotangent(g);
        bool functorial = cotangent(compose(f, g)) == compose(tf, tg);
        const std::size_t law = defect_pair(f, g) + excess_pair(f, g);
        bool indices = defect_pair(tf, tg) == law && excess_pair(tf, tg) == law;
        Json pair;
        pair["second"] = second;
        pair["functorial"] = functorial;
        pair["defect"] = defect_pair(tf, tg);
        pair["excess"] = excess_pair(tf, tg);
        pair["index_law"] = indices;
        report["pair"] = std::move(pair);
        functorial ? ++passes : ++failures;
        indices ? ++passes : ++failures;
    }
    finish(report, passes, failures);
    return CommandResult{failures == 0 ? 0 : 1, std::move(report)};
}

CommandResult cmd_invariants(const Instance& inst, const std::string& relation,
                             std::uint64_t seed) {
    std::optional<LinearRelation> f;
    Json extra;
    if (inst.relations.count(relation)) {
        f = inst.relations.at(relation);
    } else if (inst.symp_relations.count(relation)) {
        const SympRelation& s = inst.symp_relations.at(relation);
        f = s.as_linear();
        switch (s.classify()) {
            case SubspaceClass::Lagrangian: extra["class"] = "lagrangian"; break;
            case SubspaceClass::Isotropic: extra["class"] = "isotropic"; break;
            case SubspaceClass::Coisotropic: extra["class"] = "coisotropic"; break;
            default: extra["class"] = "none"; break;
        }
    } else {
        throw ValidationError("unknown relation '" + relation + "'");
    }
    IsoInvariants inv = iso_invariants(*f);
    Json report = report_header("invariants", seed);
    report["relation"] = relation;
    report["field"] = inst.field.str();
    report["dims"] = Json{{"target", inv.dim_target}, {"source", inv.dim_source},
                          {"dom", inv.dim_dom},       {"ker", inv.dim_ker},
                          {"im", inv.dim_im},         {"indet", inv.dim_indet}};
    report["predicates"] = Json{{"injective", is_injective(*f)},
                                {"coinjective", is_coinjective(*f)},
                                {"surjective", is_surjective(*f)},
                                {"cosurjective", is_cosurjective(*f)},
                                {"reduction", is_reduction(*f)},
                                {"coreduction", is_coreduction(*f)}};
    for (const auto& [k, v] : extra.items()) report[k] = v;
    finish(report, 1, 0);
    return CommandResult{0, std::move(report)};
}

}  // namespace linrel::cli
