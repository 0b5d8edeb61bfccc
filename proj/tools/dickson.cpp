// dickson: analyses of generalized Cayley-Dickson doublings from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dickson/catalog.hpp"
#include "dickson/dsl.hpp"

using json = nlohmann::ordered_json;
using namespace dickson;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnknownName("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> cli_seed) {
    if (cli_seed) return *cli_seed;
    if (const char* env = std::getenv("DICKSON_SEED")) return std::strtoull(env, nullptr, 10);
    return 12345;
}

json fingerprint_json(const std::optional<Fingerprint>& fp) {
    json j;
    auto opt_size = [](const std::optional<std::size_t>& v) {
        return v ? json(*v) : json(nullptr);
    };
    if (!fp) {
        for (const char* k : {"nuc_l", "nuc_m", "nuc_r", "nuc", "comm", "center",
                              "third_power_assoc_at_l", "der_dim", "der_derived_dim",
                              "der_center_dim", "derived_kernel_dim", "division"})
            j[k] = nullptr;
        return j;
    }
    j["nuc_l"] = fp->nuc_l;
    j["nuc_m"] = fp->nuc_m;
    j["nuc_r"] = fp->nuc_r;
    j["nuc"] = fp->nuc;
    j["comm"] = fp->comm;
    j["center"] = fp->center;
    j["third_power_assoc_at_l"] =
        fp->third_power_assoc_at_l ? json(*fp->third_power_assoc_at_l) : json(nullptr);
    j["der_dim"] = fp->der ? json(fp->der->dim) : json(nullptr);
    j["der_derived_dim"] = fp->der ? json(fp->der->derived_dim) : json(nullptr);
    j["der_center_dim"] = fp->der ? json(fp->der->center_dim) : json(nullptr);
    j["derived_kernel_dim"] = opt_size(fp->derived_kernel_dim);
    j["division"] = fp->division ? json(*fp->division) : json(nullptr);
    return j;
}

json certificate_json(const std::string& type, const DivisionCertificate& c) {
    json j;
    j["type"] = type;
    j["verdict"] = verdict_name(c.verdict);
    j["reason"] = c.reason;
    if (c.witness)
        j["witness"] = json::array({c.witness->first.str(), c.witness->second.str()});
    else
        j["witness"] = nullptr;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    return j;
}

json report_json(const std::string& name, const AlgebraPtr& alg,
                 const std::optional<Fingerprint>& fp, json certificates) {
    json j;
    j["algebra"] = name;
    j["field"] = alg ? json(alg->field().str()) : json(nullptr);
    if (alg && alg->doubling()) {
        const DoublingInfo& d = *alg->doubling();
        j["placement"] = placement_name(d.placement);
        j["scalar"] = AlgElement(d.base, d.scalar).str();
    } else {
        j["placement"] = nullptr;
        j["scalar"] = nullptr;
    }
    j["fingerprint"] = fingerprint_json(fp);
    j["certificates"] = std::move(certificates);
    j["versions"] = {{"dickson", kVersion}, {"schema", 1}};
    return j;
}

void print_fingerprint(const Fingerprint& fp) {
    std::cout << "  nuclei (l,m,r,full): " << fp.nuc_l << " " << fp.nuc_m << " " << fp.nuc_r
              << " " << fp.nuc << "   commuter: " << fp.comm << "   center: " << fp.center << "\n";
    if (fp.third_power_assoc_at_l)
        std::cout << "  third-power associative at l: " << (*fp.third_power_assoc_at_l ? "yes" : "no")
                  << "\n";
    if (fp.der)
        std::cout << "  Der: dim " << fp.der->dim << ", derived " << fp.der->derived_dim
                  << ", center " << fp.der->center_dim
                  << (fp.derived_kernel_dim
                          ? ", derived kernel " + std::to_string(*fp.derived_kernel_dim)
                          : "")
                  << "\n";
    if (fp.division) std::cout << "  division: " << *fp.division << "\n";
}

void print_header(const std::string& name, const AlgebraPtr& alg) {
    std::cout << name << ": " << alg->kind() << " over " << alg->field().str() << ", dim "
              << alg->dim();
    if (alg->doubling()) {
        const DoublingInfo& d = *alg->doubling();
        std::cout << ", " << placement_name(d.placement) << " doubling by "
                  << AlgElement(d.base, d.scalar).str();
    }
    std::cout << "\n";
}

int cmd_analyze(const SpecProgram& prog, const std::string& name, bool as_json) {
    AlgebraPtr a = prog.algebra(name);
    Fingerprint fp = fingerprint(a, a->dim() <= 8, true);
    if (as_json) {
        std::cout << report_json(name, a, fp, json::array()).dump(2) << "\n";
    } else {
        print_header(name, a);
        for (const std::string& warn :
             a->doubling()
                 ? DoublingSpec{a->doubling()->base, AlgElement(a->doubling()->base, a->doubling()->scalar),
                                a->doubling()->placement, a->doubling()->alt_middle_star_bar}
                       .warnings()
                 : std::vector<std::string>{})
            std::cout << "  warning: " << warn << "\n";
        print_fingerprint(fp);
    }
    return 0;
}

int cmd_probe(const SpecProgram& prog, const std::string& name, long trials, std::uint64_t seed,
              bool as_json) {
    AlgebraPtr a = prog.algebra(name);
    DivisionCertificate c = zero_divisor_probe(a, trials, seed);
    if (as_json) {
        std::cout << report_json(name, a, std::nullopt,
                                 json::array({certificate_json("probe", c)}))
                         .dump(2)
                  << "\n";
    } else {
        print_header(name, a);
        std::cout << "  probe (" << trials << " trials, seed " << seed
                  << "): " << verdict_name(c.verdict) << "\n  " << c.reason << "\n";
        if (c.witness)
            std::cout << "  witness: (" << c.witness->first.str() << ") * ("
                      << c.witness->second.str() << ") = 0\n";
    }
    return c.verdict == DivisionVerdict::NotDivision ? 3 : 0;
}

int cmd_certify(const SpecProgram& prog, const std::string& name, bool as_json) {
    AlgebraPtr a = prog.algebra(name);
    if (!a->doubling()) throw UnsupportedBase("certify needs a doubling; " + name + " is not one");
    const DoublingInfo& d = *a->doubling();
    DivisionCertificate c = division_certificate(
        {d.base, AlgElement(d.base, d.scalar), d.placement, d.alt_middle_star_bar});
    if (as_json) {
        std::cout << report_json(name, a, std::nullopt,
                                 json::array({certificate_json("division", c)}))
                         .dump(2)
                  << "\n";
    } else {
        print_header(name, a);
        std::cout << "  " << verdict_name(c.verdict) << " (" << c.reason << ")\n";
        if (c.witness)
            std::cout << "  witness: (" << c.witness->first.str() << ") * ("
                      << c.witness->second.str() << ") = 0\n";
    }
    return c.verdict == DivisionVerdict::NotDivision ? 3 : 0;
}

Matrix parse_matrix(const FieldSpec& f, const std::string& text, std::size_t n) {
    if (text == "identity") return Matrix::identity(f, n);
    std::vector<Vec> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        Vec r;
        std::stringstream cs(row);
        std::string cell;
        while (std::getline(cs, cell, ',')) r.push_back(parse_field_value(f, cell));
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(f, rows);
}

int cmd_isocheck(const SpecProgram& prog, const std::string& family, const std::string& source,
                 const std::string& target, const std::string& a_expr, const std::string& z_expr,
                 const std::string& m_text, bool conjugate, const std::string& matrix_text,
                 const std::string& placement, bool as_json) {
    AlgebraPtr src = prog.algebra(source);
    AlgebraMap map;
    if (family == "explicit") {
        if (target.empty()) throw UnknownName("explicit maps need --target");
        AlgebraPtr tgt = prog.algebra(target);
        map = AlgebraMap{src, tgt, parse_matrix(src->field(), matrix_text, src->dim()), "explicit"};
    } else {
        if (!src->doubling()) throw UnsupportedBase(source + " is not a doubling");
        AlgebraPtr base = src->doubling()->base;
        if (family == "scale") {
            map = iso_scale(src, identity_map(base), parse_field_value(src->field(), m_text));
        } else if (family == "inner") {
            AlgElement a = parse_element_expr(base, a_expr);
            AlgElement z = parse_element_expr(base, z_expr);
            std::optional<Placement> tp;
            if (!placement.empty())
                for (Placement p : {Placement::Left, Placement::Middle, Placement::Right,
                                    Placement::LeftStar, Placement::MiddleStar, Placement::RightStar})
                    if (placement_name(p) == placement) tp = p;
            map = iso_inner(src, a, z, conjugate, tp);
        } else if (family == "nonassoc") {
            map = iso_nonassoc_quat(src, parse_element_expr(base, z_expr), conjugate);
        } else if (family == "octdouble") {
            map = iso_octonion_double(src, identity_map(base),
                                      parse_field_value(src->field(), m_text));
        } else {
            throw UnknownName("unknown family: " + family);
        }
        if (!target.empty()) {
            AlgebraPtr tgt = prog.algebra(target);
            if (tgt->dim() != map.matrix.rows()) throw DimensionMismatch();
            map.target = tgt;
        }
    }
    std::pair<AlgElement, AlgElement> witness;
    bool pass = hom_check(map, &witness);
    if (as_json) {
        json j = report_json(source, src, std::nullopt, json::array());
        j["certificates"].push_back(
            {{"type", "isocheck"},
             {"family", map.family},
             {"verdict", pass ? "homomorphism" : "refuted"},
             {"witness", pass ? json(nullptr)
                              : json::array({witness.first.str(), witness.second.str()})}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "isocheck " << map.family << " on " << source << ": "
                  << (pass ? "homomorphism (hom_check passed)" : "refuted") << "\n";
        if (!pass)
            std::cout << "  refuting basis pair: (" << witness.first.str() << ", "
                      << witness.second.str() << ")\n";
    }
    return pass ? 0 : 3;
}

int cmd_catalog(const std::string& only, long trials, std::uint64_t seed, bool as_json) {
    CatalogReport rep = run_catalog(only, trials, seed);
    if (as_json) {
        json out = json::array();
        for (const CatalogEntry& e : rep.entries) {
            json certs = json::array();
            if (e.cert) certs.push_back(certificate_json("division", *e.cert));
            for (const CheckResult& c : e.checks)
                certs.push_back({{"type", "expectation"},
                                 {"name", c.name},
                                 {"verdict", c.pass ? "pass" : "fail"},
                                 {"reason", c.detail}});
            out.push_back(report_json(e.name, e.alg, e.fp, std::move(certs)));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "catalog (trials " << rep.trials << ", seed " << rep.seed << ")\n\n";
        for (const CatalogEntry& e : rep.entries) {
            if (e.alg)
                print_header(e.name, e.alg);
            else
                std::cout << e.name << ":\n";
            if (e.fp) print_fingerprint(*e.fp);
            if (e.cert) std::cout << "  certificate: " << verdict_name(e.cert->verdict) << " ("
                                  << e.cert->reason << ")\n";
            for (const CheckResult& c : e.checks)
                std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
                          << (c.detail.empty() ? "" : "  -- " + c.detail) << "\n";
            std::cout << "\n";
        }
        std::cout << (rep.ok() ? "all expectations hold" : "FAILED expectations listed above")
                  << "\n";
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analyses of generalized Cayley-Dickson doublings"};
    app.require_subcommand(1);

    std::string spec_path, name, only, family, source, target;
    std::string a_expr, z_expr = "1", m_text = "1", matrix_text = "identity", placement;
    bool as_json = false, conjugate = false;
    long trials = 1000;
    std::optional<std::uint64_t> seed_opt;

    auto add_common = [&](CLI::App* sub, bool needs_spec) {
        auto* o = sub->add_option("--spec", spec_path, "algebra spec file");
        if (needs_spec) o->required();
        sub->add_flag("--json", as_json, "machine-readable report");
    };

    auto* analyze = app.add_subcommand("analyze", "fingerprint a constructed algebra");
    add_common(analyze, true);
    analyze->add_option("name", name, "algebra name in the spec")->required();

    auto* probe = app.add_subcommand("probe", "seeded random zero-divisor search");
    add_common(probe, true);
    probe->add_option("name", name)->required();
    probe->add_option("--trials", trials, "number of trials");
    probe->add_option("--seed", seed_opt, "probe seed (default: DICKSON_SEED or 12345)");

    auto* certify = app.add_subcommand("certify", "certificate-grade division decision");
    add_common(certify, true);
    certify->add_option("name", name)->required();

    auto* isocheck = app.add_subcommand("isocheck", "build a family map and run hom_check");
    add_common(isocheck, true);
    isocheck->add_option("--family", family, "scale|inner|nonassoc|octdouble|explicit")->required();
    isocheck->add_option("--source", source)->required();
    isocheck->add_option("--target", target, "optional target algebra");
    isocheck->add_option("--a", a_expr, "element expression in the base");
    isocheck->add_option("--z", z_expr, "element expression in the base");
    isocheck->add_option("--m", m_text, "scaling factor");
    isocheck->add_option("--placement", placement, "target placement for inner maps");
    isocheck->add_flag("--conjugate", conjugate, "apply the base involution first");
    isocheck->add_option("--matrix", matrix_text, "explicit matrix: rows ';', entries ','");

    auto* catalog = app.add_subcommand("catalog", "run the built-in example catalog");
    add_common(catalog, false);
    catalog->add_option("--only", only, "filter by entry name or tag");
    catalog->add_option("--trials", trials, "probe trials")->default_val(10000);
    catalog->add_option("--seed", seed_opt, "probe seed (default: DICKSON_SEED or 12345)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        std::uint64_t seed = resolve_seed(seed_opt);
        if (catalog->parsed()) return cmd_catalog(only, trials, seed, as_json);
        SpecProgram prog = parse_spec(read_file(spec_path));
        if (analyze->parsed()) return cmd_analyze(prog, name, as_json);
        if (probe->parsed()) return cmd_probe(prog, name, trials, seed, as_json);
        if (certify->parsed()) return cmd_certify(prog, name, as_json);
        if (isocheck->parsed())
            return cmd_isocheck(prog, family, source, target, a_expr, z_expr, m_text, conjugate,
                                matrix_text, placement, as_json);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedBase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
