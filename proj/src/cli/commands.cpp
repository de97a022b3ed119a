#include "sheafcx/cli.hpp"

#include "sheafcx/assoc.hpp"
#include "sheafcx/cache.hpp"
#include "sheafcx/errors.hpp"
#include "sheafcx/homology.hpp"
#include "sheafcx/io.hpp"
#include "sheafcx/newton.hpp"
#include "sheafcx/report.hpp"
#include "sheafcx/sestimator.hpp"
#include "sheafcx/surface.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <thread>

namespace sheafcx {

namespace {

struct Options {
    bool json = false;
    unsigned threads = 1;
    std::string file;
    std::string idealName;
    std::string secondName;
    int p = 2;
    int pmax = 3;
    std::string tol = "1/100";
    std::string s;
    bool fromBracket = false;
    std::string cacheDir;
    std::string dRange = "1..6";
    std::string hName = "H";
    std::string cName = "C";
    int a = 0;
    int b = 0;
};

struct Loaded {
    IdealDocument doc;
    const IdealEntry* entry;
};

Loaded load_ideal(const Options& o) {
    Loaded l{parse_ideal_document(read_text_file(o.file)), nullptr};
    if (l.doc.ideals.empty()) throw DomainError("'" + o.file + "' defines no ideals");
    l.entry = o.idealName.empty() ? &l.doc.ideals.front() : &l.doc.find(o.idealName);
    return l;
}

std::string gens_string(const MonomialIdeal& ideal) { return ideal.to_string(); }

std::string q_text(const Rational& q) {
    const std::string exact = to_exact_string(q);
    const std::string dec = to_decimal_string(q);
    return exact.find('/') == std::string::npos ? exact : exact + " (" + dec + ")";
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("malformed range '" + text + "'", 0, 0);
    }
}

// Runs f(k) for k in [0, count) on up to `threads` workers; the first
// exception in index order is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < count;) {
            try {
                f(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

class Commands {
public:
    Commands(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void info() {
        const auto l = load_ideal(o_);
        const auto& I = l.entry->ideal;
        const MonomialIdeal sat = saturate(I);
        const MonomialIdeal rad = radical(I);
        char hash[24];
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(canonical_hash(I)));
        if (o_.json) {
            emit("info", Json{{"ideal", ideal_json(I)},
                              {"radical", ideal_json(rad)},
                              {"saturation", ideal_json(sat)},
                              {"saturated", sat == I},
                              {"hash", hash}});
            return;
        }
        out_ << "ideal       " << gens_string(I) << '\n'
             << "radical     " << gens_string(rad) << '\n'
             << "saturation  " << gens_string(sat) << '\n'
             << "hash        " << hash << '\n';
    }

    void reg() {
        const auto l = load_ideal(o_);
        const auto r = regularity(l.entry->ideal);
        if (o_.json) return emit("reg", regularity_json(r));
        const Ring& ring = r.saturatedInput.ring();
        out_ << "saturation  " << gens_string(r.saturatedInput) << '\n'
             << "regularity  " << r.moduleRegularity << "  (beta_" << r.witnessIndex << " at "
             << to_string(r.witnessDegree, ring) << ")\n"
             << "betti\n";
        for (const auto& [key, rank] : r.betti.entries())
            out_ << "  i=" << key.first << "  " << std::setw(12) << std::left
                 << to_string(key.second, ring) << std::right << " rank " << rank << '\n';
    }

    void gendeg() {
        const auto l = load_ideal(o_);
        const int d = generation_degree(l.entry->ideal);
        if (o_.json) return emit("gendeg", Json{{"generationDegree", d}});
        out_ << "generation degree  " << d << '\n';
    }

    void power_cmd() {
        const auto l = load_ideal(o_);
        const MonomialIdeal jp = power(l.entry->ideal, o_.p);
        const MonomialIdeal sat = saturate(jp);
        const int d = generation_degree(jp);
        const int r = regularity(jp).moduleRegularity;
        if (o_.json)
            return emit("power", Json{{"p", o_.p},
                                      {"power", ideal_json(jp)},
                                      {"saturation", ideal_json(sat)},
                                      {"dp", d},
                                      {"regp", r}});
        out_ << "power p=" << o_.p << "  " << gens_string(jp) << '\n'
             << "saturation  " << gens_string(sat) << '\n'
             << "d_p " << d << "  reg_p " << r << '\n';
    }

    void rees() {
        const auto l = load_ideal(o_);
        const auto& I = l.entry->ideal;
        const auto np = newton_polyhedron(I);
        const auto vals = rees_valuations(I);
        const Ring& ring = I.ring();
        std::int64_t r = 0;
        for (const auto& v : vals) r = std::max(r, v.coefficient);
        if (o_.json) {
            Json facets = Json::array(), vertices = Json::array();
            for (const auto& v : vals) facets.push_back(facet_json(v, ring));
            for (const auto& v : np.vertices) vertices.push_back(to_string(v, ring));
            Json res{{"valuations", facets}, {"vertices", vertices}, {"r", r}};
            try {
                res["sheafR"] = sheaf_r_coefficient(I);
            } catch (const DomainError&) {
                res["sheafR"] = nullptr;
            }
            return emit("rees", res);
        }
        out_ << "vertices";
        for (const auto& v : np.vertices) out_ << ' ' << to_string(v, ring);
        out_ << "\nvaluations\n";
        for (const auto& v : vals) {
            out_ << "  (";
            for (std::size_t i = 0; i < v.normal.size(); ++i) out_ << (i ? "," : "") << v.normal[i];
            out_ << ")  r=" << v.coefficient << "  center {";
            for (std::size_t i = 0; i < v.center.size(); ++i)
                out_ << (i ? "," : "") << ring.name(v.center[i]);
            out_ << "}" << (v.irrelevant() ? "  irrelevant" : "") << '\n';
        }
        out_ << "r(J) " << r << '\n';
    }

    void closure() {
        const auto l = load_ideal(o_);
        const auto& I = l.entry->ideal;
        const MonomialIdeal c = integral_closure(I);
        if (o_.json)
            return emit("closure", Json{{"closure", ideal_json(c)}, {"integrallyClosed", c == I}});
        out_ << "closure  " << gens_string(c) << '\n'
             << "integrally closed  " << (c == I ? "yes" : "no") << '\n';
    }

    void bezout() {
        const auto l = load_ideal(o_);
        const auto& I = l.entry->ideal;
        Rational s;
        Json bracket = nullptr;
        if (o_.fromBracket) {
            const auto b = s_bracket(I, o_.pmax, parse_rational(o_.tol), seq_options());
            s = b.upper;
            bracket = bracket_json(b, I.ring());
        } else {
            if (o_.s.empty()) throw DomainError("bezout needs --s or --from-bracket");
            s = parse_rational(o_.s);
        }
        const auto r = bezout_check(I, s);
        if (o_.json) {
            Json res = bezout_json(r, I.ring());
            if (!bracket.is_null()) res["bracket"] = bracket;
            return emit("bezout", res);
        }
        out_ << "s            " << q_text(r.sUsed) << '\n'
             << "sum r_i s^dim  " << q_text(r.lhs) << '\n'
             << "s^n          " << q_text(r.rhs) << '\n'
             << "bound        " << (r.satisfied ? "holds" : "FAILS") << '\n'
             << "r(J) <= max(1,s)^n  " << r.rCoefficient << " <= " << q_text(r.rBound)
             << (r.rBoundSatisfied ? "  holds" : "  FAILS") << '\n';
    }

    void adeg() {
        const auto l = load_ideal(o_);
        const auto& I = l.entry->ideal;
        const auto profile = adeg_profile(I);
        const auto sp = standard_pairs(profile.computedOn);
        const auto primes = associated_primes(profile.computedOn);
        const Ring& ring = I.ring();
        if (o_.json) {
            Json res = adeg_json(profile);
            res["standardPairs"] = standard_pairs_json(sp, ring);
            Json ps = Json::array();
            for (const auto& p : primes) {
                Json vars = Json::array();
                for (auto v : p.variables) vars.push_back(ring.name(v));
                ps.push_back(vars);
            }
            res["associatedPrimes"] = ps;
            return emit("adeg", res);
        }
        out_ << "saturation  " << gens_string(profile.computedOn) << '\n';
        for (const auto& [k, v] : profile.byCodim) out_ << "adeg^" << k << "  " << v << '\n';
        out_ << "associated primes";
        for (const auto& p : primes) {
            out_ << " (";
            for (std::size_t i = 0; i < p.variables.size(); ++i)
                out_ << (i ? "," : "") << ring.name(p.variables[i]);
            out_ << ")";
        }
        out_ << '\n';
    }

    void nilp() {
        const auto l = load_ideal(o_);
        const auto r = nilpotency_index(l.entry->ideal, 64, o_.pmax);
        if (o_.json) return emit("nilp", nilpotency_json(r));
        out_ << "nilpotency index  " << r.index << "\n"
             << "r(J)  " << r.rCoefficient << "   index <= n r(J): " << (r.boundHolds ? "holds" : "FAILS")
             << '\n';
        for (const auto& [p, c] : r.inclusions)
            out_ << "p=" << p << "  exponent " << c.exponent << "  least " << c.leastExponent << "  "
                 << (c.holds ? "holds" : "FAILS") << '\n';
    }

    void sinv() {
        const auto l = load_ideal(o_);
        const auto& I = l.entry->ideal;
        std::optional<std::filesystem::path> dir;
        if (!o_.cacheDir.empty())
            dir = std::filesystem::path(o_.cacheDir);
        else
            dir = default_cache_dir();
        PowerSequence prior{I, {}};
        std::filesystem::path file;
        if (dir) {
            file = cache_file(*dir, I);
            prior.entries = read_cache(file, I);
        }
        auto b = s_bracket(I, o_.pmax, parse_rational(o_.tol), seq_options(), &prior);
        if (dir) write_cache(file, I, b.sequence.entries);
        if (o_.json) return emit("sinv", bracket_json(b, I.ring()));
        out_ << "s in [" << q_text(b.lower) << ", " << q_text(b.upper) << "]"
             << (b.converged ? "  converged" : "  not converged") << '\n';
        out_ << "lower: chart " << I.ring().name(b.lowerWitness.chart) << " weights (";
        for (std::size_t i = 0; i < b.lowerWitness.weights.size(); ++i)
            out_ << (i ? "," : "") << b.lowerWitness.weights[i];
        out_ << ")\nupper: d_" << b.upperP << " = " << b.upperD << '\n';
        out_ << "  p  d_p  reg_p\n";
        for (const auto& [p, e] : b.sequence.entries)
            out_ << std::setw(3) << p << std::setw(5) << e.dp << std::setw(7) << e.regp << '\n';
    }

    void props() {
        const auto l = load_ideal(o_);
        if (l.doc.ideals.size() < 2 && o_.secondName.empty())
            throw DomainError("props needs two ideals");
        const auto& first = l.entry->ideal;
        const auto& second = o_.secondName.empty()
                                 ? (l.entry == &l.doc.ideals[0] ? l.doc.ideals[1] : l.doc.ideals[0]).ideal
                                 : l.doc.find(o_.secondName).ideal;
        const auto r = property_checks(first, second, o_.pmax, seq_options());
        if (o_.json) return emit("props", property_json(r, first.ring()));
        auto line = [&](const char* name, const SBracket& b) {
            out_ << std::setw(16) << std::left << name << std::right << "[" << q_text(b.lower) << ", "
                 << q_text(b.upper) << "]\n";
        };
        line("I1", r.first);
        line("I2", r.second);
        line("I1*I2", r.product);
        if (r.sum) line("I1+I2", *r.sum);
        line("closure(I1)", r.firstClosure);
        line("closure(I2)", r.secondClosure);
        out_ << "product bound " << (r.productBound ? "holds" : "FAILS") << ", sum bound "
             << (r.sumBound ? "holds" : "FAILS") << ", closure overlap "
             << (r.firstClosureOverlap && r.secondClosureOverlap ? "holds" : "FAILS") << '\n';
    }

    void surface() {
        const auto doc = parse_lattice_document(read_text_file(o_.file));
        const auto& H = doc.find(o_.hName);
        const auto& C = doc.find(o_.cName);
        const auto res = s_invariant_divisorial(doc.lattice, H, C);
        std::optional<RescaleReport> rescale;
        if (o_.a > 0) rescale = rescale_check(doc.lattice, H, C, o_.a, o_.b);
        if (o_.json) {
            Json nef = Json::object();
            for (const auto& c : doc.classes) nef[c.name] = is_nef(doc.lattice, c.divisor);
            Json r = s_invariant_json(res);
            r["nef"] = nef;
            if (rescale) r["rescale"] = rescale_json(*rescale);
            return emit("surface", r);
        }
        out_ << "s = " << res.s.to_string() << "  (" << std::fixed << std::setprecision(6)
             << res.s.to_double() << std::defaultfloat << ")\n"
             << "discriminant " << to_exact_string(res.discriminant)
             << (res.irrational ? "  irrational" : "  rational") << '\n'
             << "boundary probes " << (res.probesVerified ? "verified" : "FAILED") << '\n';
        for (const auto& c : doc.classes)
            out_ << "nef(" << c.name << ") " << (is_nef(doc.lattice, c.divisor) ? "yes" : "no") << '\n';
        if (rescale)
            out_ << "rescale a=" << o_.a << " b=" << o_.b << ": " << rescale->rescaled.to_string()
                 << (rescale->holds ? "  holds" : "  FAILS") << '\n';
    }

    void pathology() {
        const auto [lo, hi] = parse_range(o_.dRange);
        if (lo < 0 || hi < lo) throw DomainError("d-range must satisfy 0 <= A <= B");
        const Ring ring = Ring::standard(4);
        struct Row {
            int d;
            CurveWitness lower;
            AdegProfile adeg;
            int reg;
            int nilp;
            std::optional<Rational> upper;
        };
        std::vector<std::optional<Row>> rows(static_cast<std::size_t>(hi - lo + 1));
        parallel_for(rows.size(), o_.threads, [&](std::size_t k) {
            const int d = lo + static_cast<int>(k);
            const auto I = MonomialIdeal::from_generators(
                ring, {Monomial({2, 0, 0, 0}), Monomial({1, 1, d, 0}), Monomial({0, 2, 0, 0})});
            Row r{d, curve_lower_bound(I), adeg_profile(I), regularity(I).moduleRegularity,
                  nilpotency_index(I, 64, 0).index, std::nullopt};
            if (o_.pmax > 0) r.upper = s_bracket(I, o_.pmax, Rational(1, 100)).upper;
            rows[k] = std::move(r);
        });
        if (o_.json) {
            Json table = Json::array();
            for (const auto& r : rows) {
                Json adeg = Json::object();
                for (const auto& [k, v] : r->adeg.byCodim) adeg[std::to_string(k)] = v;
                table.push_back({{"d", r->d},
                                 {"sLower", rational_json(r->lower.bound)},
                                 {"sUpper", r->upper ? rational_json(*r->upper) : Json(nullptr)},
                                 {"adeg", adeg},
                                 {"reg", r->reg},
                                 {"nilp", r->nilp}});
            }
            return emit("pathology", Json{{"rows", table}});
        }
        out_ << "   d  s-lower  s-upper  adeg2  adeg3  reg  nilp\n";
        for (const auto& r : rows) {
            out_ << std::setw(4) << r->d << std::setw(9) << to_exact_string(r->lower.bound)
                 << std::setw(9) << (r->upper ? to_exact_string(*r->upper) : std::string("-"))
                 << std::setw(7) << r->adeg.at(2) << std::setw(7) << r->adeg.at(3) << std::setw(5)
                 << r->reg << std::setw(6) << r->nilp << '\n';
        }
    }

    void set_started() { start_ = std::chrono::steady_clock::now(); }

private:
    SequenceOptions seq_options() const {
        SequenceOptions s;
        s.threads = o_.threads;
        return s;
    }

    void emit(const std::string& command, Json results) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        Json inputs = Json::object();
        if (!o_.file.empty()) inputs["file"] = o_.file;
        if (!o_.idealName.empty()) inputs["ideal"] = o_.idealName;
        if (command != "surface" && command != "pathology" && !o_.file.empty()) {
            const auto l = load_ideal(o_);
            inputs["name"] = l.entry->name;
            inputs["generators"] = ideal_json(l.entry->ideal);
        }
        out_ << make_report(command, inputs, std::move(results), secs).dump(2) << '\n';
    }

    const Options& o_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Invariants of monomial ideal sheaves on projective space", "sheafcx"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit a JSON report");
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    std::function<void(Commands&)> action;
    auto with_file = [&](const std::string& name, const std::string& help,
                         void (Commands::*fn)()) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, "Ideal file")->required();
        sub->add_option("--ideal", o.idealName, "Ideal name (default: first in file)");
        sub->callback([&action, fn] { action = [fn](Commands& c) { (c.*fn)(); }; });
        return sub;
    };

    with_file("info", "Canonical form, radical and saturation", &Commands::info);
    with_file("reg", "Regularity and Betti table of the saturation", &Commands::reg);
    with_file("gendeg", "Generation degree", &Commands::gendeg);
    with_file("power", "A power of the ideal", &Commands::power_cmd)
        ->add_option("--p", o.p, "Exponent")
        ->check(CLI::Range(1, 1000));
    with_file("rees", "Newton polyhedron facets and Rees valuations", &Commands::rees);
    with_file("closure", "Integral closure", &Commands::closure);
    auto* bez = with_file("bezout", "Degree bound sum r_i s^dim Z_i <= s^n", &Commands::bezout);
    bez->add_option("--s", o.s, "Value of s (rational)");
    bez->add_flag("--from-bracket", o.fromBracket, "Use the certified upper bracket endpoint");
    bez->add_option("--pmax", o.pmax, "Largest power for the bracket")->check(CLI::Range(1, 100));
    bez->add_option("--tol", o.tol, "Bracket tolerance");
    with_file("adeg", "Arithmetic degree profile and associated primes", &Commands::adeg);
    with_file("nilp", "Nilpotency index and power inclusions", &Commands::nilp)
        ->add_option("--pmax", o.pmax, "Largest p to check")
        ->check(CLI::Range(0, 20));
    auto* sinv = with_file("sinv", "Bracket for the s-invariant", &Commands::sinv);
    sinv->add_option("--pmax", o.pmax, "Largest power")->check(CLI::Range(1, 100));
    sinv->add_option("--tol", o.tol, "Convergence tolerance (rational)");
    sinv->add_option("--cache", o.cacheDir, "Cache directory (default: $SHEAFCX_CACHE_DIR)");
    auto* props = with_file("props", "Product, sum and closure checks on two ideals", &Commands::props);
    props->add_option("--second", o.secondName, "Second ideal name");
    props->add_option("--pmax", o.pmax, "Largest power")->check(CLI::Range(1, 100));

    auto* surf = app.add_subcommand("surface", "Nef threshold on a Neron-Severi lattice");
    surf->add_option("file", o.file, "Lattice file")->required();
    surf->add_option("--H", o.hName, "Ample class name");
    surf->add_option("--C", o.cName, "Divisor class name");
    surf->add_option("--a", o.a, "Rescale H by a (enables the rescale check)")->check(CLI::Range(1, 1000));
    surf->add_option("--b", o.b, "Add b*H to C")->check(CLI::Range(0, 1000));
    surf->callback([&] { action = [](Commands& c) { c.surface(); }; });

    auto* path = app.add_subcommand("pathology", "The family (x^2, x*y*z^d, y^2) in P^3");
    path->add_option("--d-range", o.dRange, "Range A..B of d");
    path->add_option("--pmax", o.pmax, "Largest power for upper bounds (0 skips them)")
        ->check(CLI::Range(0, 100));
    path->callback([&] { action = [](Commands& c) { c.pathology(); }; });
    // pathology takes no file; its pmax defaults to no upper bounds.
    path->preparse_callback([&](std::size_t) { o.pmax = 0; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    Commands commands(o, out);
    commands.set_started();
    try {
        action(commands);
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace sheafcx
