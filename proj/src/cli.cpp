#include "orekit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "orekit/certificate_file.hpp"
#include "orekit/weierstrass.hpp"

namespace orekit::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
    std::string command;
    long precision = kDefaultPrecision;
    long bound = -1;  // per-command default when negative
    std::string ring = "S";
    std::string field = "Q";
    std::string out_path;
    std::string format = "text";
    std::vector<std::string> inputs;
    std::string alpha, rho, q;
    std::vector<std::string> deltas, base_rows;
    std::string kind = "augmented";
    std::string method = "division";
    int var = 1;
    int index = 0;
    bool generic = false;
};

// Ordered key/value lines; the machine format is "key = value".
class Report {
public:
    void add(std::string key, std::string value) { kv_.emplace_back(std::move(key), std::move(value)); }
    std::string render(bool machine) const
    {
        std::string out;
        for (const auto& [k, v] : kv_) out += k + (machine ? " = " : ": ") + v + "\n";
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

struct Output {
    Report report;
    std::optional<std::string> raw;  // file contents (reduce)
    int code = kSuccess;
};

int code_of(Verdict v)
{
    switch (v) {
    case Verdict::yes: return kSuccess;
    case Verdict::no: return kNegative;
    case Verdict::indeterminate: return kIndeterminate;
    }
    return kUsage;
}

int worst(int a, int b)
{
    // A definite negative outranks an undecided one.
    if (a == kNegative || b == kNegative) return kNegative;
    return std::max(a, b);
}

int ring_dimension(const std::string& ring)
{
    if (ring == "S") return 0;
    if (ring.size() >= 2 && ring[0] == 'D') {
        try {
            std::size_t used = 0;
            const int n = std::stoi(ring.substr(1), &used);
            if (used == ring.size() - 1 && n >= 1 && n <= 16) return n;
        } catch (const std::logic_error&) {
        }
    }
    throw UsageError("--ring must be S or D<n> with 1 <= n <= 16, got '" + ring + "'");
}

void need_inputs(const Options& o, std::size_t lo, std::size_t hi, const char* what)
{
    if (o.inputs.size() < lo || o.inputs.size() > hi)
        throw UsageError(o.command + " expects " + what);
}

// Input errors quote the offending text.
template <class Fn>
auto parsing(const std::string& text, Fn&& fn)
{
    try {
        return fn();
    } catch (const text::SyntaxError& e) {
        throw UsageError("in '" + text + "': " + e.what());
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<std::string> split_row(const std::string& row)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = row.find(',', start);
        out.push_back(row.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}

long parse_count(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used == s.size() && v >= 0) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
}

// ---------------------------------------------------------------------------
// Ring S over a coefficient field F.

template <CoefficientField F>
class SCommands {
public:
    using P = OrePoly<F>;

    SCommands(const Options& o) : o_(o), working_{o.precision} {}

    Output dispatch()
    {
        const std::string& c = o_.command;
        if (c == "mul") return mul();
        if (c == "apply") return apply();
        if (c == "divide") return divide();
        if (c == "gcrd") return gcrd();
        if (c == "lclm") return lclm_cmd();
        if (c == "commx" || c == "commd") return commutator(c == "commx");
        if (c == "hermite") return hermite();
        if (c == "member") return member();
        if (c == "colength") return colength_cmd();
        if (c == "reduce") return reduce_cmd();
        if (c == "check") return check();
        if (c == "witness") return witness();
        if (c == "multiplier") return multiplier();
        if (c == "twogen") return twogen();
        if (c == "principal") return principal();
        throw UsageError(c + " is not available over ring S");
    }

private:
    P parse(const std::string& s) const
    {
        return parsing(s, [&] { return text::parse_ore<F>(s, working_); });
    }
    std::vector<P> parse_all(const std::vector<std::string>& v) const
    {
        std::vector<P> out;
        for (const auto& s : v) out.push_back(parse(s));
        return out;
    }
    ModuleVector<F> parse_row(const std::string& row) const { return parse_all(split_row(row)); }
    SpanPresentation<F> parse_rows(const std::vector<std::string>& rows) const
    {
        SpanPresentation<F> m;
        for (const auto& r : rows) {
            m.generators.push_back(parse_row(r));
            if (m.generators.size() > 1 && m.generators.back().size() != m.rank) throw UsageError("rows of different length");
            m.rank = m.generators.back().size();
        }
        return m;
    }
    static std::string show(const P& p) { return text::print(p); }
    static std::string show(const ModuleVector<F>& v)
    {
        std::vector<std::string> parts;
        for (const auto& e : v) parts.push_back(show(e));
        return join(parts, ", ");
    }

    Output mul()
    {
        need_inputs(o_, 1, 64, "one or more operators");
        P r = parse(o_.inputs[0]);
        for (std::size_t i = 1; i < o_.inputs.size(); ++i) r = r * parse(o_.inputs[i]);
        Output out;
        out.report.add("result", show(r));
        return out;
    }

    Output apply()
    {
        need_inputs(o_, 2, 2, "an operator and a series");
        const P a = parse(o_.inputs[0]);
        const P f = parse(o_.inputs[1]);
        if (f.size() > 1) throw UsageError("the second input must be a series (no d)");
        Output out;
        out.report.add("result", text::print(apply_to_series(a, f.coeff(0))));
        return out;
    }

    Output divide()
    {
        need_inputs(o_, 2, 2, "a dividend and a divisor");
        const DivisionResult<F> r = euclidean_divide(parse(o_.inputs[0]), parse(o_.inputs[1]), working_);
        Output out;
        out.report.add("quotient", show(r.quotient));
        out.report.add("remainder", show(r.remainder));
        return out;
    }

    Output gcrd()
    {
        need_inputs(o_, 2, 2, "two operators");
        const GcrdResult<F> g = gcrd_bezout(parse(o_.inputs[0]), parse(o_.inputs[1]), working_);
        Output out;
        out.report.add("gcrd", show(g.gcrd));
        out.report.add("u", show(g.u));
        out.report.add("v", show(g.v));
        return out;
    }

    Output lclm_cmd()
    {
        need_inputs(o_, 2, 2, "two operators");
        const LclmResult<F> l = lclm(parse(o_.inputs[0]), parse(o_.inputs[1]), working_);
        Output out;
        out.report.add("lclm", show(l.lclm));
        out.report.add("s", show(l.s));
        out.report.add("t", show(l.t));
        return out;
    }

    Output commutator(bool with_x)
    {
        need_inputs(o_, 2, 2, "an operator and a positive count");
        const long nu = parse_count(o_.inputs[1], "the commutator count");
        if (nu < 1) throw UsageError("the commutator count must be positive");
        const P a = parse(o_.inputs[0]);
        Output out;
        out.report.add("result", show(with_x ? nfold_commutator_x(a, nu) : nfold_commutator_d(a, nu)));
        return out;
    }

    Output hermite()
    {
        need_inputs(o_, 1, 256, "one or more rows");
        const ReducedForm<F> r = hermite_reduce(parse_rows(o_.inputs), working_);
        Output out;
        out.report.add("rank", std::to_string(r.rank));
        for (std::size_t i = 0; i < r.rank; ++i) out.report.add("row." + std::to_string(i + 1), show(r.rows[i]));
        for (std::size_t i = 0; i < r.rank; ++i) out.report.add("transform." + std::to_string(i + 1), show(r.transform[i]));
        out.report.add("inexact_zero", r.inexact_zero ? "yes" : "no");
        return out;
    }

    Output member()
    {
        need_inputs(o_, 2, 256, "a vector followed by the generator rows");
        const ModuleVector<F> w = parse_row(o_.inputs[0]);
        const SpanPresentation<F> m = parse_rows({o_.inputs.begin() + 1, o_.inputs.end()});
        const MembershipResult<F> r = membership(w, m, working_);
        Output out;
        out.report.add("verdict", to_string(r.verdict));
        for (std::size_t j = 0; j < r.coefficients.size(); ++j)
            out.report.add("coefficient." + std::to_string(j + 1), show(r.coefficients[j]));
        out.code = code_of(r.verdict);
        return out;
    }

    Output colength_cmd()
    {
        need_inputs(o_, 1, 1, "one operator");
        Output out;
        out.report.add("colength", std::to_string(colength(parse(o_.inputs[0]), working_)));
        return out;
    }

    SpanContext<F> context() const
    {
        if (o_.alpha.empty()) throw UsageError(o_.command + " needs --alpha");
        if (o_.deltas.empty()) throw UsageError(o_.command + " needs at least one --delta");
        SpanContext<F> ctx{parse(o_.alpha), parse_all(o_.deltas)};
        validate(ctx);
        return ctx;
    }

    Output reduce_cmd()
    {
        need_inputs(o_, 0, 0, "no positional inputs");
        CertificateFile<F> file;
        file.context = context();
        file.precision = o_.precision;
        const ReductionResult<F> r = reduce(file.context, working_);
        file.certificates = r.certificates;
        Output out;
        out.raw = write_certificate_file(file);
        out.report.add("certificates", std::to_string(r.certificates.size()));
        out.report.add("working_precision", std::to_string(r.transcript.working_precision));
        out.report.add("retries", std::to_string(r.transcript.retries));
        out.report.add("tie_eliminations", std::to_string(r.transcript.tie_eliminations));
        out.report.add("valuation_shifts", std::to_string(r.transcript.valuation_shifts));
        return out;
    }

public:
    static Output check_text(const std::string& contents)
    {
        ReadStatus st;
        const CertificateFile<F> file =
            parsing("certificate file", [&] { return read_certificate_file<F>(contents, st); });
        validate(file.context);
        Output out;
        out.report.add("digest", st.digest_ok ? "ok" : "mismatch");
        int code = st.digest_ok ? kSuccess : kNegative;
        for (const auto& c : file.certificates) {
            const CheckVerdict v = certificate_check(file.context, c);
            out.report.add("certificate." + std::to_string(c.target + 1), to_string(v));
            code = worst(code, v == CheckVerdict::valid ? kSuccess : v == CheckVerdict::invalid ? kNegative : kIndeterminate);
        }
        out.report.add("verdict", code == kSuccess ? "valid" : code == kNegative ? "invalid" : "indeterminate");
        out.code = code;
        return out;
    }

private:
    Output check() { throw UsageError("internal: check is dispatched by field"); }

    Output witness()
    {
        need_inputs(o_, 0, 0, "no positional inputs (use --rho, --alpha, --delta, --base)");
        WitnessProblem<F> p;
        if (o_.kind == "module-extension") {
            p.kind = WitnessKind::module_extension;
            if (o_.alpha.empty()) throw UsageError("module-extension needs --alpha");
            p.alpha = parse(o_.alpha);
            p.base = parse_rows(o_.base_rows);
            if (o_.base_rows.empty()) p.base.rank = o_.deltas.size();
        } else if (o_.kind == "right-multiple" || o_.kind == "augmented") {
            p.kind = o_.kind == "augmented" ? WitnessKind::augmented : WitnessKind::right_multiple;
            if (o_.rho.empty()) throw UsageError(o_.kind + " needs --rho");
            p.rho = parse(o_.rho);
        } else {
            throw UsageError("--kind must be module-extension, right-multiple or augmented");
        }
        p.deltas = parse_all(o_.deltas);
        const WitnessResult r = witness_search(p, o_.bound < 0 ? 3 : o_.bound, working_);
        Output out;
        out.report.add("status", to_string(r.status));
        if (r.status == WitnessStatus::found) out.report.add("f", text::print(r.f));
        out.report.add("candidates", std::to_string(r.candidates_tried));
        out.report.add("indeterminate_candidates", std::to_string(r.indeterminate_candidates));
        out.code = r.status == WitnessStatus::found ? kSuccess
                   : r.status == WitnessStatus::bound_exhausted ? kNegative
                                                                : kIndeterminate;
        return out;
    }

    Output multiplier()
    {
        need_inputs(o_, 1, 256, "one or more operators a_j (with --rho and --q)");
        if (o_.rho.empty() || o_.q.empty()) throw UsageError("multiplier needs --rho and --q");
        const auto checks = verify_multiplier(parse(o_.rho), parse(o_.q), parse_all(o_.inputs), working_);
        Output out;
        int code = kSuccess;
        for (std::size_t j = 0; j < checks.size(); ++j) {
            const std::string k = std::to_string(j + 1);
            out.report.add("verdict." + k, to_string(checks[j].verdict));
            out.report.add("quotient." + k, show(checks[j].quotient));
            out.report.add("remainder." + k, show(checks[j].remainder));
            code = worst(code, code_of(checks[j].verdict));
        }
        out.code = code;
        return out;
    }

    Output twogen()
    {
        need_inputs(o_, 5, 5, "five operators a b c d e");
        const std::vector<P> v = parse_all(o_.inputs);
        const TwoGeneration<F> r = verify_two_generation(v[0], v[1], v[2], v[3], v[4], working_);
        Output out;
        out.report.add("verdict", to_string(r.verdict));
        out.report.add("gcrd", show(r.gcrd));
        if (r.verdict == Verdict::yes) {
            out.report.add("first", show(r.first));
            out.report.add("second", show(r.second));
        }
        out.code = code_of(r.verdict);
        return out;
    }

    Output principal()
    {
        need_inputs(o_, 1, 256, "one or more generators");
        const PrincipalGenerator<F> r = principal_generator(parse_all(o_.inputs), working_);
        Output out;
        out.report.add("generator", show(r.generator));
        for (std::size_t j = 0; j < r.coefficients.size(); ++j)
            out.report.add("coefficient." + std::to_string(j + 1), show(r.coefficients[j]));
        for (std::size_t j = 0; j < r.cofactors.size(); ++j)
            out.report.add("cofactor." + std::to_string(j + 1), show(r.cofactors[j]));
        return out;
    }

    const Options& o_;
    Precision working_;
};

// ---------------------------------------------------------------------------
// Ring D_n.

class DCommands {
public:
    DCommands(const Options& o, int n) : o_(o), n_(n) {}

    Output dispatch()
    {
        const std::string& c = o_.command;
        if (c == "mul") return mul();
        if (c == "apply") return apply();
        if (c == "wprep") return wprep();
        if (c == "decompose") return decompose();
        throw UsageError(c + " is only available over ring S");
    }

private:
    DiffOperator parse(const std::string& s) const
    {
        return parsing(s, [&] { return text::parse_operator(s, n_, o_.precision); });
    }
    PowerSeries parse_series(const std::string& s) const
    {
        return parsing(s, [&] { return text::parse_series(s, n_, o_.precision); });
    }
    std::string show(const DiffOperator& a) const { return text::print(a, o_.precision); }
    std::string show(const PowerSeries& p) const { return text::print(p, o_.precision); }

    Output mul()
    {
        need_inputs(o_, 1, 64, "one or more operators");
        // One expression, so exact inputs are multiplied before truncation.
        for (const auto& s : o_.inputs) parse(s);
        std::vector<std::string> factors;
        for (const auto& s : o_.inputs) factors.push_back("(" + s + ")");
        const DiffOperator r = parse(join(factors, "*"));
        Output out;
        out.report.add("result", show(r));
        return out;
    }

    Output apply()
    {
        need_inputs(o_, 2, 2, "an operator and a series");
        Output out;
        out.report.add("result", show(apply_to_series(parse(o_.inputs[0]), parse_series(o_.inputs[1]))));
        return out;
    }

    Output wprep()
    {
        need_inputs(o_, 1, 1, "one power series");
        if (o_.var < 1 || o_.var > n_) throw UsageError("--var must lie in 1.." + std::to_string(n_));
        const int s = o_.var - 1;
        PowerSeries p = parse_series(o_.inputs[0]);
        Output out;
        if (o_.generic) {
            const ChangeResult ch = generic_change({p}, s, o_.bound < 0 ? 8 : o_.bound);
            if (!ch.found) {
                out.report.add("change", "bound-exhausted");
                out.code = kNegative;
                return out;
            }
            std::vector<std::string> c;
            for (long v : ch.shifts) c.push_back(std::to_string(v));
            out.report.add("change", join(c, ", "));
            p = p.linear_change(ch.map);
        }
        const PositionResult pos = weierstrass_position(p, s);
        if (!pos.in_position) {
            out.report.add("position", "undetermined");
            out.code = kIndeterminate;
            return out;
        }
        const PrepareMethod m = o_.method == "graded" ? PrepareMethod::graded : PrepareMethod::division;
        if (o_.method != "graded" && o_.method != "division") throw UsageError("--method must be division or graded");
        const WeierstrassFactorization f = weierstrass_prepare(p, s, m);
        out.report.add("position", "yes");
        out.report.add("k", std::to_string(f.k));
        out.report.add("precision", std::to_string(f.precision));
        out.report.add("unit", show(f.unit));
        out.report.add("wpoly", show(f.wpoly));
        for (std::size_t j = 0; j < f.b.size(); ++j) out.report.add("b." + std::to_string(j), show(f.b[j]));
        return out;
    }

    Output decompose()
    {
        need_inputs(o_, 1, 1, "one operator");
        if (o_.index < 0 || o_.index >= n_) throw UsageError("--index must lie in 0.." + std::to_string(n_ - 1));
        const DiffOperator v = parse(o_.inputs[0]);
        const Decomposition d = decompose_operator(v, o_.index, o_.bound < 0 ? 8 : o_.bound);
        Output out;
        std::vector<std::string> c;
        for (long x : d.change.shifts) c.push_back(std::to_string(x));
        out.report.add("change", join(c, ", "));
        out.report.add("precision", std::to_string(d.precision));
        out.report.add("terms", std::to_string(d.terms.size()));
        for (std::size_t i = 0; i < d.terms.size(); ++i) {
            const DecompositionTerm& t = d.terms[i];
            const std::string k = "term." + std::to_string(i + 1);
            out.report.add(k + ".omega", show(t.omega));
            out.report.add(k + ".beta", text::print(beta_operator(t, d.s, n_, o_.precision), o_.precision));
            out.report.add(k + ".G", show(t.G));
        }
        const Verdict verdict = verify_decomposition(v, d);
        out.report.add("verify", to_string(verdict));
        out.code = code_of(verdict);
        return out;
    }

    const Options& o_;
    int n_;
};

std::string read_input_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Output execute(const Options& o)
{
    const int n = ring_dimension(o.ring);
    if (o.field != "Q" && o.field != "Q(t)") throw UsageError("--field must be Q or Q(t)");
    if (o.precision < 1) throw UsageError("--precision must be at least 1");
    if (o.command == "check") {
        need_inputs(o, 1, 1, "one certificate file (or - for stdin)");
        const std::string contents = read_input_file(o.inputs[0]);
        return certificate_field(contents) == "Q(t)" ? SCommands<RationalFunction>::check_text(contents)
                                                     : SCommands<Rational>::check_text(contents);
    }
    if (n > 0) {
        if (o.field != "Q") throw UsageError("D_n is over Q only");
        return DCommands(o, n).dispatch();
    }
    if (o.field == "Q(t)") return SCommands<RationalFunction>(o).dispatch();
    return SCommands<Rational>(o).dispatch();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    if (const char* env = std::getenv(kPrecisionEnv)) {
        try {
            o.precision = std::stol(env);
        } catch (const std::logic_error&) {
            err << "error: " << kPrecisionEnv << " must be an integer\n";
            return kUsage;
        }
    }

    CLI::App app{"orekit: exact arithmetic and certificates for differential operators over series"};
    app.name("orekit");
    app.require_subcommand(1);
    app.add_option("--precision", o.precision, "working precision N (default 16, or $" + std::string(kPrecisionEnv) + ")");
    app.add_option("--bound", o.bound, "search bound (witness: 3, change of variables: 8)");
    app.add_option("--ring", o.ring, "S (Laurent-series operators in x, d) or D<n> (power-series operators)");
    app.add_option("--field", o.field, "coefficient field of S: Q or Q(t)");
    app.add_option("--out", o.out_path, "write the primary output to FILE");
    app.add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"mul", "product of operators, left to right"},
        {"apply", "apply an operator to a series"},
        {"divide", "right division B = qA + r"},
        {"gcrd", "greatest common right divisor with Bezout cofactors"},
        {"lclm", "least common left multiple with cofactors"},
        {"commx", "nu-fold commutator with x"},
        {"commd", "nu-fold commutator with d"},
        {"hermite", "echelon form of rows \"a, b, ...\""},
        {"member", "membership of a vector in the span of rows"},
        {"colength", "dimension of S/Sa"},
        {"wprep", "Weierstrass preparation of a power series"},
        {"decompose", "split an operator along a distinguished variable"},
        {"reduce", "certificates that the span of alpha*delta_i*f*e_i is the free module"},
        {"check", "verify a certificate file"},
        {"witness", "bounded search for a generating f"},
        {"multiplier", "check rho*a_j lies in D_1 q"},
        {"twogen", "check c lies in E(a + dc) + E(b + ec)"},
        {"principal", "single generator of a left ideal with Bezout data"},
    };
    for (const Spec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        sub->add_option("inputs", o.inputs, "expressions (or a file for check)");
        const std::string name = s.name;
        if (name == "reduce" || name == "witness") {
            sub->add_option("--alpha", o.alpha, "the operator alpha");
            sub->add_option("--delta", o.deltas, "a delta (repeat for each)");
        }
        if (name == "witness") {
            sub->add_option("--rho", o.rho, "the operator rho");
            sub->add_option("--base", o.base_rows, "a generator row of M (module-extension)");
            sub->add_option("--kind", o.kind, "module-extension, right-multiple or augmented");
        }
        if (name == "multiplier") {
            sub->add_option("--rho", o.rho, "the operator rho");
            sub->add_option("--q", o.q, "the divisor q");
        }
        if (name == "wprep") {
            sub->add_option("--var", o.var, "distinguished variable (1-based)");
            sub->add_option("--method", o.method, "division or graded");
            sub->add_flag("--generic", o.generic, "search a change of variables first");
        }
        if (name == "decompose") sub->add_option("--index", o.index, "r: the distinguished variable is x_(r+1)");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    for (const CLI::App* sub : app.get_subcommands()) o.command = sub->get_name();

    try {
        const Output result = execute(o);
        const std::string report = result.report.render(o.format == "machine");
        if (!o.out_path.empty()) {
            std::ofstream f(o.out_path, std::ios::binary);
            if (!f) throw UsageError("cannot write '" + o.out_path + "'");
            f << (result.raw ? *result.raw : report);
            if (result.raw) out << report;
        } else {
            out << (result.raw ? *result.raw : report);
        }
        return result.code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const text::SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PrecisionInsufficient& e) {
        err << "indeterminate: " << e.what() << "\n";
        return kIndeterminate;
    } catch (const ReductionError& e) {
        err << "reduction failed: " << e.what() << "\n";
        return kNegative;
    }
}

} // namespace orekit::cli
