#include "orekit/certificate_file.hpp"

#include <cstdio>

namespace orekit {

namespace {

constexpr std::string_view kComment = "# orekit certificate file\n";
constexpr std::string_view kFormat = "orekit-certificate 1";

template <CoefficientField F>
constexpr const char* field_name()
{
    if constexpr (std::same_as<F, RationalFunction>)
        return "Q(t)";
    else
        return "Q";
}

struct Line {
    long number = 0;
    std::string key;
    std::string value;
    long value_column = 1;
};

std::vector<Line> split_lines(std::string_view file)
{
    std::vector<Line> out;
    long number = 0;
    std::size_t pos = 0;
    while (pos < file.size()) {
        std::size_t nl = file.find('\n', pos);
        if (nl == std::string_view::npos) nl = file.size();
        const std::string_view raw = file.substr(pos, nl - pos);
        pos = nl + 1;
        ++number;
        if (raw.empty() || raw.front() == '#') continue;
        Line l;
        l.number = number;
        const std::size_t eq = raw.find(" = ");
        if (eq == std::string_view::npos) {
            l.key = std::string(raw);
        } else {
            l.key = std::string(raw.substr(0, eq));
            l.value = std::string(raw.substr(eq + 3));
            l.value_column = static_cast<long>(eq) + 4;
        }
        out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] void bad(const Line& l, const std::string& msg)
{
    throw text::SyntaxError(l.number, 1, msg);
}

long to_long(const Line& l)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(l.value, &used);
        if (used != l.value.size()) bad(l, "expected an integer for '" + l.key + "'");
        return v;
    } catch (const std::logic_error&) {
        bad(l, "expected an integer for '" + l.key + "'");
    }
}

// Re-anchors an expression error at its place in the file.
template <class Fn>
auto in_line(const Line& l, long offset, Fn&& fn)
{
    try {
        return fn();
    } catch (const text::SyntaxError& e) {
        const std::string what = e.what();
        const std::size_t colon = what.find(": ");
        throw text::SyntaxError(l.number, l.value_column + offset + e.column() - 1,
                                colon == std::string::npos ? what : what.substr(colon + 2), e.expected());
    } catch (const DomainError& e) {
        throw text::SyntaxError(l.number, l.value_column + offset, e.what());
    }
}

} // namespace

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_line_value(std::string_view body)
{
    std::string kept;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t nl = body.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? body.size() : nl + 1;
        const std::string_view line = body.substr(pos, end - pos);
        if (line.empty() || line.front() != '#') kept += line;
        pos = end;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(kept)));
    return std::string("fnv1a64 ") + buf;
}

std::string certificate_field(std::string_view file)
{
    for (const Line& l : split_lines(file))
        if (l.key == "field") return l.value;
    return "Q";
}

template <CoefficientField F>
std::string write_certificate_file(const CertificateFile<F>& f)
{
    std::string out(kComment);
    out += "format = " + std::string(kFormat) + "\n";
    out += "ring = S\n";
    out += std::string("field = ") + field_name<F>() + "\n";
    out += "precision = " + std::to_string(f.precision) + "\n";
    out += "alpha = " + text::print(f.context.alpha) + "\n";
    for (const auto& d : f.context.deltas) out += "delta = " + text::print(d) + "\n";
    for (const auto& c : f.certificates) {
        out += "certificate = " + std::to_string(c.target + 1) + "\n";
        out += "precision = " + std::to_string(c.precision) + "\n";
        out += "slack = " + std::to_string(c.slack) + "\n";
        for (const auto& t : c.terms) out += "term = " + text::print(t.s) + " | " + text::print(t.f) + "\n";
        out += "end\n";
    }
    out += "digest = " + digest_line_value(out) + "\n";
    return out;
}

template <CoefficientField F>
CertificateFile<F> read_certificate_file(std::string_view file, ReadStatus& status)
{
    const std::vector<Line> lines = split_lines(file);
    CertificateFile<F> out;
    std::size_t i = 0;
    auto expect = [&](const char* key) -> const Line& {
        if (i >= lines.size()) throw text::SyntaxError(lines.empty() ? 1 : lines.back().number + 1, 1,
                                                       std::string("expected '") + key + "', found end of file");
        const Line& l = lines[i];
        if (l.key != key) bad(l, std::string("expected '") + key + "', found '" + l.key + "'");
        ++i;
        return l;
    };
    const Line& fmt = expect("format");
    if (fmt.value != kFormat) bad(fmt, "unsupported format '" + fmt.value + "'");
    if (const Line& r = expect("ring"); r.value != "S") bad(r, "certificates live over ring S");
    if (const Line& fl = expect("field"); fl.value != field_name<F>()) bad(fl, "field mismatch");
    out.precision = to_long(expect("precision"));
    {
        const Line& a = expect("alpha");
        out.context.alpha = in_line(a, 0, [&] { return text::parse_ore<F>(a.value); });
    }
    while (i < lines.size() && lines[i].key == "delta") {
        const Line& d = lines[i++];
        out.context.deltas.push_back(in_line(d, 0, [&] { return text::parse_ore<F>(d.value); }));
    }
    while (i < lines.size() && lines[i].key == "certificate") {
        Certificate<F> c;
        const Line& head = lines[i++];
        const long target = to_long(head);
        if (target < 1 || static_cast<std::size_t>(target) > out.context.deltas.size())
            bad(head, "target index out of range");
        c.target = static_cast<std::size_t>(target - 1);
        c.precision = to_long(expect("precision"));
        c.slack = to_long(expect("slack"));
        while (i < lines.size() && lines[i].key == "term") {
            const Line& t = lines[i++];
            const std::size_t bar = t.value.find(" | ");
            if (bar == std::string::npos) bad(t, "term needs the form 's | f'");
            CertificateTerm<F> term;
            term.s = in_line(t, 0, [&] { return text::parse_ore<F>(t.value.substr(0, bar)); });
            term.f = in_line(t, static_cast<long>(bar) + 3, [&] { return text::parse_integer_ore(t.value.substr(bar + 3)); });
            c.terms.push_back(std::move(term));
        }
        expect("end");
        out.certificates.push_back(std::move(c));
    }
    const Line& dg = expect("digest");
    if (i != lines.size()) bad(lines[i], "unexpected content after the digest");

    // The digest covers the raw bytes before the digest line.
    std::size_t cut = 0;
    for (long n = 1; n < dg.number; ++n) cut = file.find('\n', cut) + 1;
    status.stored_digest = dg.value;
    status.computed_digest = digest_line_value(file.substr(0, cut));
    status.digest_ok = status.stored_digest == status.computed_digest;
    return out;
}

template std::string write_certificate_file<Rational>(const CertificateFile<Rational>&);
template std::string write_certificate_file<RationalFunction>(const CertificateFile<RationalFunction>&);
template CertificateFile<Rational> read_certificate_file<Rational>(std::string_view, ReadStatus&);
template CertificateFile<RationalFunction> read_certificate_file<RationalFunction>(std::string_view, ReadStatus&);

} // namespace orekit
