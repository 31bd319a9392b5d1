#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orekit/certify.hpp"
#include "orekit/text.hpp"

namespace orekit {

// Line-oriented "key = value" file:
//
//   # orekit certificate file
//   format = orekit-certificate 1
//   ring = S
//   field = Q
//   precision = 16
//   alpha = d
//   delta = 1                 (one line per delta, in order)
//   certificate = 1           (target basis index, 1-based)
//   precision = 16
//   slack = 0
//   term = -x | 1             (s | f)
//   end
//   digest = fnv1a64 <16 hex digits>
//
// The digest is 64-bit FNV-1a over every byte of the preceding lines that do
// not start with '#', newline terminators included.
template <CoefficientField F>
struct CertificateFile {
    long precision = kDefaultPrecision;
    SpanContext<F> context;
    std::vector<Certificate<F>> certificates;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_line_value(std::string_view body);

// "Q" or "Q(t)", read from the header without parsing the rest.
std::string certificate_field(std::string_view file);

template <CoefficientField F>
std::string write_certificate_file(const CertificateFile<F>& f);

struct ReadStatus {
    bool digest_ok = false;
    std::string stored_digest;
    std::string computed_digest;
};

// Throws text::SyntaxError (with the file line) on malformed input.
template <CoefficientField F>
CertificateFile<F> read_certificate_file(std::string_view file, ReadStatus& status);

extern template std::string write_certificate_file<Rational>(const CertificateFile<Rational>&);
extern template std::string write_certificate_file<RationalFunction>(const CertificateFile<RationalFunction>&);
extern template CertificateFile<Rational> read_certificate_file<Rational>(std::string_view, ReadStatus&);
extern template CertificateFile<RationalFunction> read_certificate_file<RationalFunction>(std::string_view, ReadStatus&);

} // namespace orekit
