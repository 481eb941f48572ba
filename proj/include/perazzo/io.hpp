#pragma once

#include "perazzo/hilbert.hpp"
#include "perazzo/lefschetz.hpp"
#include "perazzo/perazzo_form.hpp"
#include "perazzo/resolution.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace perazzo {

using Json = nlohmann::ordered_json;

/// Malformed document (bad JSON shape, bad coefficient, wrong exponent length).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FormMetadata {
    std::optional<std::uint64_t> seed;
    std::string generator;  // empty when unknown

    friend bool operator==(const FormMetadata&, const FormMetadata&) = default;
};

template <Field F>
struct FormDocument {
    PerazzoForm<F> form;
    FormMetadata metadata;

    friend bool operator==(const FormDocument&, const FormDocument&) = default;
};

using AnyFormDocument = std::variant<FormDocument<PrimeField>, FormDocument<RationalField>>;

Json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const Json& j);

template <Field F>
Json to_json(const FormDocument<F>& doc);

/// Only the shape is checked here; run validate() for the Perazzo conditions.
AnyFormDocument form_document_from_json(const Json& j);
AnyFormDocument parse_form_document(std::string_view text);

Json to_json(const HVector& h);
Json to_json(const ExtremesReport& r);
Json to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

template <Field F>
Json to_json(const F& field, const LinearForm<F>& ell);

template <Field F>
Json to_json(const LefschetzVerdict<F>& v);

}  // namespace perazzo
