#include "perazzo/io.hpp"

namespace perazzo {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int require_int(const Json& j, const char* key) {
    const auto& v = require(j, key);
    if (!v.is_number_integer())
        throw FormatError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

template <Field F>
Json terms_to_json(const F& field, const Polynomial<F>& q) {
    Json out = Json::array();
    for (const auto& t : q.terms()) {
        Json exps = Json::array();
        for (auto e : t.monomial.exponents())
            exps.push_back(e);
        out.push_back({{"exp", exps}, {"coeff", field.to_string(t.coeff)}});
    }
    return out;
}

template <Field F>
Polynomial<F> terms_from_json(const F& field, std::size_t nvars, const Json& j) {
    if (!j.is_array())
        throw FormatError("a polynomial must be a list of terms");
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : j) {
        const auto& exp = require(t, "exp");
        const auto& coeff = require(t, "coeff");
        if (!exp.is_array() || exp.size() != nvars)
            throw FormatError("exponent vectors must have " + std::to_string(nvars) + " entries");
        if (!coeff.is_string())
            throw FormatError("coefficients must be strings");
        std::vector<Monomial::Exponent> exps;
        for (const auto& e : exp) {
            if (!e.is_number_unsigned() || e.get<std::uint64_t>() > 0xffff)
                throw FormatError("exponents must be small non-negative integers");
            exps.push_back(static_cast<Monomial::Exponent>(e.get<std::uint64_t>()));
        }
        try {
            terms.push_back({Monomial(std::move(exps)), field.parse(coeff.get<std::string>())});
        } catch (const std::exception& e) {
            throw FormatError("bad coefficient \"" + coeff.get<std::string>() + "\": " + e.what());
        }
    }
    try {
        return Polynomial<F>::from_terms(field, nvars, std::move(terms));
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
}

template <Field F>
FormDocument<F> document_over(const F& field, const Json& j) {
    FormDocument<F> doc;
    auto& f = doc.form;
    f.field = field;
    f.n = require_int(j, "n");
    f.m = require_int(j, "m");
    f.d = require_int(j, "d");
    if (f.m < 1 || f.n < 0)
        throw FormatError("n and m must be non-negative, m positive");
    const auto um = static_cast<std::size_t>(f.m);
    const auto& p = require(j, "p");
    if (!p.is_array())
        throw FormatError("\"p\" must be a list of polynomials");
    for (const auto& q : p)
        f.p.push_back(terms_from_json(field, um, q));
    f.G = j.contains("G") ? terms_from_json(field, um, j.at("G")) : Polynomial<F>(field, um);
    if (j.contains("metadata")) {
        const auto& meta = j.at("metadata");
        if (!meta.is_object())
            throw FormatError("\"metadata\" must be an object");
        if (meta.contains("seed")) {
            if (!meta.at("seed").is_number_unsigned())
                throw FormatError("metadata seed must be a non-negative integer");
            doc.metadata.seed = meta.at("seed").get<std::uint64_t>();
        }
        if (meta.contains("generator")) {
            if (!meta.at("generator").is_string())
                throw FormatError("metadata generator must be a string");
            doc.metadata.generator = meta.at("generator").get<std::string>();
        }
    }
    return doc;
}

}  // namespace

Json field_to_json(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::rational)
        return {{"kind", "rational"}};
    return {{"kind", "prime"}, {"p", spec.prime.get_str()}};
}

FieldSpec field_from_json(const Json& j) {
    const auto& kind = require(j, "kind");
    if (kind == "rational")
        return FieldSpec::rational();
    if (kind != "prime")
        throw FormatError("field kind must be \"prime\" or \"rational\"");
    if (!j.contains("p"))
        return FieldSpec::default_prime();
    const auto& p = j.at("p");
    if (!p.is_string())
        throw FormatError("prime modulus must be a decimal string");
    try {
        return FieldSpec::prime_field(mpz_class(p.get<std::string>()));
    } catch (const std::exception&) {
        throw FormatError("bad prime modulus \"" + p.get<std::string>() + "\"");
    }
}

template <Field F>
Json to_json(const FormDocument<F>& doc) {
    const auto& f = doc.form;
    Json p = Json::array();
    for (const auto& q : f.p)
        p.push_back(terms_to_json(f.field, q));
    Json out = {{"n", f.n}, {"m", f.m}, {"d", f.d}, {"field", field_to_json(f.field.spec())},
                {"p", p}, {"G", terms_to_json(f.field, f.G)}};
    Json meta = Json::object();
    if (doc.metadata.seed)
        meta["seed"] = *doc.metadata.seed;
    if (!doc.metadata.generator.empty())
        meta["generator"] = doc.metadata.generator;
    if (!meta.empty())
        out["metadata"] = meta;
    return out;
}

AnyFormDocument form_document_from_json(const Json& j) {
    const auto spec = field_from_json(require(j, "field"));
    try {
        return with_field(spec, [&](const auto& field) -> AnyFormDocument { return document_over(field, j); });
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

AnyFormDocument parse_form_document(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return form_document_from_json(j);
}

Json to_json(const HVector& h) {
    return Json(h.entries);
}

Json to_json(const ExtremesReport& r) {
    const auto abg_json = [](const Abg& a) { return Json{{"alpha", a.alpha}, {"beta", a.beta}, {"gamma", a.gamma}}; };
    return {{"n", r.n},
            {"m", r.m},
            {"d", r.d},
            {"hmax", to_json(r.hmax)},
            {"hmin", to_json(r.hmin)},
            {"hmax_unimodal", r.hmax_unimodal},
            {"hmin_unimodal", r.hmin_unimodal},
            {"hmin_inequality", r.hmin_inequality},
            {"coincide", r.coincide},
            {"s", r.s},
            {"at_s_minus_1", abg_json(r.at_s_minus_1)},
            {"at_s", abg_json(r.at_s)}};
}

Json to_json(const BettiTable& t) {
    Json entries = Json::array();
    for (const auto& [ij, beta] : t.entries)
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
    return {{"nvars", t.nvars}, {"entries", entries}};
}

BettiTable betti_from_json(const Json& j) {
    BettiTable t;
    const auto& nv = require(j, "nvars");
    if (!nv.is_number_unsigned())
        throw FormatError("nvars must be a non-negative integer");
    t.nvars = nv.get<std::size_t>();
    const auto& entries = require(j, "entries");
    if (!entries.is_array())
        throw FormatError("entries must be a list");
    for (const auto& e : entries) {
        const auto& beta = require(e, "beta");
        if (!beta.is_number_integer() || beta.get<std::int64_t>() <= 0)
            throw FormatError("beta must be a positive integer");
        t.set(require_int(e, "i"), require_int(e, "j"), beta.get<std::int64_t>());
    }
    return t;
}

template <Field F>
Json to_json(const F& field, const LinearForm<F>& ell) {
    Json out = Json::array();
    for (const auto& c : ell)
        out.push_back(field.to_string(c));
    return out;
}

template <Field F>
Json to_json(const LefschetzVerdict<F>& v) {
    Json out = {{"mode", v.mode == LefschetzMode::weak ? "weak" : "strong"}};
    if (const auto* h = std::get_if<Holds<F>>(&v.result)) {
        out["verdict"] = "holds";
        // the field is not stored in the verdict; coefficients print the same for any instance
        out["witness"] = to_json(F{}, h->witness);
        return out;
    }
    const auto& fail = std::get<FailsGeneric>(v.result);
    out["verdict"] = "fails_generic";
    out["trials"] = fail.trials;
    Json deficits = Json::array();
    for (const auto& d : fail.deficits)
        deficits.push_back({{"degree", d.degree}, {"power", d.power}, {"rank", d.rank}, {"required", d.required}});
    out["deficits"] = deficits;
    return out;
}

#define PERAZZO_INSTANTIATE_IO(F)                                 \
    template Json to_json(const FormDocument<F>&);                \
    template Json to_json(const F&, const LinearForm<F>&);        \
    template Json to_json(const LefschetzVerdict<F>&);

PERAZZO_INSTANTIATE_IO(PrimeField)
PERAZZO_INSTANTIATE_IO(RationalField)

#undef PERAZZO_INSTANTIATE_IO

}  // namespace perazzo
