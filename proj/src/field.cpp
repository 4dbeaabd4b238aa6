#include "starinv/field.hpp"

#include <cctype>

namespace starinv {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

}  // namespace

void validate(FieldMode mode) {
    if (mode.base == FieldBase::Rationals && mode.involution == Involution::Conjugation) {
        throw InvalidArgument("conjugation involution requires the GaussianRationals base");
    }
}

std::string to_string(FieldBase base) {
    return base == FieldBase::Rationals ? "Rationals" : "GaussianRationals";
}

std::string to_string(Involution inv) {
    return inv == Involution::Identity ? "Identity" : "Conjugation";
}

FieldBase parse_field_base(std::string_view text) {
    if (text == "Rationals") return FieldBase::Rationals;
    if (text == "GaussianRationals") return FieldBase::GaussianRationals;
    throw InvalidArgument("unknown field base '" + std::string(text) + "'");
}

Involution parse_involution(std::string_view text) {
    if (text == "Identity") return Involution::Identity;
    if (text == "Conjugation") return Involution::Conjugation;
    throw InvalidArgument("unknown involution '" + std::string(text) + "'");
}

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view raw) {
    const std::string text = strip_spaces(raw);
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
        throw InvalidArgument("malformed rational '" + std::string(raw) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(raw) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
    return value_.get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    value_ /= o.value_;
    return *this;
}

std::string format_gaussian(const Rational& re, const Rational& im) {
    if (im.is_zero()) return re.to_string();
    std::string imag;
    if (im == Rational(1)) {
        imag = "i";
    } else if (im == Rational(-1)) {
        imag = "-i";
    } else {
        imag = im.to_string() + "*i";
    }
    if (re.is_zero()) return imag;
    if (imag.front() != '-') imag.insert(imag.begin(), '+');
    return re.to_string() + imag;
}

std::pair<Rational, Rational> parse_gaussian(std::string_view raw) {
    const std::string text = strip_spaces(raw);
    if (text.empty()) throw InvalidArgument("empty scalar");
    if (text.back() != 'i') return {Rational::parse(text), Rational(0)};

    std::string_view body(text);
    body.remove_suffix(1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);

    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view re_part = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);

    Rational im;
    if (im_part.empty() || im_part == "+") {
        im = Rational(1);
    } else if (im_part == "-") {
        im = Rational(-1);
    } else {
        im = Rational::parse(im_part);
    }
    Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
    return {std::move(re), std::move(im)};
}

}  // namespace starinv
