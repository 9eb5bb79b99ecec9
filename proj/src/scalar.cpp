#include "pseudotri/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace pseudotri {

std::optional<Scalar> scalar_from_string(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) return std::nullopt;

    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        std::size_t frac_len = t.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            char c = digits[i];
            if ((c == '+' || c == '-') && i == 0) continue;
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        }
        try {
            mpz_class num(digits, 10);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            Scalar s(num, den);
            s.canonicalize();
            return s;
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

    try {
        Scalar s(t, 10);
        if (s.get_den() == 0) return std::nullopt;
        s.canonicalize();
        return s;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string scalar_to_string(const Scalar& s) {
    return s.get_str();
}

std::string scalar_to_decimal(const Scalar& s, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled_num = s.get_num() * scale;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), s.get_den().get_mpz_t());
    // round half away from zero on the floor remainder
    if (2 * r >= s.get_den()) q += 1;
    bool neg = q < 0;
    mpz_class absq = abs(q);
    std::string raw = absq.get_str();
    if (raw.size() <= static_cast<std::size_t>(digits)) {
        raw.insert(0, static_cast<std::size_t>(digits) + 1 - raw.size(), '0');
    }
    std::string out = raw.substr(0, raw.size() - digits) + "." + raw.substr(raw.size() - digits);
    // trim trailing zeros but keep at least one fractional digit
    auto last = out.find_last_not_of('0');
    if (out[last] == '.') ++last;
    out.erase(last + 1);
    return neg ? "-" + out : out;
}

int sign_of(const Scalar& s) {
    return sgn(s);
}

namespace {

// Simplest rational in the open interval (lo, hi) for 0 <= lo < hi,
// by continued-fraction descent.
Scalar simplest_nonneg(const Scalar& lo, const Scalar& hi) {
    mpz_class fl = lo.get_num() / lo.get_den();  // truncation == floor for nonneg
    Scalar candidate(fl + 1);
    if (candidate < hi) return candidate;
    Scalar frac_lo = lo - Scalar(fl);
    Scalar frac_hi = hi - Scalar(fl);
    if (frac_lo == 0) {
        // interval (0, frac_hi): pick 1/ceil(1/frac_hi + 1)
        Scalar inv = 1 / frac_hi;
        mpz_class k = inv.get_num() / inv.get_den() + 1;
        Scalar r(1);
        r /= Scalar(k);
        if (r >= frac_hi) r /= 2;
        return Scalar(fl) + r;
    }
    Scalar inner = simplest_nonneg(1 / frac_hi, 1 / frac_lo);
    return Scalar(fl) + 1 / inner;
}

}  // namespace

Scalar simplest_rational_between(const Scalar& lo, const Scalar& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between: empty interval");
    if (lo < 0 && hi > 0) return Scalar(0);
    if (lo >= 0) return simplest_nonneg(lo, hi);
    return -simplest_nonneg(-hi, -lo);
}

}  // namespace pseudotri
