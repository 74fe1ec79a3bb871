#include "crlie/exactlin/gauss_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace crlie {

GaussRational::GaussRational(long re_num, long re_den, long im_num, long im_den)
    : re_(re_num, re_den), im_(im_num, im_den) {
  re_.canonicalize();
  im_.canonicalize();
}

bool GaussRational::is_gaussian_integer() const {
  return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRational: division by zero");
  if (is_real()) return {mpq_class(1) / re_, mpq_class(0)};
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string coefficient_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string GaussRational::str() const {
  if (sgn(im_) == 0) return coefficient_text(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = coefficient_text(im_) + "i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = coefficient_text(re_);
  if (imag.front() != '-') out += '+';
  return out + imag;
}

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed Gaussian rational: '" + std::string(whole) + "'");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw std::invalid_argument("malformed Gaussian rational: '" + std::string(whole) + "'");
    }
  }
  std::string t(s);
  if (t.front() == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) {
    throw std::invalid_argument("malformed Gaussian rational: '" + std::string(whole) + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

GaussRational GaussRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (s.back() != 'i') return {parse_rational(s, text), mpq_class(0)};
  s.pop_back();
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? std::string() : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  mpq_class im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part, text);
  }
  mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
  return {re, im};
}

std::size_t GaussRational::hash() const {
  std::size_t h = std::hash<std::string>{}(re_.get_str());
  return h ^ (std::hash<std::string>{}(im_.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const GaussRational& x) { return os << x.str(); }

}  // namespace crlie
