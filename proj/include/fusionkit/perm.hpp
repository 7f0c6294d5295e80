#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionkit {

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Permutation of {0,...,degree-1}, stored as its image tuple.
/// Comparison is lexicographic on images, so the identity is the least
/// permutation of any given degree.
class Perm {
public:
  Perm() = default;

  explicit Perm(unsigned degree) : images_(degree) {
    for (unsigned i = 0; i < degree; ++i)
      images_[i] = i;
  }

  explicit Perm(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (unsigned v : images_) {
      if (v >= images_.size() || seen[v])
        throw std::invalid_argument("Perm: image tuple is not a bijection");
      seen[v] = true;
    }
  }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  unsigned operator()(unsigned x) const { return images_[x]; }

  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const {
    for (unsigned i = 0; i < degree(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  /// Function composition: (a * b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Perm: degree mismatch");
    std::vector<unsigned> img(a.degree());
    for (unsigned i = 0; i < a.degree(); ++i)
      img[i] = a.images_[b.images_[i]];
    Perm r;
    r.images_ = std::move(img);
    return r;
  }

  Perm inverse() const {
    std::vector<unsigned> img(degree());
    for (unsigned i = 0; i < degree(); ++i)
      img[images_[i]] = i;
    Perm r;
    r.images_ = std::move(img);
    return r;
  }

  unsigned order() const {
    Perm p = *this;
    unsigned n = 1;
    while (!p.is_identity()) {
      p = p * *this;
      ++n;
    }
    return n;
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" is the
  /// identity. Fixed points are omitted.
  std::string to_cycles() const {
    std::ostringstream out;
    std::vector<bool> done(degree(), false);
    bool any = false;
    for (unsigned i = 0; i < degree(); ++i) {
      if (done[i] || images_[i] == i)
        continue;
      out << '(';
      unsigned j = i;
      bool first = true;
      do {
        if (!first)
          out << ' ';
        out << j + 1;
        done[j] = true;
        j = images_[j];
        first = false;
      } while (j != i);
      out << ')';
      any = true;
    }
    if (!any)
      return "()";
    return out.str();
  }

  /// Parses cycle notation. Points are 1-based and must lie in 1..degree.
  static Perm parse(const std::string& text, unsigned degree) {
    std::vector<unsigned> img(degree);
    for (unsigned i = 0; i < degree; ++i)
      img[i] = i;
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(')
        throw ParseError("expected '(' in cycle notation: " + text);
      ++pos;
      std::vector<unsigned> cycle;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
          throw ParseError("expected point number in cycle notation: " + text);
        unsigned v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + static_cast<unsigned>(text[pos] - '0');
          ++pos;
        }
        if (v < 1 || v > degree)
          throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                           std::to_string(degree));
        cycle.push_back(v - 1);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_ws();
        }
      }
      if (pos >= text.size())
        throw ParseError("unterminated cycle: " + text);
      ++pos;  // ')'
      for (size_t k = 0; k < cycle.size(); ++k) {
        unsigned from = cycle[k];
        unsigned to = cycle[(k + 1) % cycle.size()];
        if (img[from] != from && img[from] != to)
          throw ParseError("point repeated across cycles: " + text);
        img[from] = to;
      }
      skip_ws();
    }
    return Perm(std::move(img));
  }

private:
  std::vector<unsigned> images_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = p.degree();
    for (unsigned v : p.images())
      h = h * 1000003u + v;
    return h;
  }
};

}  // namespace fusionkit
