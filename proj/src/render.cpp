#include "gdifs/render.hpp"

#include <sstream>

#include "gdifs/attractor.hpp"
#include "gdifs/errors.hpp"

namespace gdifs {

std::string fixed3(const Rational& x) {
  const mpq_class scaled = x.raw() * 1000;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  // scaled = q + r/den with 0 <= r < den.
  const mpz_class twice = 2 * r;
  const int c = cmp(twice, scaled.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  const bool neg = q < 0;
  mpz_class mag = neg ? mpz_class(-q) : q;
  std::string digits = mag.get_str();
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return (neg ? "-" : "") + digits.substr(0, digits.size() - 3) + "." +
         digits.substr(digits.size() - 3);
}

std::string render_svg(const GraphIFS& ifs, const RenderSpec& spec, std::uint64_t cap) {
  if (spec.width.sign() <= 0 || spec.row_height.sign() <= 0) {
    throw ArgumentError("render_svg: width and row height must be positive");
  }
  const std::size_t rows = ifs.vertex_count() * (spec.levels + 1);
  const Rational pitch = spec.row_height + spec.row_gap;
  const Rational total_w = spec.margin_left + spec.width + Rational(10);
  const Rational total_h = pitch * Rational(static_cast<long>(rows)) + spec.row_gap;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed3(total_w)
     << "\" height=\"" << fixed3(total_h) << "\" viewBox=\"0 0 " << fixed3(total_w) << " "
     << fixed3(total_h) << "\">\n";
  std::size_t row = 0;
  for (VertexId v = 0; v < ifs.vertex_count(); ++v) {
    const auto sets = level_sets(ifs, v, spec.levels, cap);
    // Rectangles sit at x = width*lo inside a group shifted by the margin.
    os << "<g id=\"vertex-" << ifs.vertex_name(v) << "\" transform=\"translate("
       << fixed3(spec.margin_left) << " 0)\">\n";
    for (unsigned k = 0; k <= spec.levels; ++k, ++row) {
      const Rational y = spec.row_gap + pitch * Rational(static_cast<long>(row));
      os << "<text x=\"" << fixed3(-spec.margin_left) << "\" y=\"" << fixed3(y + spec.row_height)
         << "\" font-size=\"" << fixed3(spec.row_height) << "\">F_" << ifs.vertex_name(v)
         << "^" << k << "</text>\n";
      for (const Interval& iv : sets[k].intervals()) {
        const Rational w = spec.width * iv.length();
        os << "<rect class=\"level-" << k << "\" x=\"" << fixed3(spec.width * iv.lo)
           << "\" y=\"" << fixed3(y) << "\" width=\"" << fixed3(w)
           << "\" height=\"" << fixed3(spec.row_height) << "\"/>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gdifs
