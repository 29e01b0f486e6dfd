#include "gammalab/classify.hpp"

#include "gammalab/config.hpp"
#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

const char* superscript(int i) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷"};
  return digits[i];
}

std::string piece_label(int i, int q) {
  std::string arg;
  switch (q) {
    case 1: arg = "B"; break;
    case 2: arg = i == 0 ? "Γ₂B" : "LΓ₂B"; break;
    default: arg = i == 0 ? "Γ₃B" : "LΓ₃B"; break;
  }
  return (i == 0 ? std::string("Hom(") : std::string("Ext") + superscript(i) + "(") + arg + ",A)";
}

Int torsion_order(const Group& g) {
  Int t = 1;
  for (const auto& d : g.invariant_factors()) t *= d;
  return t;
}

}  // namespace

Group ext_of_group(const Group& b, const Group& a, std::size_t i) {
  enforce_guard(i, 5, "Ext degree");
  return cochain_cohomology(resolve(b, i + 1).moore_complex(), a, i);
}

ClassificationReport cohomology_K2(const Group& b, const Group& a, int n) {
  if (n < 2 || n > 7) throw InputError("classification covers degrees 2..7");
  ClassificationReport rep{n, Group::trivial(), {}};
  const Group below = filtration_pieces(b, n - 1).assembled;
  const Group here = filtration_pieces(b, n).assembled;
  rep.total = direct_sum(ext1(below, a), hom_group(here, a).group);

  for (int q = 1; 2 * q <= n && q <= 3; ++q) {
    const int i = n - 2 * q;
    ClassificationPiece piece{piece_label(i, q), i, q, Group::trivial(), false};
    const std::size_t ui = static_cast<std::size_t>(i);
    if (q == 1) {
      piece.group = ext_of_group(b, a, ui);
      piece.sheaf_only = i >= 2;
    } else {
      piece.group = hyper_ext(q == 2 ? FunctorId::Gamma2 : FunctorId::Gamma3, b, a, ui);
    }
    rep.pieces.push_back(std::move(piece));
  }
  return rep;
}

ConsistencyReport consistency_check(const Group& b, const Group& a, int n) {
  const ClassificationReport rep = cohomology_K2(b, a, n);
  std::vector<Group> parts;
  for (const auto& p : rep.pieces) parts.push_back(p.group);
  const Group sum = direct_sum(parts);
  ConsistencyReport out{n, false, rep.total.describe(), sum.describe(), ""};
  if (rep.total.is_finite() && sum.is_finite()) {
    out.pass = rep.total.order() == sum.order();
    out.detail = "orders " + rep.total.order().get_str() + " and " + sum.order().get_str();
  } else {
    out.pass = rep.total.free_rank() == sum.free_rank() &&
               torsion_order(rep.total) == torsion_order(sum);
    out.detail = "free ranks " + std::to_string(rep.total.free_rank()) + " and " +
                 std::to_string(sum.free_rank()) + ", torsion orders " +
                 torsion_order(rep.total).get_str() + " and " + torsion_order(sum).get_str();
  }
  return out;
}

}  // namespace gammalab
