#include "lpi/transform.hpp"

#include <algorithm>
#include <sstream>

#include "lpi/errors.hpp"

namespace lpi {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

AffineTransform::AffineTransform(std::vector<TransformStep> steps) : steps_(std::move(steps)) {}

std::size_t AffineTransform::shear_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      steps_.begin(), steps_.end(), [](const TransformStep& s) { return std::holds_alternative<Shear>(s); }));
}

AffineTransform& AffineTransform::then(TransformStep step) {
  steps_.push_back(std::move(step));
  return *this;
}

AffineTransform AffineTransform::then(const AffineTransform& next) const {
  AffineTransform out(*this);
  out.steps_.insert(out.steps_.end(), next.steps_.begin(), next.steps_.end());
  return out;
}

void AffineTransform::validate(std::size_t d) const {
  for (const auto& step : steps_) {
    std::visit(Overloaded{
                   [&](const Dilation& s) {
                     if (s.factors.size() != d) throw HypothesisError("dilation size does not match dimension");
                     for (const auto& a : s.factors)
                       if (a == 0) throw HypothesisError("dilation factor must be nonzero");
                   },
                   [&](const Shear& s) {
                     if (s.target == s.source) throw HypothesisError("shear indices must differ");
                     if (s.target >= d || s.source >= d) throw HypothesisError("shear index out of range");
                   },
                   [&](const Translation& s) {
                     if (s.offset.size() != d) throw HypothesisError("translation size does not match dimension");
                   },
               },
               step);
  }
}

namespace {

LatticePoint apply_point(const std::vector<TransformStep>& steps, LatticePoint x, bool with_translation) {
  for (const auto& step : steps) {
    std::visit(Overloaded{
                   [&](const Dilation& s) {
                     for (std::size_t j = 0; j < x.dim(); ++j) x[j] = checked::mul(x[j], checked::narrow(s.factors[j]));
                   },
                   [&](const Shear& s) {
                     x[s.target] = checked::sub(x[s.target], checked::mul(checked::narrow(s.b), x[s.source]));
                   },
                   [&](const Translation& s) {
                     if (!with_translation) return;
                     for (std::size_t j = 0; j < x.dim(); ++j) x[j] = checked::add(x[j], checked::narrow(s.offset[j]));
                   },
               },
               step);
  }
  return x;
}

}  // namespace

LatticePoint AffineTransform::apply(const LatticePoint& x) const {
  validate(x.dim());
  return apply_point(steps_, x, true);
}

LatticePoint AffineTransform::apply_linear(const LatticePoint& x) const {
  validate(x.dim());
  return apply_point(steps_, x, false);
}

std::string AffineTransform::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& step : steps_) {
    if (!first) os << "; ";
    first = false;
    std::visit(Overloaded{
                   [&](const Dilation& s) {
                     os << "dilation(";
                     for (std::size_t j = 0; j < s.factors.size(); ++j) os << (j ? "," : "") << s.factors[j];
                     os << ")";
                   },
                   [&](const Shear& s) {
                     os << "shear(x" << s.target + 1 << " -= " << s.b << "*x" << s.source + 1 << ")";
                   },
                   [&](const Translation& s) {
                     os << "translation(";
                     for (std::size_t j = 0; j < s.offset.size(); ++j) os << (j ? "," : "") << s.offset[j];
                     os << ")";
                   },
               },
               step);
  }
  return first ? "identity" : os.str();
}

Curve apply_transform(const Curve& c, const AffineTransform& t) {
  t.validate(c.dim());
  std::vector<IntPoly> comps = c.components();
  for (const auto& step : t.steps()) {
    std::visit(Overloaded{
                   [&](const Dilation& s) {
                     for (std::size_t j = 0; j < comps.size(); ++j) comps[j] = s.factors[j] * comps[j];
                   },
                   [&](const Shear& s) {
                     comps[s.target] = comps[s.target] - s.b * comps[s.source];
                     if (comps[s.target].is_constant())
                       throw HypothesisError("constant component after shear of x" + std::to_string(s.target + 1));
                   },
                   [&](const Translation& s) {
                     for (std::size_t j = 0; j < comps.size(); ++j) comps[j] += IntPoly::constant(s.offset[j]);
                   },
               },
               step);
  }
  return Curve::unchecked(std::move(comps));
}

Reduction reduce_canonical(const Curve& c) {
  Reduction unchanged{c, AffineTransform{}, {}};
  if (c.dim() == 0 || c.component(0).degree() != 1) return unchanged;

  std::vector<IntPoly> v = c.components();
  const std::size_t d = v.size();

  std::vector<mpz_class> offset(d);
  bool translated = false;
  for (std::size_t j = 0; j < d; ++j) {
    offset[j] = v[j].coeff(0);
    if (offset[j] != 0) {
      translated = true;
      v[j] -= IntPoly::constant(offset[j]);
    }
  }

  struct Peel {
    std::size_t target, source;
    mpz_class q;
  };
  std::vector<Peel> peels;
  for (std::size_t j = 1; j < d; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      const int e = v[i].degree();
      if (e < 1) continue;
      const mpz_class coeff = v[j].coeff(e);
      if (coeff == 0 || coeff % v[i].leading() != 0) continue;
      const mpz_class q = coeff / v[i].leading();
      v[j] -= q * v[i];
      peels.push_back({j, i, q});
      if (v[j].is_constant()) {
        unchanged.diagnostic = "constant component after shear of x" + std::to_string(j + 1) +
                               " against x" + std::to_string(i + 1) + "; curve left unreduced";
        return unchanged;
      }
    }
  }

  std::vector<mpz_class> factors(d, mpz_class(1));
  bool dilated = false;
  for (std::size_t j = 0; j < d; ++j) {
    const IntPoly& p = v[j];
    const bool monomial = std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                        [](const mpz_class& x) { return x != 0; }) == 1;
    if (monomial && p.leading() != 1) {
      factors[j] = p.leading();
      v[j] = IntPoly::monomial(1, p.degree());
      dilated = true;
    }
  }

  AffineTransform t;
  if (dilated) t.then(Dilation{factors});
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) t.then(Shear{it->target, it->source, -it->q});
  if (translated) t.then(Translation{offset});
  return Reduction{Curve::unchecked(std::move(v)), std::move(t), {}};
}

}  // namespace lpi
