#include <memory>
#include <optional>
#include <vector>

#include "shortwell/error.hpp"
#include "shortwell/kernels.hpp"
#include "shortwell/models.hpp"

namespace shortwell {

namespace {

using Series = RationalSeries;

Series lambda_of(const Series& like) { return Series::identity(like.variable(), like.order()); }

// kernel(inner) and kernel'(inner), both through inner's order.
std::pair<Series, Series> kernel_with_slope(Kernel kind, const Series& inner) {
  const Series k = kernel_series(kind, inner.order() + 1, inner.variable());
  return {compose(k.truncated(inner.order()), inner), compose(k.derivative(), inner)};
}

SeriesRelation<BigRational> poschl_teller_relation() {
  // eps^2 + (2 lambda + 1) eps + lambda^2 = 0.
  SeriesRelation<BigRational> rel;
  rel.leading_order = 2;
  rel.value = [](const Series& eps) {
    const Series x = lambda_of(eps);
    return eps * eps + (x * BigRational(2) + BigRational(1)) * eps + x * x;
  };
  rel.derivative = [](const Series& eps) {
    const Series x = lambda_of(eps);
    return eps * BigRational(2) + x * BigRational(2) + BigRational(1);
  };
  return rel;
}

SeriesRelation<BigRational> square_relation() {
  // k1 tan k1 = k squared: (lambda + eps) tan^2(sqrt(lambda + eps)) + eps = 0.
  SeriesRelation<BigRational> rel;
  rel.leading_order = 2;
  rel.value = [](const Series& eps) {
    const Series s = lambda_of(eps) + eps;
    return s * apply_kernel(Kernel::tan_sq_sqrt, s) + eps;
  };
  rel.derivative = [](const Series& eps) {
    const Series s = lambda_of(eps) + eps;
    const auto [t, dt] = kernel_with_slope(Kernel::tan_sq_sqrt, s);
    return t + s * dt + BigRational(1);
  };
  return rel;
}

SeriesRelation<BigRational> delta_relation() {
  SeriesRelation<BigRational> rel;
  rel.leading_order = 2;
  rel.value = [](const Series& eps) {
    const Series x = lambda_of(eps);
    return eps + x * x / BigRational(4);
  };
  rel.derivative = [](const Series& eps) { return Series::constant(eps.variable(), eps.order(), BigRational(1)); };
  return rel;
}

// Unknown nu with eps = -nu^2/4:
//   2 lambda sum_m (-lambda)^m g_{m+1} / m! - nu sum_m (-lambda)^m g_m / m!,
// g_m = 1/((nu+1)...(nu+m)), dg_m/dnu = -g_m h_m, h_m = sum_{i<=m} 1/(nu+i).
struct ExponentialTerms {
  Series value;
  Series slope;
};

ExponentialTerms exponential_terms(const Series& nu) {
  const std::size_t n = nu.order();
  const Series x = lambda_of(nu);
  const Series one = Series::constant(nu.variable(), n, BigRational(1));

  Series g = one;                          // g_m
  Series h(nu.variable(), n);              // h_m
  Series power = one;                      // (-lambda)^m / m!
  Series sum_a(nu.variable(), n), sum_da(nu.variable(), n);
  Series sum_b(nu.variable(), n), sum_db(nu.variable(), n);
  Series inv_next = one / (nu + BigRational(1));  // 1/(nu + m + 1)

  for (std::size_t m = 0; m <= n; ++m) {
    if (m > 0) power = power * x / BigRational(-static_cast<long>(m));
    const Series g_next = g * inv_next;
    const Series h_next = h + inv_next;
    const Series pg = power * g;
    const Series pg_next = power * g_next;
    sum_b += pg;
    sum_db -= pg * h;
    sum_a += pg_next;
    sum_da -= pg_next * h_next;
    if (m == n) break;
    g = g_next;
    h = h_next;
    inv_next = one / (nu + BigRational(static_cast<long>(m + 2)));
  }
  return {x * BigRational(2) * sum_a - nu * sum_b, x * BigRational(2) * sum_da - sum_b - nu * sum_db};
}

SeriesRelation<BigRational> exponential_relation() {
  // value and derivative are requested for the same nu back to back; share
  // one evaluation between them.
  struct Cache {
    Series nu;
    std::optional<ExponentialTerms> terms;
  };
  auto cache = std::make_shared<Cache>();
  auto eval = [cache](const Series& nu) -> const ExponentialTerms& {
    if (!cache->terms || !(cache->nu == nu)) {
      cache->terms = exponential_terms(nu);
      cache->nu = nu;
    }
    return *cache->terms;
  };
  SeriesRelation<BigRational> rel;
  rel.leading_order = 1;
  rel.value = [eval](const Series& nu) { return eval(nu).value; };
  rel.derivative = [eval](const Series& nu) { return eval(nu).slope; };
  return rel;
}

}  // namespace

SeriesRelation<BigRational> series_relation(ModelId id) {
  switch (id) {
    case ModelId::poschl_teller: return poschl_teller_relation();
    case ModelId::square: return square_relation();
    case ModelId::delta: return delta_relation();
    case ModelId::exponential: return exponential_relation();
  }
  throw InvalidInput("unknown model");
}

SeriesRelation<BigRational> delta_periodic_relation(const BigRational& box_length) {
  if (box_length.sign() <= 0) throw InvalidInput("box length must be positive");
  SeriesRelation<BigRational> rel;
  rel.leading_order = 1;
  const BigRational l = box_length;
  const BigRational u_scale = -(l * l) / BigRational(4);
  rel.value = [l, u_scale](const Series& eps) {
    return eps + lambda_of(eps) / l * apply_kernel(Kernel::sqrtcoth, eps * u_scale);
  };
  rel.derivative = [l, u_scale](const Series& eps) {
    const auto [k, dk] = kernel_with_slope(Kernel::sqrtcoth, eps * u_scale);
    (void)k;
    return lambda_of(eps) / l * dk * u_scale + BigRational(1);
  };
  return rel;
}

RationalSeries ground_state_series(ModelId id, std::size_t order) {
  if (order > kMaxSeriesOrder) throw InvalidInput("series order exceeds cap of 200");
  switch (id) {
    case ModelId::poschl_teller: {
      // (sqrt(1 + 4 lambda) - 1 - 2 lambda) / 2
      const Series x = Series::identity("lambda", order);
      return (sqrt1p(x * BigRational(4)) - BigRational(1) - x * BigRational(2)) / BigRational(2);
    }
    case ModelId::exponential: {
      const Series nu = newton_implicit_series(exponential_relation(), order);
      return -(nu * nu) / BigRational(4);
    }
    case ModelId::square:
    case ModelId::delta:
      return newton_implicit_series(series_relation(id), order);
  }
  throw InvalidInput("unknown model");
}

RationalSeries delta_periodic_series(const BigRational& box_length, std::size_t order) {
  if (order > kMaxSeriesOrder) throw InvalidInput("series order exceeds cap of 200");
  return newton_implicit_series(delta_periodic_relation(box_length), order);
}

std::vector<BigRational> delta_rescaled_constants(std::size_t order) {
  std::vector<BigRational> constants;
  bool first = true;
  for (long l : {5L, 10L, 20L, 40L}) {
    const BigRational box(l);
    const Series s = delta_periodic_series(box, order);
    std::vector<BigRational> rescaled(order + 1);
    for (std::size_t j = 0; j <= order; ++j) rescaled[j] = s[j] * box.pow(2 - static_cast<int>(j));
    if (first) {
      constants = rescaled;
      first = false;
    } else if (rescaled != constants) {
      throw NumericalError("homogeneity law violated");
    }
  }
  return constants;
}

}  // namespace shortwell
