#include "relkit/generators.hpp"

namespace relkit {

ScenarioClass scenario_class_from_string(const std::string& name) {
  if (name == "generic") return ScenarioClass::generic;
  if (name == "hermitian") return ScenarioClass::hermitian;
  if (name == "self_adjoint") return ScenarioClass::self_adjoint;
  if (name == "additive") return ScenarioClass::additive;
  if (name == "gamma_admissible") return ScenarioClass::gamma_admissible;
  throw InvalidInput("unknown scenario class: " + name);
}

std::string to_string(ScenarioClass c) {
  switch (c) {
    case ScenarioClass::generic: return "generic";
    case ScenarioClass::hermitian: return "hermitian";
    case ScenarioClass::self_adjoint: return "self_adjoint";
    case ScenarioClass::additive: return "additive";
    case ScenarioClass::gamma_admissible: return "gamma_admissible";
  }
  throw InvalidInput("unknown scenario class");
}

void GeneratorConfig::validate() const {
  if (dim <= 0) throw InvalidInput("dim must be positive");
  if (trials <= 0) throw InvalidInput("trials must be positive");
  if (mul_dim > dim) throw InvalidInput("mul_dim must not exceed dim");
  if (graph_dim > 2 * dim) throw InvalidInput("graph_dim must not exceed 2*dim");
  if (mul_dim >= 0 && graph_dim >= 0 && (graph_dim < mul_dim || graph_dim - mul_dim > dim))
    throw InvalidInput("graph_dim and mul_dim are inconsistent with rank-nullity");
}

Matrix random_matrix(Index rows, Index cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = rng.cgauss();
  return m;
}

Matrix random_hermitian(Index n, Rng& rng) {
  const Matrix m = random_matrix(n, n, rng);
  return 0.5 * (m + m.adjoint());
}

Matrix random_hermitian_of_rank(Index n, Index rank, Rng& rng) {
  if (rank < 0 || rank > n) throw InvalidInput("rank must lie in [0, n]");
  if (rank == 0) return Matrix::Zero(n, n);
  Tolerances tol;
  const Subspace dirs = random_subspace(n, rank, rng, tol);
  Vector weights(rank);
  for (Index i = 0; i < rank; ++i) weights(i) = Complex(rng.gauss(), 0.0);
  return dirs.basis() * weights.asDiagonal() * dirs.basis().adjoint();
}

Subspace random_subspace(Index dim, Index r, Rng& rng, const Tolerances& tol) {
  if (r < 0 || r > dim) throw InvalidInput("subspace dimension must lie in [0, dim]");
  if (r == 0) return Subspace::zero(dim);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Subspace s = Subspace::span(random_matrix(dim, r, rng), tol);
    if (s.dim() == r) return s;
  }
  throw InvalidInput("random subspace draw degenerated");
}

namespace {

// sub-subspace of the given one with the requested dimension
Subspace random_subspace_within(const Subspace& outer, Index r, Rng& rng, const Tolerances& tol) {
  if (r == 0) return Subspace::zero(outer.ambient_dim());
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Subspace s =
        Subspace::span(outer.basis() * random_matrix(outer.dim(), r, rng), tol);
    if (s.dim() == r) return s;
  }
  throw InvalidInput("random subspace draw degenerated");
}

// graph of {(x, Cx) : x ∈ D} ⊕ ({0} × M)
LinearRelation structured_relation(Index dim, const Subspace& dom, const Matrix& c,
                                   const Subspace& mul, const Tolerances& tol) {
  Matrix cols(2 * dim, dom.dim() + mul.dim());
  cols.topLeftCorner(dim, dom.dim()) = dom.basis();
  cols.bottomLeftCorner(dim, dom.dim()) = c * dom.basis();
  cols.topRightCorner(dim, mul.dim()).setZero();
  cols.bottomRightCorner(dim, mul.dim()) = mul.basis();
  return relation_from_span(dim, dim, cols, tol);
}

struct Dims {
  Index mul;
  Index dom;
};

Dims draw_dims(const GeneratorConfig& cfg, Rng& rng, Index dom_cap) {
  const Index d = cfg.dim;
  Index mul = cfg.mul_dim >= 0 ? cfg.mul_dim : static_cast<Index>(rng.below(d + 1));
  Index cap = std::min(dom_cap, d);
  Index dom;
  if (cfg.graph_dim >= 0) {
    dom = cfg.graph_dim - mul;
    if (dom < 0 || dom > cap) throw InvalidInput("graph_dim incompatible with mul_dim");
  } else {
    dom = static_cast<Index>(rng.below(cap + 1));
  }
  return {mul, dom};
}

}  // namespace

LinearRelation random_relation(const GeneratorConfig& cfg, Rng& rng, const Tolerances& tol) {
  cfg.validate();
  const Index d = cfg.dim;
  switch (cfg.cls) {
    case ScenarioClass::generic: {
      const Dims dims = draw_dims(cfg, rng, d);
      const Subspace mul = random_subspace(d, dims.mul, rng, tol);
      const Subspace dom = random_subspace(d, dims.dom, rng, tol);
      return structured_relation(d, dom, random_matrix(d, d, rng), mul, tol);
    }
    case ScenarioClass::hermitian:
    case ScenarioClass::self_adjoint: {
      Index mul = cfg.mul_dim >= 0 ? cfg.mul_dim : static_cast<Index>(rng.below(d));
      const Subspace mul_space = random_subspace(d, mul, rng, tol);
      const Subspace perp = complement(mul_space, tol);
      Index dom_dim;
      if (cfg.cls == ScenarioClass::self_adjoint) {
        dom_dim = perp.dim();
      } else if (cfg.graph_dim >= 0) {
        dom_dim = cfg.graph_dim - mul;
        if (dom_dim < 0 || dom_dim > perp.dim())
          throw InvalidInput("graph_dim incompatible with mul_dim");
      } else {
        dom_dim = static_cast<Index>(rng.below(perp.dim() + 1));
      }
      const Subspace dom = random_subspace_within(perp, dom_dim, rng, tol);
      const Matrix h =
          perp.basis() * random_hermitian(perp.dim(), rng) * perp.basis().adjoint();
      LinearRelation rel = structured_relation(d, dom, h, mul_space, tol);
      if (!is_hermitian(rel, tol)) throw InvalidInput("generated relation is not Hermitian");
      if (cfg.cls == ScenarioClass::self_adjoint && !is_self_adjoint(rel, tol))
        throw InvalidInput("generated relation is not self-adjoint");
      return rel;
    }
    default:
      throw InvalidInput("random_relation handles single-relation classes only");
  }
}

OperatorOnSubspace random_operator(Index dim_x, Index dim_y, Rng& rng) {
  return {Subspace::full(dim_x), random_matrix(dim_y, dim_x, rng)};
}

NestedPair random_nested_pair(Index dim, Rng& rng, const Tolerances& tol) {
  const Index mul_t = 1 + static_cast<Index>(rng.below(dim));        // T(0), nonzero
  const Index dom_t = 1 + static_cast<Index>(rng.below(dim));        // D(T), nonzero
  const Subspace mul_t_space = random_subspace(dim, mul_t, rng, tol);
  const Subspace dom_t_space = random_subspace(dim, dom_t, rng, tol);
  const Index mul_s = static_cast<Index>(rng.below(mul_t + 1));
  const Index dom_s = static_cast<Index>(rng.below(dom_t + 1));
  const Subspace mul_s_space = random_subspace_within(mul_t_space, mul_s, rng, tol);
  const Subspace dom_s_space = random_subspace_within(dom_t_space, dom_s, rng, tol);
  LinearRelation t =
      structured_relation(dim, dom_t_space, random_matrix(dim, dim, rng), mul_t_space, tol);
  LinearRelation s =
      structured_relation(dim, dom_s_space, random_matrix(dim, dim, rng), mul_s_space, tol);
  return {std::move(s), std::move(t)};
}

PerturbationScenario random_operator_part_pair(Index dim, Index mul_dim, Rng& rng,
                                               const Tolerances& tol) {
  const Subspace mul = random_subspace(dim, mul_dim, rng, tol);
  const Subspace perp = complement(mul, tol);
  const Index dom_s = static_cast<Index>(rng.below(perp.dim() + 1));
  const Index dom_t = static_cast<Index>(rng.below(perp.dim() + 1));
  LinearRelation s = structured_relation(
      dim, random_subspace_within(perp, dom_s, rng, tol), random_matrix(dim, dim, rng), mul, tol);
  LinearRelation t = structured_relation(
      dim, random_subspace_within(perp, dom_t, rng, tol), random_matrix(dim, dim, rng), mul, tol);
  return PerturbationScenario::make(std::move(s), std::move(t), std::nullopt, tol);
}

PerturbationScenario random_same_domain_pair(Index dim, Index mul_dim, Rng& rng,
                                             const Tolerances& tol) {
  const Subspace mul = random_subspace(dim, mul_dim, rng, tol);
  const Subspace perp = complement(mul, tol);
  const Index dom_dim = static_cast<Index>(rng.below(perp.dim() + 1));
  const Subspace dom = random_subspace_within(perp, dom_dim, rng, tol);
  LinearRelation s = structured_relation(dim, dom, random_matrix(dim, dim, rng), mul, tol);
  LinearRelation t = structured_relation(dim, dom, random_matrix(dim, dim, rng), mul, tol);
  return PerturbationScenario::make(std::move(s), std::move(t), std::nullopt, tol);
}

PerturbationScenario random_additive_scenario(Index dim, Index mul_dim, Index rank_a,
                                              bool full_domain_a, Rng& rng,
                                              const Tolerances& tol) {
  const Subspace mul = random_subspace(dim, mul_dim, rng, tol);
  const Subspace perp = complement(mul, tol);
  const Matrix h_s = perp.basis() * random_hermitian(perp.dim(), rng) * perp.basis().adjoint();
  LinearRelation s = structured_relation(dim, perp, h_s, mul, tol);

  Matrix h_a = rank_a < 0 ? random_hermitian(dim, rng) : random_hermitian_of_rank(dim, rank_a, rng);
  Subspace dom_a = Subspace::full(dim);
  if (!full_domain_a) {
    const Matrix p = projection_matrix(perp);
    h_a = p * h_a * p;
    dom_a = perp;
  }
  OperatorOnSubspace a{dom_a, h_a};
  LinearRelation t = add(s, from_operator(a, tol), tol);
  return PerturbationScenario::make(std::move(s), std::move(t), std::move(a), tol);
}

PerturbationScenario random_gamma_scenario(Index dim, Index mul_s, Index mul_t, Rng& rng,
                                           const Tolerances& tol) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Subspace mul_s_space = random_subspace(dim, mul_s, rng, tol);
    const Subspace mul_t_space = random_subspace(dim, mul_t, rng, tol);
    const Subspace dom_s = random_subspace(dim, dim - mul_s, rng, tol);
    const Subspace dom_t = random_subspace(dim, dim - mul_t, rng, tol);
    LinearRelation s =
        structured_relation(dim, dom_s, random_matrix(dim, dim, rng), mul_s_space, tol);
    LinearRelation t =
        structured_relation(dim, dom_t, random_matrix(dim, dim, rng), mul_t_space, tol);
    OperatorOnSubspace a = random_operator(dim, dim, rng);
    if (!is_in_gamma_set(s, t, a, tol)) continue;
    return PerturbationScenario::make(std::move(s), std::move(t), std::move(a), tol);
  }
  throw InvalidInput("failed to draw a Gamma-admissible scenario");
}

PerturbationScenario random_scenario(const GeneratorConfig& cfg, Rng& rng,
                                     const Tolerances& tol) {
  cfg.validate();
  const Index d = cfg.dim;
  const Index mul = cfg.mul_dim >= 0 ? cfg.mul_dim : static_cast<Index>(rng.below(d));
  switch (cfg.cls) {
    case ScenarioClass::generic: {
      LinearRelation s = random_relation(cfg, rng, tol);
      LinearRelation t = random_relation(cfg, rng, tol);
      OperatorOnSubspace a = random_operator(d, d, rng);
      return PerturbationScenario::make(std::move(s), std::move(t), std::move(a), tol);
    }
    case ScenarioClass::hermitian:
    case ScenarioClass::self_adjoint: {
      const Subspace mul_space = random_subspace(d, mul, rng, tol);
      const Subspace perp = complement(mul_space, tol);
      Index dom_dim = perp.dim();
      if (cfg.cls == ScenarioClass::hermitian)
        dom_dim = static_cast<Index>(rng.below(perp.dim() + 1));
      const Subspace dom = random_subspace_within(perp, dom_dim, rng, tol);
      auto draw = [&]() {
        const Matrix h =
            perp.basis() * random_hermitian(perp.dim(), rng) * perp.basis().adjoint();
        return structured_relation(d, dom, h, mul_space, tol);
      };
      LinearRelation s = draw();
      LinearRelation t = draw();
      OperatorOnSubspace a{Subspace::full(d), random_hermitian(d, rng)};
      return PerturbationScenario::make(std::move(s), std::move(t), std::move(a), tol);
    }
    case ScenarioClass::additive: {
      const Index rank_a = static_cast<Index>(rng.below(d + 1));
      const bool full_domain = rng.below(2) == 0;
      return random_additive_scenario(d, mul, rank_a, full_domain, rng, tol);
    }
    case ScenarioClass::gamma_admissible: {
      const Index mul_t = static_cast<Index>(rng.below(d));
      return random_gamma_scenario(d, mul, mul_t, rng, tol);
    }
  }
  throw InvalidInput("unknown scenario class");
}

}  // namespace relkit
