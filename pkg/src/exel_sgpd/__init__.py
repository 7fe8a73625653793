"""Finite groupoids, their Exel inverse semigroupoids S(G), partial actions,
crossed products and finite-dimensional representations."""
from .errors import (AxiomViolation, BudgetExceeded, ContextMismatch, ExelError,
                     InconsistentResult, InvalidInput, MalformedSpec, MixedGroupoids,
                     NonComposableWord, NotRClosed, UnknownElement)
from .groupoid import (FiniteGroupoid, Undefined, arrow_groupoid, build_groupoid, cyclic_group,
                       disjoint_union, from_group, load_groupoid, pair_groupoid, trivial_groupoid)
from .semigroupoid import (SGElement, enumerate_sg, epsilon, generator, is_idempotent,
                           lambda_apply, leq, multiply, normalize_word, partial_degree, star)
from .oracle import oracle_congruence_enumerate
from .actions import (GroupoidPartialAction, PartialBijection, SGAction, action_from_spec,
                      lemma1_characterize, partial_to_sg, sg_to_partial, validate_partial_action,
                      validate_sg_action)
from .crossed import (AlgPartialAction, CrossedProduct, FunctionAlgebra, SkewSemigroupoidAlgebra,
                      check_associativity, function_algebra_context, iso_roundtrip,
                      quotient_normalize)
from .cstar import ProjectionAlgebra, build_cp_star_algebra, find_unit, proj_action, proj_multiply
from .representations import (PartialRep, SGRep, check_covariant, check_partial_rep, check_sg_rep,
                              rep_cstar_to_g, rep_g_to_sg, rep_sg_to_cstar, rep_sg_to_g,
                              regular_partial_rep, triangle_report)
from .report import Report

__version__ = "0.1.0"
