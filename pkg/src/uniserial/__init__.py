"""Uniserial representations of path algebras with relations, in exact arithmetic."""

from importlib import resources

from .analysis import (enumerate_masts, finite_type_report, generic_fiber_dim, quotient_check,
                       survey_masts, uniserdim)
from .detours import (Detour, MastContext, SimpleSequence, build_mast_context, condition_N,
                      is_route, paths_through)
from .dsl import (ParseError, parse_path, parse_point, parse_presentation, parse_sequence,
                  render_presentation)
from .fields import QQ, Fp, ScalarField
from .polynomial import Polynomial, Var
from .presentation import AlgebraPresentation, Relation
from .quiver import Arrow, Path, Quiver, compose, paths_from
from .rep import (FiberReport, RepresentationPoint, build_A, differential_rank_at_zero,
                  endo_basis_oracle, fiber_report, realize, same_fiber, top_change, verify)
from .variety import (MixedElement, UniserialPoint, VarietyModel, build_variety, count_points,
                      left_ideal_generators, rewrite, sample_point, simplify_system)


def example_text(name: str) -> str:
    """Text of a bundled presentation: ``ex1_l3``, ``ex2a``, ``ex2b``, ``a3_linear``."""
    return resources.files(__package__).joinpath("data", f"{name}.uat").read_text(encoding="utf-8")


def load_example(name: str) -> AlgebraPresentation:
    return parse_presentation(example_text(name))
