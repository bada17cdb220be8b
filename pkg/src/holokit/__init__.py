"""Cup products, holonomy Lie algebras and rank tables for finite presentations."""

__version__ = "0.1.0"

from .cupprod import CupStructure, cup_structure, cup_structure_integral
from .echelon import EchelonData, UnimodularReduction, echelon_approximation, hermite_normal_form
from .foxcalc import (GroupRingElement, JacobianMatrix, augmentation, epsilon,
                      epsilon_multi, fox_derivative, jacobian)
from .freelie import (GradedIdealSpan, HolonomyPresentation, LieElement, bracket,
                      derived_subalgebra_spans, enveloping_dims, group_from_quadratic_lie,
                      holonomy_presentation, ideal_spans, initial_form_lie_dims,
                      lie_from_primitive_tensor, link_holonomy, lyndon_words, moebius,
                      pbw_check, quotient_dims, solvable_quotient_dims, witt)
from .presentations import (FinitePresentation, PresentationError, borromean_presentation,
                            fingerprint, format_presentation, parse_presentation,
                            seifert_euler, seifert_presentation, surface_presentation,
                            whitehead_presentation)
from .series import (INFINITE, ProjectionMatrix, TruncatedSeries, initial_form, kappa,
                     kappa_coeff, kappa_k, magnus, substitute_linear, weight)
from .words import Word, commutator, generator, inverse, multiply, power, word
