"""Exact braid-group computations for twisted torus knots.

Garside normal forms, positivization of twisted torus braids with a
rewriting engine, fiberedness and conjugacy certificates, and the
invariants used to cross-check them.
"""

__version__ = "0.1.0"

from .conjugacy import (
    ConjugacyCertificate,
    FamilyParams,
    gamma_word,
    sweep_family,
    verify_conjugacy,
    verify_delta_identity,
)
from .errors import (
    BraidError,
    CapacityError,
    HypothesisViolation,
    InternalError,
    MultiComponentError,
    ParameterError,
    PreconditionError,
    RewriteError,
    UnsupportedParameters,
    WordFormatError,
)
from .garside import NormalForm, PermutationBraid, equal, normal_form
from .invariants import alexander, positive_braid_genus, reduced_burau, surface_slope, torus_alexander
from .lawrence_krammer import lk_matrix
from .poly import LaurentPoly
from .ttk import (
    FiberednessCertificate,
    Status,
    TTKParams,
    fiberedness_certificate,
    positive_word_general,
    positive_word_n1,
    positivize,
    replay_positive_word,
    run_lemma_suite,
    ttk_braid,
)
from .words import BraidWord, delta_word, format_word, parse_word, pi_word, rev

__all__ = [name for name in dir() if not name.startswith("_")]
