"""Exact computation of the class and mu-basis of rational planar curve
parametrizations ``(a, b, c)``, and construction of one-parameter families
of class ``mu + 1`` degenerating to a given class-``mu`` parametrization."""

from .deform import (AdmissiblePick, ApproxSeq, VerificationReport,
                     approx_sequence, construct, find_admissible, make_pick,
                     shear, shear_mubasis, transport, verify_approx)
from .errors import MuClassError
from .explore import (CensusReport, census, sample_triple, sample_with_class,
                      specialization_probe, triple_from_basis)
from .fields import QQ, Extension, PrimeField, RatFunc, ratfunc_make
from .parser import parse_field, parse_poly
from .poly import (Poly, RootHandle, RootPolicy, divide_by_linear, find_root,
                   gcd, squarefree_part)
from .syzygy import (MuBasis, ParamTriple, SyzygyVec, decompose, mu,
                     mu_basis, mu_fraction_free, syzygy_space, verify_identity)

__version__ = "0.1.0"
