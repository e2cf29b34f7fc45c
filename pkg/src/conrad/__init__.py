"""Radii of concavity for classes of univalent functions, with numerical checks."""
from .analytic import CPoly, SchwarzCert, cpoly_antiderivative, cpoly_derivative, cpoly_eval, sample_schwarz
from .errors import ConradError, DomainError, NoRootError, ParameterError, SingularityError
from .operators import ClassSpec, PreSchwarzian, closed_extremal_t, p_of, presch_for, t_of, u_functional
from .radii import RadiusResult, RPoly, least_root_in, polynomial_for, radius_for
from .verify import GridSpec, VerifyReport, disc_min_real, identity_checks, sample_verify, sharpness_check

__version__ = "0.1.0"
