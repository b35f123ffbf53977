from .series import DirichletPolynomial, HalfPlanePoint
from .characters import Character
from .config import ExperimentConfig
from .report import VerificationReport
