__version__ = "0.1.0"

from .engine import MotivicPVEngine
from .errors import ComputationError, MotivicPVError, ValidationError
from .models import Arrangement, Command, Edge, ExponentVector, JobSpec, MultiplicityVector, ResultDoc

__all__ = [
    "__version__",
    "MotivicPVEngine",
    "MotivicPVError",
    "ValidationError",
    "ComputationError",
    "Arrangement",
    "Command",
    "Edge",
    "ExponentVector",
    "JobSpec",
    "MultiplicityVector",
    "ResultDoc",
]
