"""Exact sheaf calculators on the blow-up of P3 at a point."""

from .chow import ChowClass, epsilon_override, get_epsilon, set_epsilon
from .cohomology import BundleDescriptor, CohomTable, cohomology_table, line_bundle_table
from .errors import ParityError, StepError, ValidationError
from .sheafdata import ChernData, TwistDescriptor, euler_characteristic

__version__ = "0.1.0"
