"""Exact subgroup counts and parity patterns for the Hecke groups C2*Cq and their lifts."""

from .census import CensusContext, M_core, M_general, M_total, M_tree, N_count, f_count, s_total, s_type
from .oracle import BudgetExceeded, RepType, SubgroupType, enumerate_types
from .parity import ParityVerdict, lift_parity, Nq_parity, sq_parity
from .wreath import HParams, WreathContext, s_general

__version__ = "0.1.0"
