"""Exact computations with the Hecke algebra of a twisted Heisenberg semigroup, its theta-series
model, and level-k characters of affine algebras."""
from .errors import (
    ConfigError,
    DefinitenessError,
    GradingError,
    HeckeError,
    InvarianceError,
    SemigroupError,
    UnsupportedDatumError,
)
from .lattice_forms import EvenSymmetricForm, IntegerBilinearForm, derive_q, enumerate_sublevel
from .heisenberg import DoubleCosetLabel, HeisenbergElement, HeisenbergGroup
from .series import GradedSeries
from .torus_hecke import HeckeElement, PrincipalSeriesElement, convolve, convolve_oracle, delta, to_theta_series
from .affine_weyl import AffineWeight, RootDatum, reduce_to_dominant
from .char_ring import freudenthal_character, orbit_sum, weyl_kac_character
from .config import WorkbenchConfig, load_config, preset

__version__ = "0.1.0"
