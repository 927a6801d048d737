""" Eigenvector constructions and closed-form stationary measures.

Notes:
    Homogeneous constructions live in `reduced` and `free`; the two
    one-defect models share the gluing code in `defect`.
"""
from .construction import (
    ClosedFormMeasure,
    DefectForm,
    EigenConstruction,
    require_cos,
)
from .defect import delta, kappa
from .free import free_function_construction, free_function_measure
from .model1 import (
    Model1Eigenvalue,
    model1_eigvec,
    model1_measure,
    model1_tau,
    select_model1_eigenvalue,
)
from .model2 import model2_eigenvalue, model2_eigvec, model2_measure, model2_xi
from .reduced import TwoWave, free_function_eigvec, reduced_eigenvalue, two_wave_eigvec
from .seeds import FunctionSeed, TwoParameterSeed
