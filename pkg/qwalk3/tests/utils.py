# Sample run documents shared by the command tests
import numpy as np

grover_doc = {"model": "grover"}

gphi_zero_doc = {"model": "gphi", "phi": 0.0}

agamma_zero_doc = {"model": "agamma", "gamma": 0.0}

gphi_sixth_doc = {"model": "gphi", "phi": np.pi / 6}

model1_local_doc = {
    "model": "model1",
    "phi": 0.0,
    "theta": 1 / 3,
    "phi1": [1.0, 0.0],
    "phi3": [0.0, 0.0],
    "form": "local",
}

model1_doc = {
    "model": "model1",
    "phi": np.pi / 6,
    "theta": 0.25,
    "phi1": [1.0, 0.0],
    "phi3": [0.0, 1.0],
}

model2_doc = {
    "model": "model2",
    "gamma": 1.0,
    "theta": 0.7,
    "phi1": [2.0, 0.0],
    "phi3": [1.0, 0.0],
}

model2_zero_doc = {
    "model": "model2",
    "gamma": 0.0,
    "theta": 1 / 3,
    "phi1": [0.0, 0.0],
    "phi3": [1.0, 0.0],
}

free_constant_doc = {"model": "free", "phi": 0.0, "seq": [1.0, 0.0]}

free_delta_doc = {"model": "free", "phi": np.pi / 4, "seq": {"0": [1.0, 0.0]}}


def close_multiset(found, expected, tol):
    """Greedy match of two lists of complex numbers"""
    remaining = list(expected)
    for value in found:
        best = min(range(len(remaining)), key=lambda i: abs(value - remaining[i]))
        if abs(value - remaining[best]) > tol:
            return False
        remaining.pop(best)
    return not remaining
