"""Reference parameter sets for maximally contractive cat states.

These are the quoted optima for the well-separated regime; the bundled
figure presets and the comparison command hold the state parameters fixed at
these values.  They sit on the flat descent valley discussed in
:mod:`contractive.optimize`, so a free global search over the default box
does not terminate on them; see the optimizer module notes.
"""
from .states import Cat2Params, Cat3Params, YuenParams

#: Two-component reference optimum and its optimal adimensional time.
CAT2_REFERENCE = Cat2Params(kappa=2.26, theta=127.0, delta=0.49)
CAT2_REFERENCE_ETA = 1.105
CAT2_REFERENCE_LAMBDA = 0.757

#: Three-component reference optimum and its optimal adimensional time.
CAT3_REFERENCE = Cat3Params(
    kappa_plus=1.00, kappa_minus=2.38, theta_plus=249.0, theta_minus=249.0, delta=1.21
)
CAT3_REFERENCE_ETA = 1.270
CAT3_REFERENCE_LAMBDA = 0.569

#: Twisted-Gaussian benchmark point: lambda_min = sqrt(2) - 1 ~ 0.41.
YUEN_REFERENCE = YuenParams(xi=0.5, var_x=0.5)
