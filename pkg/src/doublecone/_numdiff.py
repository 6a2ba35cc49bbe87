"""Fourth-order central differences with a step tied to the local length scale."""
from __future__ import annotations

import numpy as np

# h = REL_STEP * min(|l|, scale); balances h^4 truncation against eps/h^2 noise
REL_STEP = 4e-3


def derivatives(f, l, scale: float, rel_step: float = REL_STEP):
    """Return ``(f, f', f'')`` at the points ``l`` using five-point stencils.

    ``f`` must accept arrays.  The stencil never reaches across l = 0 because
    the step is a fraction of ``|l|``.
    """
    l = np.asarray(l, float)
    h = rel_step * np.minimum(np.abs(l), scale)
    f0 = f(l)
    fp1, fm1 = f(l + h), f(l - h)
    fp2, fm2 = f(l + 2 * h), f(l - 2 * h)
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return f0, d1, d2
