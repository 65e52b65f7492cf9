# Scaling the cross gain with the power, a = P**(alpha - 1)
import numpy as np

from gicbounds import convergence_probe, delta_slope, gdof, normalized_loss

# the familiar W curve and the slope of the loss
for alpha in np.arange(0, 2.51, 0.25):
    print(f"alpha={alpha:4.2f}  d={gdof(alpha):.3f}  delta={delta_slope(alpha):.3f}"
          f"  loss={normalized_loss(alpha):.3f}")

# the normalized bounds creep toward the slope, but only like 1/log P
for alpha in (0.0, 0.25, 2 / 3):
    print(f"alpha={alpha:.3f}, target {delta_slope(alpha):.4f}")
    for p, up, lo in convergence_probe(alpha, [1e3, 1e6, 1e9, 1e12]):
        print(f"   P={p:.0e}  upper/log P={up:.4f}  lower/log P={lo:.4f}")
